#ifndef CONTAINERKIT_ITERATE_HPP
#define CONTAINERKIT_ITERATE_HPP

#include "containerkit/container.hpp"
#include "containerkit/hypergraph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace containerkit {

// Hypothesis record for one application of the edge-shrinking theorem:
// delta(G,tau) <= 1/12r! and tau <= 1/144 r!^2 r, with zeta fixed at 1/12r!.
struct CoveroffHypotheses {
    Rational tau;
    Rational zeta;
    Rational delta;
    Rational delta_cap; // 1/(12 r!)
    Rational tau_cap;   // 1/(144 r!^2 r)
    bool delta_ok = false;
    bool tau_ok = false;
    bool all_ok() const { return delta_ok && tau_ok; }
};

// One shrinking step on a fixed graph: fixes zeta = 1/12r!, evaluates the
// hypotheses once, and builds cover() containers per independent set. When
// the hypotheses hold, e(G[C]) <= (1 - 1/2r!) e(G) is asserted for
// independent inputs, along with the |T_i| <= 288 r!^2 tau n check.
class CoveroffStep {
public:
    CoveroffStep(Hypergraph g, const Rational& tau);

    const Hypergraph& graph() const { return graph_; }
    const CoveroffHypotheses& hypotheses() const { return hypo_; }

    struct Outcome {
        CoverResult cover;
        bool edge_bound_applicable = false; // hypotheses held and I independent
        bool edge_bound_ok = false;         // e(G[C]) <= (1 - 1/2r!) e(G)
        bool t_size_ok = false;             // |T_i| <= 288 r!^2 tau n for all i
    };
    Outcome run(const std::vector<int>& independent_set) const;

private:
    Hypergraph graph_;
    CoveroffHypotheses hypo_;
};

using TauPolicy = std::function<Rational(const Hypergraph& induced)>;

TauPolicy constant_tau_policy(const Rational& tau);

struct IterationStage {
    std::vector<int> vertices; // C_i in original labels
    TupleT tuple;              // fingerprint used at this stage (original labels)
    long long e_induced = 0;
    Rational tau_used;
    CoveroffHypotheses hypotheses;
};

struct IterationChain {
    std::vector<IterationStage> stages; // stages[0] = starting [n]
    long long e0 = 0;
    bool terminated = false; // e(G[C_last]) <= e0 reached
    std::string diagnostic;  // set when a stage's hypotheses failed
    double k_formula = 0.0;  // log(e0/e(G)) / log(1 - 1/2r!)
    long long stage_cap = 0;
    long long fingerprint_parts_total = 0;
    double parts_bound = 0.0; // (k+1) r
};

// Repeatedly applies CoveroffStep to G[C_i] (relabeled 1..|C_i| by
// descending induced degree; vertices of induced degree 0 are retained)
// until e(G[C_i]) <= e0, or a stage's hypotheses fail (diagnostic
// termination). Exceeding the stage cap ceil(k)+2 while hypotheses hold
// is an InternalError: it contradicts the shrink guarantee.
IterationChain iterate_containers(const Hypergraph& g, const std::vector<int>& independent_set,
                                  long long e0, const TauPolicy& tau_policy);

struct SparseContainerReport {
    IterationChain chain;
    Rational eps;
    bool parts_count_ok = false;  // total parts <= (k+1) r when terminated
    double log_collection_budget = 0.0; // 288 r r!^2 sum f(m_i)
};

// Specialization with e0 = floor(eps * e(G)) and a constant tau policy.
SparseContainerReport sparse_container(const Hypergraph& g,
                                       const std::vector<int>& independent_set,
                                       const Rational& eps, const Rational& tau);

// exp(s theta n (1 + log(1/theta))), the count bound for s-tuples of subsets
// with total size <= s theta n. Computed in long double; the one place the
// library returns a transcendental value.
double entropy_bound(long long s, const Rational& theta, long long n);

// Exact number of s-tuples (T_1,...,T_s) of subsets of [n] with total size
// <= cap: sum_{j<=cap} C(ns, j).
BigInt count_tuples_exact(long long s, long long cap, long long n);

// Doubling search for the smallest tau = 2^-k with delta(G,tau) <= delta_cap
// and tau <= tau_cap; nullopt when no such tau exists (delta is
// non-increasing in tau, so it suffices to test tau_cap itself).
std::optional<Rational> feasible_tau_search(const Hypergraph& g, const Rational& delta_cap,
                                            const Rational& tau_cap);

} // namespace containerkit

#endif
