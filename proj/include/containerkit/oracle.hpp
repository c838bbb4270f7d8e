#ifndef CONTAINERKIT_ORACLE_HPP
#define CONTAINERKIT_ORACLE_HPP

#include "containerkit/container.hpp"
#include "containerkit/hypergraph.hpp"
#include "containerkit/patterns.hpp"
#include "containerkit/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace containerkit {

// Hard cap on oracle instance sizes; override with CONTAINERKIT_MAX_N.
int oracle_max_n();

struct VerificationReport {
    std::string instance_digest;
    std::string property;
    long long trials = 0;
    long long failures = 0;
    bool has_margin = false;
    Rational worst_margin; // smallest bound-minus-value seen (>= 0 means held)
    std::string witness;   // serialized counterexample when failures > 0
    std::uint64_t seed = 0;

    void record_margin(const Rational& margin) {
        if (!has_margin || margin < worst_margin) {
            worst_margin = margin;
            has_margin = true;
        }
    }
    void fail(const std::string& w) {
        ++failures;
        if (witness.empty()) witness = w;
    }
    bool ok() const { return failures == 0; }
};

// Streams every independent set (no edge inside), in lexicographic order of
// the characteristic vector; the callback may return false to stop early.
// Throws ResourceLimitError if n exceeds the oracle cap or more than
// `limit` sets would be produced.
void enumerate_independent_sets(const Hypergraph& g, long long limit,
                                const std::function<bool(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> collect_independent_sets(const Hypergraph& g, long long limit);
BigInt count_independent_sets(const Hypergraph& g, long long limit);

bool is_independent(const Hypergraph& g, const std::vector<int>& set);

// Largest independent set, by branch and bound.
int max_independent_set_size(const Hypergraph& g);

// True iff every nonempty J subset of I has a vertex of induced degree
// <= b; computed by iterated minimum-degree peeling (equivalent).
bool degeneracy_check(const Hypergraph& g, const std::vector<int>& independent_candidate,
                      long long b);

// The all-subsets definition, for cross-checking the peeling answer.
bool degeneracy_check_exhaustive(const Hypergraph& g, const std::vector<int>& set,
                                 long long b);

// alpha * mu({v : |S cap [v]| >= alpha v}) <= mu(S) for decreasing
// nonnegative weights; S is a multiset given as value -> multiplicity
// pairs. Exact; returns both sides.
struct LemmoidOutcome {
    Rational lhs;
    Rational rhs;
    bool ok = false;
};
LemmoidOutcome lemmoid_property(const std::vector<Rational>& mu_weights,
                                const std::vector<std::pair<int, long long>>& s_multiset,
                                const Rational& alpha);

// Uniform random r-graph: e edges drawn without replacement from [n]^(r).
Hypergraph random_hypergraph(int n, int r, long long e, Rng& rng);

// Uniformly random tuple in P^r[n]: each vertex joins each part with
// probability 1/2.
TupleT random_tuple(int n, int r, Rng& rng);

struct CoverFamilyOptions {
    bool all_independent = true;
    long long sample_count = 0; // used when !all_independent
    long long independent_cap = 500000;
    int random_u_count = 20;
    bool include_cover_variant = false; // also exercise the truncated wrapper
    std::uint64_t seed = 0;
};

// Sweeps a family of sets I through prune/build and audits, per I:
//   containment        I subset of C(G, T(G,I,tau,zeta), tau, zeta)
//   fingerprint bound  mu(T_s) <= (tau/zeta)(1 + delta),  1 <= s <= r-1
//   t0 bound           mu(T_0) <= tau^(1-r) d^-1 e(G[I])/n
//   container measure  mu(C) <= 1 - 1/r! + 11/4 zeta + 1/4 delta + sum mu(T_s)
//   degree caps        sum_{u in U} d_s(u) <= tau^(r-s) nd (mu(U) + 4^(1-s) delta)
//                      at every produced level, U = [n] and random U
// plus, optionally, Theorem-style checks of the truncated cover() wrapper.
// The graph must be degree-sorted when the cover variant is enabled.
std::vector<VerificationReport> verify_cover_family(const Hypergraph& g, const Rational& tau,
                                                    const Rational& zeta,
                                                    const CoverFamilyOptions& options);

// Lemma 4.5-style audit over arbitrary (non-pruned) tuples.
VerificationReport verify_container_measure_random_t(const Hypergraph& g, const Rational& tau,
                                                     const Rational& zeta, long long trials,
                                                     std::uint64_t seed);

// Online-property audit: exact equality of both restricted builds for all
// w in [n].
VerificationReport verify_online_all_w(const Hypergraph& g, const TupleT& tuple,
                                       const Rational& tau, const Rational& zeta);

// ex(N,H): maximum edge count of an H-free ell-graph on [N], i.e. the
// maximum independent set of G(N,H).
long long ex_bruteforce(int N, const GraphPattern& h, const BuildLimits& limits = {});

// Exact count of Sidon subsets of [n] (n <= 28), by difference-set
// backtracking.
BigInt sidon_count_bruteforce(int n);

// Monte-Carlo audit of the sparse-subset tail bound: estimates the
// probability that some family member with fingerprint inside X has
// |D cap X| > (1+nu) p d, against exp(-nu^2 p d / 32).
struct SparseFamilyMember {
    std::vector<int> fingerprint; // J, subset of [M]
    std::vector<int> d_set;       // D, subset of [M]
};

struct SparseExperimentReport {
    long long trials = 0;
    long long hits = 0;
    long long declared_d = 0;
    double frequency = 0.0;
    double analytic_bound = 0.0;
    double three_se = 0.0;
    bool within_band = false; // frequency <= bound + 3 SE (statistical flag)
    std::uint64_t seed = 0;
};

SparseExperimentReport sparse_experiment(int m_size,
                                         const std::vector<SparseFamilyMember>& family,
                                         const Rational& p, const Rational& nu,
                                         long long trials, std::uint64_t seed,
                                         std::optional<long long> declared_d = std::nullopt);

// Report-only probe in the shape of the sparse H-free theorem: samples
// X in [N]^(ell) with probability p and compares the maximum H-free
// subgraph inside X against p (ex(N,H) + gamma C(N,ell)).
struct HfreeSparseProbeReport {
    long long trials = 0;
    long long exceedances = 0;
    long long ex_value = 0;
    double threshold = 0.0;
    std::uint64_t seed = 0;
};

HfreeSparseProbeReport hfree_sparse_probe(int N, const GraphPattern& h, const Rational& p,
                                          const Rational& gamma, long long trials,
                                          std::uint64_t seed);

} // namespace containerkit

#endif
