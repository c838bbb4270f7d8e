#ifndef CONTAINERKIT_CONTAINER_HPP
#define CONTAINERKIT_CONTAINER_HPP

#include "containerkit/hypergraph.hpp"
#include "containerkit/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace containerkit {

// The prune/build engine packs vertex tuples into 64-bit keys (one byte per
// vertex, most significant byte = smallest vertex), so lexicographic tuple
// order coincides with integer order and "drop the first vertex" is a mask.
constexpr int kEngineMaxVertices = 255;
constexpr int kEngineMaxUniformity = 8;

std::uint64_t pack_tuple(const std::vector<int>& sorted_tuple);
std::vector<int> unpack_tuple(std::uint64_t key, int len);

// The s-uniform multigraph P_s produced by one level of the algorithm,
// together with its saturation set Gamma_s and a degree index over every
// nonempty subset of a stored edge (degrees of other subsets are zero).
struct LeveledMultigraph {
    int s = 0;
    int n = 0;
    std::map<std::uint64_t, long long> edges;      // packed s-tuple -> multiplicity
    std::map<std::uint64_t, long long> subset_deg; // packed subset -> d_s(sigma)
    std::set<std::uint64_t> gamma;                 // packed saturated subsets
    long long edge_total = 0;                      // e(P_s) with multiplicity

    long long degree_of(std::uint64_t key) const {
        auto it = subset_deg.find(key);
        return it == subset_deg.end() ? 0 : it->second;
    }
    long long vertex_degree(int v) const {
        return degree_of(static_cast<std::uint64_t>(v));
    }
    bool gamma_bars(std::uint64_t subset) const { return gamma.count(subset) != 0; }

    std::vector<std::pair<std::vector<int>, long long>> edge_list() const;

    // P_r = G: multiplicities 1, gamma empty.
    static LeveledMultigraph from_hypergraph(const Hypergraph& g);
};

// Fingerprint tuple (T_{r-1},...,T_1,T_0). by_level[s] = T_s.
struct TupleT {
    std::vector<std::vector<int>> by_level;

    int parts() const { return static_cast<int>(by_level.size()); }
    const std::vector<int>& level(int s) const {
        return by_level.at(static_cast<std::size_t>(s));
    }
    static TupleT empty(int r) {
        TupleT t;
        t.by_level.assign(static_cast<std::size_t>(r), {});
        return t;
    }
    // Restriction T cap [w], part by part.
    TupleT restrict_to_prefix(int w) const;
    bool operator==(const TupleT& other) const { return by_level == other.by_level; }
};

enum class LevelMode { Prune, Build };

struct LevelOutcome {
    LeveledMultigraph p;    // P_s
    std::vector<int> out;   // T_s in prune mode, C_s in build mode
};

// One application of the algorithm: builds P_s from P_next (uniformity s+1)
// scanning v = 1..n. In prune mode `input` is I; in build mode it is T_s.
LevelOutcome algorithm_level(const Hypergraph& g, const LeveledMultigraph& p_next,
                             const Rational& tau, const Rational& zeta,
                             LevelMode mode, const std::vector<int>& input);

struct PruneResult {
    TupleT tuple;                          // T(G,I,tau,zeta), with T_0 = I cap Gamma_1
    std::vector<int> gamma1;               // {u : d_1(u) > tau^(r-1) d(u)}
    std::vector<LeveledMultigraph> levels; // P_{r-1},...,P_1 (empty when r = 1)
};

PruneResult prune(const Hypergraph& g, const std::vector<int>& independent_candidate,
                  const Rational& tau, const Rational& zeta);

struct LevelStats {
    int s = 0;
    long long e_ps = 0;
    long long gamma_size = 0;
    std::vector<int> out; // C_s (build) or T_s (prune)
};

// Record of one build (or cover) execution; immutable once produced and
// recomputable from the graph and the tuple.
struct ContainerRun {
    Rational tau;
    Rational zeta;
    std::string mode; // "build" or "cover"
    TupleT tuple;
    std::vector<int> container;
    std::vector<LevelStats> levels;
    std::vector<Rational> mu_t; // mu(T_s), index s
    Rational mu_c;
    long long e_induced = 0;
    int truncation_m = -1; // cover only
    bool resorted = false;
    std::vector<int> new_to_old; // when resorted

    struct Flags {
        bool delta_le_zeta = false;   // delta(G,tau) <= zeta
        bool mu_t_bound = false;      // all mu(T_i) <= 2 tau / zeta
        bool size_t_bound = false;    // all |T_i| <= 2 tau n / zeta^2
        bool mu_c_bound = false;      // mu(C) <= 1 - 1/r! + 4 zeta + 2 r tau/zeta
        bool containment_checked = false;
        bool containment = false; // I subset of C (when an I was supplied)
        bool input_independent = false;
    } flags;

    std::string input_digest;
};

struct BuildResult {
    ContainerRun run;
    std::vector<int> gamma1;
    std::vector<int> c0;                   // [n] - Gamma_1
    std::vector<LeveledMultigraph> levels; // P_{r-1},...,P_1
};

BuildResult build(const Hypergraph& g, const TupleT& tuple, const Rational& tau,
                  const Rational& zeta);

// Truncated wrapper: on a degree-sorted graph computes S = T(G,I,tau,zeta),
// T = S cap [m] with [m] = {v : d(v) >= zeta d}, and the container
// C(G,T,tau,zeta) cup [m+1,n]. Unsorted inputs are sorted internally
// (stable) and all results mapped back. Hypothesis failures are recorded in
// flags, never thrown. An edgeless graph yields C = [n] and an all-empty T.
struct CoverResult {
    ContainerRun run;
    TupleT pruned_untruncated;             // S, original labels
    std::vector<LeveledMultigraph> prune_levels; // in sorted-label space
    CodegreeProfile profile;
    Rational mu_engine_container;          // mu(C(G,T,tau,zeta)) before the tail
    Rational mu_tail;                      // mu([m+1,n])
    bool input_was_sorted = true;
};

CoverResult cover(const Hypergraph& g, const std::vector<int>& independent_candidate,
                  const Rational& tau, const Rational& zeta);

// Lemma: C(G,T,tau,zeta) cap [w] = C(G,T cap [w],tau,zeta) cap [w]. Builds
// both sides independently and compares exactly; false indicates an
// implementation fault.
bool check_online(const Hypergraph& g, const TupleT& tuple, const Rational& tau,
                  const Rational& zeta, int w);

// Picks the first v in [k,n] with (1/s) sum |T_i cap [v]| < (lambda/eta) v
// and (1/t) sum |C_i cap [v]| < (1-c) v. Precondition violations are
// reported in the result; an empty scan (possible only under violated
// preconditions) throws NotFoundError.
struct GMapResult {
    int v = 0;
    bool preconditions_ok = true;
    std::vector<std::string> violations;
};

GMapResult g_map(const std::vector<Rational>& mu_weights,
                 const std::vector<std::vector<int>>& t_list,
                 const std::vector<std::vector<int>>& c_list, int k,
                 const Rational& c, const Rational& eta, const Rational& lambda);

// Set helpers shared by the engine and the oracles.
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> prefix_restrict(const std::vector<int>& sorted_set, int w);
std::vector<int> full_vertex_set(int n);

} // namespace containerkit

#endif
