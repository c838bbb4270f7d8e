#ifndef CONTAINERKIT_PATTERNS_HPP
#define CONTAINERKIT_PATTERNS_HPP

#include "containerkit/hypergraph.hpp"
#include "containerkit/rational.hpp"

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace containerkit {

// A forbidden pattern H: an ell-graph on vertices 1..v. Isolated vertices
// are permitted but flagged (they matter for the induced construction).
struct GraphPattern {
    int v = 0;
    int ell = 0;
    std::vector<std::vector<int>> edges; // sorted ell-sets, deduplicated

    long long edge_count() const { return static_cast<long long>(edges.size()); }
    bool has_isolated_vertices() const;
    std::vector<int> non_isolated() const;

    // Same text format as hypergraphs with header "v ell".
    static GraphPattern parse(std::istream& in);
    static GraphPattern parse_file(const std::string& path);
    void write(std::ostream& out) const;

    // k3, k4, k5, c4, c5, p3 (path, 2 edges), m2 (two disjoint edges),
    // e1 (single 2-edge), k4e3 (complete 3-graph on 4 vertices).
    static GraphPattern named(const std::string& name);
};

void validate_pattern(const GraphPattern& h);

// m(H) = max over subgraphs H' with e(H') >= 2 of (e(H')-1)/(v(H')-ell),
// where v(H') counts non-isolated vertices of the edge subset. Exhaustive
// over all edge subsets.
Rational m_H(const GraphPattern& h);

// Colexicographic rank of a sorted ell-set (vertex id = rank + 1) and its
// inverse; ids are stable under growing N.
long long colex_rank(const std::vector<int>& sorted_set);
std::vector<int> colex_unrank(long long rank, int ell);

struct BuildLimits {
    long long max_vertices = 100000;
    long long max_copies = 2000000;
};

// G(N,H): the e(H)-graph on [N]^(ell) whose edges are the edge sets of
// copies of H in [N] (copies counted as unlabeled edge-set images).
Hypergraph build_gnh(int N, const GraphPattern& h, const BuildLimits& limits = {});

struct DeltaBoundReport {
    Rational tau;        // gamma^-1 N^(-1/m(H)), rational from below
    Rational m_value;    // m(H)
    Rational delta;      // delta(G(N,H), tau)
    Rational bound;      // r 2^(r^2) v(H)!^2 gamma
    Rational margin;     // bound - delta
    bool holds = false;
};

DeltaBoundReport delta_bound_check_gnh(int N, const GraphPattern& h, const Rational& gamma,
                                       const BuildLimits& limits = {});

// Induced variant: the C(v(H),ell)-graph on two copies of [N]^(ell)
// (red ids 1..C(N,ell), blue ids C(N,ell)+1..2C(N,ell)); each copy of H
// contributes {red ids of its edges} cup {blue ids of its non-edges}.
Hypergraph build_induced_g(int N, const GraphPattern& h, const BuildLimits& limits = {});

// A 2-coloured ell-multigraph on [N]: red and blue edge sets, overlap
// allowed.
struct TwoColouredMultigraph {
    int N = 0;
    int ell = 0;
    std::set<std::vector<int>> red;
    std::set<std::vector<int>> blue;
};

// H_p(J) = -|J_R - J_B| log2 p - |J_B - J_R| log2(1-p).
double hp_weight(const TwoColouredMultigraph& j, const Rational& p);

// Does J contain a copy of H (edges red, non-edges blue)?
bool pattern_in_colouring(const GraphPattern& h, const TwoColouredMultigraph& j);

// hex(H,N) at p: exhaustive minimum of H_p(J) over all J with
// J_R cup J_B = [N]^(ell) and no copy of H. 3^C(N,ell) states.
double hex_bruteforce(const GraphPattern& h, int N, const Rational& p);

} // namespace containerkit

#endif
