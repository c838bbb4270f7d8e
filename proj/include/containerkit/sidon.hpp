#ifndef CONTAINERKIT_SIDON_HPP
#define CONTAINERKIT_SIDON_HPP

#include "containerkit/hypergraph.hpp"
#include "containerkit/rational.hpp"

#include <vector>

namespace containerkit {

// The 4-graph on [n] whose edges are the 4-sets {w,x,y,z} admitting a
// pairing with equal sums (w+x = y+z). Sidon sets are independent in it;
// the converse fails exactly on sets containing a 3-term AP, since
// repeated-value solutions are not edges.
Hypergraph build_sidon_graph(int n);

// No w+x = y+z with {w,x} != {y,z} as multisets over values: equivalently,
// all pairwise differences are distinct.
bool is_sidon_set(const std::vector<int>& values);

// Number of 3-term arithmetic progressions inside U.
long long count_3aps(const std::vector<int>& u);

// The edge-count identity against difference statistics: with t_i the
// number of pairs of U at difference i, same-difference pair-of-pairs
// split as 2 per genuine edge plus 1 per 3-AP:
//   sum_i C(t_i,2) = 2 e(G[U]) + #3AP(U).
// The literal half-sum form (1/2) sum C(t_i,2) = e(G[U]) therefore holds
// exactly when U has no 3-AP; both are reported.
struct SidonIdentityReport {
    std::vector<long long> t;   // t[i-1] = pairs at difference i
    Rational half_sum;          // (1/2) sum C(t_i,2)
    long long direct_edges = 0; // e(G[U]) counted from the hypergraph
    long long ap3 = 0;
    bool reconciled_ok = false; // sum C(t_i,2) == 2 e + #3AP
    bool literal_ok = false;    // half_sum == e
};

SidonIdentityReport sidon_edge_identity_check(int n, const std::vector<int>& u);

} // namespace containerkit

#endif
