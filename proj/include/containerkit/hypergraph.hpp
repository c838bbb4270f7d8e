#ifndef CONTAINERKIT_HYPERGRAPH_HPP
#define CONTAINERKIT_HYPERGRAPH_HPP

#include "containerkit/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace containerkit {

// Co-degree profile of a hypergraph at a fixed tau: the delta_j defined by
//   delta_j * tau^(j-1) * n * d = sum_v d^(j)(v),   2 <= j <= r,
// and the combined value
//   delta = 2^(C(r,2)-1) * sum_j 2^(-C(j-1,2)) * delta_j,
// with delta = 0 when the graph has no edges.
struct CodegreeProfile {
    Rational tau;
    std::vector<Rational> deltas; // deltas[j-2] = delta_j, j = 2..r
    Rational delta_total;

    Rational delta_j(int j) const { return deltas.at(static_cast<std::size_t>(j - 2)); }
};

// An r-uniform hypergraph on vertices 1..n. Edges are strictly increasing
// r-tuples, stored deduplicated in lexicographic order; the representation
// is canonical, so equality of hypergraphs is equality of edge lists.
// Immutable after construction.
class Hypergraph {
public:
    // Validates every edge (r distinct vertices in 1..n) and canonicalizes.
    // Duplicate edges throw std::invalid_argument.
    Hypergraph(int n, int r, std::vector<std::vector<int>> edges);

    static Hypergraph parse(std::istream& in);
    static Hypergraph parse_file(const std::string& path);

    // Canonical text form: "n r" header then one sorted edge per line.
    void write(std::ostream& out) const;
    std::string to_text() const;

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& incident_edges(int v) const;

    long long degree(int v) const;
    long long max_degree() const;
    // sum_v d(v) = r * e(G)
    long long degree_sum() const;
    // d = r e(G) / n, exact
    Rational average_degree() const;

    bool has_edge(const std::vector<int>& sorted_edge) const;

    // d(sigma) = |{e : sigma subset of e}|; sigma must be nonempty.
    long long degree_of_subset(const std::vector<int>& sigma) const;

    // d^(j)(v) = max{ d(sigma) : v in sigma, |sigma| = j }, 2 <= j <= r.
    // Enumerates j-subsets of edges incident to v (d(sigma) = 0 elsewhere).
    long long dj_max(int v, int j) const;

    // mu(S) = (1/nd) sum_{u in S} d(u); 0 when the graph is edgeless.
    Rational degree_measure(const std::vector<int>& S) const;

    CodegreeProfile codegree(const Rational& tau) const;

    // Number of edges lying inside S.
    long long edges_inside(const std::vector<int>& S) const;

    // Induced subgraph on S; vertices relabeled 1..|S| in ascending S order.
    // new_to_old (optional) receives the relabeling, 1-based.
    Hypergraph induced(const std::vector<int>& S,
                       std::vector<int>* new_to_old = nullptr) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && edges_ == other.edges_;
    }
    bool operator!=(const Hypergraph& other) const { return !(*this == other); }

private:
    int n_;
    int r_;
    std::vector<std::vector<int>> edges_;
    std::vector<long long> degree_;          // index 0 unused
    std::vector<std::vector<int>> incident_; // edge indices per vertex
};

// Relabels so that d(1) >= d(2) >= ... >= d(n), ties broken by original
// index ascending. Returns the relabeled graph and new_to_old (1-based):
// new vertex v was originally new_to_old[v].
std::pair<Hypergraph, std::vector<int>> sort_by_degree(const Hypergraph& g);

// Maps a vertex set through new_to_old (labels in the sorted graph -> labels
// in the original), returning a sorted set.
std::vector<int> map_through(const std::vector<int>& set,
                             const std::vector<int>& new_to_old);

} // namespace containerkit

#endif
