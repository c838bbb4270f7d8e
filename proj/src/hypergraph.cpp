#include "containerkit/hypergraph.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace containerkit {

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<int>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
    if (r_ < 1) throw std::invalid_argument("uniformity must be >= 1");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r_)
            throw std::invalid_argument("edge arity differs from r");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n_)
                throw std::invalid_argument("edge vertex out of range 1..n");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("edge has a repeated vertex");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    degree_.assign(static_cast<std::size_t>(n_) + 1, 0);
    incident_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (int v : edges_[i]) {
            ++degree_[static_cast<std::size_t>(v)];
            incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        }
}

Hypergraph Hypergraph::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, r = -1;
    std::vector<std::vector<int>> edges;
    std::set<std::vector<int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto start = trimmed.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (trimmed[start] == '#') continue;
        std::istringstream fields(trimmed);
        if (n < 0) {
            if (!(fields >> n >> r) || n < 0 || r < 1)
                throw ParseError("expected header 'n r'", lineno);
            std::string rest;
            if (fields >> rest) throw ParseError("trailing data after header", lineno);
            continue;
        }
        std::vector<int> edge;
        int v;
        while (fields >> v) edge.push_back(v);
        if (!fields.eof()) throw ParseError("non-integer edge entry", lineno);
        if (static_cast<int>(edge.size()) != r)
            throw ParseError("edge has " + std::to_string(edge.size()) +
                                 " vertices, expected " + std::to_string(r),
                             lineno);
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (edge[i] < 1 || edge[i] > n)
                throw ParseError("vertex out of range 1..n", lineno);
            if (i > 0 && edge[i] <= edge[i - 1])
                throw ParseError("edge vertices must be strictly increasing", lineno);
        }
        if (!seen.insert(edge).second)
            throw ParseError("duplicate edge", lineno);
        edges.push_back(std::move(edge));
    }
    if (n < 0) throw ParseError("missing header 'n r'");
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph Hypergraph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse(in);
}

void Hypergraph::write(std::ostream& out) const {
    out << n_ << ' ' << r_ << '\n';
    for (const auto& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

std::string Hypergraph::to_text() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    return incident_[static_cast<std::size_t>(v)];
}

long long Hypergraph::degree(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    return degree_[static_cast<std::size_t>(v)];
}

long long Hypergraph::max_degree() const {
    long long best = 0;
    for (int v = 1; v <= n_; ++v) best = std::max(best, degree_[static_cast<std::size_t>(v)]);
    return best;
}

long long Hypergraph::degree_sum() const {
    return static_cast<long long>(r_) * edge_count();
}

Rational Hypergraph::average_degree() const {
    if (n_ == 0) return Rational(0);
    return Rational(degree_sum(), n_);
}

bool Hypergraph::has_edge(const std::vector<int>& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

long long Hypergraph::degree_of_subset(const std::vector<int>& sigma) const {
    if (sigma.empty()) throw std::invalid_argument("sigma must be nonempty");
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    for (int v : s)
        if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    // Scan only edges incident to the first element of sigma.
    long long count = 0;
    for (int idx : incident_[static_cast<std::size_t>(s[0])]) {
        const auto& e = edges_[static_cast<std::size_t>(idx)];
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
    }
    return count;
}

long long Hypergraph::dj_max(int v, int j) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    if (j < 2 || j > r_) throw std::invalid_argument("j must satisfy 2 <= j <= r");
    // d(sigma) = 0 unless sigma lies inside some edge, so enumerating
    // (j-1)-subsets of e - {v} over incident edges e covers every candidate.
    long long best = 0;
    std::set<std::vector<int>> tried;
    std::vector<int> rest, sigma;
    for (int idx : incident_[static_cast<std::size_t>(v)]) {
        const auto& e = edges_[static_cast<std::size_t>(idx)];
        rest.clear();
        for (int u : e)
            if (u != v) rest.push_back(u);
        const int m = static_cast<int>(rest.size());
        const int pick = j - 1;
        // enumerate pick-subsets of rest via bitmask (r small)
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(mask) != pick) continue;
            sigma.clear();
            sigma.push_back(v);
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) sigma.push_back(rest[static_cast<std::size_t>(b)]);
            std::sort(sigma.begin(), sigma.end());
            if (!tried.insert(sigma).second) continue;
            best = std::max(best, degree_of_subset(sigma));
        }
    }
    return best;
}

Rational Hypergraph::degree_measure(const std::vector<int>& S) const {
    long long nd = degree_sum();
    if (nd == 0) return Rational(0);
    long long total = 0;
    for (int v : S) {
        if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
        total += degree_[static_cast<std::size_t>(v)];
    }
    return Rational(total, nd);
}

CodegreeProfile Hypergraph::codegree(const Rational& tau) const {
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    CodegreeProfile profile;
    profile.tau = tau;
    long long nd = degree_sum();
    if (nd == 0) {
        profile.deltas.assign(static_cast<std::size_t>(std::max(0, r_ - 1)), Rational(0));
        profile.delta_total = Rational(0);
        return profile;
    }
    Rational total(0);
    for (int j = 2; j <= r_; ++j) {
        long long sum_dj = 0;
        for (int v = 1; v <= n_; ++v) sum_dj += dj_max(v, j);
        Rational delta_j = Rational(sum_dj) / (rational_pow(tau, j - 1) * nd);
        profile.deltas.push_back(delta_j);
        // 2^(C(r,2)-1-C(j-1,2)) delta_j
        long shift = static_cast<long>(binomial(r_, 2)) - 1 -
                     static_cast<long>(binomial(j - 1, 2));
        total += rational_pow(Rational(2), shift) * delta_j;
    }
    profile.delta_total = total;
    return profile;
}

long long Hypergraph::edges_inside(const std::vector<int>& S) const {
    std::vector<char> in_set(static_cast<std::size_t>(n_) + 1, 0);
    for (int v : S) {
        if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    long long count = 0;
    for (const auto& e : edges_) {
        bool inside = true;
        for (int v : e)
            if (!in_set[static_cast<std::size_t>(v)]) {
                inside = false;
                break;
            }
        if (inside) ++count;
    }
    return count;
}

Hypergraph Hypergraph::induced(const std::vector<int>& S,
                               std::vector<int>* new_to_old) const {
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> old_to_new(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
        old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    }
    std::vector<std::vector<int>> new_edges;
    for (const auto& e : edges_) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) {
            int nv = old_to_new[static_cast<std::size_t>(v)];
            if (nv == 0) break;
            mapped.push_back(nv);
        }
        if (mapped.size() == e.size()) new_edges.push_back(std::move(mapped));
    }
    if (new_to_old) *new_to_old = sorted;
    return Hypergraph(static_cast<int>(sorted.size()), r_, std::move(new_edges));
}

std::pair<Hypergraph, std::vector<int>> sort_by_degree(const Hypergraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    // order[i] = original vertex that becomes i+1
    std::vector<int> new_to_old(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> old_to_new(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        new_to_old[static_cast<std::size_t>(i) + 1] = order[static_cast<std::size_t>(i)];
        old_to_new[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
    }
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& e : g.edges()) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(old_to_new[static_cast<std::size_t>(v)]);
        edges.push_back(std::move(mapped));
    }
    return {Hypergraph(n, g.uniformity(), std::move(edges)), new_to_old};
}

std::vector<int> map_through(const std::vector<int>& set,
                             const std::vector<int>& new_to_old) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int v : set) out.push_back(new_to_old.at(static_cast<std::size_t>(v)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace containerkit
