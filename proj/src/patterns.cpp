#include "containerkit/patterns.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace containerkit {

namespace {

// All injections of `slots` items into [N]; calls fn(phi) with phi[i] = image
// of item i (0-based). Used for copy enumeration at desk scale.
template <typename Fn>
void for_each_injection(int N, int slots, long long max_calls, Fn&& fn) {
    std::vector<int> phi(static_cast<std::size_t>(slots), 0);
    std::vector<char> used(static_cast<std::size_t>(N) + 1, 0);
    long long calls = 0;
    std::function<void(int)> rec = [&](int depth) {
        if (depth == slots) {
            if (++calls > max_calls)
                throw ResourceLimitError("pattern copy enumeration exceeds the configured limit");
            fn(phi);
            return;
        }
        for (int x = 1; x <= N; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = 1;
            phi[static_cast<std::size_t>(depth)] = x;
            rec(depth + 1);
            used[static_cast<std::size_t>(x)] = 0;
        }
    };
    rec(0);
}

} // namespace

bool GraphPattern::has_isolated_vertices() const {
    return static_cast<int>(non_isolated().size()) < v;
}

std::vector<int> GraphPattern::non_isolated() const {
    std::vector<char> seen(static_cast<std::size_t>(v) + 1, 0);
    for (const auto& e : edges)
        for (int u : e) seen[static_cast<std::size_t>(u)] = 1;
    std::vector<int> out;
    for (int u = 1; u <= v; ++u)
        if (seen[static_cast<std::size_t>(u)]) out.push_back(u);
    return out;
}

GraphPattern GraphPattern::parse(std::istream& in) {
    Hypergraph g = Hypergraph::parse(in);
    GraphPattern h;
    h.v = g.vertex_count();
    h.ell = g.uniformity();
    h.edges = g.edges();
    validate_pattern(h);
    return h;
}

GraphPattern GraphPattern::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse(in);
}

void GraphPattern::write(std::ostream& out) const {
    Hypergraph(v, ell, edges).write(out);
}

GraphPattern GraphPattern::named(const std::string& name) {
    GraphPattern h;
    auto complete = [](int v, int ell) {
        GraphPattern g;
        g.v = v;
        g.ell = ell;
        std::vector<int> pick(static_cast<std::size_t>(ell));
        // all ell-subsets of [v]
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == ell) {
                g.edges.push_back(pick);
                return;
            }
            for (int x = start; x <= v; ++x) {
                pick[static_cast<std::size_t>(depth)] = x;
                rec(x + 1, depth + 1);
            }
        };
        rec(1, 0);
        return g;
    };
    if (name == "k3") return complete(3, 2);
    if (name == "k4") return complete(4, 2);
    if (name == "k5") return complete(5, 2);
    if (name == "k4e3") return complete(4, 3);
    if (name == "c4") {
        h.v = 4;
        h.ell = 2;
        h.edges = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    } else if (name == "c5") {
        h.v = 5;
        h.ell = 2;
        h.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
    } else if (name == "p3") {
        h.v = 3;
        h.ell = 2;
        h.edges = {{1, 2}, {2, 3}};
    } else if (name == "m2") {
        h.v = 4;
        h.ell = 2;
        h.edges = {{1, 2}, {3, 4}};
    } else if (name == "e1") {
        h.v = 2;
        h.ell = 2;
        h.edges = {{1, 2}};
    } else {
        throw ParseError("unknown pattern name '" + name + "'");
    }
    for (auto& e : h.edges) std::sort(e.begin(), e.end());
    std::sort(h.edges.begin(), h.edges.end());
    validate_pattern(h);
    return h;
}

void validate_pattern(const GraphPattern& h) {
    if (h.edges.empty()) throw std::invalid_argument("pattern must have at least one edge");
    Hypergraph check(h.v, h.ell, h.edges); // reuses edge validation
    (void)check;
}

Rational m_H(const GraphPattern& h) {
    validate_pattern(h);
    if (h.edge_count() < 2)
        throw std::invalid_argument("m(H) requires e(H) >= 2");
    const int e = static_cast<int>(h.edge_count());
    if (e > 20) throw ResourceLimitError("m(H): too many edges for exhaustive enumeration");
    Rational best(0);
    bool found = false;
    for (unsigned mask = 1; mask < (1u << e); ++mask) {
        const int edges_used = __builtin_popcount(mask);
        if (edges_used < 2) continue;
        std::vector<char> seen(static_cast<std::size_t>(h.v) + 1, 0);
        int verts = 0;
        for (int i = 0; i < e; ++i)
            if (mask & (1u << i))
                for (int u : h.edges[static_cast<std::size_t>(i)])
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        ++verts;
                    }
        if (verts <= h.ell)
            throw InternalError("subgraph with >=2 edges on <= ell vertices");
        Rational ratio(edges_used - 1, verts - h.ell);
        if (!found || ratio > best) {
            best = ratio;
            found = true;
        }
    }
    return best;
}

long long colex_rank(const std::vector<int>& sorted_set) {
    long long rank = 0;
    for (std::size_t i = 0; i < sorted_set.size(); ++i)
        rank += static_cast<long long>(
            binomial(sorted_set[i] - 1, static_cast<long>(i) + 1));
    return rank;
}

std::vector<int> colex_unrank(long long rank, int ell) {
    std::vector<int> out(static_cast<std::size_t>(ell));
    for (int i = ell; i >= 1; --i) {
        // largest x with C(x-1, i) <= rank
        int x = i; // C(i-1, i) = 0
        while (binomial(x, i) <= rank) ++x;
        out[static_cast<std::size_t>(i - 1)] = x;
        rank -= static_cast<long long>(binomial(x - 1, i));
    }
    return out;
}

Hypergraph build_gnh(int N, const GraphPattern& h, const BuildLimits& limits) {
    validate_pattern(h);
    if (N < h.v) throw std::invalid_argument("need N >= v(H)");
    const BigInt n_big = binomial(N, h.ell);
    if (n_big > limits.max_vertices)
        throw ResourceLimitError("G(N,H) would have too many vertices");
    const int n = static_cast<int>(n_big);

    // A copy is an unlabeled edge-set image; injections of the non-isolated
    // part suffice (isolated vertices cannot change the image).
    const std::vector<int> support = h.non_isolated();
    const int slots = static_cast<int>(support.size());
    std::set<std::vector<int>> edge_sets;
    for_each_injection(N, slots, limits.max_copies, [&](const std::vector<int>& phi) {
        std::vector<int> ids;
        ids.reserve(h.edges.size());
        std::vector<int> image(static_cast<std::size_t>(h.ell));
        for (const auto& e : h.edges) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                // position of e[i] within support
                const auto it = std::lower_bound(support.begin(), support.end(), e[i]);
                image[i] = phi[static_cast<std::size_t>(it - support.begin())];
            }
            std::sort(image.begin(), image.end());
            ids.push_back(static_cast<int>(colex_rank(image)) + 1);
        }
        std::sort(ids.begin(), ids.end());
        edge_sets.insert(ids);
    });
    std::vector<std::vector<int>> edges(edge_sets.begin(), edge_sets.end());
    return Hypergraph(n, static_cast<int>(h.edge_count()), std::move(edges));
}

DeltaBoundReport delta_bound_check_gnh(int N, const GraphPattern& h, const Rational& gamma,
                                       const BuildLimits& limits) {
    if (gamma <= 0 || gamma > 1) throw std::invalid_argument("gamma must lie in (0,1]");
    DeltaBoundReport report;
    report.m_value = m_H(h);
    // tau = gamma^-1 N^(-1/m(H)), with N^(-1/m) approximated from below
    // (smaller tau means larger delta: the conservative side).
    report.tau = (Rational(1) / gamma) *
                 rational_neg_pow_lower(N, denominator(report.m_value),
                                        numerator(report.m_value));
    Hypergraph g = build_gnh(N, h, limits);
    report.delta = g.codegree(report.tau).delta_total;
    const int r = static_cast<int>(h.edge_count());
    const BigInt vfact = factorial(h.v);
    report.bound = Rational(BigInt(r) * (BigInt(1) << (r * r)) * vfact * vfact) * gamma;
    report.margin = report.bound - report.delta;
    report.holds = report.margin >= 0;
    return report;
}

Hypergraph build_induced_g(int N, const GraphPattern& h, const BuildLimits& limits) {
    validate_pattern(h);
    if (N < h.v) throw std::invalid_argument("need N >= v(H)");
    const BigInt base_big = binomial(N, h.ell);
    if (2 * base_big > limits.max_vertices)
        throw ResourceLimitError("induced construction would have too many vertices");
    const long long base = static_cast<long long>(base_big);
    const int r = static_cast<int>(binomial(h.v, h.ell));

    std::set<std::vector<int>> edge_sets;
    std::vector<int> subset(static_cast<std::size_t>(h.ell));
    for_each_injection(N, h.v, limits.max_copies, [&](const std::vector<int>& phi) {
        // Image edges of this copy.
        std::set<std::vector<int>> image_edges;
        std::vector<int> image(static_cast<std::size_t>(h.ell));
        for (const auto& e : h.edges) {
            for (std::size_t i = 0; i < e.size(); ++i)
                image[i] = phi[static_cast<std::size_t>(e[i] - 1)];
            std::sort(image.begin(), image.end());
            image_edges.insert(image);
        }
        // Every ell-subset of the image vertex set is red (edge) or blue.
        std::vector<int> verts = phi;
        std::sort(verts.begin(), verts.end());
        std::vector<int> ids;
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == h.ell) {
                const long long rank = colex_rank(subset);
                if (image_edges.count(subset))
                    ids.push_back(static_cast<int>(rank) + 1);
                else
                    ids.push_back(static_cast<int>(base + rank) + 1);
                return;
            }
            for (int i = start; i < h.v; ++i) {
                subset[static_cast<std::size_t>(depth)] = verts[static_cast<std::size_t>(i)];
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        std::sort(ids.begin(), ids.end());
        edge_sets.insert(ids);
    });
    std::vector<std::vector<int>> edges(edge_sets.begin(), edge_sets.end());
    return Hypergraph(static_cast<int>(2 * base), r, std::move(edges));
}

double hp_weight(const TwoColouredMultigraph& j, const Rational& p) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("p must lie in (0,1)");
    long long red_only = 0, blue_only = 0;
    for (const auto& e : j.red)
        if (!j.blue.count(e)) ++red_only;
    for (const auto& e : j.blue)
        if (!j.red.count(e)) ++blue_only;
    const double pd = rational_to_double(p);
    return -static_cast<double>(red_only) * std::log2(pd) -
           static_cast<double>(blue_only) * std::log2(1.0 - pd);
}

bool pattern_in_colouring(const GraphPattern& h, const TwoColouredMultigraph& j) {
    if (h.ell != j.ell) throw std::invalid_argument("uniformity mismatch");
    bool found = false;
    std::vector<int> subset(static_cast<std::size_t>(h.ell));
    try {
        for_each_injection(j.N, h.v, 100000000, [&](const std::vector<int>& phi) {
            if (found) return;
            std::set<std::vector<int>> image_edges;
            std::vector<int> image(static_cast<std::size_t>(h.ell));
            for (const auto& e : h.edges) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    image[i] = phi[static_cast<std::size_t>(e[i] - 1)];
                std::sort(image.begin(), image.end());
                image_edges.insert(image);
            }
            std::vector<int> verts = phi;
            std::sort(verts.begin(), verts.end());
            bool ok = true;
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (!ok) return;
                if (depth == h.ell) {
                    if (image_edges.count(subset)) {
                        if (!j.red.count(subset)) ok = false;
                    } else {
                        if (!j.blue.count(subset)) ok = false;
                    }
                    return;
                }
                for (int i = start; i < h.v && ok; ++i) {
                    subset[static_cast<std::size_t>(depth)] =
                        verts[static_cast<std::size_t>(i)];
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
            if (ok) found = true;
        });
    } catch (const ResourceLimitError&) {
        throw;
    }
    return found;
}

double hex_bruteforce(const GraphPattern& h, int N, const Rational& p) {
    const BigInt slots_big = binomial(N, h.ell);
    if (slots_big > 16) throw ResourceLimitError("hex brute force limited to C(N,ell) <= 16");
    const int slots = static_cast<int>(slots_big);
    double best = -1.0;
    // State per ell-set: 0 = red only, 1 = blue only, 2 = both.
    std::vector<int> state(static_cast<std::size_t>(slots), 0);
    long long total = 1;
    for (int i = 0; i < slots; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        TwoColouredMultigraph j;
        j.N = N;
        j.ell = h.ell;
        for (int i = 0; i < slots; ++i) {
            state[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
            c /= 3;
            std::vector<int> set = colex_unrank(i, h.ell);
            if (state[static_cast<std::size_t>(i)] != 1) j.red.insert(set);
            if (state[static_cast<std::size_t>(i)] != 0) j.blue.insert(set);
        }
        if (pattern_in_colouring(h, j)) continue;
        const double w = hp_weight(j, p);
        if (best < 0 || w < best) best = w;
    }
    if (best < 0) throw NotFoundError("every 2-colouring contains the pattern");
    return best;
}

} // namespace containerkit
