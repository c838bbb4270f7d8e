#include "containerkit/sidon.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <set>

namespace containerkit {

Hypergraph build_sidon_graph(int n) {
    if (n < 4) throw std::invalid_argument("need n >= 4");
    // Group pairs by sum; any two distinct pairs with the same sum are
    // disjoint and span one edge (4-sets admit at most one equal-sum
    // pairing: a+d = b+c for a<b<c<d).
    std::vector<std::vector<std::pair<int, int>>> by_sum(static_cast<std::size_t>(2 * n) + 1);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            by_sum[static_cast<std::size_t>(x + y)].emplace_back(x, y);
    std::vector<std::vector<int>> edges;
    for (const auto& pairs : by_sum)
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                std::vector<int> e = {pairs[i].first, pairs[i].second, pairs[j].first,
                                      pairs[j].second};
                std::sort(e.begin(), e.end());
                edges.push_back(std::move(e));
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph(n, 4, std::move(edges));
}

bool is_sidon_set(const std::vector<int>& values) {
    std::set<int> diffs;
    std::vector<int> v = values;
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!diffs.insert(v[j] - v[i]).second) return false;
    return true;
}

long long count_3aps(const std::vector<int>& u) {
    std::set<int> present(u.begin(), u.end());
    long long count = 0;
    for (int a : present)
        for (int d = 1; a + 2 * d <= *present.rbegin(); ++d)
            if (present.count(a + d) && present.count(a + 2 * d)) ++count;
    return count;
}

SidonIdentityReport sidon_edge_identity_check(int n, const std::vector<int>& u) {
    SidonIdentityReport report;
    std::vector<int> set = u;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int v : set)
        if (v < 1 || v > n) throw std::invalid_argument("U must lie in 1..n");

    report.t.assign(static_cast<std::size_t>(std::max(0, n - 1)), 0);
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            ++report.t[static_cast<std::size_t>(set[j] - set[i] - 1)];

    BigInt pair_pairs = 0;
    for (long long ti : report.t) pair_pairs += binomial(static_cast<long>(ti), 2);
    report.half_sum = Rational(pair_pairs, 2);

    if (n >= 4) {
        Hypergraph g = build_sidon_graph(n);
        report.direct_edges = g.edges_inside(set);
    } else {
        report.direct_edges = 0;
    }
    report.ap3 = set.empty() ? 0 : count_3aps(set);
    report.reconciled_ok =
        pair_pairs == BigInt(2) * report.direct_edges + report.ap3;
    report.literal_ok = report.half_sum == Rational(report.direct_edges);
    return report;
}

} // namespace containerkit
