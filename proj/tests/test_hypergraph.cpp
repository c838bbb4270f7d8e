#include "containerkit/hypergraph.hpp"
#include "containerkit/errors.hpp"
#include "containerkit/oracle.hpp"
#include "containerkit/rng.hpp"

#include <doctest.h>

#include <sstream>

using namespace containerkit;

namespace {

Hypergraph triangle() { return Hypergraph(3, 2, {{1, 2}, {1, 3}, {2, 3}}); }
Hypergraph path3() { return Hypergraph(3, 2, {{1, 2}, {2, 3}}); }
Hypergraph c4() { return Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

} // namespace

TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 2, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 2, 3}}), std::invalid_argument);
    Hypergraph g(3, 2, {{2, 1}}); // canonicalized
    CHECK(g.edges()[0] == std::vector<int>{1, 2});
}

TEST_CASE("text format") {
    std::istringstream in("# comment\n4 2\n1 2\n# another\n3 4\n");
    Hypergraph g = Hypergraph::parse(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    // round trip
    std::istringstream again(g.to_text());
    CHECK(Hypergraph::parse(again) == g);

    std::istringstream dup("3 2\n1 2\n1 2\n");
    CHECK_THROWS_AS(Hypergraph::parse(dup), ParseError);
    try {
        std::istringstream dup2("3 2\n1 2\n1 2\n");
        Hypergraph::parse(dup2);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream bad("3 2\n2 1\n");
    CHECK_THROWS_AS(Hypergraph::parse(bad), ParseError);
}

TEST_CASE("subset degrees") {
    Hypergraph g = triangle();
    CHECK(g.degree_of_subset({1}) == 2);
    CHECK(g.degree_of_subset({1, 2}) == 1);
    CHECK(g.degree_of_subset({1, 2, 3}) == 0);
    CHECK_THROWS_AS(g.degree_of_subset({}), std::invalid_argument);
    // monotone under inclusion
    CHECK(g.degree_of_subset({1, 2}) <= g.degree_of_subset({2}));
}

TEST_CASE("dj_max") {
    CHECK(triangle().dj_max(1, 2) == 1);
    Hypergraph two(4, 3, {{1, 2, 3}, {1, 2, 4}});
    CHECK(two.dj_max(1, 2) == 2); // sigma = {1,2}
    Hypergraph single(3, 3, {{1, 2, 3}});
    CHECK(single.dj_max(1, 3) == 1);
    CHECK_THROWS_AS(single.dj_max(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(single.dj_max(1, 4), std::invalid_argument);
}

TEST_CASE("degree measure") {
    Hypergraph g = c4(); // regular
    CHECK(g.degree_measure({1, 3}) == Rational(1, 2));
    CHECK(g.degree_measure({}) == 0);
    CHECK(path3().degree_measure({2}) == Rational(1, 2));
    CHECK(Hypergraph(3, 2, {}).degree_measure({1, 2, 3}) == 0);
    // probability measure and additivity
    CHECK(g.degree_measure({1, 2, 3, 4}) == 1);
    CHECK(g.degree_measure({1, 2}) + g.degree_measure({3, 4}) ==
          g.degree_measure({1, 2, 3, 4}));
}

TEST_CASE("codegree function") {
    Hypergraph g = triangle();
    CodegreeProfile p = g.codegree(Rational(1, 2));
    CHECK(p.delta_j(2) == 1);
    CHECK(p.delta_total == 1);
    CHECK_THROWS_AS(g.codegree(Rational(0)), std::invalid_argument);
    CHECK(Hypergraph(4, 2, {}).codegree(Rational(1, 2)).delta_total == 0);
}

TEST_CASE("codegree properties on random instances") {
    Rng rng(42);
    for (int t = 0; t < 25; ++t) {
        const int r = t % 2 == 0 ? 2 : 3;
        const int n = 5 + t % 4;
        const long long total = static_cast<long long>(binomial(n, r));
        const long long e = rng_range(rng, 1, std::min<long long>(total, 2 * n));
        Hypergraph g = random_hypergraph(n, r, e, rng);
        const Rational tau(1, 1 + static_cast<long>(rng_range(rng, 1, 12)));
        CodegreeProfile lo = g.codegree(tau);
        CodegreeProfile hi = g.codegree(tau * 3);
        CHECK(hi.delta_total <= lo.delta_total); // non-increasing in tau
        // delta_j >= tau^(1-j)/d when no isolated vertices
        bool isolated = false;
        for (int v = 1; v <= n; ++v)
            if (g.degree(v) == 0) isolated = true;
        if (!isolated) {
            const Rational d = g.average_degree();
            for (int j = 2; j <= r; ++j)
                CHECK(lo.delta_j(j) >= rational_pow(tau, 1 - j) / d);
        }
        // simple graphs: delta_j <= tau^(1-j)/d
        bool simple = true;
        for (int v = 1; v <= n && simple; ++v)
            for (int j = 2; j <= r && simple; ++j)
                if (g.dj_max(v, j) > 1) simple = false;
        if (simple && g.edge_count() > 0) {
            const Rational d = g.average_degree();
            for (int j = 2; j <= r; ++j)
                CHECK(lo.delta_j(j) <= rational_pow(tau, 1 - j) / d);
        }
        // degree sum identity
        long long dsum = 0;
        for (int v = 1; v <= n; ++v) dsum += g.degree(v);
        CHECK(dsum == static_cast<long long>(r) * g.edge_count());
    }
}

TEST_CASE("sort_by_degree") {
    // star with center 3
    Hypergraph star(3, 2, {{1, 3}, {2, 3}});
    auto [sorted, perm] = sort_by_degree(star);
    CHECK(perm[1] == 3); // center relabeled to 1
    CHECK(sorted.degree(1) == 2);

    // already sorted: identity
    Hypergraph path(3, 2, {{1, 2}, {1, 3}});
    auto [sorted2, perm2] = sort_by_degree(path);
    CHECK(perm2 == std::vector<int>{0, 1, 2, 3});
    CHECK(sorted2 == path);

    // regular: identity by stable ties
    auto [sorted3, perm3] = sort_by_degree(c4());
    CHECK(perm3 == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(sorted3 == c4());
}

TEST_CASE("induced subgraph") {
    Hypergraph g = c4();
    std::vector<int> map;
    Hypergraph h = g.induced({2, 3, 4}, &map);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 2); // {2,3},{3,4}
    CHECK(map == std::vector<int>{2, 3, 4});
    CHECK(g.edges_inside({1, 2, 3}) == 2);
    CHECK(g.edges_inside({1, 3}) == 0);
}
