#include "containerkit/container.hpp"
#include "containerkit/errors.hpp"
#include "containerkit/json_io.hpp"
#include "containerkit/oracle.hpp"
#include "containerkit/rng.hpp"

#include <doctest.h>

using namespace containerkit;

namespace {

Hypergraph c4() { return Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

const Rational kHalf(1, 2);

} // namespace

TEST_CASE("packed tuples") {
    CHECK(pack_tuple({1, 2, 3}) == 0x010203u);
    CHECK(unpack_tuple(pack_tuple({5, 9}), 2) == std::vector<int>{5, 9});
}

TEST_CASE("level on empty P_next") {
    // all positive degrees: thresholds positive, nothing happens
    Hypergraph g(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    LeveledMultigraph empty;
    empty.s = 2;
    empty.n = 3;
    LevelOutcome out = algorithm_level(g, empty, kHalf, kHalf, LevelMode::Build, {});
    CHECK(out.p.edge_total == 0);
    CHECK(out.out == std::vector<int>{1, 2, 3});

    // isolated vertex: 0 >= 0 fires and removes it from C_s
    Hypergraph h(3, 2, {{1, 2}});
    LeveledMultigraph empty2;
    empty2.s = 2;
    empty2.n = 3;
    LevelOutcome out2 = algorithm_level(h, empty2, kHalf, kHalf, LevelMode::Build, {});
    CHECK(out2.out == std::vector<int>{1, 2});

    LeveledMultigraph bad;
    bad.s = 1;
    bad.n = 3;
    CHECK_THROWS_AS(algorithm_level(g, bad, kHalf, kHalf, LevelMode::Build, {}),
                    std::invalid_argument);
}

// Reference trace of the pseudocode on C_4, I = {1,3}, tau = zeta = 1/2.
// Thresholds: |F| >= zeta d(v) = 1; Gamma_1 entry at d_1(u) > tau d(u) = 1.
//  v=1: F = {{2},{4}} (edges 12, 14), |F| = 2 >= 1, 1 in I -> T_1; P_1 = {2,4}
//  v=2: F = {{3}}, |F| = 1 >= 1 but 2 not in I
//  v=3: F = {{4}}, 3 in I -> T_1; P_1 = {2,4,4}; d_1(4) = 2 > 1 -> Gamma_1 = {4}
//  v=4: F empty.
// T = ({1,3}, {}); build gives C_1 = {4}, C_0 = [4]-{4}, C = {1,3}.
TEST_CASE("golden trace on C_4") {
    Hypergraph g = c4();
    PruneResult pr = prune(g, {1, 3}, kHalf, kHalf);
    CHECK(pr.tuple.level(1) == std::vector<int>{1, 3});
    CHECK(pr.tuple.level(0) == std::vector<int>{});
    CHECK(pr.gamma1 == std::vector<int>{4});
    REQUIRE(pr.levels.size() == 1);
    const LeveledMultigraph& p1 = pr.levels[0];
    CHECK(p1.edge_total == 3);
    CHECK(p1.vertex_degree(2) == 1);
    CHECK(p1.vertex_degree(4) == 2);
    CHECK(p1.vertex_degree(1) == 0);

    BuildResult bu = build(g, pr.tuple, kHalf, kHalf);
    CHECK(bu.run.levels[0].out == std::vector<int>{4}); // C_1
    CHECK(bu.c0 == std::vector<int>{1, 2, 3});
    CHECK(bu.run.container == std::vector<int>{1, 3});
    CHECK(bu.run.mu_c == Rational(1, 2));
    CHECK(bu.run.e_induced == 0);
    CHECK(bu.run.levels[0].e_ps == 3);
    CHECK(bu.run.levels[0].gamma_size == 1);

    // determinism: identical inputs give bit-identical serialized records
    BuildResult again = build(g, pr.tuple, kHalf, kHalf);
    CHECK(container_run_json(bu.run).dump() == container_run_json(again.run).dump());
}

TEST_CASE("prune basics") {
    Hypergraph g = c4();
    // I empty: all parts empty, P_s empty
    PruneResult empty = prune(g, {}, kHalf, kHalf);
    CHECK(empty.tuple.level(1).empty());
    CHECK(empty.tuple.level(0).empty());
    CHECK(empty.levels[0].edge_total == 0);
    // independent I has T_0 = empty
    PruneResult ind = prune(g, {2, 4}, kHalf, kHalf);
    CHECK(ind.tuple.level(0).empty());
    CHECK_THROWS_AS(prune(g, {1}, Rational(0), kHalf), std::invalid_argument);
    CHECK_THROWS_AS(prune(g, {9}, kHalf, kHalf), std::invalid_argument);
}

TEST_CASE("build basics") {
    Hypergraph g = c4();
    // All-empty T: level 1 still reads P_2 = G, so v = 1,2,3 each begin
    // enough edges to be removed from C_1; no edges enter P_1, so
    // Gamma_1 = {} and C_0 = [4]. C = {4}, and the universal measure bound
    // mu(C) <= 1 - 1/r! + 11/4 zeta + 1/4 delta stays intact (it forces
    // containers of empty tuples to be small).
    BuildResult all = build(g, TupleT::empty(2), kHalf, kHalf);
    CHECK(all.run.container == std::vector<int>{4});
    CHECK(all.run.levels[0].e_ps == 0);
    CHECK(all.run.levels[0].gamma_size == 0);
    CHECK(all.c0 == std::vector<int>{1, 2, 3, 4});
    // delta(C_4, 1/2) = 1: bound = 1 - 1/2 + 11/8 + 1/4 = 17/8
    CHECK(all.run.mu_c == Rational(1, 4));
    CHECK(all.run.mu_c <= Rational(17, 8));

    TupleT wrong;
    wrong.by_level = {{}};
    CHECK_THROWS_AS(build(g, wrong, kHalf, kHalf), std::invalid_argument);
}

TEST_CASE("containment lemma on random instances") {
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        const int r = t % 2 == 0 ? 2 : 3;
        const int n = 5 + t % 5;
        const long long total = static_cast<long long>(binomial(n, r));
        Hypergraph g = random_hypergraph(n, r, rng_range(rng, 1, std::min<long long>(total, 2 * n)),
                                         rng);
        // arbitrary I, independent or not: containment still holds
        std::vector<int> iset;
        for (int v = 1; v <= n; ++v)
            if (rng() & 1) iset.push_back(v);
        const Rational tau(1, static_cast<long>(rng_range(rng, 2, 12)));
        const Rational zeta(1, static_cast<long>(rng_range(rng, 2, 12)));
        PruneResult pr = prune(g, iset, tau, zeta);
        for (int s = 0; s < r; ++s) {
            const auto& part = pr.tuple.level(s);
            CHECK(std::includes(iset.begin(), iset.end(), part.begin(), part.end()));
        }
        BuildResult bu = build(g, pr.tuple, tau, zeta);
        CHECK(std::includes(bu.run.container.begin(), bu.run.container.end(), iset.begin(),
                            iset.end()));
    }
}

TEST_CASE("online property") {
    Hypergraph g = c4();
    TupleT t = TupleT::empty(2);
    t.by_level[1] = {1, 3};
    CHECK(check_online(g, t, kHalf, kHalf, 4)); // w = n trivially
    CHECK(check_online(g, t, kHalf, kHalf, 1));
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int r = trial % 2 == 0 ? 2 : 3;
        const int n = 5 + trial % 5;
        const long long total = static_cast<long long>(binomial(n, r));
        Hypergraph h = random_hypergraph(n, r, rng_range(rng, 1, std::min<long long>(total, 2 * n)),
                                         rng);
        TupleT tuple = random_tuple(n, r, rng);
        for (int w = 1; w <= n; ++w)
            CHECK(check_online(h, tuple, Rational(1, 3), Rational(1, 4), w));
    }
}

TEST_CASE("cover on edgeless graph") {
    Hypergraph g(5, 2, {});
    CoverResult res = cover(g, {2, 4}, kHalf, kHalf);
    CHECK(res.run.container == std::vector<int>{1, 2, 3, 4, 5});
    for (int s = 0; s < 2; ++s) CHECK(res.run.tuple.level(s).empty());
    CHECK(res.run.flags.containment);
    CHECK(res.run.flags.delta_le_zeta);
}

TEST_CASE("cover containment and resorting") {
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        const int n = 6 + t % 4;
        const long long total = static_cast<long long>(binomial(n, 2));
        Hypergraph g =
            random_hypergraph(n, 2, rng_range(rng, 1, std::min<long long>(total, 2 * n)), rng);
        auto sets = collect_independent_sets(g, 100000);
        const auto& iset = sets[static_cast<std::size_t>(
            rng_below(rng, static_cast<std::uint64_t>(sets.size())))];
        CoverResult res = cover(g, iset, Rational(1, 4), Rational(1, 4));
        CHECK(res.run.flags.containment); // Theorem guarantee for independent I
        CHECK(res.run.flags.input_independent);
        // assembled measure bound: mu(C) <= lemma bound + mu(tail)
        Rational mu_sum(0);
        for (const auto& mu : res.run.mu_t) mu_sum += mu;
        const Rational bound = Rational(1) - Rational(1, 2) + Rational(11, 4) * Rational(1, 4) +
                               res.profile.delta_total / 4 + mu_sum + res.mu_tail;
        CHECK(res.run.mu_c <= bound);
    }
}

TEST_CASE("g_map") {
    // trivial instance: uniform measure on [16] keeps mu([1]) <= eta c
    std::vector<Rational> uniform(16, Rational(1, 16));
    GMapResult res = g_map(uniform, {{}, {}}, {{}}, 1, Rational(1, 4), Rational(1, 4),
                           Rational(1, 8));
    CHECK(res.v == 1);
    CHECK(res.preconditions_ok);

    // C = [n] has mu = 1 > 1 - c - eta: violated preconditions and an
    // impossible scan
    CHECK_THROWS_AS(g_map(uniform, {}, {full_vertex_set(16)}, 1, Rational(1, 4),
                          Rational(1, 4), Rational(1, 8)),
                    NotFoundError);

    CHECK_THROWS_AS(g_map({Rational(1, 4), Rational(1, 2)}, {}, {}, 1, Rational(1, 4),
                          Rational(1, 4), Rational(1, 8)),
                    std::invalid_argument);

    // random instances meeting the preconditions: post-hoc inequality check
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(rng_range(rng, 6, 18));
        std::vector<Rational> w;
        std::vector<long long> raw(static_cast<std::size_t>(n));
        long long total = 0;
        long long level = rng_range(rng, 5, 12);
        for (int i = 0; i < n; ++i) {
            raw[static_cast<std::size_t>(i)] = level;
            total += level;
            if (level > 1 && (rng() & 1)) --level;
        }
        for (int i = 0; i < n; ++i) w.emplace_back(raw[static_cast<std::size_t>(i)], total);
        const Rational c(1, 4), eta(1, 8), lambda(1, 6);
        // small T and C sets keep the measures under the caps
        std::vector<std::vector<int>> ts = {{n}, {}};
        std::vector<std::vector<int>> cs = {{n - 1, n}};
        if (w[0] > lambda) continue;
        if (w[static_cast<std::size_t>(n - 2)] + w[static_cast<std::size_t>(n - 1)] >
            Rational(1) - c - eta)
            continue;
        if (w[0] > eta * c) continue;
        GMapResult g = g_map(w, ts, cs, 1, c, eta, lambda);
        REQUIRE(g.preconditions_ok);
        long long t_in = 0, c_in = 0;
        for (const auto& set : ts)
            for (int v : set)
                if (v <= g.v) ++t_in;
        for (const auto& set : cs)
            for (int v : set)
                if (v <= g.v) ++c_in;
        CHECK(Rational(t_in) * eta < Rational(static_cast<long long>(ts.size())) * lambda * g.v);
        CHECK(Rational(c_in) <
              Rational(static_cast<long long>(cs.size())) * (Rational(1) - c) * g.v);
    }
}

TEST_CASE("cover sweep on a random 3-graph") {
    // all independent sets of one n = 12 instance: containment plus the
    // assembled measure bound mu(C) <= lemma bound + mu(tail)
    Rng rng(47);
    Hypergraph raw = random_hypergraph(12, 3, 50, rng);
    Hypergraph g = sort_by_degree(raw).first;
    const Rational tau(1, 4), zeta(1, 12);
    const Rational delta = g.codegree(tau).delta_total;
    const Rational base =
        Rational(1) - Rational(1, 6) + Rational(11, 4) * zeta + delta / 4;
    auto sets = collect_independent_sets(g, 200000);
    long long checked = 0;
    for (const auto& iset : sets) {
        CoverResult res = cover(g, iset, tau, zeta);
        CHECK(res.run.flags.containment);
        Rational mu_sum(0);
        for (const auto& mu : res.run.mu_t) mu_sum += mu;
        CHECK(res.run.mu_c <= base + mu_sum + res.mu_tail);
        ++checked;
    }
    CHECK(checked == static_cast<long long>(sets.size()));
}

TEST_CASE("cover containment holds for arbitrary input sets") {
    Rng rng(53);
    for (int t = 0; t < 20; ++t) {
        const int n = 6 + t % 5;
        const long long total = static_cast<long long>(binomial(n, 2));
        Hypergraph g =
            random_hypergraph(n, 2, rng_range(rng, 1, std::min<long long>(total, 2 * n)), rng);
        std::vector<int> iset;
        for (int v = 1; v <= n; ++v)
            if (rng() & 1) iset.push_back(v);
        CoverResult res = cover(g, iset, Rational(1, 3), Rational(1, 6));
        CHECK(res.run.flags.containment); // T_0 absorbs the non-independent part
    }
}

TEST_CASE("t0 measure bound for non-independent inputs") {
    // mu(T_0) <= tau^(1-r) e(G[I]) / nd, nontrivial only when I spans edges
    Rng rng(59);
    for (int t = 0; t < 30; ++t) {
        const int r = t % 2 == 0 ? 2 : 3;
        const int n = 6 + t % 5;
        const long long total = static_cast<long long>(binomial(n, r));
        Hypergraph g = random_hypergraph(n, r, std::min<long long>(total, 2 * n), rng);
        std::vector<int> iset;
        for (int v = 1; v <= n; ++v)
            if (rng() % 4 != 0) iset.push_back(v);
        const Rational tau(1, 3), zeta(1, 4);
        PruneResult pr = prune(g, iset, tau, zeta);
        const Rational bound =
            rational_pow(tau, 1 - r) * Rational(g.edges_inside(iset), g.degree_sum());
        CHECK(g.degree_measure(pr.tuple.level(0)) <= bound);
    }
}
