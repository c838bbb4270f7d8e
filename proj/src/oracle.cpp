#include "containerkit/oracle.hpp"
#include "containerkit/digest.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace containerkit {

namespace {

struct BitGraph {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> edges_by_max; // full edge masks, indexed by max vertex

    explicit BitGraph(const Hypergraph& g) : n(g.vertex_count()) {
        if (n > 63) throw ResourceLimitError("bit-indexed oracle supports n <= 63");
        edges_by_max.assign(static_cast<std::size_t>(n) + 1, {});
        for (const auto& e : g.edges()) {
            std::uint64_t mask = 0;
            for (int v : e) mask |= 1ULL << v;
            edges_by_max[static_cast<std::size_t>(e.back())].push_back(mask);
        }
    }
    // May v be added to the independent set `mask`?
    bool can_add(int v, std::uint64_t mask) const {
        const std::uint64_t next = mask | (1ULL << v);
        for (std::uint64_t em : edges_by_max[static_cast<std::size_t>(v)])
            if ((em & ~next) == 0) return false;
        return true;
    }
};

std::vector<int> mask_to_set(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (mask & (1ULL << v)) out.push_back(v);
    return out;
}

std::string set_to_string(const std::vector<int>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i)
        out += (i ? "," : "") + std::to_string(set[i]);
    return out + "}";
}

} // namespace

int oracle_max_n() {
    static const int cap = [] {
        if (const char* env = std::getenv("CONTAINERKIT_MAX_N")) {
            const int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 30;
    }();
    return cap;
}

void enumerate_independent_sets(const Hypergraph& g, long long limit,
                                const std::function<bool(const std::vector<int>&)>& fn) {
    const int n = g.vertex_count();
    if (n > oracle_max_n())
        throw ResourceLimitError("independent-set enumeration capped at n <= " +
                                 std::to_string(oracle_max_n()));
    BitGraph bg(g);
    long long produced = 0;
    bool stopped = false;
    // Exclude-first DFS = lexicographic order of the characteristic vector.
    std::function<void(int, std::uint64_t)> rec = [&](int v, std::uint64_t mask) {
        if (stopped) return;
        if (v > n) {
            if (++produced > limit)
                throw ResourceLimitError("independent-set enumeration exceeded limit");
            if (!fn(mask_to_set(mask, n))) stopped = true;
            return;
        }
        rec(v + 1, mask);
        if (!stopped && bg.can_add(v, mask)) rec(v + 1, mask | (1ULL << v));
    };
    rec(1, 0);
}

std::vector<std::vector<int>> collect_independent_sets(const Hypergraph& g, long long limit) {
    std::vector<std::vector<int>> out;
    enumerate_independent_sets(g, limit, [&](const std::vector<int>& set) {
        out.push_back(set);
        return true;
    });
    return out;
}

BigInt count_independent_sets(const Hypergraph& g, long long limit) {
    const int n = g.vertex_count();
    if (n > oracle_max_n())
        throw ResourceLimitError("independent-set count capped at n <= " +
                                 std::to_string(oracle_max_n()));
    BitGraph bg(g);
    long long count = 0;
    std::function<void(int, std::uint64_t)> rec = [&](int v, std::uint64_t mask) {
        if (v > n) {
            if (++count > limit)
                throw ResourceLimitError("independent-set count exceeded limit");
            return;
        }
        rec(v + 1, mask);
        if (bg.can_add(v, mask)) rec(v + 1, mask | (1ULL << v));
    };
    rec(1, 0);
    return count;
}

bool is_independent(const Hypergraph& g, const std::vector<int>& set) {
    return g.edges_inside(set) == 0;
}

int max_independent_set_size(const Hypergraph& g) {
    const int n = g.vertex_count();
    if (n > 63) throw ResourceLimitError("max independent set supports n <= 63");
    BitGraph bg(g);
    int best = 0;
    std::function<void(int, std::uint64_t, int)> rec = [&](int v, std::uint64_t mask, int size) {
        if (size + (n - v + 1) <= best) return;
        if (v > n) {
            best = std::max(best, size);
            return;
        }
        if (bg.can_add(v, mask)) rec(v + 1, mask | (1ULL << v), size + 1);
        rec(v + 1, mask, size);
    };
    rec(1, 0, 0);
    return best;
}

bool degeneracy_check(const Hypergraph& g, const std::vector<int>& independent_candidate,
                      long long b) {
    std::vector<int> j = independent_candidate;
    std::sort(j.begin(), j.end());
    j.erase(std::unique(j.begin(), j.end()), j.end());
    while (!j.empty()) {
        // induced degrees within G[J]
        std::vector<char> in_j(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (int v : j) in_j[static_cast<std::size_t>(v)] = 1;
        std::vector<long long> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (const auto& e : g.edges()) {
            bool inside = true;
            for (int v : e)
                if (!in_j[static_cast<std::size_t>(v)]) {
                    inside = false;
                    break;
                }
            if (inside)
                for (int v : e) ++deg[static_cast<std::size_t>(v)];
        }
        int argmin = j.front();
        for (int v : j)
            if (deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(argmin)])
                argmin = v; // first minimum: deterministic peel order
        if (deg[static_cast<std::size_t>(argmin)] > b) return false;
        j.erase(std::find(j.begin(), j.end(), argmin));
    }
    return true;
}

bool degeneracy_check_exhaustive(const Hypergraph& g, const std::vector<int>& set,
                                 long long b) {
    std::vector<int> base = set;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    const int m = static_cast<int>(base.size());
    if (m > 25) throw ResourceLimitError("exhaustive degeneracy check capped at |I| <= 25");
    for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
        std::vector<int> j;
        for (int i = 0; i < m; ++i)
            if (mask & (1ULL << i)) j.push_back(base[static_cast<std::size_t>(i)]);
        Hypergraph induced = g.induced(j);
        bool has_low = false;
        for (int v = 1; v <= induced.vertex_count() && !has_low; ++v)
            if (induced.degree(v) <= b) has_low = true;
        if (!has_low) return false;
    }
    return true;
}

LemmoidOutcome lemmoid_property(const std::vector<Rational>& mu_weights,
                                const std::vector<std::pair<int, long long>>& s_multiset,
                                const Rational& alpha) {
    const int n = static_cast<int>(mu_weights.size());
    if (n == 0) throw std::invalid_argument("empty measure");
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    for (int i = 0; i + 1 < n; ++i)
        if (mu_weights[static_cast<std::size_t>(i)] < mu_weights[static_cast<std::size_t>(i) + 1])
            throw std::invalid_argument("mu must be decreasing");
    if (mu_weights.back() < 0) throw std::invalid_argument("mu must be nonnegative");

    std::vector<long long> mult(static_cast<std::size_t>(n) + 1, 0);
    LemmoidOutcome out;
    out.rhs = Rational(0);
    for (const auto& [v, m] : s_multiset) {
        if (v < 1 || v > n) throw std::invalid_argument("multiset value out of range");
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        mult[static_cast<std::size_t>(v)] += m;
        out.rhs += Rational(m) * mu_weights[static_cast<std::size_t>(v - 1)];
    }
    Rational w_measure(0);
    long long prefix = 0;
    for (int v = 1; v <= n; ++v) {
        prefix += mult[static_cast<std::size_t>(v)];
        if (Rational(prefix) >= alpha * v)
            w_measure += mu_weights[static_cast<std::size_t>(v - 1)];
    }
    out.lhs = alpha * w_measure;
    out.ok = out.lhs <= out.rhs;
    return out;
}

Hypergraph random_hypergraph(int n, int r, long long e, Rng& rng) {
    const BigInt total_big = binomial(n, r);
    if (total_big > BigInt(1) << 62) throw ResourceLimitError("edge space too large");
    const long long total = static_cast<long long>(total_big);
    if (e < 0 || e > total)
        throw std::invalid_argument("edge count out of range 0..C(n,r)");
    // Uniform without replacement over colex ranks; sample the complement
    // when e is more than half the space.
    const bool complement = e > total / 2;
    const long long want = complement ? total - e : e;
    std::set<long long> ranks;
    while (static_cast<long long>(ranks.size()) < want)
        ranks.insert(static_cast<long long>(rng_below(rng, static_cast<std::uint64_t>(total))));
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(e));
    if (complement) {
        for (long long rank = 0; rank < total; ++rank)
            if (!ranks.count(rank)) edges.push_back(colex_unrank(rank, r));
    } else {
        for (long long rank : ranks) edges.push_back(colex_unrank(rank, r));
    }
    return Hypergraph(n, r, std::move(edges));
}

TupleT random_tuple(int n, int r, Rng& rng) {
    TupleT t = TupleT::empty(r);
    for (int s = 0; s < r; ++s) {
        std::vector<int> part;
        for (int v = 1; v <= n; ++v)
            if (rng() & 1ULL) part.push_back(v);
        t.by_level[static_cast<std::size_t>(s)] = std::move(part);
    }
    return t;
}

std::vector<VerificationReport> verify_cover_family(const Hypergraph& g, const Rational& tau,
                                                    const Rational& zeta,
                                                    const CoverFamilyOptions& options) {
    const int n = g.vertex_count();
    const int r = g.uniformity();
    const std::string digest = fnv1a64_hex(g.to_text());
    const Rational delta = g.codegree(tau).delta_total;
    const long long nd = g.degree_sum();

    VerificationReport containment, mu_t_rep, t0_rep, mu_c_rep, caps_rep, cover_rep;
    for (auto* rep : {&containment, &mu_t_rep, &t0_rep, &mu_c_rep, &caps_rep, &cover_rep}) {
        rep->instance_digest = digest;
        rep->seed = options.seed;
    }
    containment.property = "lemma-containment";
    mu_t_rep.property = "lemma-fingerprint-measure";
    t0_rep.property = "lemma-t0-measure";
    mu_c_rep.property = "lemma-container-measure";
    caps_rep.property = "lemma-degree-caps";
    cover_rep.property = "theorem-cover-truncated";

    const Rational mu_t_bound = (tau / zeta) * (Rational(1) + delta);
    const Rational mu_c_base =
        Rational(1) - Rational(1, factorial(r)) + Rational(11, 4) * zeta + delta / 4;
    // degree caps: per-level constants
    std::vector<Rational> cap_q(static_cast<std::size_t>(r), Rational(0));
    std::vector<Rational> cap_c(static_cast<std::size_t>(r), Rational(0));
    for (int s = 1; s <= r - 1; ++s) {
        cap_q[static_cast<std::size_t>(s)] = rational_pow(tau, r - s);
        cap_c[static_cast<std::size_t>(s)] =
            Rational(nd) * rational_pow(Rational(4), 1 - s) * delta;
    }

    Rng rng(derive_seed(options.seed, 0x5eedULL));

    auto audit_one = [&](const std::vector<int>& iset) {
        PruneResult pr = prune(g, iset, tau, zeta);
        BuildResult bu = build(g, pr.tuple, tau, zeta);

        ++containment.trials;
        if (!std::includes(bu.run.container.begin(), bu.run.container.end(), iset.begin(),
                           iset.end()))
            containment.fail("I=" + set_to_string(iset));

        Rational mu_sum(0);
        for (int s = 0; s < r; ++s) {
            const Rational mu = g.degree_measure(pr.tuple.level(s));
            mu_sum += mu;
            if (s >= 1) {
                ++mu_t_rep.trials;
                mu_t_rep.record_margin(mu_t_bound - mu);
                if (mu > mu_t_bound)
                    mu_t_rep.fail("I=" + set_to_string(iset) + " s=" + std::to_string(s));
            }
        }
        {
            // mu(T_0) <= tau^(1-r) e(G[I]) / nd
            ++t0_rep.trials;
            if (nd > 0) {
                const Rational bound =
                    rational_pow(tau, 1 - r) * Rational(g.edges_inside(iset), nd);
                const Rational mu0 = g.degree_measure(pr.tuple.level(0));
                t0_rep.record_margin(bound - mu0);
                if (mu0 > bound) t0_rep.fail("I=" + set_to_string(iset));
            }
        }
        {
            ++mu_c_rep.trials;
            const Rational bound = mu_c_base + mu_sum;
            mu_c_rep.record_margin(bound - bu.run.mu_c);
            if (bu.run.mu_c > bound) mu_c_rep.fail("I=" + set_to_string(iset));
        }
        // Degree caps at every produced level, U = [n] plus random U.
        for (const auto& level : pr.levels) {
            const int s = level.s;
            const Rational& q = cap_q[static_cast<std::size_t>(s)];
            const Rational& c = cap_c[static_cast<std::size_t>(s)];
            auto check_u = [&](long long deg_sum_u, long long lhs, const char* label) {
                ++caps_rep.trials;
                const Rational rhs = q * (Rational(deg_sum_u) + c);
                caps_rep.record_margin(rhs - lhs);
                if (Rational(lhs) > rhs)
                    caps_rep.fail("I=" + set_to_string(iset) + " s=" + std::to_string(s) +
                                  " U=" + label);
            };
            // U = [n]: sum_u d_s(u) counts each edge s times.
            check_u(nd, static_cast<long long>(s) * level.edge_total, "[n]");
            for (int t = 0; t < options.random_u_count; ++t) {
                long long lhs = 0, dsum = 0;
                for (int v = 1; v <= n; ++v)
                    if (rng() & 1ULL) {
                        lhs += level.vertex_degree(v);
                        dsum += g.degree(v);
                    }
                check_u(dsum, lhs, "random");
            }
        }
        if (options.include_cover_variant) {
            CoverResult cv = cover(g, iset, tau, zeta);
            ++cover_rep.trials;
            if (!cv.run.flags.containment) cover_rep.fail("containment I=" + set_to_string(iset));
            if (cv.run.flags.delta_le_zeta) {
                // Theorem bounds are guaranteed under delta <= zeta for
                // independent I (T_0 is then empty).
                if (cv.run.flags.input_independent &&
                    (!cv.run.flags.mu_t_bound || !cv.run.flags.mu_c_bound))
                    cover_rep.fail("bounds I=" + set_to_string(iset));
            }
            // Assembled truncation bound holds unconditionally:
            // mu(C) <= [Lemma bound for the truncated tuple] + mu(tail).
            Rational mu_sum_trunc(0);
            for (const auto& mu : cv.run.mu_t) mu_sum_trunc += mu;
            if (cv.run.mu_c > mu_c_base + mu_sum_trunc + cv.mu_tail)
                cover_rep.fail("assembled bound I=" + set_to_string(iset));
        }
    };

    if (options.all_independent) {
        enumerate_independent_sets(g, options.independent_cap,
                                   [&](const std::vector<int>& iset) {
                                       audit_one(iset);
                                       return true;
                                   });
    } else {
        for (long long i = 0; i < options.sample_count; ++i) {
            std::vector<int> iset;
            for (int v = 1; v <= n; ++v)
                if (rng() & 1ULL) iset.push_back(v);
            audit_one(iset);
        }
    }

    std::vector<VerificationReport> out = {containment, mu_t_rep, t0_rep, mu_c_rep, caps_rep};
    if (options.include_cover_variant) out.push_back(cover_rep);
    return out;
}

VerificationReport verify_container_measure_random_t(const Hypergraph& g, const Rational& tau,
                                                     const Rational& zeta, long long trials,
                                                     std::uint64_t seed) {
    VerificationReport rep;
    rep.instance_digest = fnv1a64_hex(g.to_text());
    rep.property = "lemma-container-measure-arbitrary-T";
    rep.seed = seed;
    const int r = g.uniformity();
    const Rational delta = g.codegree(tau).delta_total;
    const Rational base =
        Rational(1) - Rational(1, factorial(r)) + Rational(11, 4) * zeta + delta / 4;
    Rng rng(seed);
    for (long long t = 0; t < trials; ++t) {
        TupleT tuple = random_tuple(g.vertex_count(), r, rng);
        BuildResult bu = build(g, tuple, tau, zeta);
        Rational mu_sum(0);
        for (const auto& mu : bu.run.mu_t) mu_sum += mu;
        const Rational bound = base + mu_sum;
        ++rep.trials;
        rep.record_margin(bound - bu.run.mu_c);
        if (bu.run.mu_c > bound) rep.fail("trial " + std::to_string(t));
    }
    return rep;
}

VerificationReport verify_online_all_w(const Hypergraph& g, const TupleT& tuple,
                                       const Rational& tau, const Rational& zeta) {
    VerificationReport rep;
    rep.instance_digest = fnv1a64_hex(g.to_text());
    rep.property = "lemma-online";
    for (int w = 1; w <= g.vertex_count(); ++w) {
        ++rep.trials;
        if (!check_online(g, tuple, tau, zeta, w)) rep.fail("w=" + std::to_string(w));
    }
    return rep;
}

long long ex_bruteforce(int N, const GraphPattern& h, const BuildLimits& limits) {
    Hypergraph g = build_gnh(N, h, limits);
    if (g.vertex_count() > 32)
        throw ResourceLimitError("ex brute force capped at C(N,ell) <= 32");
    return max_independent_set_size(g);
}

BigInt sidon_count_bruteforce(int n) {
    if (n < 1 || n > 28) throw ResourceLimitError("Sidon count capped at n <= 28");
    // Sidon <=> all pairwise differences distinct; track them in a bitmask.
    BigInt count = 0;
    std::vector<int> chosen;
    std::function<void(int, std::uint32_t)> rec = [&](int start, std::uint32_t diffs) {
        ++count; // the current set
        for (int z = start; z <= n; ++z) {
            std::uint32_t add = 0;
            bool ok = true;
            for (int a : chosen) {
                const std::uint32_t bit = 1u << (z - a);
                if ((diffs | add) & bit) {
                    ok = false;
                    break;
                }
                add |= bit;
            }
            if (!ok) continue;
            chosen.push_back(z);
            rec(z + 1, diffs | add);
            chosen.pop_back();
        }
    };
    rec(1, 0);
    return count;
}

SparseExperimentReport sparse_experiment(int m_size,
                                         const std::vector<SparseFamilyMember>& family,
                                         const Rational& p, const Rational& nu,
                                         long long trials, std::uint64_t seed,
                                         std::optional<long long> declared_d) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (p <= 0 || p > 1) throw std::invalid_argument("p must lie in (0,1]");
    if (nu <= 0) throw std::invalid_argument("nu must be positive");
    long long max_d = 0;
    for (const auto& member : family) {
        for (int v : member.fingerprint)
            if (v < 1 || v > m_size) throw std::invalid_argument("fingerprint out of range");
        for (int v : member.d_set)
            if (v < 1 || v > m_size) throw std::invalid_argument("D out of range");
        max_d = std::max(max_d, static_cast<long long>(member.d_set.size()));
    }
    const long long d = declared_d.value_or(max_d);
    if (d < max_d) throw std::invalid_argument("declared d below max |D|");

    SparseExperimentReport rep;
    rep.trials = trials;
    rep.declared_d = d;
    rep.seed = seed;
    const Rational threshold = (Rational(1) + nu) * p * d; // |D cap X| must exceed this

    Rng rng(seed);
    std::vector<char> in_x(static_cast<std::size_t>(m_size) + 1, 0);
    for (long long t = 0; t < trials; ++t) {
        for (int v = 1; v <= m_size; ++v)
            in_x[static_cast<std::size_t>(v)] = rng_bernoulli(rng, p) ? 1 : 0;
        bool hit = false;
        for (const auto& member : family) {
            bool fits = true;
            for (int v : member.fingerprint)
                if (!in_x[static_cast<std::size_t>(v)]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            long long inter = 0;
            for (int v : member.d_set)
                if (in_x[static_cast<std::size_t>(v)]) ++inter;
            if (Rational(inter) > threshold) {
                hit = true;
                break;
            }
        }
        if (hit) ++rep.hits;
    }
    rep.frequency = static_cast<double>(rep.hits) / static_cast<double>(trials);
    const double exponent = -rational_to_double(nu * nu * p) * static_cast<double>(d) / 32.0;
    rep.analytic_bound = std::exp(exponent);
    rep.three_se = 3.0 * std::sqrt(rep.frequency * (1.0 - rep.frequency) /
                                   static_cast<double>(trials));
    rep.within_band = rep.frequency <= rep.analytic_bound + rep.three_se;
    return rep;
}

HfreeSparseProbeReport hfree_sparse_probe(int N, const GraphPattern& h, const Rational& p,
                                          const Rational& gamma, long long trials,
                                          std::uint64_t seed) {
    Hypergraph g = build_gnh(N, h);
    HfreeSparseProbeReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.ex_value = ex_bruteforce(N, h);
    const Rational threshold =
        p * (Rational(rep.ex_value) + gamma * g.vertex_count());
    rep.threshold = rational_to_double(threshold);
    Rng rng(seed);
    for (long long t = 0; t < trials; ++t) {
        std::vector<int> x;
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (rng_bernoulli(rng, p)) x.push_back(v);
        Hypergraph induced = g.induced(x);
        const int best = max_independent_set_size(induced);
        if (Rational(best) > threshold) ++rep.exceedances;
    }
    return rep;
}

} // namespace containerkit
