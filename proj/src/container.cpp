#include "containerkit/container.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <limits>

namespace containerkit {

namespace {

void check_engine_limits(const Hypergraph& g) {
    if (g.vertex_count() > kEngineMaxVertices)
        throw ResourceLimitError("container engine supports at most " +
                                 std::to_string(kEngineMaxVertices) + " vertices");
    if (g.uniformity() > kEngineMaxUniformity)
        throw ResourceLimitError("container engine supports uniformity at most " +
                                 std::to_string(kEngineMaxUniformity));
}

// Exact comparison of integers against num/den * integer, with an int64
// fast path (the engine's hot loop).
struct Frac {
    BigInt num, den;
    bool small = false;
    long long n64 = 0, d64 = 1;

    explicit Frac(const Rational& r) : num(numerator(r)), den(denominator(r)) {
        const BigInt lim = std::numeric_limits<long long>::max();
        if (num >= 0 && num <= lim && den <= lim) {
            small = true;
            n64 = static_cast<long long>(num);
            d64 = static_cast<long long>(den);
        }
    }
    // a >= (num/den) * b, for a, b >= 0
    bool int_ge(long long a, long long b) const {
        if (small)
            return static_cast<__int128>(a) * d64 >= static_cast<__int128>(n64) * b;
        return BigInt(a) * den >= num * b;
    }
    // a > (num/den) * b
    bool int_gt(long long a, long long b) const {
        if (small)
            return static_cast<__int128>(a) * d64 > static_cast<__int128>(n64) * b;
        return BigInt(a) * den > num * b;
    }
};

std::vector<int> sorted_clean(const std::vector<int>& set, int n, const char* what) {
    std::vector<int> out = set;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int v : out)
        if (v < 1 || v > n)
            throw std::invalid_argument(std::string(what) + ": vertex out of range 1..n");
    return out;
}

std::vector<int> gamma1_from_p1(const Hypergraph& g, const LeveledMultigraph& p1,
                                const Rational& tau) {
    // Gamma_1 = {u : d_1(u) > tau^(r-1) d(u)}, recovered from the final P_1.
    Frac thr(rational_pow(tau, g.uniformity() - 1));
    std::vector<int> out;
    for (int u = 1; u <= g.vertex_count(); ++u)
        if (thr.int_gt(p1.vertex_degree(u), g.degree(u))) out.push_back(u);
    return out;
}

} // namespace

std::uint64_t pack_tuple(const std::vector<int>& sorted_tuple) {
    std::uint64_t key = 0;
    for (int v : sorted_tuple) key = (key << 8) | static_cast<std::uint64_t>(v);
    return key;
}

std::vector<int> unpack_tuple(std::uint64_t key, int len) {
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(key & 0xff);
        key >>= 8;
    }
    return out;
}

std::vector<std::pair<std::vector<int>, long long>> LeveledMultigraph::edge_list() const {
    std::vector<std::pair<std::vector<int>, long long>> out;
    out.reserve(edges.size());
    for (const auto& [key, mult] : edges) out.emplace_back(unpack_tuple(key, s), mult);
    return out;
}

LeveledMultigraph LeveledMultigraph::from_hypergraph(const Hypergraph& g) {
    check_engine_limits(g);
    LeveledMultigraph p;
    p.s = g.uniformity();
    p.n = g.vertex_count();
    for (const auto& e : g.edges()) {
        std::uint64_t key = pack_tuple(e);
        p.edges[key] = 1;
        ++p.edge_total;
        const int len = static_cast<int>(e.size());
        for (unsigned mask = 1; mask < (1u << len); ++mask) {
            std::uint64_t sub = 0;
            for (int i = 0; i < len; ++i)
                if (mask & (1u << i))
                    sub = (sub << 8) | static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]);
            p.subset_deg[sub] += 1;
        }
    }
    return p;
}

TupleT TupleT::restrict_to_prefix(int w) const {
    TupleT out;
    out.by_level.reserve(by_level.size());
    for (const auto& part : by_level) out.by_level.push_back(prefix_restrict(part, w));
    return out;
}

LevelOutcome algorithm_level(const Hypergraph& g, const LeveledMultigraph& p_next,
                             const Rational& tau, const Rational& zeta,
                             LevelMode mode, const std::vector<int>& input) {
    check_engine_limits(g);
    if (tau <= 0 || zeta <= 0) throw std::invalid_argument("tau, zeta must be positive");
    const int r = g.uniformity();
    const int n = g.vertex_count();
    const int s = p_next.s - 1;
    if (s < 1 || s > r - 1)
        throw std::invalid_argument("P_{s+1} uniformity must lie in 2..r");
    if (p_next.n != n) throw std::invalid_argument("vertex count mismatch");

    const Frac thr_f(zeta * rational_pow(tau, r - s - 1)); // |F| >= zeta tau^(r-s-1) d(v)
    const Frac thr_u(rational_pow(tau, r - s));            // d_s(u) > tau^(r-s) d(u)
    const Frac thr_sub(rational_pow(Rational(2), s) * tau); // d_s(sig) > 2^s tau d_{s+1}(sig)

    std::vector<char> in_input(static_cast<std::size_t>(n) + 1, 0);
    for (int v : input) {
        if (v < 1 || v > n) throw std::invalid_argument("input set vertex out of range");
        in_input[static_cast<std::size_t>(v)] = 1;
    }

    LevelOutcome res;
    res.p.s = s;
    res.p.n = n;
    std::vector<int> t_s; // prune output
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0); // build bookkeeping

    const std::uint64_t low_mask =
        (s * 8 == 64) ? ~0ULL : ((1ULL << (8 * s)) - 1); // drops the first vertex
    auto next_edge = p_next.edges.begin();
    std::vector<std::pair<std::uint64_t, long long>> f_entries;
    std::vector<std::uint64_t> touched;
    std::vector<int> f_verts(static_cast<std::size_t>(s));

    for (int v = 1; v <= n; ++v) {
        // F = { f in [v+1,n]^(s) : {v} cup f in E(P_{s+1}), no sigma in Gamma_s inside f }
        f_entries.clear();
        long long f_total = 0;
        const std::uint64_t hi = static_cast<std::uint64_t>(v) << (8 * s);
        while (next_edge != p_next.edges.end() && next_edge->first < hi) ++next_edge;
        for (auto it = next_edge;
             it != p_next.edges.end() && (it->first >> (8 * s)) == static_cast<std::uint64_t>(v);
             ++it) {
            const std::uint64_t f_key = it->first & low_mask;
            if (!res.p.gamma.empty()) {
                for (int i = s - 1; i >= 0; --i)
                    f_verts[static_cast<std::size_t>(i)] =
                        static_cast<int>((f_key >> (8 * (s - 1 - i))) & 0xff);
                bool barred = false;
                for (unsigned mask = 1; mask < (1u << s) && !barred; ++mask) {
                    std::uint64_t sub = 0;
                    for (int i = 0; i < s; ++i)
                        if (mask & (1u << i))
                            sub = (sub << 8) |
                                  static_cast<std::uint64_t>(f_verts[static_cast<std::size_t>(i)]);
                    if (res.p.gamma_bars(sub)) barred = true;
                }
                if (barred) continue;
            }
            f_entries.emplace_back(f_key, it->second);
            f_total += it->second;
        }

        const bool passes = thr_f.int_ge(f_total, g.degree(v));
        bool v_in_ts = false;
        if (mode == LevelMode::Prune) {
            if (passes && in_input[static_cast<std::size_t>(v)]) {
                t_s.push_back(v);
                v_in_ts = true;
            }
        } else {
            if (passes) removed[static_cast<std::size_t>(v)] = 1;
            v_in_ts = in_input[static_cast<std::size_t>(v)] != 0;
        }

        if (!v_in_ts || f_entries.empty()) continue;

        // Atomic addition of F, then the Gamma_s scan over everything the
        // addition touched (all of it lies in [v+1,n]).
        touched.clear();
        for (const auto& [f_key, mult] : f_entries) {
            res.p.edges[f_key] += mult;
            res.p.edge_total += mult;
            for (int i = s - 1; i >= 0; --i)
                f_verts[static_cast<std::size_t>(i)] =
                    static_cast<int>((f_key >> (8 * (s - 1 - i))) & 0xff);
            for (unsigned mask = 1; mask < (1u << s); ++mask) {
                std::uint64_t sub = 0;
                for (int i = 0; i < s; ++i)
                    if (mask & (1u << i))
                        sub = (sub << 8) |
                              static_cast<std::uint64_t>(f_verts[static_cast<std::size_t>(i)]);
                res.p.subset_deg[sub] += mult;
                touched.push_back(sub);
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (std::uint64_t sub : touched) {
            if (res.p.gamma_bars(sub)) continue;
            if (sub <= 0xff) {
                const int u = static_cast<int>(sub);
                if (thr_u.int_gt(res.p.degree_of(sub), g.degree(u))) res.p.gamma.insert(sub);
            } else {
                if (thr_sub.int_gt(res.p.degree_of(sub), p_next.degree_of(sub)))
                    res.p.gamma.insert(sub);
            }
        }
    }

    if (mode == LevelMode::Prune) {
        res.out = std::move(t_s);
    } else {
        res.out.reserve(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v)
            if (!removed[static_cast<std::size_t>(v)]) res.out.push_back(v);
    }
    return res;
}

PruneResult prune(const Hypergraph& g, const std::vector<int>& independent_candidate,
                  const Rational& tau, const Rational& zeta) {
    check_engine_limits(g);
    if (tau <= 0 || zeta <= 0) throw std::invalid_argument("tau, zeta must be positive");
    const int r = g.uniformity();
    const std::vector<int> input = sorted_clean(independent_candidate, g.vertex_count(), "I");

    PruneResult res;
    res.tuple.by_level.assign(static_cast<std::size_t>(r), {});
    LeveledMultigraph p = LeveledMultigraph::from_hypergraph(g);
    for (int s = r - 1; s >= 1; --s) {
        LevelOutcome lvl = algorithm_level(g, p, tau, zeta, LevelMode::Prune, input);
        res.tuple.by_level[static_cast<std::size_t>(s)] = lvl.out;
        p = std::move(lvl.p);
        res.levels.push_back(p);
    }
    const LeveledMultigraph& p1 = (r >= 2) ? res.levels.back() : p;
    res.gamma1 = (r >= 2) ? gamma1_from_p1(g, p1, tau) : std::vector<int>{};
    res.tuple.by_level[0] = set_intersection(input, res.gamma1);
    return res;
}

BuildResult build(const Hypergraph& g, const TupleT& tuple, const Rational& tau,
                  const Rational& zeta) {
    check_engine_limits(g);
    if (tau <= 0 || zeta <= 0) throw std::invalid_argument("tau, zeta must be positive");
    const int r = g.uniformity();
    const int n = g.vertex_count();
    if (tuple.parts() != r)
        throw std::invalid_argument("tuple must have exactly r parts");

    BuildResult res;
    res.run.tau = tau;
    res.run.zeta = zeta;
    res.run.mode = "build";
    res.run.tuple.by_level.assign(static_cast<std::size_t>(r), {});
    for (int s = 0; s < r; ++s)
        res.run.tuple.by_level[static_cast<std::size_t>(s)] =
            sorted_clean(tuple.level(s), n, "T_s");

    std::vector<int> base = full_vertex_set(n);
    LeveledMultigraph p = LeveledMultigraph::from_hypergraph(g);
    for (int s = r - 1; s >= 1; --s) {
        LevelOutcome lvl = algorithm_level(g, p, tau, zeta, LevelMode::Build,
                                           res.run.tuple.level(s));
        p = std::move(lvl.p);
        res.levels.push_back(p);
        LevelStats stats;
        stats.s = s;
        stats.e_ps = p.edge_total;
        stats.gamma_size = static_cast<long long>(p.gamma.size());
        stats.out = lvl.out;
        res.run.levels.push_back(std::move(stats));
        base = set_intersection(base, res.run.levels.back().out);
    }
    res.gamma1 = (r >= 2) ? gamma1_from_p1(g, res.levels.back(), tau) : std::vector<int>{};
    res.c0 = set_difference(full_vertex_set(n), res.gamma1);
    base = set_intersection(base, res.c0);

    std::vector<int> container = base;
    for (int s = 0; s < r; ++s) container = set_union(container, res.run.tuple.level(s));
    res.run.container = container;

    res.run.mu_t.reserve(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s)
        res.run.mu_t.push_back(g.degree_measure(res.run.tuple.level(s)));
    res.run.mu_c = g.degree_measure(container);
    res.run.e_induced = g.edges_inside(container);

    // Cheap bound flags; the delta hypothesis is evaluated by cover().
    const Rational two_tau_zeta = 2 * tau / zeta;
    res.run.flags.mu_t_bound = true;
    for (const auto& mu : res.run.mu_t)
        if (mu > two_tau_zeta) res.run.flags.mu_t_bound = false;
    const Rational size_bound = 2 * tau * n / (zeta * zeta);
    res.run.flags.size_t_bound = true;
    for (int s = 0; s < r; ++s)
        if (Rational(static_cast<long long>(res.run.tuple.level(s).size())) > size_bound)
            res.run.flags.size_t_bound = false;
    const Rational mu_c_cap =
        Rational(1) - Rational(1, factorial(r)) + 4 * zeta + Rational(2 * r) * tau / zeta;
    res.run.flags.mu_c_bound = res.run.mu_c <= mu_c_cap;
    return res;
}

CoverResult cover(const Hypergraph& g, const std::vector<int>& independent_candidate,
                  const Rational& tau, const Rational& zeta) {
    check_engine_limits(g);
    if (tau <= 0 || zeta <= 0) throw std::invalid_argument("tau, zeta must be positive");
    const int r = g.uniformity();
    const int n = g.vertex_count();
    const std::vector<int> input = sorted_clean(independent_candidate, n, "I");

    CoverResult res;
    if (g.edge_count() == 0) {
        // d = 0 convention: mu and delta are identically zero and the
        // container is all of [n].
        res.run.tau = tau;
        res.run.zeta = zeta;
        res.run.mode = "cover";
        res.run.tuple = TupleT::empty(r);
        res.run.container = full_vertex_set(n);
        res.run.mu_t.assign(static_cast<std::size_t>(r), Rational(0));
        res.run.mu_c = Rational(0);
        res.run.e_induced = 0;
        res.run.truncation_m = n;
        res.run.flags.delta_le_zeta = true;
        res.run.flags.mu_t_bound = true;
        res.run.flags.size_t_bound = true;
        res.run.flags.mu_c_bound = true;
        res.run.flags.containment_checked = true;
        res.run.flags.containment = true;
        res.run.flags.input_independent = true;
        res.pruned_untruncated = TupleT::empty(r);
        res.profile.tau = tau;
        res.profile.deltas.assign(static_cast<std::size_t>(std::max(0, r - 1)), Rational(0));
        res.profile.delta_total = Rational(0);
        res.mu_engine_container = Rational(0);
        res.mu_tail = Rational(0);
        return res;
    }

    bool sorted = true;
    for (int v = 1; v + 1 <= n && sorted; ++v)
        if (g.degree(v) < g.degree(v + 1)) sorted = false;
    res.input_was_sorted = sorted;

    Hypergraph work = g;
    std::vector<int> new_to_old, old_to_new;
    std::vector<int> input_work = input;
    if (!sorted) {
        auto [sorted_graph, perm] = sort_by_degree(g);
        work = std::move(sorted_graph);
        new_to_old = perm;
        old_to_new.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v)
            old_to_new[static_cast<std::size_t>(new_to_old[static_cast<std::size_t>(v)])] = v;
        input_work = map_through(input, old_to_new);
    }

    res.profile = work.codegree(tau);

    // [m] = {v : d(v) >= zeta d}; a prefix because degrees are decreasing.
    const Rational avg = work.average_degree();
    int m = 0;
    for (int v = 1; v <= n; ++v) {
        if (Rational(work.degree(v)) >= zeta * avg)
            m = v;
        else
            break;
    }

    PruneResult pruned = prune(work, input_work, tau, zeta);
    TupleT truncated = pruned.tuple.restrict_to_prefix(m);
    BuildResult built = build(work, truncated, tau, zeta);

    std::vector<int> tail;
    for (int v = m + 1; v <= n; ++v) tail.push_back(v);
    std::vector<int> container_work = set_union(built.run.container, tail);

    res.run = built.run;
    res.run.mode = "cover";
    res.run.truncation_m = m;
    res.run.container = container_work;
    res.run.mu_c = work.degree_measure(container_work);
    res.run.e_induced = work.edges_inside(container_work);
    res.mu_engine_container = built.run.mu_c;
    res.mu_tail = work.degree_measure(tail);

    res.run.flags.delta_le_zeta = res.profile.delta_total <= zeta;
    const Rational two_tau_zeta = 2 * tau / zeta;
    res.run.flags.mu_t_bound = true;
    for (const auto& mu : res.run.mu_t)
        if (mu > two_tau_zeta) res.run.flags.mu_t_bound = false;
    const Rational mu_c_cap =
        Rational(1) - Rational(1, factorial(r)) + 4 * zeta + Rational(2 * r) * tau / zeta;
    res.run.flags.mu_c_bound = res.run.mu_c <= mu_c_cap;
    res.run.flags.containment_checked = true;
    res.run.flags.containment =
        std::includes(container_work.begin(), container_work.end(), input_work.begin(),
                      input_work.end());
    res.run.flags.input_independent = work.edges_inside(input_work) == 0;

    res.prune_levels = std::move(pruned.levels);
    res.pruned_untruncated = pruned.tuple;

    if (!sorted) {
        res.run.resorted = true;
        res.run.new_to_old = new_to_old;
        res.run.container = map_through(res.run.container, new_to_old);
        for (auto& part : res.run.tuple.by_level) part = map_through(part, new_to_old);
        for (auto& part : res.pruned_untruncated.by_level)
            part = map_through(part, new_to_old);
    }
    return res;
}

bool check_online(const Hypergraph& g, const TupleT& tuple, const Rational& tau,
                  const Rational& zeta, int w) {
    if (w < 1 || w > g.vertex_count())
        throw std::invalid_argument("w out of range 1..n");
    BuildResult full = build(g, tuple, tau, zeta);
    BuildResult restricted = build(g, tuple.restrict_to_prefix(w), tau, zeta);
    return prefix_restrict(full.run.container, w) ==
           prefix_restrict(restricted.run.container, w);
}

GMapResult g_map(const std::vector<Rational>& mu_weights,
                 const std::vector<std::vector<int>>& t_list,
                 const std::vector<std::vector<int>>& c_list, int k,
                 const Rational& c, const Rational& eta, const Rational& lambda) {
    const int n = static_cast<int>(mu_weights.size());
    if (n == 0) throw std::invalid_argument("empty measure");
    if (k < 1 || k > n) throw std::invalid_argument("k out of range 1..n");
    if (c <= 0 || eta <= 0 || lambda <= 0)
        throw std::invalid_argument("c, eta, lambda must be positive");
    for (int i = 0; i + 1 < n; ++i)
        if (mu_weights[static_cast<std::size_t>(i)] < mu_weights[static_cast<std::size_t>(i) + 1])
            throw std::invalid_argument("mu must be decreasing");
    if (mu_weights.back() < 0) throw std::invalid_argument("mu must be nonnegative");

    GMapResult res;
    auto mu_of = [&](const std::vector<int>& set) {
        Rational total(0);
        for (int v : set) {
            if (v < 1 || v > n) throw std::invalid_argument("set vertex out of range");
            total += mu_weights[static_cast<std::size_t>(v - 1)];
        }
        return total;
    };
    Rational total(0);
    for (const auto& w : mu_weights) total += w;
    if (total != 1) {
        res.preconditions_ok = false;
        res.violations.push_back("mu is not a probability measure (total " +
                                 rational_str(total) + ")");
    }
    for (std::size_t i = 0; i < t_list.size(); ++i)
        if (mu_of(t_list[i]) > lambda) {
            res.preconditions_ok = false;
            res.violations.push_back("mu(T_" + std::to_string(i + 1) + ") > lambda");
        }
    const Rational c_cap = Rational(1) - c - eta;
    for (std::size_t i = 0; i < c_list.size(); ++i)
        if (mu_of(c_list[i]) > c_cap) {
            res.preconditions_ok = false;
            res.violations.push_back("mu(C_" + std::to_string(i + 1) + ") > 1 - c - eta");
        }
    {
        Rational prefix(0);
        for (int v = 1; v <= k; ++v) prefix += mu_weights[static_cast<std::size_t>(v - 1)];
        if (prefix > eta * c) {
            res.preconditions_ok = false;
            res.violations.push_back("mu([k]) > eta c");
        }
    }

    const long long s_count = static_cast<long long>(t_list.size());
    const long long t_count = static_cast<long long>(c_list.size());
    std::vector<long long> t_inside(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> c_inside(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& t : t_list)
        for (int v : t) ++t_inside[static_cast<std::size_t>(v)];
    for (const auto& cset : c_list)
        for (int v : cset) ++c_inside[static_cast<std::size_t>(v)];

    long long t_sum = 0, c_sum = 0;
    for (int v = 1; v <= n; ++v) {
        t_sum += t_inside[static_cast<std::size_t>(v)];
        c_sum += c_inside[static_cast<std::size_t>(v)];
        if (v < k) continue;
        // (1/s) sum |T_i cap [v]| < (lambda/eta) v  <=>  eta sum < s lambda v
        bool cond_t = s_count == 0 ||
                      Rational(t_sum) * eta < Rational(s_count) * lambda * v;
        bool cond_c = t_count == 0 ||
                      Rational(c_sum) < Rational(t_count) * (Rational(1) - c) * v;
        if (cond_t && cond_c) {
            res.v = v;
            return res;
        }
    }
    std::string detail;
    for (const auto& violation : res.violations) detail += "; " + violation;
    throw NotFoundError("g_map: no admissible v in [k,n]; preconditions must have failed" +
                        detail);
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> prefix_restrict(const std::vector<int>& sorted_set, int w) {
    std::vector<int> out;
    for (int v : sorted_set)
        if (v <= w) out.push_back(v);
    return out;
}

std::vector<int> full_vertex_set(int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
    return out;
}

} // namespace containerkit
