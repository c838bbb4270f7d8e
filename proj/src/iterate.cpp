#include "containerkit/iterate.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace containerkit {

namespace {

Rational shrink_factor(int r) { // 1 - 1/2r!
    return Rational(1) - Rational(1, 2 * factorial(r));
}

} // namespace

CoveroffStep::CoveroffStep(Hypergraph g, const Rational& tau) : graph_(std::move(g)) {
    const int r = graph_.uniformity();
    const BigInt rfact = factorial(r);
    hypo_.tau = tau;
    hypo_.zeta = Rational(1, 12 * rfact);
    hypo_.delta_cap = Rational(1, 12 * rfact);
    hypo_.tau_cap = Rational(1, 144 * rfact * rfact * r);
    hypo_.delta = graph_.codegree(tau).delta_total;
    hypo_.delta_ok = hypo_.delta <= hypo_.delta_cap;
    hypo_.tau_ok = tau <= hypo_.tau_cap;
}

CoveroffStep::Outcome CoveroffStep::run(const std::vector<int>& independent_set) const {
    Outcome out;
    out.cover = cover(graph_, independent_set, hypo_.tau, hypo_.zeta);
    const int r = graph_.uniformity();
    const Rational cap = shrink_factor(r) * graph_.edge_count();
    out.edge_bound_ok = Rational(out.cover.run.e_induced) <= cap;
    out.edge_bound_applicable = hypo_.all_ok() && out.cover.run.flags.input_independent;
    const Rational size_cap =
        288 * factorial(r) * factorial(r) * hypo_.tau * graph_.vertex_count();
    out.t_size_ok = true;
    for (const auto& part : out.cover.run.tuple.by_level)
        if (Rational(static_cast<long long>(part.size())) > size_cap) out.t_size_ok = false;
    return out;
}

TauPolicy constant_tau_policy(const Rational& tau) {
    return [tau](const Hypergraph&) { return tau; };
}

IterationChain iterate_containers(const Hypergraph& g,
                                  const std::vector<int>& independent_set, long long e0,
                                  const TauPolicy& tau_policy) {
    if (e0 < 0) throw std::invalid_argument("e0 must be >= 0");
    if (e0 > g.edge_count()) throw std::invalid_argument("e0 must be <= e(G)");
    const int r = g.uniformity();
    const Rational alpha = shrink_factor(r);

    IterationChain chain;
    chain.e0 = e0;
    if (g.edge_count() > 0 && e0 < g.edge_count()) {
        const double num = std::log(static_cast<double>(std::max<long long>(e0, 1))) -
                           std::log(static_cast<double>(g.edge_count()));
        chain.k_formula = num / std::log(rational_to_double(alpha));
    }
    chain.stage_cap = static_cast<long long>(std::ceil(chain.k_formula)) + 2 + (e0 == 0 ? 1 : 0);
    chain.parts_bound = (chain.k_formula + 1.0) * r;

    std::vector<int> current = full_vertex_set(g.vertex_count());
    std::vector<int> independent = independent_set;
    std::sort(independent.begin(), independent.end());
    independent.erase(std::unique(independent.begin(), independent.end()), independent.end());

    IterationStage start;
    start.vertices = current;
    start.tuple = TupleT::empty(r);
    start.e_induced = g.edge_count();
    start.tau_used = Rational(0);
    chain.stages.push_back(start);

    long long shrink_stages = 0;
    while (chain.stages.back().e_induced > e0) {
        if (shrink_stages > chain.stage_cap)
            throw InternalError("iterate_containers exceeded its stage cap with "
                                "hypotheses holding; shrink guarantee violated");

        // Fresh instance: G[C_i] relabeled 1..|C_i| by descending induced
        // degree. Vertices of induced degree 0 stay (build cannot remove
        // them and they belong in any container).
        std::vector<int> to_current; // induced label -> original label
        Hypergraph induced = g.induced(current, &to_current);
        auto [stage_graph, perm] = sort_by_degree(induced);
        std::vector<int> stage_to_orig(static_cast<std::size_t>(perm.size()), 0);
        for (std::size_t v = 1; v < perm.size(); ++v)
            stage_to_orig[v] = to_current[static_cast<std::size_t>(perm[v] - 1)];
        std::vector<int> orig_to_stage(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (std::size_t v = 1; v < stage_to_orig.size(); ++v)
            orig_to_stage[static_cast<std::size_t>(stage_to_orig[v])] = static_cast<int>(v);

        std::vector<int> stage_i;
        for (int v : set_intersection(independent, current))
            stage_i.push_back(orig_to_stage[static_cast<std::size_t>(v)]);
        std::sort(stage_i.begin(), stage_i.end());

        const Rational tau = tau_policy(stage_graph);
        CoveroffStep step(stage_graph, tau);
        CoveroffStep::Outcome outcome = step.run(stage_i);
        ++shrink_stages;

        IterationStage stage;
        stage.tau_used = tau;
        stage.hypotheses = step.hypotheses();
        std::vector<int> next = map_through(outcome.cover.run.container, stage_to_orig);
        next = set_intersection(next, current); // chain monotonicity, even on failure
        stage.vertices = next;
        stage.tuple.by_level.reserve(outcome.cover.run.tuple.by_level.size());
        for (const auto& part : outcome.cover.run.tuple.by_level)
            stage.tuple.by_level.push_back(map_through(part, stage_to_orig));
        stage.e_induced = g.edges_inside(next);
        chain.stages.push_back(stage);
        chain.fingerprint_parts_total += r;
        current = next;

        if (!step.hypotheses().all_ok()) {
            chain.diagnostic =
                "stage " + std::to_string(shrink_stages) + " hypotheses failed: delta = " +
                rational_str(step.hypotheses().delta) + " vs cap " +
                rational_str(step.hypotheses().delta_cap) + ", tau = " + rational_str(tau) +
                " vs cap " + rational_str(step.hypotheses().tau_cap);
            break;
        }
    }
    chain.terminated = chain.stages.back().e_induced <= e0;
    return chain;
}

SparseContainerReport sparse_container(const Hypergraph& g,
                                       const std::vector<int>& independent_set,
                                       const Rational& eps, const Rational& tau) {
    if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0,1]");
    SparseContainerReport report;
    report.eps = eps;
    const Rational e0_exact = eps * g.edge_count();
    const BigInt e0_floor = numerator(e0_exact) / denominator(e0_exact);
    const long long e0 = static_cast<long long>(e0_floor);
    report.chain = iterate_containers(g, independent_set, e0, constant_tau_policy(tau));

    const int r = g.uniformity();
    report.parts_count_ok =
        report.chain.terminated &&
        static_cast<double>(report.chain.fingerprint_parts_total) <=
            report.chain.parts_bound + 1e-9;
    // Theorem budget with the constant policy: f(m) = n tau log(1/tau) for
    // every m <= e(G), summed over the ceil(k) stages.
    const double rfact = static_cast<double>(factorial(r));
    const double terms = std::ceil(report.chain.k_formula);
    const double tau_d = rational_to_double(tau);
    double f_val = 0.0;
    if (tau_d > 0 && tau_d < 1)
        f_val = static_cast<double>(g.vertex_count()) * tau_d * std::log(1.0 / tau_d);
    report.log_collection_budget = 288.0 * r * rfact * rfact * terms * f_val;
    return report;
}

double entropy_bound(long long s, const Rational& theta, long long n) {
    if (theta <= 0 || theta > 1) throw std::invalid_argument("theta must lie in (0,1]");
    if (s < 0 || n < 0) throw std::invalid_argument("s, n must be >= 0");
    const long double th = static_cast<long double>(numerator(theta)) /
                           static_cast<long double>(denominator(theta));
    const long double exponent =
        static_cast<long double>(s) * th * static_cast<long double>(n) *
        (1.0L + std::log(1.0L / th));
    return static_cast<double>(std::exp(exponent));
}

BigInt count_tuples_exact(long long s, long long cap, long long n) {
    if (s < 0 || n < 0 || cap < 0) throw std::invalid_argument("arguments must be >= 0");
    const long long total = n * s;
    BigInt sum = 0, term = 1; // binom(ns, 0)
    for (long long j = 0; j <= std::min(cap, total); ++j) {
        if (j > 0) {
            term *= (total - j + 1);
            term /= j;
        }
        sum += term;
    }
    return sum;
}

std::optional<Rational> feasible_tau_search(const Hypergraph& g, const Rational& delta_cap,
                                            const Rational& tau_cap) {
    // delta(G,tau) is non-increasing in tau, so tau_cap is feasible iff
    // anything is; then halve while feasibility persists.
    if (g.codegree(tau_cap).delta_total > delta_cap) return std::nullopt;
    Rational tau = tau_cap;
    for (int i = 0; i < 60; ++i) {
        Rational half = tau / 2;
        if (g.codegree(half).delta_total > delta_cap) break;
        tau = half;
    }
    return tau;
}

} // namespace containerkit
