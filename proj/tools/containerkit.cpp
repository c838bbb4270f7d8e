#include "containerkit/digest.hpp"
#include "containerkit/errors.hpp"
#include "containerkit/iterate.hpp"
#include "containerkit/json_io.hpp"
#include "containerkit/linear.hpp"
#include "containerkit/oracle.hpp"
#include "containerkit/parallel.hpp"
#include "containerkit/patterns.hpp"
#include "containerkit/sidon.hpp"
#include "containerkit/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ck = containerkit;

namespace {

// Exit codes: 0 ok, 1 exact property failure, 2 input error, 3 resource limit.
constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

ck::Rational rat(const std::string& text) { return ck::parse_rational(text); }

std::vector<int> read_vertex_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ck::ParseError("cannot open '" + path + "'");
    std::vector<int> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        int v;
        while (fields >> v) out.push_back(v);
        if (!fields.eof()) throw ck::ParseError("non-integer vertex", lineno);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void write_hypergraph_file(const ck::Hypergraph& g, const std::string& path,
                           const std::string& manifest_digest) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "# manifest " << manifest_digest << '\n';
    g.write(out);
}

ck::GraphPattern load_pattern(const std::string& named, const std::string& file) {
    if (!file.empty()) return ck::GraphPattern::parse_file(file);
    if (!named.empty()) return ck::GraphPattern::named(named);
    throw ck::ParseError("a pattern is required (--H or --H-file)");
}

void emit_reports(std::vector<ck::VerificationReport> reports, std::ostream& out) {
    std::sort(reports.begin(), reports.end(),
              [](const ck::VerificationReport& a, const ck::VerificationReport& b) {
                  return std::tie(a.instance_digest, a.property) <
                         std::tie(b.instance_digest, b.property);
              });
    for (const auto& rep : reports) out << ck::verification_report_json(rep).dump() << '\n';
}

bool any_exact_failure(const std::vector<ck::VerificationReport>& reports) {
    for (const auto& rep : reports)
        if (rep.failures > 0) return true;
    return false;
}

struct OutputTarget {
    std::ofstream file;
    bool to_file = false;
    std::ostream& stream() { return to_file ? file : std::cout; }
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot write '" + path + "'");
            to_file = true;
        }
    }
};

// ---- verify suites -------------------------------------------------------

std::vector<ck::VerificationReport> suite_core(std::uint64_t seed) {
    std::vector<ck::VerificationReport> reports;
    ck::Rng rng(seed);
    for (int instance = 0; instance < 12; ++instance) {
        const int r = instance % 2 == 0 ? 2 : 3;
        const int n = 6 + instance % 5;
        const long long total = static_cast<long long>(ck::binomial(n, r));
        const long long e = ck::rng_range(rng, 0, std::min<long long>(total, 3 * n));
        ck::Hypergraph g = ck::random_hypergraph(n, r, e, rng);
        const std::string digest = ck::fnv1a64_hex(g.to_text());

        ck::VerificationReport rep;
        rep.instance_digest = digest;
        rep.property = "core-invariants";
        rep.seed = seed;
        ++rep.trials;
        long long dsum = 0;
        for (int v = 1; v <= n; ++v) dsum += g.degree(v);
        if (dsum != r * g.edge_count()) rep.fail("degree sum != r e(G)");
        // mu is a probability measure when d > 0, additive over disjoint sets
        if (g.edge_count() > 0) {
            if (g.degree_measure(ck::full_vertex_set(n)) != 1) rep.fail("mu([n]) != 1");
        } else if (g.degree_measure(ck::full_vertex_set(n)) != 0) {
            rep.fail("mu != 0 on edgeless");
        }
        // delta monotone non-increasing in tau; simple-bound for delta_j
        const ck::Rational tau(1, 4);
        const ck::CodegreeProfile p1 = g.codegree(tau);
        const ck::CodegreeProfile p2 = g.codegree(tau * 2);
        if (p2.delta_total > p1.delta_total) rep.fail("delta increases with tau");
        // round trip
        std::istringstream in(g.to_text());
        if (ck::Hypergraph::parse(in) != g) rep.fail("round trip");
        reports.push_back(rep);
    }
    return reports;
}

std::vector<ck::VerificationReport> suite_engine(std::uint64_t seed, int jobs) {
    struct Instance {
        int n, r;
        long long e;
    };
    std::vector<Instance> instances;
    ck::Rng setup(seed);
    for (int i = 0; i < 8; ++i) {
        const int r = i % 2 == 0 ? 2 : 3;
        const int n = r == 2 ? 8 + (i % 4) : 7 + (i % 3);
        const long long total = static_cast<long long>(ck::binomial(n, r));
        instances.push_back({n, r, ck::rng_range(setup, n / 2, std::min<long long>(total, 2 * n))});
    }
    std::vector<std::vector<ck::VerificationReport>> slots(instances.size());
    ck::parallel_for_indexed(instances.size(), jobs, [&](std::size_t i) {
        ck::Rng rng(ck::derive_seed(seed, i));
        ck::Hypergraph raw =
            ck::random_hypergraph(instances[i].n, instances[i].r, instances[i].e, rng);
        ck::Hypergraph g = ck::sort_by_degree(raw).first;
        ck::CoverFamilyOptions opts;
        opts.all_independent = true;
        opts.independent_cap = 200000;
        opts.random_u_count = 5;
        opts.include_cover_variant = (i % 4 == 0);
        opts.seed = ck::derive_seed(seed, i);
        auto reports = ck::verify_cover_family(g, rat("1/4"), rat("1/4"), opts);
        auto random_t = ck::verify_container_measure_random_t(g, rat("1/4"), rat("1/4"), 50,
                                                              ck::derive_seed(seed, i + 1000));
        reports.push_back(random_t);
        ck::TupleT tuple = ck::random_tuple(g.vertex_count(), g.uniformity(), rng);
        reports.push_back(ck::verify_online_all_w(g, tuple, rat("1/4"), rat("1/4")));
        slots[i] = std::move(reports);
    });
    std::vector<ck::VerificationReport> out;
    for (auto& batch : slots)
        for (auto& rep : batch) out.push_back(std::move(rep));

    // lemmoid audit
    ck::VerificationReport lem;
    lem.property = "lemma-lemmoid";
    lem.instance_digest = "randomized";
    lem.seed = seed;
    ck::Rng rng(ck::derive_seed(seed, 0xa11ceULL));
    for (int t = 0; t < 2000; ++t) {
        const int n = static_cast<int>(ck::rng_range(rng, 1, 16));
        std::vector<ck::Rational> weights;
        long long level = ck::rng_range(rng, 0, 20);
        for (int v = 0; v < n; ++v) {
            weights.emplace_back(level, 20);
            level = std::max<long long>(0, level - ck::rng_range(rng, 0, 3));
        }
        std::vector<std::pair<int, long long>> s;
        for (int v = 1; v <= n; ++v)
            if (rng() & 1) s.emplace_back(v, ck::rng_range(rng, 1, 3));
        const ck::Rational alpha(ck::rng_range(rng, 0, 8), 4);
        auto outcome = ck::lemmoid_property(weights, s, alpha);
        ++lem.trials;
        lem.record_margin(outcome.rhs - outcome.lhs);
        if (!outcome.ok) lem.fail("trial " + std::to_string(t));
    }
    out.push_back(lem);
    return out;
}

std::vector<ck::VerificationReport> suite_apps(std::uint64_t seed) {
    std::vector<ck::VerificationReport> reports;
    ck::Rng rng(seed);

    ck::VerificationReport params;
    params.property = "apps-parameters";
    params.instance_digest = "fixed";
    params.seed = seed;
    ++params.trials;
    if (ck::m_H(ck::GraphPattern::named("k3")) != ck::Rational(2)) params.fail("m(K3)");
    if (ck::m_H(ck::GraphPattern::named("c4")) != ck::Rational(3, 2)) params.fail("m(C4)");
    if (ck::m_H(ck::GraphPattern::named("k4")) != ck::Rational(5, 2)) params.fail("m(K4)");
    for (int ell = 3; ell <= 5; ++ell)
        if (ck::m_F_A(ck::ap_system(30, ell)) != ck::Rational(ell - 1))
            params.fail("m_F(ap " + std::to_string(ell) + ")");
    reports.push_back(params);

    ck::VerificationReport counts;
    counts.property = "apps-solution-counts";
    counts.instance_digest = "randomized";
    counts.seed = seed;
    const long long primes[] = {2, 3, 5, 7, 11, 13};
    for (int t = 0; t < 30; ++t) {
        const long long p = primes[ck::rng_range(rng, 0, 5)];
        const int k = static_cast<int>(ck::rng_range(rng, 1, 2));
        const int r = static_cast<int>(ck::rng_range(rng, k + 1, 4));
        ck::LinearSystem sys;
        sys.field = ck::FieldSpec::zp(p);
        sys.A.assign(static_cast<std::size_t>(k),
                     std::vector<long long>(static_cast<std::size_t>(r), 0));
        for (auto& row : sys.A)
            for (auto& x : row) x = ck::rng_range(rng, 0, p - 1);
        sys.b.clear();
        for (int i = 0; i < k; ++i) sys.b.push_back({ck::rng_range(rng, 0, p - 1)});
        if (ck::rank_mod_p(sys.A, p) != k) continue; // need full rank
        ++counts.trials;
        ck::BigInt expected = 1;
        for (int i = 0; i < r - k; ++i) expected *= p;
        if (ck::count_solutions(sys) != expected) counts.fail("trial " + std::to_string(t));
    }
    reports.push_back(counts);

    ck::VerificationReport sidon;
    sidon.property = "apps-sidon";
    sidon.instance_digest = "fixed";
    sidon.seed = seed;
    for (int n = 4; n <= 14; ++n) {
        ++sidon.trials;
        ck::Hypergraph g = ck::build_sidon_graph(n);
        auto sets = ck::collect_independent_sets(g, 2000000);
        ck::BigInt matching = 0;
        for (const auto& s : sets) {
            const bool sd = ck::is_sidon_set(s);
            const bool gap = ck::count_3aps(s) > 0;
            if (sd == gap) sidon.fail("gap characterization n=" + std::to_string(n));
            if (sd) ++matching;
        }
        if (matching != ck::sidon_count_bruteforce(n))
            sidon.fail("count mismatch n=" + std::to_string(n));
        auto identity = ck::sidon_edge_identity_check(n, ck::full_vertex_set(n));
        if (!identity.reconciled_ok) sidon.fail("identity n=" + std::to_string(n));
    }
    reports.push_back(sidon);
    return reports;
}

std::vector<ck::VerificationReport> suite_sparse(std::uint64_t seed, long long trials) {
    std::vector<ck::VerificationReport> reports;
    for (int config = 0; config < 4; ++config) {
        const int m = 60 + 20 * config;
        std::vector<ck::SparseFamilyMember> family;
        ck::Rng rng(ck::derive_seed(seed, static_cast<std::uint64_t>(config)));
        for (int i = 0; i < 3 + config; ++i) {
            ck::SparseFamilyMember member;
            member.fingerprint = ck::rng_subset(rng, m, static_cast<int>(ck::rng_range(rng, 0, 2)));
            member.d_set = ck::rng_subset(rng, m, m / 2);
            family.push_back(member);
        }
        auto rep = ck::sparse_experiment(m, family, rat("1/2"), rat("1/2"), trials,
                                         ck::derive_seed(seed, 100 + config));
        ck::VerificationReport vr;
        vr.property = "sparse-monte-carlo";
        vr.instance_digest = "config-" + std::to_string(config);
        vr.trials = rep.trials;
        vr.failures = 0; // statistical flag only, never an exact failure
        vr.seed = rep.seed;
        vr.witness = rep.within_band ? "" : "frequency above bound + 3 SE (statistical)";
        reports.push_back(vr);
    }
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph container toolkit"};
    app.set_version_flag("--version", std::string(ck::kVersion));
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a hypergraph file");
    std::string gen_kind, gen_out = "out", gen_pattern, gen_pattern_file, gen_system;
    int gen_n = 0, gen_r = 2, gen_big_n = 0;
    long long gen_e = 0;
    std::uint64_t gen_seed = 1;
    gen->add_option("kind", gen_kind, "random|gnh|linear|sidon|induced")->required();
    gen->add_option("--n", gen_n, "vertex count (random, sidon)");
    gen->add_option("--r", gen_r, "uniformity (random)");
    gen->add_option("--e", gen_e, "edge count (random)");
    gen->add_option("--N", gen_big_n, "ground-set size (gnh, induced)");
    gen->add_option("--H", gen_pattern, "named pattern (k3,k4,c4,c5,p3,m2,e1,k4e3)");
    gen->add_option("--H-file", gen_pattern_file, "pattern file");
    gen->add_option("--system", gen_system, "linear system JSON file");
    gen->add_option("--seed", gen_seed, "RNG seed (random)");
    gen->add_option("--out", gen_out, "output prefix");

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "degrees, delta profile, m(H), m_F(A)");
    std::string an_input, an_pattern, an_pattern_file, an_system, an_tau = "1/4";
    analyze->add_option("--input", an_input, "hypergraph file");
    analyze->add_option("--H", an_pattern, "named pattern");
    analyze->add_option("--H-file", an_pattern_file, "pattern file");
    analyze->add_option("--system", an_system, "linear system JSON file");
    analyze->add_option("--tau", an_tau, "tau for the delta profile (num/den)");

    // ---- run ----
    auto* run = app.add_subcommand("run", "container pipelines");
    std::string run_mode, run_input, run_i_file, run_tau = "1/4", run_zeta = "1/4";
    std::string run_eps, run_e0_frac, run_out;
    long long run_e0 = -1;
    bool run_all_independent = false;
    run->add_option("mode", run_mode, "cover|iterate|sparse")->required();
    run->add_option("--input", run_input, "hypergraph file")->required();
    run->add_option("--tau", run_tau, "tau (num/den)");
    run->add_option("--zeta", run_zeta, "zeta (num/den; cover only)");
    run->add_option("--eps", run_eps, "epsilon (sparse)");
    run->add_option("--e0", run_e0, "edge target (iterate)");
    run->add_option("--e0-frac", run_e0_frac, "edge target as a fraction of e(G)");
    run->add_option("--I", run_i_file, "vertex-set file for I");
    run->add_flag("--all-independent", run_all_independent,
                  "stream one record per independent set");
    run->add_option("--out", run_out, "output file (default stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "module verification batteries");
    std::string verify_suite, verify_out;
    std::uint64_t verify_seed = 1;
    long long verify_trials = 10000;
    int verify_jobs = 1;
    verify->add_option("suite", verify_suite, "core|engine|apps|sparse")->required();
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--trials", verify_trials, "Monte-Carlo trials (sparse)");
    verify->add_option("--jobs", verify_jobs, "worker count");
    verify->add_option("--out", verify_out, "output file (default stdout)");

    // ---- experiment ----
    auto* experiment = app.add_subcommand("experiment", "Monte-Carlo experiments");
    std::string exp_kind, exp_p = "1/2", exp_nu = "1/2", exp_gamma = "1/4", exp_out;
    std::string exp_family, exp_pattern = "k3";
    int exp_m = 100, exp_big_n = 10, exp_d = 0;
    long long exp_trials = 10000;
    std::uint64_t exp_seed = 1;
    experiment->add_option("kind", exp_kind, "sparse|hfree")->required();
    experiment->add_option("--M", exp_m, "ground-set size (sparse)");
    experiment->add_option("--p", exp_p, "inclusion probability (num/den)");
    experiment->add_option("--nu", exp_nu, "nu (sparse)");
    experiment->add_option("--gamma", exp_gamma, "gamma (hfree)");
    experiment->add_option("--d", exp_d, "single-member D size (sparse shortcut)");
    experiment->add_option("--family", exp_family, "family JSON file (sparse)");
    experiment->add_option("--N", exp_big_n, "ground-set size (hfree)");
    experiment->add_option("--H", exp_pattern, "named pattern (hfree)");
    experiment->add_option("--trials", exp_trials, "trial count");
    experiment->add_option("--seed", exp_seed, "RNG seed");
    experiment->add_option("--out", exp_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            ck::Hypergraph g(1, 1, {});
            ck::RunManifest manifest;
            manifest.command = "gen " + gen_kind;
            manifest.seed = gen_seed;
            if (gen_kind == "random") {
                ck::Rng rng(gen_seed);
                g = ck::random_hypergraph(gen_n, gen_r, gen_e, rng);
                manifest.parameters = {{"n", std::to_string(gen_n)},
                                       {"r", std::to_string(gen_r)},
                                       {"e", std::to_string(gen_e)}};
            } else if (gen_kind == "gnh") {
                auto h = load_pattern(gen_pattern, gen_pattern_file);
                g = ck::build_gnh(gen_big_n, h);
                manifest.parameters = {{"N", std::to_string(gen_big_n)},
                                       {"H", gen_pattern.empty() ? gen_pattern_file : gen_pattern}};
            } else if (gen_kind == "induced") {
                auto h = load_pattern(gen_pattern, gen_pattern_file);
                g = ck::build_induced_g(gen_big_n, h);
                manifest.parameters = {{"N", std::to_string(gen_big_n)},
                                       {"H", gen_pattern.empty() ? gen_pattern_file : gen_pattern}};
            } else if (gen_kind == "sidon") {
                g = ck::build_sidon_graph(gen_n);
                manifest.parameters = {{"n", std::to_string(gen_n)}};
            } else if (gen_kind == "linear") {
                if (gen_system.empty()) throw ck::ParseError("--system is required");
                auto sys = ck::parse_linear_system_file(gen_system);
                g = ck::build_gfabz(sys);
                manifest.inputs.push_back({gen_system, ck::fnv1a64_hex(
                    ck::linear_system_json(sys).dump())});
            } else {
                throw ck::ParseError("unknown gen kind '" + gen_kind + "'");
            }
            const std::string hg_path = gen_out + ".hg";
            const std::string mf_path = gen_out + ".manifest.json";
            manifest.outputs = {hg_path, mf_path};
            manifest.parameters.push_back({"digest", ck::fnv1a64_hex(g.to_text())});
            write_hypergraph_file(g, hg_path, ck::manifest_digest(manifest));
            ck::write_manifest_file(manifest, mf_path);
            std::cout << hg_path << '\n';
            return kExitOk;
        }

        if (analyze->parsed()) {
            ck::Json out;
            if (!an_input.empty()) {
                ck::Hypergraph g = ck::Hypergraph::parse_file(an_input);
                out["n"] = g.vertex_count();
                out["r"] = g.uniformity();
                out["e"] = g.edge_count();
                out["digest"] = ck::fnv1a64_hex(g.to_text());
                out["average_degree"] = ck::rational_str(g.average_degree());
                ck::Json degrees = ck::Json::array();
                for (int v = 1; v <= g.vertex_count(); ++v) degrees.push_back(g.degree(v));
                out["degrees"] = degrees;
                const ck::CodegreeProfile profile = g.codegree(rat(an_tau));
                ck::Json deltas = ck::Json::array();
                for (const auto& d : profile.deltas) deltas.push_back(ck::rational_str(d));
                out["delta"] = {{"tau", an_tau},
                                {"delta_j", deltas},
                                {"total", ck::rational_str(profile.delta_total)}};
            }
            if (!an_pattern.empty() || !an_pattern_file.empty()) {
                auto h = load_pattern(an_pattern, an_pattern_file);
                out["pattern"] = {{"v", h.v},
                                  {"ell", h.ell},
                                  {"e", h.edge_count()},
                                  {"isolated_vertices", h.has_isolated_vertices()},
                                  {"m_H", ck::rational_str(ck::m_H(h))}};
            }
            if (!an_system.empty()) {
                auto sys = ck::parse_linear_system_file(an_system);
                const bool abundant = ck::is_abundant(sys);
                ck::Json lin = {{"k", sys.k()},
                                {"r", sys.r()},
                                {"field_size", sys.field.size()},
                                {"full_rank", ck::has_full_rank(sys)},
                                {"abundant", abundant}};
                if (abundant) lin["m_F"] = ck::rational_str(ck::m_F_A(sys));
                out["linear"] = lin;
            }
            if (out.empty()) throw ck::ParseError("nothing to analyze");
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }

        if (run->parsed()) {
            ck::Hypergraph g = ck::Hypergraph::parse_file(run_input);
            const std::string digest = ck::fnv1a64_hex(g.to_text());
            OutputTarget target(run_out);
            const ck::Rational tau = rat(run_tau);
            auto one_input = [&]() -> std::vector<int> {
                if (!run_i_file.empty()) return read_vertex_set(run_i_file);
                return {};
            };
            if (run_mode == "cover") {
                auto emit = [&](const std::vector<int>& iset) {
                    ck::CoverResult res = ck::cover(g, iset, tau, rat(run_zeta));
                    res.run.input_digest = digest;
                    target.stream() << ck::container_run_json(res.run).dump() << '\n';
                };
                if (run_all_independent) {
                    ck::enumerate_independent_sets(g, 1000000,
                                                   [&](const std::vector<int>& iset) {
                                                       emit(iset);
                                                       return true;
                                                   });
                } else {
                    emit(one_input());
                }
            } else if (run_mode == "iterate") {
                long long e0 = run_e0;
                if (!run_e0_frac.empty()) {
                    const ck::Rational frac = rat(run_e0_frac) * g.edge_count();
                    e0 = static_cast<long long>(numerator(frac) / denominator(frac));
                }
                if (e0 < 0) throw ck::ParseError("--e0 or --e0-frac is required");
                auto chain = ck::iterate_containers(g, one_input(), e0,
                                                    ck::constant_tau_policy(tau));
                ck::Json j = ck::iteration_chain_json(chain);
                j["input_digest"] = digest;
                target.stream() << j.dump() << '\n';
            } else if (run_mode == "sparse") {
                if (run_eps.empty()) throw ck::ParseError("--eps is required");
                auto rep = ck::sparse_container(g, one_input(), rat(run_eps), tau);
                ck::Json j = ck::iteration_chain_json(rep.chain);
                j["eps"] = run_eps;
                j["parts_count_ok"] = rep.parts_count_ok;
                j["log_collection_budget"] = rep.log_collection_budget;
                j["input_digest"] = digest;
                target.stream() << j.dump() << '\n';
            } else {
                throw ck::ParseError("unknown run mode '" + run_mode + "'");
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            std::vector<ck::VerificationReport> reports;
            if (verify_suite == "core")
                reports = suite_core(verify_seed);
            else if (verify_suite == "engine")
                reports = suite_engine(verify_seed, verify_jobs);
            else if (verify_suite == "apps")
                reports = suite_apps(verify_seed);
            else if (verify_suite == "sparse")
                reports = suite_sparse(verify_seed, verify_trials);
            else
                throw ck::ParseError("unknown suite '" + verify_suite + "'");
            OutputTarget target(verify_out);
            emit_reports(reports, target.stream());
            return any_exact_failure(reports) ? kExitPropertyFailure : kExitOk;
        }

        if (experiment->parsed()) {
            OutputTarget target(exp_out);
            if (exp_kind == "sparse") {
                std::vector<ck::SparseFamilyMember> family;
                if (!exp_family.empty()) {
                    std::ifstream in(exp_family);
                    if (!in) throw ck::ParseError("cannot open '" + exp_family + "'");
                    ck::Json j;
                    in >> j;
                    for (const auto& item : j) {
                        ck::SparseFamilyMember member;
                        member.fingerprint = item.value("T", std::vector<int>{});
                        member.d_set = item.at("D").get<std::vector<int>>();
                        family.push_back(member);
                    }
                } else {
                    ck::SparseFamilyMember member;
                    const int d = exp_d > 0 ? exp_d : exp_m / 2;
                    for (int v = 1; v <= d; ++v) member.d_set.push_back(v);
                    family.push_back(member);
                }
                auto rep = ck::sparse_experiment(exp_m, family, rat(exp_p), rat(exp_nu),
                                                 exp_trials, exp_seed);
                target.stream() << ck::sparse_report_json(rep).dump() << '\n';
            } else if (exp_kind == "hfree") {
                auto rep = ck::hfree_sparse_probe(exp_big_n, ck::GraphPattern::named(exp_pattern),
                                                  rat(exp_p), rat(exp_gamma), exp_trials,
                                                  exp_seed);
                ck::Json j = {{"trials", rep.trials},
                              {"exceedances", rep.exceedances},
                              {"ex", rep.ex_value},
                              {"threshold", rep.threshold},
                              {"seed", rep.seed}};
                target.stream() << j.dump() << '\n';
            } else {
                throw ck::ParseError("unknown experiment kind '" + exp_kind + "'");
            }
            return kExitOk;
        }
    } catch (const ck::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const ck::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPropertyFailure;
    }
    return kExitOk;
}
