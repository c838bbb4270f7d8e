#include "containerkit/json_io.hpp"
#include "containerkit/digest.hpp"
#include "containerkit/errors.hpp"
#include "containerkit/version.hpp"

#include <fstream>

namespace containerkit {

Json rational_json(const Rational& value) { return rational_str(value); }

Json bigint_json(const BigInt& value) { return value.str(); }

Json tuple_json(const TupleT& tuple) {
    Json parts = Json::array();
    for (int i = tuple.parts() - 1; i >= 0; --i) parts.push_back(tuple.level(i));
    return parts;
}

TupleT tuple_from_json(const Json& j, int r) {
    if (!j.is_array() || static_cast<int>(j.size()) != r)
        throw ParseError("tuple must be an array of " + std::to_string(r) + " parts");
    TupleT t = TupleT::empty(r);
    for (int i = 0; i < r; ++i) {
        const Json& part = j[static_cast<std::size_t>(i)];
        if (!part.is_array()) throw ParseError("tuple part must be an array");
        // input order is T_{r-1},...,T_0
        std::vector<int> set;
        for (const auto& v : part) set.push_back(v.get<int>());
        std::sort(set.begin(), set.end());
        t.by_level[static_cast<std::size_t>(r - 1 - i)] = std::move(set);
    }
    return t;
}

Json container_run_json(const ContainerRun& run) {
    Json j;
    j["params"] = {{"tau", rational_json(run.tau)},
                   {"zeta", rational_json(run.zeta)},
                   {"mode", run.mode}};
    j["tuple"] = tuple_json(run.tuple);
    j["container"] = run.container;
    Json levels = Json::array();
    for (const auto& lvl : run.levels) {
        levels.push_back({{"s", lvl.s},
                          {"e_ps", lvl.e_ps},
                          {"gamma_size", lvl.gamma_size},
                          {"out", lvl.out}});
    }
    j["levels"] = levels;
    Json mu_t = Json::array();
    for (int i = static_cast<int>(run.mu_t.size()) - 1; i >= 0; --i)
        mu_t.push_back(rational_json(run.mu_t[static_cast<std::size_t>(i)]));
    j["stats"] = {{"mu_t", mu_t},
                  {"mu_c", rational_json(run.mu_c)},
                  {"e_induced", run.e_induced},
                  {"m", run.truncation_m}};
    j["flags"] = {{"delta_le_zeta", run.flags.delta_le_zeta},
                  {"mu_t_bound", run.flags.mu_t_bound},
                  {"size_t_bound", run.flags.size_t_bound},
                  {"mu_c_bound", run.flags.mu_c_bound},
                  {"containment_checked", run.flags.containment_checked},
                  {"containment", run.flags.containment},
                  {"input_independent", run.flags.input_independent}};
    j["resorted"] = run.resorted;
    if (run.resorted) {
        Json perm = Json::array();
        for (std::size_t v = 1; v < run.new_to_old.size(); ++v)
            perm.push_back(run.new_to_old[v]);
        j["new_to_old"] = perm;
    }
    j["input_digest"] = run.input_digest;
    return j;
}

Json iteration_chain_json(const IterationChain& chain) {
    Json j;
    j["e0"] = chain.e0;
    j["terminated"] = chain.terminated;
    j["diagnostic"] = chain.diagnostic;
    j["k"] = chain.k_formula;
    j["stage_cap"] = chain.stage_cap;
    j["fingerprint_parts_total"] = chain.fingerprint_parts_total;
    j["parts_bound"] = chain.parts_bound;
    Json stages = Json::array();
    for (const auto& stage : chain.stages) {
        Json s;
        s["vertices"] = stage.vertices;
        s["tuple"] = tuple_json(stage.tuple);
        s["e_induced"] = stage.e_induced;
        s["tau"] = rational_json(stage.tau_used);
        s["hypotheses"] = {{"delta", rational_json(stage.hypotheses.delta)},
                           {"delta_cap", rational_json(stage.hypotheses.delta_cap)},
                           {"tau_cap", rational_json(stage.hypotheses.tau_cap)},
                           {"delta_ok", stage.hypotheses.delta_ok},
                           {"tau_ok", stage.hypotheses.tau_ok}};
        stages.push_back(s);
    }
    j["stages"] = stages;
    return j;
}

Json verification_report_json(const VerificationReport& rep) {
    Json j;
    j["digest"] = rep.instance_digest;
    j["property"] = rep.property;
    j["trials"] = rep.trials;
    j["failures"] = rep.failures;
    if (rep.has_margin) j["worst_margin"] = rational_json(rep.worst_margin);
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    j["seed"] = rep.seed;
    return j;
}

Json sparse_report_json(const SparseExperimentReport& rep) {
    Json j;
    j["trials"] = rep.trials;
    j["hits"] = rep.hits;
    j["declared_d"] = rep.declared_d;
    j["frequency"] = rep.frequency;
    j["analytic_bound"] = rep.analytic_bound;
    j["three_se"] = rep.three_se;
    j["within_band"] = rep.within_band;
    j["seed"] = rep.seed;
    return j;
}

Json linear_system_json(const LinearSystem& sys) {
    Json field;
    switch (sys.field.kind) {
    case FieldSpec::Kind::Zp:
        field = {{"kind", "zp"}, {"p", sys.field.p}};
        break;
    case FieldSpec::Kind::Interval:
        field = {{"kind", "interval"}, {"N", sys.field.N}};
        break;
    case FieldSpec::Kind::Abelian:
        field = {{"kind", "abelian"}, {"orders", sys.field.orders}};
        break;
    }
    Json j;
    j["field"] = field;
    j["A"] = sys.A;
    Json b = Json::array();
    for (const auto& e : sys.b) {
        if (sys.field.arity() == 1)
            b.push_back(e[0]);
        else
            b.push_back(e);
    }
    j["b"] = b;
    j["forbid_repeats"] = sys.forbid_repeats;
    if (!sys.explicit_z.empty()) {
        Json z = Json::array();
        for (const auto& tuple : sys.explicit_z) {
            Json zt = Json::array();
            for (const auto& e : tuple) {
                if (sys.field.arity() == 1)
                    zt.push_back(e[0]);
                else
                    zt.push_back(e);
            }
            z.push_back(zt);
        }
        j["Z"] = z;
    }
    return j;
}

namespace {

Elem elem_from_json(const Json& j, int arity) {
    if (arity == 1) {
        if (!j.is_number_integer()) throw ParseError("expected an integer element");
        return {j.get<long long>()};
    }
    if (!j.is_array() || static_cast<int>(j.size()) != arity)
        throw ParseError("expected a tuple element of arity " + std::to_string(arity));
    Elem e;
    for (const auto& x : j) e.push_back(x.get<long long>());
    return e;
}

} // namespace

LinearSystem linear_system_from_json(const Json& j) {
    LinearSystem sys;
    if (!j.contains("field")) throw ParseError("missing 'field'");
    const Json& field = j["field"];
    const std::string kind = field.at("kind").get<std::string>();
    if (kind == "zp")
        sys.field = FieldSpec::zp(field.at("p").get<long long>());
    else if (kind == "interval")
        sys.field = FieldSpec::interval(field.at("N").get<long long>());
    else if (kind == "abelian")
        sys.field = FieldSpec::abelian(field.at("orders").get<std::vector<long long>>());
    else
        throw ParseError("unknown field kind '" + kind + "'");

    if (!j.contains("A")) throw ParseError("missing 'A'");
    sys.A = j["A"].get<std::vector<std::vector<long long>>>();
    if (!j.contains("b")) throw ParseError("missing 'b'");
    for (const auto& e : j["b"]) sys.b.push_back(elem_from_json(e, sys.field.arity()));
    sys.forbid_repeats = j.value("forbid_repeats", false);
    if (j.contains("Z")) {
        for (const auto& zt : j["Z"]) {
            std::vector<Elem> tuple;
            for (const auto& e : zt) tuple.push_back(elem_from_json(e, sys.field.arity()));
            sys.explicit_z.push_back(std::move(tuple));
        }
    }
    validate_system(sys);
    return sys;
}

LinearSystem parse_linear_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return linear_system_from_json(j);
}

Json manifest_json(const RunManifest& manifest) {
    Json j;
    j["command"] = manifest.command;
    Json inputs = Json::array();
    for (const auto& [path, digest] : manifest.inputs)
        inputs.push_back({{"path", path}, {"digest", digest}});
    j["inputs"] = inputs;
    Json params = Json::object();
    for (const auto& [key, value] : manifest.parameters) params[key] = value;
    j["parameters"] = params;
    j["seed"] = manifest.seed;
    j["outputs"] = manifest.outputs;
    j["version"] = manifest.version.empty() ? std::string(kVersion) : manifest.version;
    return j;
}

std::string manifest_digest(const RunManifest& manifest) {
    return fnv1a64_hex(manifest_json(manifest).dump());
}

void write_manifest_file(const RunManifest& manifest, const std::string& path) {
    Json j;
    j["manifest"] = manifest_json(manifest);
    j["manifest_digest"] = manifest_digest(manifest);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace containerkit
