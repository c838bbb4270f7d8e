#ifndef CONTAINERKIT_JSON_IO_HPP
#define CONTAINERKIT_JSON_IO_HPP

#include "containerkit/container.hpp"
#include "containerkit/iterate.hpp"
#include "containerkit/linear.hpp"
#include "containerkit/oracle.hpp"

#include <json.hpp>

#include <string>

namespace containerkit {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings, arbitrary-precision integers as
// decimal strings: no silent precision loss through JSON numbers.
Json rational_json(const Rational& value);
Json bigint_json(const BigInt& value);

// Tuple parts serialized in the paper's order (T_{r-1},...,T_0).
Json tuple_json(const TupleT& tuple);
TupleT tuple_from_json(const Json& j, int r);

Json container_run_json(const ContainerRun& run);
Json iteration_chain_json(const IterationChain& chain);
Json verification_report_json(const VerificationReport& rep);
Json sparse_report_json(const SparseExperimentReport& rep);

Json linear_system_json(const LinearSystem& sys);
LinearSystem linear_system_from_json(const Json& j);
LinearSystem parse_linear_system_file(const std::string& path);

// Command manifest: every generated file embeds the digest of its manifest
// (no timestamps anywhere, so identical commands yield identical bytes).
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // path, digest
    std::vector<std::pair<std::string, std::string>> parameters;
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;
    std::string version;
};

Json manifest_json(const RunManifest& manifest);
std::string manifest_digest(const RunManifest& manifest);
void write_manifest_file(const RunManifest& manifest, const std::string& path);

} // namespace containerkit

#endif
