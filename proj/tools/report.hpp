#pragma once

#include <rado/canonicity.hpp>
#include <rado/generation.hpp>
#include <rado/graph.hpp>
#include <rado/ramsey.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace rado::cli
{
    using nlohmann::json;

    struct InputRecord
    {
        std::string path;
        std::string fingerprint;  // FNV-1a of the file bytes, hex
    };

    /// Machine report for one command. No timing is recorded so that a rerun
    /// with the same inputs and seed is byte-identical.
    struct RunReport
    {
        std::string command;
        std::vector<InputRecord> inputs;
        std::uint64_t seed = 0;
        std::string verdict;
        json certificates = json::object();

        [[nodiscard]] auto to_json() const -> json;
        [[nodiscard]] auto dump() const -> std::string;
    };

    auto file_record(const std::string & path) -> InputRecord;

    auto graph_json(const Graph & g) -> json;
    auto tuple_json(const Tuple & t) -> json;
    auto extension_json(const ExtensionResult & r, unsigned k) -> json;

    auto class_set_json(ClassSet s) -> json;
    auto conflicts_json(const std::vector<Conflict> & conflicts) -> json;
    auto profile_json(const BehaviorProfile & p) -> json;

    auto reduct_json(const ReductVerdict & v) -> json;

    auto arrow_json(const ArrowVerdict & v) -> json;

    /// "copy-index color" lines, then the copy enumeration table.
    auto witness_text(const ArrowVerdict & v) -> std::string;

    auto witness_json(const InterpolationWitness & w, const WitnessCheck & check) -> json;

    auto types_json(const std::vector<Graph> & types) -> json;
}
