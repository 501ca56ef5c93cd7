#pragma once

#include <map>

#include "systo/boundary.hpp"

namespace systo {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Machine-readable record of one command run: what was asked, over which
/// input, and every check outcome.  Timings live in their own field so
/// that reports stay byte-comparable across runs.
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::string input_hash;
    std::string version = kToolkitVersion;
    std::vector<CheckReport> reports;
    std::map<std::string, double> timings_ms;

    bool all_passed() const;
    nlohmann::json to_json() const;

    /// The report JSON with the timing field erased (the determinism
    /// comparison key).
    std::string stable_dump() const;
};

/// The whole finite check suite on one complex: largeness, condition R,
/// sphere/ball facts, projection identities, chain conditions, preimage
/// properties, surjectivity, connectedness, inverse-limit hypotheses,
/// local cuts and (radius permitting) the four-point bound.
/// max_radius is the radius up to which the complex is complete (its
/// truncation frontier); depth is the inverse-system depth to build.
RunManifest verify_all(const SimplicialComplex& X, Vertex base, int max_radius, int depth,
                       const std::string& input_hash = "");

}  // namespace systo
