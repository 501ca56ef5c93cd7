#pragma once

#include <string>

#include <json.hpp>

#include "systo/complex.hpp"

namespace systo {

struct LoadResult {
    SimplicialComplex cx;
    int duplicates_dropped = 0;  // duplicate or nested maximal simplices removed
};

nlohmann::json complex_to_json(const SimplicialComplex& X);
LoadResult complex_from_json(const nlohmann::json& j);

LoadResult load_complex(const std::string& path);
void save_complex(const SimplicialComplex& X, const std::string& path);

/// DOT rendering of a 1-skeleton, stable vertex/edge order.
std::string dot_skeleton(const SimplicialComplex& X, const std::string& name = "skeleton");

/// 64-bit FNV-1a content hash of a file, as hex.  Used for run manifests.
std::string file_content_hash(const std::string& path);
std::string string_content_hash(const std::string& data);

}  // namespace systo
