#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace systo {

using Vertex = int;

/// A simplex is a strictly increasing list of vertex ids.
using Simplex = std::vector<Vertex>;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a projection simplex fails to be a single simplex
/// (diagnostic for non-7-systolic input).
struct SystolicityViolation : std::runtime_error {
    Simplex tau;      // the simplex whose projection failed
    Simplex witness;  // the offending vertex set in the previous ball
    SystolicityViolation(const std::string& msg, Simplex t, Simplex w)
        : std::runtime_error(msg), tau(std::move(t)), witness(std::move(w)) {}
};

inline Simplex make_simplex(std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw InvalidInput("simplex contains a repeated vertex");
    return verts;
}

inline bool is_face(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains_vertex(const Simplex& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_minus(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::string simplex_str(const Simplex& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace systo
