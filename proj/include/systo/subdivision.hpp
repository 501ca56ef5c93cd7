#pragma once

#include <map>

#include "systo/complex.hpp"

namespace systo {

/// First barycentric subdivision: one vertex per nonempty simplex of the
/// base complex, one simplex per chain under inclusion.  The
/// vertex <-> base-simplex correspondence is retained.
struct BarycentricSubdivision {
    SimplicialComplex cx;
    std::vector<Simplex> vertex_simplex;  // subdivision vertex -> base simplex
    std::map<Simplex, int> index;         // base simplex -> subdivision vertex

    int vertex_of(const Simplex& base_simplex) const {
        auto it = index.find(base_simplex);
        if (it == index.end())
            throw InvalidInput("no subdivision vertex for " + simplex_str(base_simplex));
        return it->second;
    }
};

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& X);

}  // namespace systo
