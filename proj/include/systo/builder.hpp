#pragma once

#include <cstdint>
#include <optional>

#include "systo/complex.hpp"

namespace systo {

/// Layered triangulated disc with prescribed interior vertex degree.
/// min_degree >= 7 gives the hyperbolic (locally 7-large) family; 6 is
/// accepted for the flat contrast disc used by the hyperbolicity check.
struct DiscSpec {
    int min_degree = 7;
    int radius = 1;
    std::optional<uint64_t> seed;  // when set, degrees jitter in {min_degree, min_degree+1}
};

struct Disc {
    SimplicialComplex cx;
    Vertex base = 0;
    int radius = 0;
    int min_degree = 7;
    std::vector<std::vector<Vertex>> layers;  // layers[i] = S_i(base) in cyclic order
};

Disc build_disc(const DiscSpec& spec);

/// Clique complex of a seeded random graph; the oracle-test corpus.
SimplicialComplex random_small_complex(int num_vertices, double density, uint64_t seed);

}  // namespace systo
