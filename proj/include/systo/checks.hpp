#pragma once

#include <optional>

#include "systo/complex.hpp"
#include "systo/report.hpp"

namespace systo {

/// Passes iff every clique of the 1-skeleton spans a simplex.  Witness is
/// a smallest non-spanning clique.
CheckReport is_flag(const SimplicialComplex& X);

/// An induced cycle of the 1-skeleton with length in [min_len, max_len],
/// or nullopt.  min_len >= 4.
std::optional<std::vector<Vertex>> find_induced_cycle(const SimplicialComplex& X, int min_len,
                                                      int max_len);

/// k-largeness: flag and no induced cycle of length 4..k-1.  Throws on
/// k < 4.  Witness is the non-spanning clique or the offending cycle.
CheckReport is_k_large(const SimplicialComplex& X, int k);

/// Links of all nonempty simplices are k-large.  Witness pairs the simplex
/// with the cycle found in its link (parent vertex labels).
CheckReport is_locally_k_large(const SimplicialComplex& X, int k);

struct ChamberFlags {
    bool chamber = false;            // pure dim n, every (n-1)-face in >= 2 chambers
    bool pseudomanifold = false;     // exactly 2
    bool gallery_connected = false;
    bool normal = false;             // gallery connected, links of dim >= 1 too
};

/// Passes iff X is a chamber complex; all four flags are reported in stats.
CheckReport is_chamber_complex(const SimplicialComplex& X, ChamberFlags* flags = nullptr);

/// Fullness of A in X: every vertex set of A spanning in X spans in A.
CheckReport is_full_subcomplex(const SimplicialComplex& X, const Subcomplex& A);

}  // namespace systo
