#pragma once

#include <cstdint>

#include "systo/balls.hpp"
#include "systo/rational.hpp"
#include "systo/subdivision.hpp"

namespace systo {

/// A point of a sphere S_k: a support simplex (parent vertex labels) with
/// positive rational barycentric coefficients summing to 1.
struct SpherePoint {
    int level = 0;
    Simplex support;
    std::vector<Rational> coeffs;

    void validate() const;
    static SpherePoint vertex_point(int level, Vertex w);
    nlohmann::json to_json() const;
};

/// The projection S_k -> S'_{k-1}: each sphere vertex goes to the
/// barycenter of its projection simplex, extended simplicially into the
/// barycentric subdivision of S_{k-1}.
struct SphereMap {
    int level = 0;  // k
    Subcomplex source;  // S_k
    Subcomplex target;  // S_{k-1}
    ExtractedComplex target_ext;
    BarycentricSubdivision target_subdiv;
    std::map<Vertex, Simplex> proj;  // sphere vertex -> projection simplex (parent labels)

    const Simplex& proj_of(Vertex w) const;

    /// Subdivision vertex standing for the barycenter of rho.
    int subdiv_vertex(const Simplex& rho_parent) const;

    /// Distinct projection simplices of sigma's vertices, sorted by size.
    /// Throws SystolicityViolation when they fail to form an inclusion
    /// chain (the image would not be a simplex).
    std::vector<Simplex> image_chain(const Simplex& sigma) const;

    /// Image of sigma as a simplex of the target subdivision (sorted
    /// subdivision vertex ids).
    Simplex image_simplex(const Simplex& sigma) const;
};

/// Builds the projection map at level k.  With verify_chains (default)
/// the construction fails on the first simplex whose vertex projections
/// are not a chain; pass false to defer that to chain_condition.
SphereMap pi_map(const BallSystem& bs, int k, bool verify_chains = true);

/// Chain condition over every simplex of S_k: the projection simplices of
/// a simplex's vertices are totally ordered by inclusion.
CheckReport chain_condition(const SphereMap& pi);

/// Preimage of a subcomplex L of S_{k-1}: the span, inside S_k, of the
/// sphere vertices whose projection simplex lies in L.
Subcomplex preimage(const SphereMap& pi, const Subcomplex& L);

/// Fullness (in S_k) and 6-largeness of the preimage of L.
std::vector<CheckReport> check_preimage(const SphereMap& pi, const Subcomplex& L,
                                        const std::string& label);

/// Surjectivity onto S'_{k-1}: every maximal simplex of the target
/// subdivision is the image of some simplex of S_k.
CheckReport check_surjective(const SphereMap& pi);

/// Connectedness of the preimage of a connected subcomplex K.
CheckReport check_preimage_connected(const SphereMap& pi, const Subcomplex& K,
                                     const std::string& label);

/// The projection's metric contraction data for an n-dimensional complex,
/// from the unit regular (n-1)-simplex: D = distance from a vertex to the
/// barycenter of the opposite facet, E = max distance between barycenters
/// of nested faces (the diameter of a subdivision simplex), C = E/D.
/// All squares exact; C itself is rational: (n-1)/n.
struct ContractionConstant {
    int n = 0;
    Rational D2, E2, C2, C;
};

ContractionConstant contraction_constant(int n);

/// Exact one-step point propagation: the image's coefficient on a target
/// vertex u is the sum of lambda_i / |rho_i| over support vertices whose
/// projection simplex rho_i contains u.
SpherePoint project_point(const SphereMap& pi, const SpherePoint& p);

/// Squared distance between two points of a common unit regular simplex:
/// half the sum of squared coefficient differences over the union of the
/// supports.  The caller guarantees the supports span a simplex.
Rational squared_distance(const SpherePoint& a, const SpherePoint& b);

/// Samples same-simplex point pairs on S_k, propagates them through l
/// composed projections and verifies d(images)^2 <= C^(2l) * d^2 exactly.
/// Stats carry the max observed squared ratio as a rational string.
CheckReport measure_contraction(const BallSystem& bs, int k, int l, int num_pairs, uint64_t seed);

}  // namespace systo
