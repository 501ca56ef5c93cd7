#pragma once

#include "systo/checks.hpp"
#include "systo/complex.hpp"
#include "systo/report.hpp"

namespace systo {

/// Combinatorial balls and spheres around a base simplex Q: BFS layers of
/// the 1-skeleton plus the subcomplex constructions built on them.
/// Immutable after the single BFS pass.
class BallSystem {
public:
    BallSystem(const SimplicialComplex& X, Simplex base);

    const SimplicialComplex& complex() const { return *X_; }
    const Simplex& base() const { return base_; }
    int radius() const { return radius_; }
    int distance(Vertex v) const { return dist_[v]; }  // -1 when unreachable
    const std::vector<Vertex>& layer(int i) const;     // empty beyond radius

    /// B_i(Q,X): Q at i = 0, then the union of simplices meeting B_{i-1}.
    Subcomplex ball(int i) const;

    /// S_i(Q,X): full span of the distance-i vertices.  S_0 is Q.
    Subcomplex sphere(int i) const;

    /// Interior of B_i: simplices of B_i with all vertices at distance < i.
    /// At i = 0 the convention is interior = Q.
    Subcomplex interior_ball(int i) const;

    /// Projection simplex rho = X_tau /\ B_{i-1} for tau in S_i, verified
    /// to be a single simplex.  Throws SystolicityViolation otherwise.
    Simplex projection_simplex(int i, const Simplex& tau) const;

private:
    const SimplicialComplex* X_;
    Simplex base_;
    std::vector<int> dist_;
    std::vector<std::vector<Vertex>> layers_;
    int radius_ = 0;
    static const std::vector<Vertex> empty_layer_;
};

/// Set-level identities of the ball recurrence at layer i.
CheckReport check_ball_recurrence(const BallSystem& bs, int i);

/// The structural fact bundle for one sphere: fullness of S_i and
/// B_i, 6-largeness of both, sphere chamber dimension, and outward
/// extension of top-dimensional sphere simplices.  The extension subcheck
/// is skipped at the truncation frontier (i + 1 > frontier_radius).
std::vector<CheckReport> check_sphere_facts(const BallSystem& bs, int i, int frontier_radius);

/// Local ball/sphere identities at one tau in S_i:
///   X_tau /\ B_i = B_1(rho, X_tau)  and  X_tau /\ S_i = S_1(rho, X_tau).
CheckReport check_projection_identities(const BallSystem& bs, int i, const Simplex& tau);

/// Condition R(v,X): for every nonempty simplex sigma of the link X_v, the
/// spans of the link vertices at link distance >= 2 and >= 3 from sigma are
/// connected.  The caller guarantees the link of v is complete.
CheckReport condition_R(const SimplicialComplex& X, Vertex v);

}  // namespace systo
