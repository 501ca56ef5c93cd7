#pragma once

#include <limits>

#include "systo/projection.hpp"

namespace systo {

/// Finite prefix of the inverse system {S_k, pi_k} around a basepoint:
/// spheres S_1..S_m and the projection maps between consecutive levels.
struct InverseSystem {
    InverseSystem(const SimplicialComplex& cx, Vertex v) : X(&cx), base(v), balls(cx, {v}) {}

    const SimplicialComplex* X = nullptr;
    Vertex base = 0;
    int depth = 0;  // m
    BallSystem balls;
    std::vector<SphereMap> maps;  // level k = 2..m at index k-2
    std::vector<CheckReport> construction_reports;  // chain condition per level

    Subcomplex sphere(int k) const { return balls.sphere(k); }
    const SphereMap& map_at(int k) const;
};

/// Builds the depth-m system.  frontier_radius is the radius up to which
/// the complex is complete (the disc radius for built discs); the depth
/// must stay strictly inside it so every link involved is whole.
InverseSystem build_system(const SimplicialComplex& X, Vertex base, int m,
                           int frontier_radius = std::numeric_limits<int>::max());

/// A finite thread of the system: one point per level 1..m, exactly
/// compatible under the projections.
struct Thread {
    std::vector<SpherePoint> points;  // points[i] has level i+1
};

nlohmann::json thread_to_json(const Thread& t);
Thread thread_from_json(const nlohmann::json& j);

/// Exact compatibility pi_k(x_k) = x_{k-1} at every level.
CheckReport validate_thread(const InverseSystem& sys, const Thread& t);

struct ThreadResult {
    Thread thread;
    CheckReport report;
};

/// Builds a thread from a geodesic ray base, v_1, ..., v_m (v_k on S_k,
/// consecutive vertices adjacent) by projecting the deepest vertex down.
/// The report records the within-simplex distance from v_k to x_k at each
/// comparable level against the geometric series bound E/(1-E).
ThreadResult thread_from_ray(const InverseSystem& sys, const std::vector<Vertex>& ray);

/// Max Gromov four-point defect over vertex quadruples of B_r0(base),
/// with 1-skeleton distances computed inside B_r (r >= 3*r0 so the
/// truncation cannot stretch geodesics between inner vertices).  Defect
/// of a quadruple = (largest - middle)/2 of the three pairing sums;
/// passes iff the max defect is <= delta_bound.
CheckReport hyperbolicity_check(const SimplicialComplex& X, Vertex base, int r, int r0,
                                double delta_bound = 2.5, long long max_quadruples = 200000,
                                uint64_t seed = 0);

/// The two inverse-limit hypotheses on the finite system: (1) chain
/// condition + full/6-large preimages at every level, (2) exact diameter
/// decay of l-fold simplex images bounded by C^l, plus the decay sequence
/// a_k = C^k * max simplex diameter.
std::vector<CheckReport> daverman_report(const InverseSystem& sys, int subcomplex_samples = 20,
                                         uint64_t seed = 0);

/// Connectivity of every sphere in the system: direct BFS per level plus
/// the inductive cross-check (preimage of the connected S_{k-1} is S_k).
std::vector<CheckReport> connectedness_report(const InverseSystem& sys);

/// Per-vertex analysis of S_k: (a) the link identity (S_k)_w =
/// S_1(rho, X_w) with rho = X_w /\ S_{k-1}, and (b) the local-cut scan:
/// vertices whose link inside S_k is disconnected.  In dimension 2 the
/// spheres are cycles and every link is a disconnected vertex pair; the
/// scan then reports the count informationally instead of failing.
std::vector<CheckReport> local_cut_analysis(const InverseSystem& sys, int k);

}  // namespace systo
