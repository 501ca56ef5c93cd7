#pragma once

#include "systo/checks.hpp"
#include "systo/complex.hpp"
#include "systo/report.hpp"

namespace systo {

/// A triangulated torus with one marked 2-simplex; the marked face's
/// boundary is what gets identified during a connected-sum step.
struct TorusTemplate {
    SimplicialComplex cx;
    Simplex marked;
};

/// Validates chi = 0, pseudomanifold, connected, and the marked face.
TorusTemplate torus_template(const SimplicialComplex& T, const Simplex& marked);

/// The 7-vertex torus with faces {i,i+1,i+3} and {i,i+2,i+3} mod 7.
TorusTemplate minimal_torus();

/// One glued torus copy: which face of the previous stage it replaced and
/// how template vertices landed in the new stage.
struct StageBlock {
    Simplex glued_face;                   // sigma in the previous stage
    std::map<Vertex, Vertex> vertex_map;  // template vertex -> stage vertex
};

/// A closed connected orientable triangulated surface in the tower.
struct SurfaceStage {
    SimplicialComplex cx;
    int index = 1;  // which T_k it carries
    long long genus = 0;
    std::vector<StageBlock> blocks;  // how this stage was produced; empty at stage 1
};

/// Builds stage 1 from a named model: tetrahedron, octahedron or
/// icosahedron.
SurfaceStage initial_sphere(const std::string& model);

/// Stage 1 from an arbitrary triangulated 2-sphere.
SurfaceStage initial_sphere_from(SimplicialComplex cx);

/// Connected sum with one fresh torus copy per 2-simplex: the open faces
/// sigma and the template's marked face are removed and their boundaries
/// identified in ascending vertex order.  Face count grows by a factor
/// of 13; the budget guards the geometric blow-up.
SurfaceStage step(const SurfaceStage& stage, const TorusTemplate& tpl,
                  long long face_budget = 100000);

/// Surface invariants of one stage: 2-dimensional pseudomanifold with
/// every edge in two triangles, connected, orientable, chi = 2 - 2*genus.
std::vector<CheckReport> check_stage(const SurfaceStage& stage);

/// The defining conditions of the collapse map p_k recorded by a step:
/// identity on each glued boundary, torus cells confined to their face,
/// and every next-stage triangle accounted for by exactly one block.
CheckReport check_stage_map(const SurfaceStage& prev, const SurfaceStage& next,
                            const TorusTemplate& tpl);

/// Orientability via coherent orientation propagation across shared
/// edges; requires every edge in exactly two triangles.
bool is_orientable(const SimplicialComplex& cx);

}  // namespace systo
