#include "systo/pontryagin.hpp"

#include <map>

namespace systo {

namespace {

/// Edge -> incident triangle indices for a 2-dimensional complex.
std::map<Simplex, std::vector<int>> edge_faces(const SimplicialComplex& cx) {
    std::map<Simplex, std::vector<int>> out;
    const auto& faces = cx.maximal_simplices();
    for (int i = 0; i < int(faces.size()); ++i) {
        const Simplex& t = faces[size_t(i)];
        for (size_t a = 0; a < t.size(); ++a)
            for (size_t b = a + 1; b < t.size(); ++b)
                out[{t[a], t[b]}].push_back(i);
    }
    return out;
}

/// Throws unless cx is a closed triangulated surface.
void require_closed_surface(const SimplicialComplex& cx, const std::string& what) {
    if (cx.dim() != 2) throw InvalidInput(what + " is not 2-dimensional");
    for (const Simplex& m : cx.maximal_simplices())
        if (m.size() != 3) throw InvalidInput(what + " has a maximal simplex of wrong size");
    for (const auto& [e, fs] : edge_faces(cx))
        if (fs.size() != 2)
            throw InvalidInput(what + " edge " + simplex_str(e) + " lies in " +
                               std::to_string(fs.size()) + " triangles, expected 2");
    std::vector<int> dist = cx.bfs({0});
    for (Vertex v = 0; v < cx.num_vertices(); ++v)
        if (dist[size_t(v)] < 0) throw InvalidInput(what + " is disconnected");
}

}  // namespace

bool is_orientable(const SimplicialComplex& cx) {
    const auto& faces = cx.maximal_simplices();
    auto ef = edge_faces(cx);
    for (const auto& [e, fs] : ef)
        if (fs.size() != 2) throw InvalidInput("orientability needs every edge in two triangles");

    // direction of edge {u,v} (u<v) induced by the ascending triple with
    // positive orientation: +1 for u->v on the two consecutive pairs, -1
    // on the wrap-around pair {first,last}
    auto dir = [](const Simplex& t, const Simplex& e) {
        return (e[0] == t[0] && e[1] == t[2]) ? -1 : 1;
    };

    std::vector<int> sign(faces.size(), 0);
    for (int start = 0; start < int(faces.size()); ++start) {
        if (sign[size_t(start)] != 0) continue;
        sign[size_t(start)] = 1;
        std::vector<int> queue{start};
        for (size_t head = 0; head < queue.size(); ++head) {
            int i = queue[head];
            const Simplex& t = faces[size_t(i)];
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b) {
                    Simplex e{t[a], t[b]};
                    for (int j : ef.at(e)) {
                        if (j == i) continue;
                        // coherent: the shared edge is traversed in
                        // opposite directions by the two triangles
                        int want = -sign[size_t(i)] * dir(t, e) * dir(faces[size_t(j)], e);
                        if (sign[size_t(j)] == 0) {
                            sign[size_t(j)] = want;
                            queue.push_back(j);
                        } else if (sign[size_t(j)] != want) {
                            return false;
                        }
                    }
                }
        }
    }
    return true;
}

TorusTemplate torus_template(const SimplicialComplex& T, const Simplex& marked) {
    require_closed_surface(T, "torus template");
    if (T.euler_characteristic() != 0)
        throw InvalidInput("torus template must have Euler characteristic 0, got " +
                           std::to_string(T.euler_characteristic()));
    if (marked.size() != 3 || !T.has_simplex(marked))
        throw InvalidInput("marked face " + simplex_str(marked) +
                           " is not a 2-simplex of the template");
    return TorusTemplate{T, marked};
}

TorusTemplate minimal_torus() {
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back(make_simplex({i, (i + 1) % 7, (i + 3) % 7}));
        faces.push_back(make_simplex({i, (i + 2) % 7, (i + 3) % 7}));
    }
    SimplicialComplex T = SimplicialComplex::from_maximal(7, std::move(faces));
    return torus_template(T, T.maximal_simplices().front());
}

SurfaceStage initial_sphere_from(SimplicialComplex cx) {
    require_closed_surface(cx, "initial sphere");
    if (cx.euler_characteristic() != 2)
        throw InvalidInput("initial stage must have Euler characteristic 2, got " +
                           std::to_string(cx.euler_characteristic()));
    SurfaceStage stage;
    stage.cx = std::move(cx);
    stage.index = 1;
    stage.genus = 0;
    return stage;
}

SurfaceStage initial_sphere(const std::string& model) {
    std::vector<Simplex> faces;
    int nv = 0;
    if (model == "tetrahedron") {
        nv = 4;
        faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    } else if (model == "octahedron") {
        nv = 6;
        for (int a : {0, 1})
            for (int b : {2, 3})
                for (int c : {4, 5}) faces.push_back(make_simplex({a, b, c}));
    } else if (model == "icosahedron") {
        nv = 12;
        auto u = [](int i) { return 1 + i % 5; };
        auto l = [](int i) { return 6 + i % 5; };
        for (int i = 0; i < 5; ++i) {
            faces.push_back(make_simplex({0, u(i), u(i + 1)}));
            faces.push_back(make_simplex({11, l(i), l(i + 1)}));
            faces.push_back(make_simplex({u(i), u(i + 1), l(i)}));
            faces.push_back(make_simplex({u(i + 1), l(i), l(i + 1)}));
        }
    } else {
        throw InvalidInput("unknown sphere model: " + model);
    }
    return initial_sphere_from(SimplicialComplex::from_maximal(nv, std::move(faces)));
}

SurfaceStage step(const SurfaceStage& stage, const TorusTemplate& tpl, long long face_budget) {
    const auto& old_faces = stage.cx.maximal_simplices();
    long long F = (long long)old_faces.size();
    long long tpl_faces = (long long)tpl.cx.maximal_simplices().size();
    if (F * (tpl_faces - 1) > face_budget)
        throw InvalidInput("stage would have " + std::to_string(F * (tpl_faces - 1)) +
                           " faces, over the budget of " + std::to_string(face_budget));

    SurfaceStage next;
    next.index = stage.index + 1;
    next.genus = stage.genus + F;

    Vertex fresh = stage.cx.num_vertices();
    std::vector<Simplex> triangles;
    for (const Simplex& sigma : old_faces) {
        StageBlock block;
        block.glued_face = sigma;
        // boundary identification: marked face vertices onto sigma in
        // ascending order; everything else is a fresh vertex
        for (size_t j = 0; j < 3; ++j) block.vertex_map[tpl.marked[j]] = sigma[j];
        for (Vertex v = 0; v < tpl.cx.num_vertices(); ++v)
            if (!contains_vertex(tpl.marked, v)) block.vertex_map[v] = fresh++;
        for (const Simplex& f : tpl.cx.maximal_simplices()) {
            if (f == tpl.marked) continue;
            Simplex g;
            for (Vertex v : f) g.push_back(block.vertex_map.at(v));
            triangles.push_back(make_simplex(std::move(g)));
        }
        next.blocks.push_back(std::move(block));
    }
    next.cx = SimplicialComplex::from_maximal(fresh, std::move(triangles));

    if (next.cx.euler_characteristic() != stage.cx.euler_characteristic() - 2 * F)
        throw std::logic_error("connected sum broke the Euler characteristic bookkeeping");
    return next;
}

std::vector<CheckReport> check_stage(const SurfaceStage& stage) {
    std::vector<CheckReport> out;
    std::string tag = "[stage=" + std::to_string(stage.index) + "]";
    const SimplicialComplex& cx = stage.cx;
    nlohmann::json stats = {{"stage", stage.index},
                            {"vertices", cx.num_vertices()},
                            {"faces", cx.maximal_simplices().size()},
                            {"euler", cx.euler_characteristic()},
                            {"genus", stage.genus}};

    bool closed = cx.dim() == 2;
    Simplex bad_edge;
    size_t bad_count = 0;
    for (const auto& [e, fs] : edge_faces(cx))
        if (fs.size() != 2 && bad_edge.empty()) {
            closed = false;
            bad_edge = e;
            bad_count = fs.size();
        }
    out.push_back(closed ? CheckReport::pass("surface_closed" + tag, stats)
                         : CheckReport::fail("surface_closed" + tag,
                                             {{"edge", bad_edge}, {"triangles", bad_count}},
                                             stats));

    std::vector<int> dist = cx.bfs({0});
    bool connected = true;
    for (Vertex v = 0; v < cx.num_vertices(); ++v)
        if (dist[size_t(v)] < 0) connected = false;
    out.push_back(connected ? CheckReport::pass("surface_connected" + tag, stats)
                            : CheckReport::fail("surface_connected" + tag, {}, stats));

    bool orientable = closed && is_orientable(cx);
    out.push_back(orientable ? CheckReport::pass("surface_orientable" + tag, stats)
                             : CheckReport::fail("surface_orientable" + tag, {}, stats));

    bool euler_ok = cx.euler_characteristic() == 2 - 2 * stage.genus;
    out.push_back(euler_ok
                      ? CheckReport::pass("surface_euler" + tag, stats)
                      : CheckReport::fail("surface_euler" + tag,
                                          {{"euler", cx.euler_characteristic()},
                                           {"genus", stage.genus}},
                                          stats));
    return out;
}

CheckReport check_stage_map(const SurfaceStage& prev, const SurfaceStage& next,
                            const TorusTemplate& tpl) {
    const std::string name = "stage_map[stage=" + std::to_string(next.index) + "]";
    if (next.index != prev.index + 1)
        return CheckReport::fail(name, {{"prev", prev.index}, {"next", next.index}},
                                 {}, "stages are not consecutive");
    const auto& old_faces = prev.cx.maximal_simplices();
    if (next.blocks.size() != old_faces.size())
        return CheckReport::fail(name,
                                 {{"blocks", next.blocks.size()}, {"faces", old_faces.size()}},
                                 {}, "one torus block per 2-simplex required");

    std::map<Simplex, int> accounted;  // face of next -> owning blocks
    for (size_t i = 0; i < next.blocks.size(); ++i) {
        const StageBlock& block = next.blocks[i];
        const Simplex& sigma = block.glued_face;
        if (sigma != old_faces[i])
            return CheckReport::fail(name, {{"block", i}, {"glued_face", sigma}}, {},
                                     "glued faces out of order");
        // p_k restricted to the boundary is the identity
        for (size_t j = 0; j < 3; ++j)
            if (block.vertex_map.at(tpl.marked[j]) != sigma[j])
                return CheckReport::fail(
                    name,
                    {{"block", i},
                     {"marked_vertex", tpl.marked[j]},
                     {"mapped_to", block.vertex_map.at(tpl.marked[j])},
                     {"expected", sigma[j]}},
                    {}, "boundary identification is not the identity");
        // every cell of the torus copy stays over sigma: its vertices are
        // either sigma vertices or the block's own fresh vertices
        std::vector<Vertex> allowed = sigma;
        for (const auto& [tv, sv] : block.vertex_map)
            if (!contains_vertex(tpl.marked, tv)) allowed.push_back(sv);
        std::sort(allowed.begin(), allowed.end());
        for (const Simplex& f : tpl.cx.maximal_simplices()) {
            if (f == tpl.marked) continue;
            Simplex g;
            for (Vertex v : f) g.push_back(block.vertex_map.at(v));
            g = make_simplex(std::move(g));
            if (!is_face(g, allowed))
                return CheckReport::fail(name, {{"block", i}, {"cell", g}}, {},
                                         "torus cell leaves its face");
            if (!next.cx.has_simplex(g))
                return CheckReport::fail(name, {{"block", i}, {"cell", g}}, {},
                                         "recorded cell is missing from the stage");
            ++accounted[g];
        }
    }
    for (const Simplex& f : next.cx.maximal_simplices()) {
        auto it = accounted.find(f);
        if (it == accounted.end() || it->second != 1)
            return CheckReport::fail(name,
                                     {{"face", f},
                                      {"owners", it == accounted.end() ? 0 : it->second}},
                                     {}, "stage face not owned by exactly one block");
    }
    return CheckReport::pass(name, {{"blocks", next.blocks.size()},
                                    {"faces", next.cx.maximal_simplices().size()}});
}

}  // namespace systo
