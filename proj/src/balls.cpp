#include "systo/balls.hpp"

#include <set>

namespace systo {

const std::vector<Vertex> BallSystem::empty_layer_{};

BallSystem::BallSystem(const SimplicialComplex& X, Simplex base) : X_(&X), base_(std::move(base)) {
    base_ = make_simplex(std::move(base_));
    if (!X.has_simplex(base_))
        throw InvalidInput("ball base is not a simplex of the complex: " + simplex_str(base_));
    dist_ = X.bfs(base_);
    for (Vertex v = 0; v < X.num_vertices(); ++v)
        if (dist_[v] >= 0) {
            if (dist_[v] >= int(layers_.size())) layers_.resize(size_t(dist_[v]) + 1);
            layers_[size_t(dist_[v])].push_back(v);
            radius_ = std::max(radius_, dist_[v]);
        }
}

const std::vector<Vertex>& BallSystem::layer(int i) const {
    if (i < 0) throw InvalidInput("negative layer index");
    if (i >= int(layers_.size())) return empty_layer_;
    return layers_[size_t(i)];
}

Subcomplex BallSystem::ball(int i) const {
    if (i < 0) throw InvalidInput("negative ball radius");
    if (i == 0) return Subcomplex::from_simplices(*X_, {base_});
    std::vector<Simplex> gens{base_};
    for (const auto& m : X_->maximal_simplices()) {
        bool meets = false;
        for (Vertex v : m)
            if (dist_[v] >= 0 && dist_[v] <= i - 1) {
                meets = true;
                break;
            }
        if (meets) gens.push_back(m);
    }
    return Subcomplex::from_simplices(*X_, std::move(gens));
}

Subcomplex BallSystem::sphere(int i) const {
    if (i < 0) throw InvalidInput("negative sphere radius");
    if (i == 0) return Subcomplex::from_simplices(*X_, {base_});
    return Subcomplex::span(*X_, layer(i));
}

Subcomplex BallSystem::interior_ball(int i) const {
    if (i < 0) throw InvalidInput("negative ball radius");
    if (i == 0) return Subcomplex::from_simplices(*X_, {base_});  // documented convention
    Subcomplex b = ball(i);
    std::vector<Simplex> gens;
    for (const auto& g : b.maximal) {
        Simplex inner;
        for (Vertex v : g)
            if (dist_[v] >= 0 && dist_[v] < i) inner.push_back(v);
        if (!inner.empty()) gens.push_back(std::move(inner));
    }
    Subcomplex out;
    out.parent = X_;
    out.maximal = prune_nested(std::move(gens));
    std::set<Vertex> vs;
    for (const auto& g : out.maximal) vs.insert(g.begin(), g.end());
    out.vertices.assign(vs.begin(), vs.end());
    return out;
}

Simplex BallSystem::projection_simplex(int i, const Simplex& tau) const {
    if (i < 1) throw InvalidInput("projection requires i >= 1");
    for (Vertex v : tau)
        if (dist_[v] != i)
            throw InvalidInput("simplex " + simplex_str(tau) + " is not in S_" + std::to_string(i));
    if (!X_->has_simplex(tau)) throw InvalidInput("not a simplex: " + simplex_str(tau));

    // vertices of B_{i-1} spanning with tau
    Subcomplex lk = link_of(*X_, tau);
    Simplex rho;
    for (Vertex v : lk.vertices)
        if (dist_[v] >= 0 && dist_[v] <= i - 1) rho.push_back(v);
    if (rho.empty())
        throw SystolicityViolation("projection of " + simplex_str(tau) + " is empty", tau, rho);
    if (!X_->has_simplex(simplex_union(tau, rho)))
        throw SystolicityViolation(
            "projection of " + simplex_str(tau) + " is not a single simplex: " + simplex_str(rho),
            tau, rho);
    return rho;
}

CheckReport check_ball_recurrence(const BallSystem& bs, int i) {
    std::string name = "ball_recurrence[i=" + std::to_string(i) + "]";
    if (i < 1) throw InvalidInput("recurrence check requires i >= 1");
    const SimplicialComplex& X = bs.complex();
    Subcomplex ball_i = bs.ball(i);
    Subcomplex ball_prev = bs.ball(i - 1);

    // vertex layer identity: verts(B_i) \ verts(B_{i-1}) = layer i
    std::vector<Vertex> diff;
    std::set_difference(ball_i.vertices.begin(), ball_i.vertices.end(), ball_prev.vertices.begin(),
                        ball_prev.vertices.end(), std::back_inserter(diff));
    std::vector<Vertex> layer = bs.layer(i);
    std::sort(layer.begin(), layer.end());
    if (diff != layer)
        return CheckReport::fail(name, {{"ball_difference", diff}, {"bfs_layer", layer}});

    // every simplex of B_i meets B_{i-1}, and every simplex meeting B_{i-1}
    // is in B_i
    for (const auto& m : X.maximal_simplices()) {
        bool meets = !simplex_intersection(m, ball_prev.vertices).empty();
        if (meets && !ball_i.has_simplex(m))
            return CheckReport::fail(name, {{"missing_simplex", m}});
    }
    for (const auto& g : ball_i.maximal) {
        bool meets = !simplex_intersection(g, ball_prev.vertices).empty();
        if (!meets) return CheckReport::fail(name, {{"stray_simplex", g}});
    }

    // B_i = interior(B_i) u (simplices meeting S_i)
    Subcomplex interior = bs.interior_ball(i);
    for (const auto& g : ball_i.maximal) {
        bool touches_sphere = false;
        for (Vertex v : g)
            if (bs.distance(v) == i) touches_sphere = true;
        if (!touches_sphere && !interior.has_simplex(g))
            return CheckReport::fail(name, {{"interior_miss", g}});
    }
    return CheckReport::pass(name, {{"ball_generators", ball_i.maximal.size()}});
}

std::vector<CheckReport> check_sphere_facts(const BallSystem& bs, int i, int frontier_radius) {
    if (i < 1) throw InvalidInput("sphere facts require i >= 1");
    std::string tag = "[i=" + std::to_string(i) + "]";
    std::vector<CheckReport> out;
    const SimplicialComplex& X = bs.complex();
    Subcomplex sphere = bs.sphere(i);
    Subcomplex ball = bs.ball(i);

    auto renamed = [&](CheckReport r, const std::string& name) {
        r.name = name;
        return r;
    };
    out.push_back(renamed(is_full_subcomplex(X, sphere), "sphere_full" + tag));
    out.push_back(renamed(is_full_subcomplex(X, ball), "ball_full" + tag));
    out.push_back(renamed(is_k_large(extract(sphere).cx, 6), "sphere_6_large" + tag));
    out.push_back(renamed(is_k_large(extract(ball).cx, 6), "ball_6_large" + tag));

    // In an n-dimensional chamber complex, spheres are expected to be
    // (n-1)-dimensional chamber complexes.
    {
        std::string name = "sphere_chamber_dim" + tag;
        if (sphere.empty()) {
            out.push_back(CheckReport::skip(name, "empty sphere"));
        } else {
            ExtractedComplex ex = extract(sphere);
            ChamberFlags flags;
            CheckReport chamber = is_chamber_complex(ex.cx, &flags);
            int expected_dim = X.dim() - 1;
            if (flags.chamber && ex.cx.dim() == expected_dim)
                out.push_back(CheckReport::pass(name, chamber.stats));
            else
                out.push_back(CheckReport::fail(
                    name, {{"sphere_dim", ex.cx.dim()}, {"chamber", flags.chamber}},
                    chamber.stats));
        }
    }

    // Every top-dimensional simplex of S_i should extend outward by a
    // vertex at distance i+1.
    {
        std::string name = "sphere_outward_extension" + tag;
        if (i + 1 > frontier_radius) {
            out.push_back(CheckReport::skip(name, "truncation frontier"));
        } else {
            int top = X.dim() - 1;
            long long examined = 0;
            CheckReport result = CheckReport::pass(name);
            for (const auto& sigma : sphere.maximal) {
                if (int(sigma.size()) - 1 != top) continue;
                ++examined;
                Subcomplex lk = link_of(X, sigma);
                bool extended = false;
                for (Vertex v : lk.vertices)
                    if (bs.distance(v) == i + 1) {
                        extended = true;
                        break;
                    }
                if (!extended) {
                    result = CheckReport::fail(name, {{"unextendable_simplex", sigma}});
                    break;
                }
            }
            if (result.ok()) result.stats["top_simplices"] = examined;
            out.push_back(std::move(result));
        }
    }
    return out;
}

CheckReport check_projection_identities(const BallSystem& bs, int i, const Simplex& tau) {
    std::string name = "projection_identity[i=" + std::to_string(i) + ",tau=" + simplex_str(tau) + "]";
    const SimplicialComplex& X = bs.complex();
    Simplex rho;
    try {
        rho = bs.projection_simplex(i, tau);
    } catch (const SystolicityViolation& e) {
        return CheckReport::fail(name, {{"tau", e.tau}, {"projection_set", e.witness}},
                                 nlohmann::json::object(), "projection not a single simplex");
    }

    Subcomplex lk = link_of(X, tau);
    ExtractedComplex ex = extract(lk);
    BallSystem link_balls(ex.cx, ex.lift(rho));

    Subcomplex ball_i = bs.ball(i);
    Subcomplex sphere_i = bs.sphere(i);

    // left sides: simplices of the link lying in B_i (resp. S_i)
    std::set<Simplex> link_in_ball, link_in_sphere;
    for (const auto& kappa : lk.all_faces()) {
        if (ball_i.has_simplex(kappa)) link_in_ball.insert(kappa);
        if (sphere_i.has_simplex(kappa)) link_in_sphere.insert(kappa);
    }

    // right sides, computed inside the link and lowered to parent labels
    std::set<Simplex> b1, s1;
    for (const auto& kappa : link_balls.ball(1).all_faces()) b1.insert(ex.lower(kappa));
    for (const auto& kappa : link_balls.sphere(1).all_faces()) s1.insert(ex.lower(kappa));

    nlohmann::json stats{{"rho", rho},
                         {"link_faces", lk.all_faces().size()}};
    if (link_in_ball != b1)
        return CheckReport::fail(name,
                                 {{"side", "X_tau/\\B_i vs B_1(rho,X_tau)"},
                                  {"lhs_faces", link_in_ball.size()},
                                  {"rhs_faces", b1.size()}},
                                 stats);
    if (link_in_sphere != s1)
        return CheckReport::fail(name,
                                 {{"side", "X_tau/\\S_i vs S_1(rho,X_tau)"},
                                  {"lhs_faces", link_in_sphere.size()},
                                  {"rhs_faces", s1.size()}},
                                 stats);
    return CheckReport::pass(name, stats);
}

CheckReport condition_R(const SimplicialComplex& X, Vertex v) {
    std::string name = "condition_R[v=" + std::to_string(v) + "]";
    Subcomplex lk = link_of(X, {v});
    if (lk.empty()) return CheckReport::skip(name, "isolated vertex");
    ExtractedComplex ex = extract(lk);
    long long simplices = 0;
    bool vacuous = false;
    for (const auto& sigma : ex.cx.all_faces()) {
        ++simplices;
        BallSystem bs(ex.cx, sigma);
        for (int reach : {2, 3}) {
            std::vector<Vertex> survivors;
            for (Vertex u = 0; u < ex.cx.num_vertices(); ++u)
                if (bs.distance(u) < 0 || bs.distance(u) >= reach) survivors.push_back(u);
            if (survivors.empty()) {
                vacuous = true;
                continue;
            }
            Subcomplex complement = Subcomplex::span(ex.cx, survivors);
            auto components = connected_components(complement);
            if (components.size() > 1) {
                nlohmann::json comps = nlohmann::json::array();
                for (const auto& c : components) {
                    Simplex lowered;
                    for (Vertex u : c) lowered.push_back(ex.to_parent[size_t(u)]);
                    comps.push_back(lowered);
                }
                return CheckReport::fail(name,
                                         {{"sigma", ex.lower(sigma)},
                                          {"interior_radius", reach},
                                          {"components", comps}},
                                         {{"simplices_examined", simplices}});
            }
        }
    }
    return CheckReport::pass(name, {{"simplices_examined", simplices}},
                             vacuous ? "some complements empty (vacuous)" : "");
}

}  // namespace systo
