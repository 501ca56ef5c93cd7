#include "systo/boundary.hpp"

#include <array>
#include <cmath>
#include <random>
#include <set>

namespace systo {

const SphereMap& InverseSystem::map_at(int k) const {
    if (k < 2 || k > depth) throw InvalidInput("no projection map at level " + std::to_string(k));
    return maps[size_t(k - 2)];
}

InverseSystem build_system(const SimplicialComplex& X, Vertex base, int m, int frontier_radius) {
    if (m < 1) throw InvalidInput("system depth must be >= 1");
    if (m > frontier_radius - 1)
        throw InvalidInput("system depth " + std::to_string(m) +
                           " exceeds the safe radius of a radius-" +
                           std::to_string(frontier_radius) + " truncation");
    InverseSystem sys(X, base);
    sys.depth = m;
    if (sys.balls.radius() < m)
        throw InvalidInput("complex has no vertices at distance " + std::to_string(m) +
                           " from the basepoint");
    for (int k = 2; k <= m; ++k) {
        try {
            SphereMap pi = pi_map(sys.balls, k);
            sys.construction_reports.push_back(chain_condition(pi));
            sys.maps.push_back(std::move(pi));
        } catch (const SystolicityViolation& e) {
            throw SystolicityViolation("system construction failed at level " +
                                           std::to_string(k) + ": " + e.what(),
                                       e.tau, e.witness);
        }
    }
    return sys;
}

nlohmann::json thread_to_json(const Thread& t) {
    nlohmann::json pts = nlohmann::json::array();
    for (const SpherePoint& p : t.points) pts.push_back(p.to_json());
    return {{"points", pts}};
}

Thread thread_from_json(const nlohmann::json& j) {
    Thread t;
    for (const auto& pj : j.at("points")) {
        SpherePoint p;
        p.level = pj.at("level").get<int>();
        p.support = pj.at("support").get<Simplex>();
        for (const auto& c : pj.at("coeffs")) p.coeffs.push_back(parse_rational(c.get<std::string>()));
        p.validate();
        t.points.push_back(std::move(p));
    }
    return t;
}

CheckReport validate_thread(const InverseSystem& sys, const Thread& t) {
    const std::string name = "thread_compatibility";
    if (t.points.empty()) return CheckReport::pass(name, {{"levels", 0}}, "empty thread");
    for (size_t i = 0; i < t.points.size(); ++i) {
        if (t.points[i].level != int(i) + 1)
            return CheckReport::fail(name, {{"index", i}, {"level", t.points[i].level}},
                                     {{"levels", t.points.size()}}, "levels must run 1..m");
        t.points[i].validate();
    }
    for (size_t i = 1; i < t.points.size(); ++i) {
        int k = int(i) + 1;
        SpherePoint img = project_point(sys.map_at(k), t.points[i]);
        const SpherePoint& want = t.points[i - 1];
        if (img.support != want.support || img.coeffs != want.coeffs)
            return CheckReport::fail(name,
                                     {{"level", k},
                                      {"projected", img.to_json()},
                                      {"expected", want.to_json()}},
                                     {{"levels", t.points.size()}});
    }
    return CheckReport::pass(name, {{"levels", t.points.size()}});
}

ThreadResult thread_from_ray(const InverseSystem& sys, const std::vector<Vertex>& ray) {
    const std::string name = "thread_from_ray";
    if (ray.size() < 2 || ray[0] != sys.base)
        throw InvalidInput("ray must start at the basepoint and reach at least S_1");
    int m = int(ray.size()) - 1;
    if (m > sys.depth) throw InvalidInput("ray is deeper than the system");
    for (int k = 1; k <= m; ++k) {
        if (sys.balls.distance(ray[k]) != k)
            throw InvalidInput("ray vertex " + std::to_string(ray[k]) +
                               " is not on sphere level " + std::to_string(k));
        if (!sys.X->adjacent(ray[k - 1], ray[k]))
            throw InvalidInput("ray vertices " + std::to_string(ray[k - 1]) + " and " +
                               std::to_string(ray[k]) + " are not adjacent");
    }

    ThreadResult out;
    out.thread.points.assign(size_t(m), SpherePoint{});
    out.thread.points[size_t(m) - 1] = SpherePoint::vertex_point(m, ray[size_t(m)]);
    for (int k = m - 1; k >= 1; --k)
        out.thread.points[size_t(k) - 1] =
            project_point(sys.map_at(k + 1), out.thread.points[size_t(k)]);

    ContractionConstant cc = contraction_constant(sys.X->dim());
    double E = std::sqrt(double(cc.E2.convert_to<double>()));
    double bound = E / (1.0 - E);  // sum of the geometric series E + E^2 + ...
    nlohmann::json levels = nlohmann::json::array();
    bool ok = true;
    for (int k = 1; k <= m; ++k) {
        const SpherePoint& x = out.thread.points[size_t(k) - 1];
        nlohmann::json row = {{"level", k}, {"support", x.support}};
        Simplex joint = simplex_union(x.support, {ray[size_t(k)]});
        if (sys.X->has_simplex(joint)) {
            Rational d2 = squared_distance(SpherePoint::vertex_point(k, ray[size_t(k)]), x);
            double d = std::sqrt(d2.convert_to<double>());
            row["distance_to_ray_vertex"] = d;
            row["comparable"] = true;
            if (d >= bound + 1e-12) ok = false;
        } else {
            row["comparable"] = false;
        }
        levels.push_back(row);
    }
    nlohmann::json stats = {{"levels", levels}, {"series_bound", bound}};
    out.report = ok ? CheckReport::pass(name, stats)
                    : CheckReport::fail(name, {{"levels", levels}}, stats,
                                        "a comparable level exceeded the series bound");
    return out;
}

CheckReport hyperbolicity_check(const SimplicialComplex& X, Vertex base, int r, int r0,
                                double delta_bound, long long max_quadruples, uint64_t seed) {
    const std::string name = "four_point_delta";
    if (r0 < 1 || r < 3 * r0)
        throw InvalidInput("need r >= 3*r0 so truncation cannot stretch inner geodesics");

    std::vector<int> dist = X.bfs({base});
    std::vector<Vertex> outer, inner;
    std::vector<char> in_outer(size_t(X.num_vertices()), 0);
    for (Vertex v = 0; v < X.num_vertices(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) {
            outer.push_back(v);
            in_outer[size_t(v)] = 1;
            if (dist[v] <= r0) inner.push_back(v);
        }
    int ni = int(inner.size());

    // all-pairs distances among inner vertices, restricted to the 1-skeleton
    // of B_r
    const auto& adj = X.adjacency();
    std::vector<std::vector<int>> d(static_cast<size_t>(ni));
    for (int s = 0; s < ni; ++s) {
        std::vector<int> ds(size_t(X.num_vertices()), -1);
        std::vector<Vertex> queue{inner[size_t(s)]};
        ds[size_t(inner[size_t(s)])] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : adj[size_t(u)])
                if (in_outer[size_t(w)] && ds[size_t(w)] < 0) {
                    ds[size_t(w)] = ds[size_t(u)] + 1;
                    queue.push_back(w);
                }
        }
        d[size_t(s)].assign(size_t(ni), -1);
        for (int t = 0; t < ni; ++t) d[size_t(s)][size_t(t)] = ds[size_t(inner[size_t(t)])];
    }
    for (int s = 0; s < ni; ++s)
        for (int t = 0; t < ni; ++t)
            if (d[size_t(s)][size_t(t)] < 0)
                return CheckReport::fail(name,
                                         {{"disconnected_pair",
                                           Simplex{inner[size_t(s)], inner[size_t(t)]}}},
                                         {{"inner_vertices", ni}},
                                         "inner ball is disconnected inside B_r");

    auto defect2 = [&](int a, int b, int c, int e) {  // twice the defect
        int s1 = d[size_t(a)][size_t(b)] + d[size_t(c)][size_t(e)];
        int s2 = d[size_t(a)][size_t(c)] + d[size_t(b)][size_t(e)];
        int s3 = d[size_t(a)][size_t(e)] + d[size_t(b)][size_t(c)];
        int hi = std::max({s1, s2, s3});
        int lo = std::min({s1, s2, s3});
        int mid = s1 + s2 + s3 - hi - lo;
        return hi - mid;
    };

    long long total = (long long)ni * (ni - 1) * (ni - 2) * (ni - 3) / 24;
    bool exhaustive = total <= max_quadruples;
    int best2 = 0;
    std::array<int, 4> arg{0, 0, 0, 0};
    long long examined = 0;
    if (exhaustive) {
        for (int a = 0; a < ni; ++a)
            for (int b = a + 1; b < ni; ++b)
                for (int c = b + 1; c < ni; ++c)
                    for (int e = c + 1; e < ni; ++e) {
                        ++examined;
                        int t = defect2(a, b, c, e);
                        if (t > best2) {
                            best2 = t;
                            arg = {a, b, c, e};
                        }
                    }
    } else {
        std::mt19937_64 rng(seed);
        for (long long q = 0; q < max_quadruples; ++q) {
            int a = int(rng() % uint64_t(ni)), b = int(rng() % uint64_t(ni));
            int c = int(rng() % uint64_t(ni)), e = int(rng() % uint64_t(ni));
            if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
            ++examined;
            int t = defect2(a, b, c, e);
            if (t > best2) {
                best2 = t;
                arg = {a, b, c, e};
            }
        }
    }

    double max_defect = best2 / 2.0;
    nlohmann::json stats = {
        {"max_defect", max_defect},
        {"delta_bound", delta_bound},
        {"inner_vertices", ni},
        {"ball_vertices", outer.size()},
        {"quadruples_examined", examined},
        {"mode", exhaustive ? "exhaustive" : "sampled"},
        {"convention", "defect = (largest - middle)/2 of the three pairing sums"}};
    if (max_defect <= delta_bound + 1e-12) return CheckReport::pass(name, stats);
    Simplex quad;
    for (int idx : arg) quad.push_back(inner[size_t(idx)]);
    return CheckReport::fail(name, {{"quadruple", quad}, {"defect", max_defect}}, stats);
}

std::vector<CheckReport> daverman_report(const InverseSystem& sys, int subcomplex_samples,
                                         uint64_t seed) {
    std::vector<CheckReport> out;
    ContractionConstant cc = contraction_constant(sys.X->dim());
    std::mt19937_64 rng(seed);

    // hypothesis (1): chain condition + full/6-large preimages per level
    for (int k = 2; k <= sys.depth; ++k) {
        const SphereMap& pi = sys.map_at(k);
        out.push_back(chain_condition(pi));
        out.back().name = "daverman_chain[k=" + std::to_string(k) + "]";

        long long checked = 0;
        CheckReport bad = CheckReport::pass("");
        bool failed = false;
        auto run = [&](const Subcomplex& L, const std::string& label) {
            if (failed) return;
            for (CheckReport& r : check_preimage(pi, L, label)) {
                ++checked;
                if (!r.ok()) {
                    bad = r;
                    failed = true;
                    return;
                }
            }
        };
        Subcomplex target = sys.sphere(k - 1);
        for (const Simplex& s : target.all_faces())
            run(Subcomplex::from_simplices(*sys.X, {s}), simplex_str(s));
        for (int t = 0; t < subcomplex_samples && !failed; ++t) {
            std::vector<Vertex> picks;
            for (Vertex v : target.vertices)
                if (rng() % 2) picks.push_back(v);
            if (picks.empty()) continue;
            Subcomplex L;
            L.parent = sys.X;
            for (const Simplex& m : target.maximal) {
                Simplex cut = simplex_intersection(m, picks);
                if (!cut.empty()) L.maximal.push_back(std::move(cut));
            }
            L.maximal = prune_nested(std::move(L.maximal));
            L.vertices = picks;
            run(L, "sample" + std::to_string(t));
        }
        std::string nm = "daverman_preimages[k=" + std::to_string(k) + "]";
        out.push_back(failed ? CheckReport::fail(nm, bad.to_json(), {{"checks", checked}})
                             : CheckReport::pass(nm, {{"checks", checked}}));
    }

    // hypothesis (2): exact diameter decay of l-fold simplex images
    for (int k = 2; k <= sys.depth; ++k) {
        std::string nm = "daverman_decay[k=" + std::to_string(k) + "]";
        long long measured = 0;
        bool failed = false;
        nlohmann::json witness;
        Rational worst = 0;
        for (const Simplex& sigma : sys.sphere(k).all_faces()) {
            if (sigma.size() < 2 || failed) continue;
            std::vector<SpherePoint> pts;
            for (Vertex v : sigma) pts.push_back(SpherePoint::vertex_point(k, v));
            Rational diam0 = 0;
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j)
                    diam0 = std::max(diam0, squared_distance(pts[i], pts[j]));
            for (int l = 1; l <= k - 1; ++l) {
                for (SpherePoint& p : pts) p = project_point(sys.map_at(k - l + 1), p);
                Rational diam = 0;
                for (size_t i = 0; i < pts.size(); ++i)
                    for (size_t j = i + 1; j < pts.size(); ++j)
                        diam = std::max(diam, squared_distance(pts[i], pts[j]));
                ++measured;
                Rational bound = rational_pow(cc.C2, l) * diam0;
                if (diam > bound) {
                    failed = true;
                    witness = {{"simplex", sigma},
                               {"steps", l},
                               {"diam2", rational_str(diam)},
                               {"bound2", rational_str(bound)}};
                    break;
                }
                if (diam0 > 0) worst = std::max(worst, diam / (rational_pow(cc.C2, l) * diam0));
            }
        }
        nlohmann::json stats = {{"measurements", measured},
                                {"max_normalized_ratio2", rational_str(worst)}};
        out.push_back(failed ? CheckReport::fail(nm, witness, stats)
                             : CheckReport::pass(nm, stats));
    }

    // the decay sequence a_k = C^k * max simplex diameter (unit edges:
    // diameter 1), monotone by C < 1
    double C = std::sqrt(cc.C2.convert_to<double>());
    nlohmann::json seq = nlohmann::json::array();
    bool monotone = true;
    double prev = 1.0;
    for (int k = 1; k <= sys.depth; ++k) {
        double a = std::pow(C, k);
        seq.push_back(a);
        if (a >= prev) monotone = false;
        prev = a;
    }
    nlohmann::json stats = {{"sequence", seq}, {"C", C}};
    out.push_back(monotone
                      ? CheckReport::pass("daverman_decay_sequence", stats)
                      : CheckReport::fail("daverman_decay_sequence", {{"sequence", seq}}, stats));
    return out;
}

std::vector<CheckReport> connectedness_report(const InverseSystem& sys) {
    std::vector<CheckReport> out;
    std::vector<bool> direct(size_t(sys.depth) + 1, false);
    for (int k = 1; k <= sys.depth; ++k) {
        Subcomplex sk = sys.sphere(k);
        auto comps = connected_components(sk);
        direct[size_t(k)] = comps.size() <= 1;
        std::string nm = "sphere_connected[k=" + std::to_string(k) + "]";
        nlohmann::json stats = {{"vertices", sk.vertices.size()}, {"components", comps.size()}};
        out.push_back(direct[size_t(k)]
                          ? CheckReport::pass(nm, stats)
                          : CheckReport::fail(
                                nm, {{"component_a", comps[0]}, {"component_b", comps[1]}},
                                stats));
    }
    for (int k = 2; k <= sys.depth; ++k) {
        std::string nm = "connected_induction[k=" + std::to_string(k) + "]";
        CheckReport ind = check_preimage_connected(sys.map_at(k), sys.sphere(k - 1),
                                                   "S_" + std::to_string(k - 1));
        bool agrees = ind.ok() == direct[size_t(k)];
        nlohmann::json stats = {{"induction", ind.ok()}, {"direct", direct[size_t(k)]}};
        out.push_back(agrees ? CheckReport::pass(nm, stats)
                             : CheckReport::fail(nm, ind.to_json(), stats,
                                                 "induction disagrees with direct BFS"));
    }
    return out;
}

std::vector<CheckReport> local_cut_analysis(const InverseSystem& sys, int k) {
    if (k < 1 || k > sys.depth) throw InvalidInput("level outside the system depth");
    std::vector<CheckReport> out;
    Subcomplex sk = sys.sphere(k);
    ExtractedComplex sk_ex = extract(sk);

    // (a) the link identity (S_k)_w = S_1(rho, X_w)
    {
        std::string nm = "sphere_link_identity[k=" + std::to_string(k) + "]";
        long long checked = 0;
        bool failed = false;
        nlohmann::json witness;
        for (Vertex w : sk.vertices) {
            ++checked;
            // left side: link of w inside the sphere, in parent labels
            Subcomplex local = link_of(sk_ex.cx, {sk_ex.from_parent.at(w)});
            std::set<Simplex> lhs;
            for (const Simplex& f : local.all_faces()) lhs.insert(sk_ex.lower(f));
            // right side: S_1 of the projection simplex inside the link X_w
            Subcomplex link = link_of(*sys.X, {w});
            ExtractedComplex link_ex = extract(link);
            Simplex rho = sys.balls.projection_simplex(k, {w});
            BallSystem link_balls(link_ex.cx, link_ex.lift(rho));
            std::set<Simplex> rhs;
            for (const Simplex& f : link_balls.sphere(1).all_faces())
                rhs.insert(link_ex.lower(f));
            if (lhs != rhs) {
                failed = true;
                witness = {{"vertex", w},
                           {"sphere_link", std::vector<Simplex>(lhs.begin(), lhs.end())},
                           {"level_one_sphere", std::vector<Simplex>(rhs.begin(), rhs.end())}};
                break;
            }
        }
        nlohmann::json stats = {{"level", k}, {"vertices_checked", checked}};
        out.push_back(failed ? CheckReport::fail(nm, witness, stats)
                             : CheckReport::pass(nm, stats));
    }

    // (b) local-cut scan: disconnected links inside S_k
    {
        std::string nm = "local_cut_scan[k=" + std::to_string(k) + "]";
        std::vector<Vertex> cut_vertices;
        for (Vertex w : sk.vertices) {
            Subcomplex local = link_of(sk_ex.cx, {sk_ex.from_parent.at(w)});
            if (connected_components(local).size() > 1) cut_vertices.push_back(w);
        }
        nlohmann::json stats = {{"level", k},
                                {"vertices", sk.vertices.size()},
                                {"disconnected_links", cut_vertices.size()}};
        if (sys.X->dim() < 3) {
            out.push_back(CheckReport::pass(
                nm, stats,
                "dimension 2: spheres are cycles, disconnected vertex-pair links are the "
                "expected shape; the no-local-cut statement needs dimension >= 3"));
        } else if (cut_vertices.empty()) {
            out.push_back(CheckReport::pass(nm, stats));
        } else {
            out.push_back(CheckReport::fail(nm, {{"cut_vertices", cut_vertices}}, stats));
        }
    }
    return out;
}

}  // namespace systo
