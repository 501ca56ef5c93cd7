#include "systo/projection.hpp"

#include <random>
#include <set>

namespace systo {

void SpherePoint::validate() const {
    if (support.empty()) throw InvalidInput("sphere point has empty support");
    if (support.size() != coeffs.size())
        throw InvalidInput("sphere point coefficient count does not match support");
    Rational total = 0;
    for (const Rational& c : coeffs) {
        if (c <= 0) throw InvalidInput("sphere point has a non-positive coefficient");
        total += c;
    }
    if (total != 1) throw InvalidInput("sphere point coefficients do not sum to 1");
}

SpherePoint SpherePoint::vertex_point(int level, Vertex w) {
    SpherePoint p;
    p.level = level;
    p.support = {w};
    p.coeffs = {Rational(1)};
    return p;
}

nlohmann::json SpherePoint::to_json() const {
    nlohmann::json j;
    j["level"] = level;
    j["support"] = support;
    std::vector<std::string> cs;
    for (const Rational& c : coeffs) cs.push_back(rational_str(c));
    j["coeffs"] = cs;
    return j;
}

const Simplex& SphereMap::proj_of(Vertex w) const {
    auto it = proj.find(w);
    if (it == proj.end())
        throw InvalidInput("vertex " + std::to_string(w) + " is not on sphere level " +
                           std::to_string(level));
    return it->second;
}

int SphereMap::subdiv_vertex(const Simplex& rho_parent) const {
    return target_subdiv.vertex_of(target_ext.lift(rho_parent));
}

std::vector<Simplex> SphereMap::image_chain(const Simplex& sigma) const {
    std::vector<Simplex> chain;
    for (Vertex w : sigma) chain.push_back(proj_of(w));
    std::sort(chain.begin(), chain.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_face(chain[i], chain[i + 1]))
            throw SystolicityViolation("projection simplices " + simplex_str(chain[i]) + " and " +
                                           simplex_str(chain[i + 1]) + " of simplex " +
                                           simplex_str(sigma) + " are not nested",
                                       sigma, simplex_union(chain[i], chain[i + 1]));
    return chain;
}

Simplex SphereMap::image_simplex(const Simplex& sigma) const {
    Simplex out;
    for (const Simplex& rho : image_chain(sigma)) out.push_back(subdiv_vertex(rho));
    return make_simplex(std::move(out));
}

SphereMap pi_map(const BallSystem& bs, int k, bool verify_chains) {
    if (k < 1) throw InvalidInput("projection maps exist for sphere levels k >= 1");
    SphereMap pi;
    pi.level = k;
    pi.source = bs.sphere(k);
    pi.target = bs.sphere(k - 1);
    pi.target_ext = extract(pi.target);
    pi.target_subdiv = barycentric_subdivision(pi.target_ext.cx);
    for (Vertex w : bs.layer(k)) {
        Simplex rho = bs.projection_simplex(k, {w});
        if (!pi.target.has_simplex(rho))
            throw SystolicityViolation("projection simplex of vertex " + std::to_string(w) +
                                           " is not a simplex of the previous sphere",
                                       {w}, rho);
        pi.proj.emplace(w, std::move(rho));
    }
    if (verify_chains)
        for (const Simplex& m : pi.source.maximal) pi.image_chain(m);
    return pi;
}

CheckReport chain_condition(const SphereMap& pi) {
    long long checked = 0;
    for (const Simplex& sigma : pi.source.all_faces()) {
        ++checked;
        try {
            pi.image_chain(sigma);
        } catch (const SystolicityViolation& e) {
            nlohmann::json projections = nlohmann::json::array();
            for (Vertex w : sigma) projections.push_back(pi.proj_of(w));
            return CheckReport::fail("chain_condition",
                                     {{"simplex", sigma}, {"projections", projections}},
                                     {{"level", pi.level}, {"simplices_checked", checked}},
                                     e.what());
        }
    }
    return CheckReport::pass("chain_condition",
                             {{"level", pi.level}, {"simplices_checked", checked}});
}

namespace {

/// Span of a vertex set inside a subcomplex (rather than its parent).
Subcomplex span_within(const Subcomplex& A, const std::vector<Vertex>& verts) {
    std::vector<Simplex> gen;
    for (const Simplex& m : A.maximal) {
        Simplex cut = simplex_intersection(m, verts);
        if (!cut.empty()) gen.push_back(std::move(cut));
    }
    Subcomplex out;
    out.parent = A.parent;
    out.maximal = prune_nested(std::move(gen));
    for (const Simplex& m : out.maximal)
        out.vertices.insert(out.vertices.end(), m.begin(), m.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    return out;
}

}  // namespace

Subcomplex preimage(const SphereMap& pi, const Subcomplex& L) {
    std::vector<Vertex> verts;
    for (const auto& [w, rho] : pi.proj)
        if (L.has_simplex(rho)) verts.push_back(w);
    return span_within(pi.source, verts);
}

std::vector<CheckReport> check_preimage(const SphereMap& pi, const Subcomplex& L,
                                        const std::string& label) {
    Subcomplex pre = preimage(pi, L);
    std::vector<CheckReport> out;
    nlohmann::json stats = {{"level", pi.level},
                            {"preimage_vertices", pre.vertices.size()},
                            {"preimage_simplices", pre.maximal.size()}};
    if (pre.empty()) {
        out.push_back(CheckReport::pass("preimage_full[" + label + "]", stats, "empty preimage"));
        out.push_back(
            CheckReport::pass("preimage_6_large[" + label + "]", stats, "empty preimage"));
        return out;
    }

    // fullness inside S_k, evaluated on the sphere extracted as a
    // standalone complex
    ExtractedComplex sphere_ex = extract(pi.source);
    Subcomplex pre_in_sphere;
    pre_in_sphere.parent = &sphere_ex.cx;
    for (const Simplex& m : pre.maximal) pre_in_sphere.maximal.push_back(sphere_ex.lift(m));
    std::sort(pre_in_sphere.maximal.begin(), pre_in_sphere.maximal.end());
    for (Vertex v : pre.vertices) pre_in_sphere.vertices.push_back(sphere_ex.from_parent.at(v));
    std::sort(pre_in_sphere.vertices.begin(), pre_in_sphere.vertices.end());
    CheckReport full = is_full_subcomplex(sphere_ex.cx, pre_in_sphere);
    if (full.ok()) {
        out.push_back(CheckReport::pass("preimage_full[" + label + "]", stats));
    } else {
        nlohmann::json w = full.witness;
        out.push_back(CheckReport::fail("preimage_full[" + label + "]", w, stats, full.note));
    }

    ExtractedComplex pre_ex = extract(pre);
    CheckReport large = is_k_large(pre_ex.cx, 6);
    if (large.ok()) {
        out.push_back(CheckReport::pass("preimage_6_large[" + label + "]", stats));
    } else {
        nlohmann::json w = large.witness;
        if (w.contains("cycle")) {
            Simplex cyc;
            for (Vertex v : w["cycle"].get<std::vector<Vertex>>())
                cyc.push_back(pre_ex.to_parent[v]);
            w["cycle_parent"] = cyc;
        }
        out.push_back(CheckReport::fail("preimage_6_large[" + label + "]", w, stats, large.note));
    }
    return out;
}

CheckReport check_surjective(const SphereMap& pi) {
    std::vector<Simplex> images;
    for (const Simplex& m : pi.source.maximal) images.push_back(pi.image_simplex(m));
    long long chains = 0;
    for (const Simplex& M : pi.target_subdiv.cx.maximal_simplices()) {
        ++chains;
        bool covered = false;
        for (const Simplex& I : images)
            if (is_face(M, I)) {
                covered = true;
                break;
            }
        if (!covered) {
            nlohmann::json chain = nlohmann::json::array();
            for (Vertex sv : M)
                chain.push_back(pi.target_ext.lower(pi.target_subdiv.vertex_simplex[sv]));
            return CheckReport::fail(
                "projection_surjective", {{"uncovered_chain", chain}},
                {{"level", pi.level}, {"target_chains", chains}, {"images", images.size()}});
        }
    }
    return CheckReport::pass("projection_surjective",
                             {{"level", pi.level},
                              {"target_chains", chains},
                              {"images", images.size()}});
}

CheckReport check_preimage_connected(const SphereMap& pi, const Subcomplex& K,
                                     const std::string& label) {
    std::string name = "preimage_connected[" + label + "]";
    Subcomplex pre = preimage(pi, K);
    nlohmann::json stats = {{"level", pi.level}, {"preimage_vertices", pre.vertices.size()}};
    if (pre.empty()) return CheckReport::pass(name, stats, "empty preimage");
    auto comps = connected_components(pre);
    if (comps.size() <= 1) {
        stats["components"] = 1;
        return CheckReport::pass(name, stats);
    }
    stats["components"] = comps.size();
    return CheckReport::fail(name, {{"component_a", comps[0]}, {"component_b", comps[1]}}, stats);
}

ContractionConstant contraction_constant(int n) {
    if (n < 2) throw InvalidInput("contraction constant requires complex dimension >= 2");
    ContractionConstant cc;
    cc.n = n;
    long long m = n - 1;  // sphere simplices live in dimension <= n-1
    // unit regular m-simplex: the closest point of the facet opposite a
    // vertex is that facet's barycenter, by symmetry
    cc.D2 = Rational(m + 1, 2 * m);
    // d^2 between barycenters of nested faces I within J is
    // (1/|I| - 1/|J|)/2; scan all size pairs for the maximum
    cc.E2 = 0;
    for (long long i = 1; i <= m + 1; ++i)
        for (long long j = i + 1; j <= m + 1; ++j)
            cc.E2 = std::max(cc.E2, Rational(j - i, 2 * i * j));
    if (m == 0) cc.E2 = 0;
    cc.C2 = cc.E2 / cc.D2;
    using boost::multiprecision::cpp_int;
    cpp_int num = sqrt(numerator(cc.C2));
    cpp_int den = sqrt(denominator(cc.C2));
    cc.C = Rational(num, den);
    if (cc.C * cc.C != cc.C2)
        throw std::logic_error("contraction ratio squared is not a rational square");
    return cc;
}

SpherePoint project_point(const SphereMap& pi, const SpherePoint& p) {
    p.validate();
    if (p.level != pi.level)
        throw InvalidInput("point level does not match projection level");
    if (!pi.source.has_simplex(p.support))
        throw InvalidInput("point support " + simplex_str(p.support) +
                           " is not a simplex of the sphere");
    pi.image_chain(p.support);  // throws on chain violation
    std::map<Vertex, Rational> acc;
    for (size_t i = 0; i < p.support.size(); ++i) {
        const Simplex& rho = pi.proj_of(p.support[i]);
        Rational share = p.coeffs[i] / Rational(long(rho.size()));
        for (Vertex u : rho) acc[u] += share;
    }
    SpherePoint out;
    out.level = pi.level - 1;
    for (const auto& [u, c] : acc)
        if (c > 0) {
            out.support.push_back(u);
            out.coeffs.push_back(c);
        }
    out.validate();
    return out;
}

Rational squared_distance(const SpherePoint& a, const SpherePoint& b) {
    std::map<Vertex, Rational> diff;
    for (size_t i = 0; i < a.support.size(); ++i) diff[a.support[i]] += a.coeffs[i];
    for (size_t i = 0; i < b.support.size(); ++i) diff[b.support[i]] -= b.coeffs[i];
    Rational s = 0;
    for (const auto& [u, d] : diff) s += d * d;
    return s / 2;
}

CheckReport measure_contraction(const BallSystem& bs, int k, int l, int num_pairs,
                                uint64_t seed) {
    const SimplicialComplex& X = bs.complex();
    std::string name = "contraction_decay";
    if (l < 1 || k < l) throw InvalidInput("need 1 <= l <= k for contraction measurement");
    ContractionConstant cc = contraction_constant(X.dim());
    Rational bound = rational_pow(cc.C2, l);

    std::vector<SphereMap> maps;
    for (int j = 0; j < l; ++j) maps.push_back(pi_map(bs, k - j));

    std::vector<Simplex> candidates;
    for (const Simplex& m : maps[0].source.maximal)
        if (m.size() >= 2) candidates.push_back(m);
    if (candidates.empty())
        return CheckReport::skip(name, "no sphere simplex with two vertices at level " +
                                           std::to_string(k));

    std::mt19937_64 rng(seed);
    auto random_point = [&](const Simplex& sigma) {
        // random nonempty sub-support, then small random positive weights
        Simplex sup;
        while (sup.empty())
            for (Vertex v : sigma)
                if (rng() % 3 != 0) sup.push_back(v);
        std::vector<Rational> w;
        long long total = 0;
        std::vector<long long> raw;
        for (size_t i = 0; i < sup.size(); ++i) {
            raw.push_back(1 + (long long)(rng() % 9));
            total += raw.back();
        }
        SpherePoint p;
        p.level = k;
        p.support = std::move(sup);
        for (long long r : raw) p.coeffs.push_back(Rational(r, total));
        return p;
    };

    Rational max_ratio2 = 0;
    long long measured = 0;
    for (int t = 0; t < num_pairs; ++t) {
        const Simplex& sigma = candidates[rng() % candidates.size()];
        SpherePoint x = random_point(sigma);
        SpherePoint y = random_point(sigma);
        Rational d0 = squared_distance(x, y);
        if (d0 == 0) {
            --t;  // coincident sample; redraw
            continue;
        }
        SpherePoint xi = x, yi = y;
        for (int j = 0; j < l; ++j) {
            xi = project_point(maps[j], xi);
            yi = project_point(maps[j], yi);
        }
        Rational dl = squared_distance(xi, yi);
        Rational ratio2 = dl / d0;
        max_ratio2 = std::max(max_ratio2, ratio2);
        ++measured;
        if (ratio2 > bound)
            return CheckReport::fail(
                name,
                {{"simplex", sigma},
                 {"x", x.to_json()},
                 {"y", y.to_json()},
                 {"d2_before", rational_str(d0)},
                 {"d2_after", rational_str(dl)},
                 {"ratio2", rational_str(ratio2)},
                 {"bound2", rational_str(bound)}},
                {{"level", k}, {"steps", l}, {"pairs_measured", measured}});
    }
    return CheckReport::pass(name, {{"level", k},
                                    {"steps", l},
                                    {"pairs_measured", measured},
                                    {"max_ratio2", rational_str(max_ratio2)},
                                    {"bound2", rational_str(bound)}});
}

}  // namespace systo
