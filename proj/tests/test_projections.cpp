#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "systo/builder.hpp"
#include "systo/projection.hpp"

using namespace systo;

namespace {

Disc disc7(int radius) {
    DiscSpec spec;
    spec.min_degree = 7;
    spec.radius = radius;
    return build_disc(spec);
}

/// Two sphere-2 vertices joined by an edge whose projections are the
/// incomparable singletons {a} and {b}: a 5-large complex (one induced
/// 5-cycle, no 4-cycles) violating the chain condition.
SimplicialComplex chain_breaker() {
    return SimplicialComplex::from_maximal(
        5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});  // q=0, a=1, b=2, w1=3, w2=4
}

}  // namespace

TEST_CASE("vertex projections on the disc") {
    Disc d = disc7(4);
    BallSystem bs(d.cx, {d.base});
    SphereMap pi = pi_map(bs, 2);
    CHECK(pi.level == 2);
    for (const auto& [w, rho] : pi.proj) {
        CHECK(bs.distance(w) == 2);
        CHECK((rho.size() == 1 || rho.size() == 2));
        // the subdivision vertex corresponding to rho exists
        CHECK(pi.subdiv_vertex(rho) >= 0);
    }
    // level 1 projects everything onto the base
    SphereMap pi1 = pi_map(bs, 1);
    for (const auto& [w, rho] : pi1.proj) CHECK(rho == Simplex{d.base});
}

TEST_CASE("chain condition passes on the disc at every level") {
    Disc d = disc7(5);
    BallSystem bs(d.cx, {d.base});
    for (int k = 1; k <= 4; ++k) {
        auto r = chain_condition(pi_map(bs, k));
        CHECK(r.ok());
        CHECK(r.stats["simplices_checked"].get<long long>() > 0);
    }
}

TEST_CASE("chain condition failure carries the offending simplex") {
    auto cx = chain_breaker();
    CHECK(is_flag(cx).ok());
    CHECK(is_k_large(cx, 5).ok());
    BallSystem bs(cx, {0});
    CHECK_THROWS_AS(pi_map(bs, 2), SystolicityViolation);
    SphereMap pi = pi_map(bs, 2, false);
    auto r = chain_condition(pi);
    REQUIRE(!r.ok());
    CHECK(r.witness["simplex"] == Simplex{3, 4});
    CHECK(r.witness["projections"].size() == 2);
}

TEST_CASE("octahedron projection construction fails") {
    std::vector<Simplex> faces;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) faces.push_back(make_simplex({a, b, c}));
    auto oct = SimplicialComplex::from_maximal(6, std::move(faces));
    BallSystem bs(oct, {0});
    CHECK_THROWS_AS(pi_map(bs, 2), SystolicityViolation);
}

TEST_CASE("preimages: identity, single vertex, empty") {
    Disc d = disc7(4);
    BallSystem bs(d.cx, {d.base});
    SphereMap pi = pi_map(bs, 3);
    // L = the whole previous sphere pulls back to the whole sphere
    Subcomplex whole = bs.sphere(2);
    auto pre = preimage(pi, whole);
    CHECK(pre.maximal == pi.source.maximal);
    for (const auto& r : check_preimage(pi, whole, "whole")) CHECK(r.ok());
    // a single vertex pulls back to an arc
    for (Vertex u : bs.layer(2)) {
        auto single = Subcomplex::from_simplices(d.cx, {{u}});
        auto pre_u = preimage(pi, single);
        for (Vertex w : pre_u.vertices) CHECK(pi.proj_of(w) == Simplex{u});
        for (const auto& r : check_preimage(pi, single, "vertex")) CHECK(r.ok());
    }
    // the empty subcomplex pulls back to nothing
    Subcomplex empty;
    empty.parent = &d.cx;
    CHECK(preimage(pi, empty).empty());
    for (const auto& r : check_preimage(pi, empty, "empty")) CHECK(r.status == Status::passed);
}

TEST_CASE("surjectivity and connected preimages on the disc") {
    Disc d = disc7(5);
    BallSystem bs(d.cx, {d.base});
    for (int k = 1; k <= 4; ++k) {
        SphereMap pi = pi_map(bs, k);
        CHECK(check_surjective(pi).ok());
        if (k >= 2) {
            CHECK(check_preimage_connected(pi, bs.sphere(k - 1), "whole").ok());
            for (const auto& e : bs.sphere(k - 1).faces(1))
                CHECK(check_preimage_connected(pi, Subcomplex::from_simplices(d.cx, {e}), "edge")
                          .ok());
        }
    }
}

TEST_CASE("contraction constants match the geometric oracle") {
    for (int n : {2, 3, 4, 5}) {
        auto cc = contraction_constant(n);
        CHECK(cc.D2 == oracles::vertex_to_face_distance2(n - 1));
        CHECK(cc.E2 == oracles::subdivision_diameter2(n - 1));
        CHECK(cc.C2 == cc.E2 / cc.D2);
        CHECK(cc.C == Rational(n - 1, n));
        CHECK(cc.C2 < 1);
        CHECK(cc.C2 > 0);
    }
    auto c2 = contraction_constant(2);
    CHECK(c2.D2 == 1);
    CHECK(c2.E2 == Rational(1, 4));
    CHECK(c2.C == Rational(1, 2));
    CHECK_THROWS_AS(contraction_constant(1), InvalidInput);
}

TEST_CASE("within-simplex distances match the Gram-matrix oracle") {
    SpherePoint a{2, {5, 9, 11}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)}};
    SpherePoint b{2, {5, 11}, {Rational(1, 4), Rational(3, 4)}};
    std::vector<Rational> av{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    std::vector<Rational> bv{Rational(1, 4), Rational(0), Rational(3, 4)};
    CHECK(squared_distance(a, b) == oracles::gram_distance2(av, bv));
    CHECK(squared_distance(a, a) == 0);
    // unit edge between two vertex points
    SpherePoint u = SpherePoint::vertex_point(1, 0), v = SpherePoint::vertex_point(1, 1);
    CHECK(squared_distance(u, v) == 1);
}

TEST_CASE("point projection: vertex, constant edge, and the mixed edge") {
    Disc d = disc7(4);
    BallSystem bs(d.cx, {d.base});
    SphereMap pi = pi_map(bs, 2);
    // a vertex point goes to the barycenter of its projection simplex
    Vertex w = bs.layer(2).front();
    SpherePoint img = project_point(pi, SpherePoint::vertex_point(2, w));
    const Simplex& rho = pi.proj_of(w);
    CHECK(img.support == rho);
    for (const Rational& c : img.coeffs) CHECK(c == Rational(1, long(rho.size())));

    bool saw_constant = false, saw_mixed = false;
    for (const auto& e : pi.source.faces(1)) {
        SpherePoint mid{2, e, {Rational(1, 2), Rational(1, 2)}};
        SpherePoint out = project_point(pi, mid);
        const Simplex& r0 = pi.proj_of(e[0]);
        const Simplex& r1 = pi.proj_of(e[1]);
        if (r0 == r1 && r0.size() == 1) {
            // both endpoints project to the same vertex: image is that vertex
            CHECK(out.support == r0);
            CHECK(out.coeffs == std::vector<Rational>{Rational(1)});
            saw_constant = true;
        } else if (r0.size() + r1.size() == 3) {
            // {u} inside {u,u'}: coefficients 3/4 on u and 1/4 on u'
            CHECK(out.support.size() == 2);
            std::vector<Rational> sorted = out.coeffs;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
            saw_mixed = true;
        }
    }
    CHECK(saw_constant);
    CHECK(saw_mixed);
}

TEST_CASE("composed propagation is step-consistent") {
    Disc d = disc7(5);
    BallSystem bs(d.cx, {d.base});
    SphereMap pi4 = pi_map(bs, 4), pi3 = pi_map(bs, 3), pi2 = pi_map(bs, 2);
    for (const auto& sigma : pi4.source.maximal) {
        SpherePoint p{4, sigma, {}};
        p.coeffs.assign(sigma.size(), Rational(1, long(sigma.size())));
        SpherePoint q = project_point(pi2, project_point(pi3, project_point(pi4, p)));
        // one long chain or re-grouped, the exact result is identical
        SpherePoint mid = project_point(pi4, p);
        SpherePoint q2 = project_point(pi2, project_point(pi3, mid));
        CHECK(q.support == q2.support);
        CHECK(q.coeffs == q2.coeffs);
        CHECK(q.level == 1);
    }
}

TEST_CASE("measured contraction stays under the exact bound") {
    Disc d = disc7(5);
    BallSystem bs(d.cx, {d.base});
    for (int l : {1, 2, 3}) {
        auto r = measure_contraction(bs, 4, l, 300, 7);
        CHECK(r.ok());
        CHECK(r.stats["pairs_measured"] == 300);
    }
    CHECK_THROWS_AS(measure_contraction(bs, 2, 3, 10, 0), InvalidInput);
}
