#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "systo/boundary.hpp"
#include "systo/builder.hpp"

using namespace systo;

namespace {

Disc disc(int degree, int radius) {
    DiscSpec spec;
    spec.min_degree = degree;
    spec.radius = radius;
    return build_disc(spec);
}

std::vector<Vertex> radial_ray(const InverseSystem& sys, int m) {
    std::vector<Vertex> ray{sys.base};
    for (int k = 1; k <= m; ++k) {
        Vertex next = -1;
        for (Vertex v : sys.balls.layer(k))
            if (sys.X->adjacent(ray.back(), v)) {
                next = v;
                break;
            }
        REQUIRE(next >= 0);
        ray.push_back(next);
    }
    return ray;
}

}  // namespace

TEST_CASE("system construction and its guards") {
    Disc d = disc(7, 5);
    InverseSystem sys = build_system(d.cx, d.base, 4, d.radius);
    CHECK(sys.depth == 4);
    CHECK(sys.maps.size() == 3);
    for (const auto& r : sys.construction_reports) CHECK(r.ok());
    CHECK(sys.map_at(2).level == 2);
    CHECK_THROWS_AS(sys.map_at(5), InvalidInput);
    CHECK_THROWS_AS(build_system(d.cx, d.base, 5, d.radius), InvalidInput);  // truncation
    InverseSystem one = build_system(d.cx, d.base, 1, d.radius);
    CHECK(one.maps.empty());
}

TEST_CASE("threads from rays are compatible and within the series bound") {
    Disc d = disc(7, 5);
    InverseSystem sys = build_system(d.cx, d.base, 4, d.radius);
    auto ray = radial_ray(sys, 4);
    ThreadResult tr = thread_from_ray(sys, ray);
    CHECK(tr.report.ok());
    CHECK(tr.thread.points.size() == 4);
    CHECK(validate_thread(sys, tr.thread).ok());
    // serialization round trip preserves exactness
    Thread back = thread_from_json(thread_to_json(tr.thread));
    CHECK(validate_thread(sys, back).ok());

    // m=1 ray gives the single vertex point
    ThreadResult short_tr = thread_from_ray(sys, {ray[0], ray[1]});
    CHECK(short_tr.thread.points.size() == 1);
    CHECK(short_tr.thread.points[0].support == Simplex{ray[1]});

    // non-geodesic rays are rejected
    auto bad = ray;
    std::swap(bad[1], bad[2]);
    CHECK_THROWS_AS(thread_from_ray(sys, bad), InvalidInput);
}

TEST_CASE("perturbed threads fail validation at the right level") {
    Disc d = disc(7, 5);
    InverseSystem sys = build_system(d.cx, d.base, 3, d.radius);
    ThreadResult tr = thread_from_ray(sys, radial_ray(sys, 3));
    Thread tampered = tr.thread;
    REQUIRE(tampered.points[1].coeffs.size() >= 2);
    std::swap(tampered.points[1].coeffs[0], tampered.points[1].coeffs[1]);
    if (tampered.points[1].coeffs[0] != tampered.points[1].coeffs[1]) {
        auto r = validate_thread(sys, tampered);
        CHECK(!r.ok());
        CHECK(r.witness["level"].get<int>() >= 2);
    }
    CHECK(validate_thread(sys, Thread{}).ok());  // vacuous
}

TEST_CASE("four-point defect: degenerate, hyperbolic and flat cases") {
    Disc d7 = disc(7, 6);
    auto r = hyperbolicity_check(d7.cx, d7.base, 6, 2);
    CHECK(r.ok());
    CHECK(r.stats["mode"] == "exhaustive");
    CHECK(r.stats["max_defect"].get<double>() <= 2.5);

    // a single simplex: all distances 0 or 1, defect stays trivial
    auto tetra = SimplicialComplex::from_maximal(4, {{0, 1, 2, 3}});
    auto rt = hyperbolicity_check(tetra, 0, 3, 1);
    CHECK(rt.ok());
    CHECK(rt.stats["max_defect"].get<double>() == 0.0);

    // the flat disc blows past the bound once the inner radius is large
    Disc d6 = disc(6, 18);
    auto rf = hyperbolicity_check(d6.cx, d6.base, 18, 6, 2.5, 500000, 3);
    CHECK(!rf.ok());
    CHECK(rf.stats["max_defect"].get<double>() > 2.5);

    CHECK_THROWS_AS(hyperbolicity_check(d7.cx, d7.base, 5, 2), InvalidInput);  // r < 3*r0
}

TEST_CASE("inverse-limit hypothesis reports pass on the disc") {
    Disc d = disc(7, 5);
    InverseSystem sys = build_system(d.cx, d.base, 3, d.radius);
    for (const auto& r : daverman_report(sys, 10, 1)) {
        CHECK(r.ok());
        if (r.name == "daverman_decay_sequence") {
            auto seq = r.stats["sequence"];
            REQUIRE(seq.size() == 3);
            CHECK(seq[0].get<double>() > seq[1].get<double>());
        }
    }
}

TEST_CASE("connectedness: direct, inductive, and the disconnected control") {
    Disc d = disc(7, 5);
    InverseSystem sys = build_system(d.cx, d.base, 4, d.radius);
    for (const auto& r : connectedness_report(sys)) CHECK(r.ok());

    // two disjoint discs: the far sphere never sees the second component,
    // but gluing them along the base vertex disconnects S_1
    Disc a = disc(7, 2);
    std::vector<Simplex> faces = a.cx.maximal_simplices();
    int off = a.cx.num_vertices();
    // a second 7-wheel sharing only the base vertex
    for (int i = 0; i < 7; ++i)
        faces.push_back(make_simplex({a.base, off + i, off + (i + 1) % 7}));
    auto glued = SimplicialComplex::from_maximal(off + 7, std::move(faces));
    InverseSystem gsys = build_system(glued, a.base, 1);
    bool failed = false;
    for (const auto& r : connectedness_report(gsys))
        if (!r.ok()) failed = true;
    CHECK(failed);
}

TEST_CASE("local link identity and the dimension-2 cut labeling") {
    Disc d = disc(7, 5);
    InverseSystem sys = build_system(d.cx, d.base, 3, d.radius);
    auto reports = local_cut_analysis(sys, 3);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].name == "sphere_link_identity[k=3]");
    CHECK(reports[0].ok());
    CHECK(reports[1].name == "local_cut_scan[k=3]");
    CHECK(reports[1].status == Status::passed);
    // every sphere vertex of a 2-dim disc has the two-point disconnected link
    CHECK(reports[1].stats["disconnected_links"] == reports[1].stats["vertices"]);
    CHECK_THROWS_AS(local_cut_analysis(sys, 9), InvalidInput);
}
