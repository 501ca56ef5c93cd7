// Acceptance gate: one line per criterion, pass/fail, nonzero exit on
// any failure.  Each criterion is self-contained and uses brute-force
// oracles wherever the correctness of a library check is in question.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "oracles.hpp"
#include "systo/boundary.hpp"
#include "systo/builder.hpp"
#include "systo/manifest.hpp"
#include "systo/pontryagin.hpp"

using namespace systo;

namespace {

int failures = 0;

void criterion(int num, const std::string& desc, const std::function<bool()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << num << " [" << (ok ? "PASS" : "FAIL") << "] " << desc << " ("
              << secs << "s)";
    if (!err.empty()) std::cout << " error: " << err;
    std::cout << std::endl;
    if (!ok) ++failures;
}

Disc make_disc(int degree, int radius, std::optional<uint64_t> seed = std::nullopt) {
    DiscSpec spec;
    spec.min_degree = degree;
    spec.radius = radius;
    spec.seed = seed;
    return build_disc(spec);
}

/// The two radius-6 reference discs: plain degree 7 and jittered {7,8}.
std::vector<Disc> reference_discs() {
    std::vector<Disc> out;
    out.push_back(make_disc(7, 6));
    out.push_back(make_disc(7, 6, 2024));
    return out;
}

}  // namespace

int main() {
    criterion(1, "largeness agrees with the all-cycles oracle on 500 random complexes", [] {
        auto t0 = std::chrono::steady_clock::now();
        for (uint64_t s = 0; s < 500; ++s) {
            int nv = 6 + int(s % 7);  // 6..12 vertices
            double density = 0.35 + 0.05 * double(s % 8);
            auto cx = random_small_complex(nv, density, s);
            if (cx.maximal_simplices().empty()) continue;
            for (int k = 4; k <= 8; ++k)
                if (is_k_large(cx, k).ok() != oracles::k_large_oracle(cx, k)) return false;
        }
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 60;
    });

    criterion(2, "radius-6 discs: flag, locally 7-large, interior condition R", [] {
        for (const Disc& d : reference_discs()) {
            if (!is_flag(d.cx).ok()) return false;
            if (!is_locally_k_large(d.cx, 7).ok()) return false;
            for (int layer = 0; layer <= d.radius - 3; ++layer)
                for (Vertex v : d.layers[size_t(layer)])
                    if (!condition_R(d.cx, v).ok()) return false;
        }
        return true;
    });

    criterion(3, "safe spheres full and 6-large; projection identity at every simplex", [] {
        for (const Disc& d : reference_discs()) {
            BallSystem bs(d.cx, {d.base});
            for (int i = 1; i <= d.radius - 1; ++i) {
                if (!check_ball_recurrence(bs, i).ok()) return false;
                for (const auto& r : check_sphere_facts(bs, i, d.radius))
                    if (r.status != Status::passed) return false;
                for (const auto& tau : bs.sphere(i).all_faces())
                    if (!check_projection_identities(bs, i, tau).ok()) return false;
            }
        }
        return true;
    });

    criterion(4, "chain condition at every level; octahedron control fails reproducibly", [] {
        for (const Disc& d : reference_discs()) {
            BallSystem bs(d.cx, {d.base});
            for (int k = 2; k <= d.radius - 1; ++k) {
                auto r = chain_condition(pi_map(bs, k));
                if (!r.ok()) return false;
                auto faces = bs.sphere(k).all_faces();
                if (r.stats["simplices_checked"].get<size_t>() != faces.size()) return false;
            }
        }
        std::vector<Simplex> faces;
        for (int a : {0, 1})
            for (int b : {2, 3})
                for (int c : {4, 5}) faces.push_back(make_simplex({a, b, c}));
        auto oct = SimplicialComplex::from_maximal(6, std::move(faces));
        Simplex witness1, witness2;
        for (Simplex* w : {&witness1, &witness2}) {
            try {
                BallSystem bs(oct, {0});
                pi_map(bs, 2);
                return false;  // must not construct
            } catch (const SystolicityViolation& e) {
                *w = e.witness;
            }
        }
        return witness1 == Simplex{2, 3, 4, 5} && witness1 == witness2;
    });

    criterion(5, "preimages of all simplices and 100 random subcomplexes full and 6-large", [] {
        std::mt19937_64 rng(99);
        for (const Disc& d : reference_discs()) {
            BallSystem bs(d.cx, {d.base});
            for (int k = 2; k <= d.radius - 1; ++k) {
                SphereMap pi = pi_map(bs, k);
                Subcomplex target = bs.sphere(k - 1);
                for (const auto& s : target.all_faces())
                    for (const auto& r :
                         check_preimage(pi, Subcomplex::from_simplices(d.cx, {s}), "s"))
                        if (!r.ok()) return false;
                for (int t = 0; t < 100; ++t) {
                    std::vector<Vertex> picks;
                    for (Vertex v : target.vertices)
                        if (rng() % 2) picks.push_back(v);
                    Subcomplex L;
                    L.parent = &d.cx;
                    for (const auto& m : target.maximal) {
                        Simplex cut = simplex_intersection(m, picks);
                        if (!cut.empty()) L.maximal.push_back(std::move(cut));
                    }
                    L.maximal = prune_nested(std::move(L.maximal));
                    L.vertices = picks;
                    for (const auto& r : check_preimage(pi, L, "r"))
                        if (!r.ok()) return false;
                }
            }
        }
        return true;
    });

    criterion(6, "projections surjective; preimages of connected subcomplexes connected", [] {
        std::mt19937_64 rng(7);
        for (const Disc& d : reference_discs()) {
            BallSystem bs(d.cx, {d.base});
            for (int k = 2; k <= d.radius - 1; ++k) {
                SphereMap pi = pi_map(bs, k);
                if (!check_surjective(pi).ok()) return false;
                Subcomplex target = bs.sphere(k - 1);
                if (!check_preimage_connected(pi, target, "whole").ok()) return false;
                for (const auto& s : target.all_faces())
                    if (!check_preimage_connected(pi, Subcomplex::from_simplices(d.cx, {s}), "s")
                             .ok())
                        return false;
                // random connected spans, grown along the sphere's edges
                for (int t = 0; t < 20; ++t) {
                    std::vector<Vertex> grown{
                        target.vertices[rng() % target.vertices.size()]};
                    ExtractedComplex ex = extract(target);
                    for (int g = 0; g < 8; ++g) {
                        Vertex cur = grown[rng() % grown.size()];
                        const auto& nbrs = ex.cx.adjacency()[size_t(ex.from_parent.at(cur))];
                        if (nbrs.empty()) break;
                        Vertex next = ex.to_parent[size_t(nbrs[rng() % nbrs.size()])];
                        if (std::find(grown.begin(), grown.end(), next) == grown.end())
                            grown.push_back(next);
                    }
                    std::sort(grown.begin(), grown.end());
                    Subcomplex K;
                    K.parent = &d.cx;
                    for (const auto& m : target.maximal) {
                        Simplex cut = simplex_intersection(m, grown);
                        if (!cut.empty()) K.maximal.push_back(std::move(cut));
                    }
                    K.maximal = prune_nested(std::move(K.maximal));
                    K.vertices = grown;
                    if (!is_connected(K)) continue;  // growth can detach across gaps
                    if (!check_preimage_connected(pi, K, "grown").ok()) return false;
                }
            }
        }
        return true;
    });

    criterion(7, "contraction: C(2)=1/2 by the geometric oracle; 1000 exact pairs per depth", [] {
        auto cc = contraction_constant(2);
        if (cc.C != Rational(1, 2)) return false;
        if (cc.D2 != oracles::vertex_to_face_distance2(1)) return false;
        if (cc.E2 != oracles::subdivision_diameter2(1)) return false;
        Disc d = make_disc(7, 6);
        BallSystem bs(d.cx, {d.base});
        for (int l : {1, 2, 3}) {
            auto r = measure_contraction(bs, 4, l, 1000, 13);
            if (!r.ok()) return false;
            if (r.stats["pairs_measured"].get<int>() < 1000) return false;
        }
        return true;
    });

    criterion(8, "four-point defect: 7-large disc within 2.5, flat disc beyond it", [] {
        auto t0 = std::chrono::steady_clock::now();
        Disc d7 = make_disc(7, 6);
        auto r7 = hyperbolicity_check(d7.cx, d7.base, 6, 2);
        if (!r7.ok() || r7.stats["mode"] != "exhaustive") return false;
        Disc d6 = make_disc(6, 18);
        auto r6 = hyperbolicity_check(d6.cx, d6.base, 18, 6, 2.5, 11000000, 0);
        if (r6.ok()) return false;
        if (r6.stats["max_defect"].get<double>() <= 2.5) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 300;
    });

    criterion(9, "inverse-limit hypotheses pass on the depth-4 system", [] {
        Disc d = make_disc(7, 6);
        InverseSystem sys = build_system(d.cx, d.base, 4, d.radius);
        for (const auto& r : daverman_report(sys, 20, 3))
            if (!r.ok()) return false;
        return true;
    });

    criterion(10, "spheres connected at every depth; induction matches direct BFS", [] {
        for (const Disc& d : reference_discs()) {
            InverseSystem sys = build_system(d.cx, d.base, 4, d.radius);
            for (const auto& r : connectedness_report(sys))
                if (!r.ok()) return false;
        }
        return true;
    });

    criterion(11, "surface tower: three stages, exact genus and Euler bookkeeping", [] {
        auto t0 = std::chrono::steady_clock::now();
        SurfaceStage stage = initial_sphere("tetrahedron");
        TorusTemplate tpl = minimal_torus();
        for (int s = 2; s <= 3; ++s) {
            long long F = (long long)stage.cx.maximal_simplices().size();
            long long chi = stage.cx.euler_characteristic();
            SurfaceStage next = step(stage, tpl, 100000);
            if (next.cx.euler_characteristic() != chi - 2 * F) return false;
            if (!check_stage_map(stage, next, tpl).ok()) return false;
            for (const auto& r : check_stage(next))
                if (!r.ok()) return false;
            stage = std::move(next);
            if (s == 2 && (stage.cx.euler_characteristic() != -6 || stage.genus != 4))
                return false;
        }
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 60;
    });

    criterion(12, "verify runs are byte-identical modulo timings", [] {
        Disc d = make_disc(7, 5, 42);
        auto a = verify_all(d.cx, d.base, d.radius, 3, "hash");
        auto b = verify_all(d.cx, d.base, d.radius, 3, "hash");
        return a.stable_dump() == b.stable_dump() && a.all_passed();
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
