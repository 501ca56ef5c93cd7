#include "systo/manifest.hpp"

#include <chrono>

namespace systo {

bool RunManifest::all_passed() const {
    for (const CheckReport& r : reports)
        if (!r.ok()) return false;
    return true;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["input_hash"] = input_hash;
    j["version"] = version;
    j["all_passed"] = all_passed();
    j["reports"] = nlohmann::json::array();
    for (const CheckReport& r : reports) j["reports"].push_back(r.to_json());
    j["timings_ms"] = timings_ms;
    return j;
}

std::string RunManifest::stable_dump() const {
    nlohmann::json j = to_json();
    j.erase("timings_ms");
    return j.dump(2);
}

namespace {

class Stopwatch {
public:
    Stopwatch(RunManifest& m, std::string key) : m_(m), key_(std::move(key)) {
        start_ = std::chrono::steady_clock::now();
    }
    ~Stopwatch() {
        auto end = std::chrono::steady_clock::now();
        m_.timings_ms[key_] =
            std::chrono::duration<double, std::milli>(end - start_).count();
    }

private:
    RunManifest& m_;
    std::string key_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

RunManifest verify_all(const SimplicialComplex& X, Vertex base, int max_radius, int depth,
                       const std::string& input_hash) {
    if (base < 0 || base >= X.num_vertices())
        throw InvalidInput("basepoint " + std::to_string(base) + " is out of range");
    if (max_radius < 1) throw InvalidInput("max radius must be >= 1");
    if (depth < 1) throw InvalidInput("depth must be >= 1");

    RunManifest m;
    m.command = "verify_all";
    m.parameters = {{"base", base}, {"max_radius", max_radius}, {"depth", depth}};
    m.input_hash = input_hash;

    {
        Stopwatch t(m, "complex_info");
        nlohmann::json stats = {{"vertices", X.num_vertices()},
                                {"dim", X.dim()},
                                {"f_vector", X.f_vector()},
                                {"euler", X.euler_characteristic()}};
        ChamberFlags flags;
        is_chamber_complex(X, &flags);
        stats["chamber"] = flags.chamber;
        stats["pseudomanifold"] = flags.pseudomanifold;
        stats["gallery_connected"] = flags.gallery_connected;
        stats["normal"] = flags.normal;
        m.reports.push_back(CheckReport::pass("complex_info", stats,
                                              "informational; discs legitimately have boundary"));
    }
    {
        Stopwatch t(m, "largeness");
        m.reports.push_back(is_flag(X));
        m.reports.push_back(is_k_large(X, 7));
        m.reports.push_back(is_locally_k_large(X, 7));
    }
    {
        Stopwatch t(m, "condition_R");
        CheckReport r = condition_R(X, base);
        r.name = "condition_R[base]";
        m.reports.push_back(r);
    }

    BallSystem bs(X, {base});
    int top = std::min({max_radius - 1, bs.radius()});
    {
        Stopwatch t(m, "spheres");
        for (int i = 1; i <= top; ++i) {
            m.reports.push_back(check_ball_recurrence(bs, i));
            for (CheckReport& r : check_sphere_facts(bs, i, max_radius)) m.reports.push_back(r);

            std::string nm = "projection_identities[i=" + std::to_string(i) + "]";
            long long checked = 0;
            bool failed = false;
            for (const Simplex& tau : bs.sphere(i).all_faces()) {
                ++checked;
                try {
                    CheckReport r = check_projection_identities(bs, i, tau);
                    if (!r.ok()) {
                        m.reports.push_back(CheckReport::fail(nm, r.to_json(),
                                                              {{"simplices_checked", checked}}));
                        failed = true;
                        break;
                    }
                } catch (const SystolicityViolation& e) {
                    m.reports.push_back(CheckReport::fail(
                        nm, {{"simplex", e.tau}, {"witness", e.witness}},
                        {{"simplices_checked", checked}}, e.what()));
                    failed = true;
                    break;
                }
            }
            if (!failed)
                m.reports.push_back(CheckReport::pass(nm, {{"simplices_checked", checked}}));
        }
    }

    int sys_depth = std::min(depth, top);
    {
        Stopwatch t(m, "projections");
        for (int k = 2; k <= sys_depth; ++k) {
            std::string nm = "level_" + std::to_string(k);
            try {
                SphereMap pi = pi_map(bs, k, false);
                m.reports.push_back(chain_condition(pi));
                m.reports.back().name = "chain_condition[k=" + std::to_string(k) + "]";

                // preimage fullness/6-largeness over every target simplex
                long long checked = 0;
                bool failed = false;
                for (const Simplex& s : bs.sphere(k - 1).all_faces()) {
                    for (CheckReport& r :
                         check_preimage(pi, Subcomplex::from_simplices(X, {s}), simplex_str(s))) {
                        ++checked;
                        if (!r.ok() && !failed) {
                            m.reports.push_back(CheckReport::fail(
                                "preimages[k=" + std::to_string(k) + "]", r.to_json(),
                                {{"checks", checked}}));
                            failed = true;
                        }
                    }
                    if (failed) break;
                }
                if (!failed)
                    m.reports.push_back(CheckReport::pass("preimages[k=" + std::to_string(k) + "]",
                                                          {{"checks", checked}}));

                m.reports.push_back(check_surjective(pi));
                m.reports.back().name = "projection_surjective[k=" + std::to_string(k) + "]";
                m.reports.push_back(check_preimage_connected(pi, bs.sphere(k - 1),
                                                             "S_" + std::to_string(k - 1)));
            } catch (const SystolicityViolation& e) {
                m.reports.push_back(CheckReport::fail("projection[" + nm + "]",
                                                      {{"simplex", e.tau}, {"witness", e.witness}},
                                                      {}, e.what()));
            }
        }
    }

    {
        Stopwatch t(m, "system");
        try {
            InverseSystem sys = build_system(X, base, sys_depth, max_radius);
            for (CheckReport& r : daverman_report(sys)) m.reports.push_back(r);
            for (CheckReport& r : connectedness_report(sys)) m.reports.push_back(r);
            for (CheckReport& r : local_cut_analysis(sys, sys_depth)) m.reports.push_back(r);
        } catch (const SystolicityViolation& e) {
            m.reports.push_back(CheckReport::fail(
                "system_construction", {{"simplex", e.tau}, {"witness", e.witness}}, {}, e.what()));
        } catch (const InvalidInput& e) {
            m.reports.push_back(CheckReport::skip("system_construction", e.what()));
        }
    }

    {
        Stopwatch t(m, "hyperbolicity");
        int r0 = std::min(2, top / 3);
        if (r0 >= 1 && bs.radius() >= 3 * r0) {
            m.reports.push_back(hyperbolicity_check(X, base, 3 * r0, r0));
        } else {
            m.reports.push_back(
                CheckReport::skip("four_point_delta", "radius too small for the r >= 3*r0 rule"));
        }
    }
    return m;
}

}  // namespace systo
