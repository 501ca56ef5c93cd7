// Command-line entry point wiring every module: building discs, running
// the check suite, projecting points, boundary-system reports, the
// surface tower and exports.  Exit codes: 0 = all checks passed,
// 1 = a check failed, 2 = invalid input or I/O error.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "systo/builder.hpp"
#include "systo/io.hpp"
#include "systo/manifest.hpp"
#include "systo/pontryagin.hpp"

namespace {

using namespace systo;

/// Resolves a report path against SYSTO_REPORT_DIR for bare file names.
std::string report_path(const std::string& name) {
    namespace fs = std::filesystem;
    const char* dir = std::getenv("SYSTO_REPORT_DIR");
    if (dir && *dir && fs::path(name).is_relative()) return (fs::path(dir) / name).string();
    return name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

int finish(const std::vector<CheckReport>& reports, const std::string& report_file,
           nlohmann::json header) {
    bool ok = true;
    for (const CheckReport& r : reports) {
        std::cout << r.name << ": " << status_name(r.status) << "\n";
        if (!r.ok()) ok = false;
    }
    if (!report_file.empty()) {
        header["reports"] = nlohmann::json::array();
        for (const CheckReport& r : reports) header["reports"].push_back(r.to_json());
        write_text(report_path(report_file), header.dump(2) + "\n");
    }
    return ok ? 0 : 1;
}

SpherePoint parse_point(int level, const std::string& text) {
    SpherePoint p;
    p.level = level;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("point entries look like vertex:coefficient");
        p.support.push_back(std::stoi(item.substr(0, colon)));
        p.coeffs.push_back(parse_rational(item.substr(colon + 1)));
    }
    p.validate();
    return p;
}

int run(int argc, char** argv) {
    CLI::App app{"finite simplicial complex verification toolkit"};
    app.require_subcommand(1);

    // ---- build-disc ----
    auto* cmd_disc = app.add_subcommand("build-disc", "build a layered triangulated disc");
    int degree = 7, radius = 6;
    std::optional<uint64_t> seed;
    std::string out_file = "disc.json";
    cmd_disc->add_option("--degree", degree, "interior vertex degree (>= 6)");
    cmd_disc->add_option("--radius", radius, "number of layers");
    cmd_disc->add_option("--seed", seed, "jitter degrees in {degree, degree+1}");
    cmd_disc->add_option("--out", out_file, "output complex JSON");

    // ---- load ----
    auto* cmd_load = app.add_subcommand("load", "load a complex and print its shape");
    std::string complex_file;
    cmd_load->add_option("--complex", complex_file, "complex JSON")->required();

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run the full check suite");
    std::string v_complex, v_report, v_only;
    int v_base = 0, v_max_radius = 1000000, v_depth = 4;
    cmd_verify->add_option("--complex", v_complex, "complex JSON")->required();
    cmd_verify->add_option("--base", v_base, "basepoint vertex");
    cmd_verify->add_option("--max-radius", v_max_radius,
                           "radius up to which the complex is complete");
    cmd_verify->add_option("--depth", v_depth, "inverse system depth");
    cmd_verify->add_option("--report", v_report, "manifest output file");
    cmd_verify->add_option("--only", v_only, "keep only reports whose name contains this");

    // ---- spheres ----
    auto* cmd_spheres = app.add_subcommand("spheres", "sphere and ball checks per level");
    std::string s_complex, s_report, s_export;
    int s_base = 0, s_max_radius = 1000000;
    cmd_spheres->add_option("--complex", s_complex, "complex JSON")->required();
    cmd_spheres->add_option("--base", s_base, "basepoint vertex");
    cmd_spheres->add_option("--max-radius", s_max_radius, "truncation frontier");
    cmd_spheres->add_option("--report", s_report, "report output file");
    cmd_spheres->add_option("--export-dir", s_export, "write each sphere as a complex JSON");

    // ---- project ----
    auto* cmd_project = app.add_subcommand("project", "sphere-to-sphere projection");
    std::string p_complex, p_point;
    int p_base = 0, p_level = 2, p_steps = 1;
    cmd_project->add_option("--complex", p_complex, "complex JSON")->required();
    cmd_project->add_option("--base", p_base, "basepoint vertex");
    cmd_project->add_option("--level", p_level, "sphere level k");
    cmd_project->add_option("--point", p_point, "point as w1:1/2,w2:1/2 (default: vertex table)");
    cmd_project->add_option("--steps", p_steps, "number of composed projections");

    // ---- boundary ----
    auto* cmd_boundary = app.add_subcommand("boundary", "inverse system reports");
    std::string b_complex, b_report, b_ray;
    int b_base = 0, b_depth = 3, b_max_radius = 1000000;
    cmd_boundary->add_option("--complex", b_complex, "complex JSON")->required();
    cmd_boundary->add_option("--base", b_base, "basepoint vertex");
    cmd_boundary->add_option("--depth", b_depth, "system depth m");
    cmd_boundary->add_option("--max-radius", b_max_radius, "truncation frontier");
    cmd_boundary->add_option("--report", b_report, "report output file");
    cmd_boundary->add_option("--ray", b_ray, "geodesic ray v0,v1,... to thread");

    // ---- hyperbolicity ----
    auto* cmd_hyp = app.add_subcommand("hyperbolicity", "four-point defect scan");
    std::string h_complex, h_report;
    int h_base = 0, h_radius = 6, h_inner = 2;
    double h_bound = 2.5;
    cmd_hyp->add_option("--complex", h_complex, "complex JSON")->required();
    cmd_hyp->add_option("--base", h_base, "basepoint vertex");
    cmd_hyp->add_option("--radius", h_radius, "distance computation radius r");
    cmd_hyp->add_option("--inner", h_inner, "quadruple radius r0 (r >= 3*r0)");
    cmd_hyp->add_option("--bound", h_bound, "defect bound");
    cmd_hyp->add_option("--report", h_report, "report output file");

    // ---- pontryagin ----
    auto* cmd_pont = app.add_subcommand("pontryagin", "torus connected-sum surface tower");
    std::string initial = "tetrahedron", pont_out;
    int stages = 3;
    long long budget = 100000;
    cmd_pont->add_option("--initial", initial, "tetrahedron | octahedron | icosahedron");
    cmd_pont->add_option("--stages", stages, "number of stages to build");
    cmd_pont->add_option("--budget", budget, "max faces per stage");
    cmd_pont->add_option("--out", pont_out, "directory for stage JSONs and stats CSV");

    // ---- export ----
    auto* cmd_export = app.add_subcommand("export", "skeleton / sphere / subdivision exports");
    std::string e_complex, e_what = "skeleton-dot", e_out = "out";
    int e_base = 0, e_level = 1;
    cmd_export->add_option("--complex", e_complex, "complex JSON")->required();
    cmd_export->add_option("--what", e_what, "skeleton-dot | sphere | subdivision");
    cmd_export->add_option("--base", e_base, "basepoint (sphere export)");
    cmd_export->add_option("--level", e_level, "sphere level (sphere export)");
    cmd_export->add_option("--out", e_out, "output file");

    CLI11_PARSE(app, argc, argv);

    if (cmd_disc->parsed()) {
        DiscSpec spec;
        spec.min_degree = degree;
        spec.radius = radius;
        spec.seed = seed;
        Disc d = build_disc(spec);
        save_complex(d.cx, out_file);
        std::cout << "disc: degree " << degree << (seed ? "+jitter" : "") << ", radius " << radius
                  << ", " << d.cx.num_vertices() << " vertices, "
                  << d.cx.maximal_simplices().size() << " triangles -> " << out_file << "\n";
        return 0;
    }

    if (cmd_load->parsed()) {
        LoadResult lr = load_complex(complex_file);
        ChamberFlags flags;
        is_chamber_complex(lr.cx, &flags);
        nlohmann::json info = {{"vertices", lr.cx.num_vertices()},
                               {"dim", lr.cx.dim()},
                               {"f_vector", lr.cx.f_vector()},
                               {"euler", lr.cx.euler_characteristic()},
                               {"chamber", flags.chamber},
                               {"pseudomanifold", flags.pseudomanifold},
                               {"gallery_connected", flags.gallery_connected},
                               {"normal", flags.normal},
                               {"duplicates_dropped", lr.duplicates_dropped}};
        std::cout << info.dump(2) << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        LoadResult lr = load_complex(v_complex);
        RunManifest m = verify_all(lr.cx, v_base, v_max_radius, v_depth,
                                   file_content_hash(v_complex));
        if (!v_only.empty()) {
            std::erase_if(m.reports, [&](const CheckReport& r) {
                return r.name.find(v_only) == std::string::npos;
            });
        }
        for (const CheckReport& r : m.reports)
            std::cout << r.name << ": " << status_name(r.status) << "\n";
        if (!v_report.empty()) write_text(report_path(v_report), m.to_json().dump(2) + "\n");
        return m.all_passed() ? 0 : 1;
    }

    if (cmd_spheres->parsed()) {
        LoadResult lr = load_complex(s_complex);
        BallSystem bs(lr.cx, {s_base});
        int top = std::min(s_max_radius - 1, bs.radius());
        std::vector<CheckReport> reports;
        for (int i = 1; i <= top; ++i) {
            reports.push_back(check_ball_recurrence(bs, i));
            for (CheckReport& r : check_sphere_facts(bs, i, s_max_radius))
                reports.push_back(r);
            if (!s_export.empty()) {
                ExtractedComplex ex = extract(bs.sphere(i));
                save_complex(ex.cx, (std::filesystem::path(s_export) /
                                     ("sphere_" + std::to_string(i) + ".json"))
                                        .string());
            }
        }
        return finish(reports, s_report,
                      {{"command", "spheres"}, {"input_hash", file_content_hash(s_complex)}});
    }

    if (cmd_project->parsed()) {
        LoadResult lr = load_complex(p_complex);
        BallSystem bs(lr.cx, {p_base});
        nlohmann::json out;
        if (p_point.empty()) {
            SphereMap pi = pi_map(bs, p_level);
            nlohmann::json table = nlohmann::json::object();
            for (const auto& [w, rho] : pi.proj) table[std::to_string(w)] = rho;
            out = {{"level", p_level}, {"vertex_projections", table}};
        } else {
            SpherePoint p = parse_point(p_level, p_point);
            nlohmann::json steps = nlohmann::json::array();
            for (int s = 0; s < p_steps; ++s) {
                SphereMap pi = pi_map(bs, p.level);
                p = project_point(pi, p);
                steps.push_back(p.to_json());
            }
            out = {{"level", p_level}, {"images", steps}};
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (cmd_boundary->parsed()) {
        LoadResult lr = load_complex(b_complex);
        InverseSystem sys = build_system(lr.cx, b_base, b_depth, b_max_radius);
        std::vector<CheckReport> reports = sys.construction_reports;
        for (CheckReport& r : daverman_report(sys)) reports.push_back(r);
        for (CheckReport& r : connectedness_report(sys)) reports.push_back(r);
        for (CheckReport& r : local_cut_analysis(sys, sys.depth)) reports.push_back(r);
        nlohmann::json header = {{"command", "boundary"},
                                 {"input_hash", file_content_hash(b_complex)}};
        if (!b_ray.empty()) {
            std::vector<Vertex> ray;
            std::stringstream ss(b_ray);
            std::string item;
            while (std::getline(ss, item, ',')) ray.push_back(std::stoi(item));
            ThreadResult tr = thread_from_ray(sys, ray);
            reports.push_back(tr.report);
            reports.push_back(validate_thread(sys, tr.thread));
            header["thread"] = thread_to_json(tr.thread);
        }
        return finish(reports, b_report, header);
    }

    if (cmd_hyp->parsed()) {
        LoadResult lr = load_complex(h_complex);
        CheckReport r = hyperbolicity_check(lr.cx, h_base, h_radius, h_inner, h_bound);
        std::cout << r.to_json().dump(2) << "\n";
        if (!h_report.empty())
            write_text(report_path(h_report), r.to_json().dump(2) + "\n");
        return r.ok() ? 0 : 1;
    }

    if (cmd_pont->parsed()) {
        SurfaceStage stage = initial_sphere(initial);
        TorusTemplate tpl = minimal_torus();
        std::string csv = "stage,V,E,F,chi,genus\n";
        std::vector<CheckReport> reports;
        auto record = [&](const SurfaceStage& s) {
            auto f = s.cx.f_vector();
            csv += std::to_string(s.index) + "," + std::to_string(f[0]) + "," +
                   std::to_string(f[1]) + "," + std::to_string(f[2]) + "," +
                   std::to_string(s.cx.euler_characteristic()) + "," +
                   std::to_string(s.genus) + "\n";
            for (CheckReport& r : check_stage(s)) reports.push_back(r);
            if (!pont_out.empty())
                save_complex(s.cx, (std::filesystem::path(pont_out) /
                                    ("stage_" + std::to_string(s.index) + ".json"))
                                       .string());
        };
        record(stage);
        for (int s = 2; s <= stages; ++s) {
            SurfaceStage next = step(stage, tpl, budget);
            reports.push_back(check_stage_map(stage, next, tpl));
            stage = std::move(next);
            record(stage);
        }
        if (!pont_out.empty())
            write_text((std::filesystem::path(pont_out) / "stats.csv").string(), csv);
        std::cout << csv;
        return finish(reports, "", {});
    }

    if (cmd_export->parsed()) {
        LoadResult lr = load_complex(e_complex);
        if (e_what == "skeleton-dot") {
            write_text(e_out, dot_skeleton(lr.cx));
        } else if (e_what == "sphere") {
            BallSystem bs(lr.cx, {e_base});
            ExtractedComplex ex = extract(bs.sphere(e_level));
            save_complex(ex.cx, e_out);
        } else if (e_what == "subdivision") {
            BarycentricSubdivision sd = barycentric_subdivision(lr.cx);
            save_complex(sd.cx, e_out);
        } else {
            throw InvalidInput("unknown export: " + e_what);
        }
        std::cout << "wrote " << e_out << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const systo::SystolicityViolation& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const systo::InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
