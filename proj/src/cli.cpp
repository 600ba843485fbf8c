#include "nullsurf/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "nullsurf/curve.hpp"
#include "nullsurf/errors.hpp"
#include "nullsurf/export.hpp"
#include "nullsurf/presets.hpp"
#include "nullsurf/scene.hpp"
#include "nullsurf/surface.hpp"

namespace nullsurf {

namespace {

using SceneEdits = std::vector<std::function<void(Scene&)>>;

// Flags are recorded as deferred edits so they override values the scene file
// sets, regardless of option order.
void add_verify_options(CLI::App* cmd, SceneEdits& edits) {
    cmd->add_option_function<int>(
           "--samples",
           [&edits](int v) {
               edits.push_back([v](Scene& sc) { sc.samples = v; });
           },
           "number of s samples for verification sweeps")
        ->check(CLI::Range(2, 10000000));

    auto tol_flag = [cmd, &edits](const std::string& flag, double Tolerances::* slot,
                                  const std::string& desc) {
        cmd->add_option_function<double>(
               flag,
               [&edits, slot](double v) {
                   edits.push_back([v, slot](Scene& sc) { sc.tol.*slot = v; });
               },
               desc)
            ->check(CLI::PositiveNumber);
    };
    tol_flag("--tol-null", &Tolerances::null, "tolerance for the null curve check");
    tol_flag("--tol-frame", &Tolerances::frame, "tolerance for the frame identity checks");
    tol_flag("--tol-iso", &Tolerances::iso, "tolerance for the isoparametric check");
    tol_flag("--tol-asym", &Tolerances::asym, "tolerance for the asymptotic direction check");
    tol_flag("--tol-residual", &Tolerances::residual, "tolerance for the asymptotic residual");
    tol_flag("--tol-consistency", &Tolerances::consistency,
             "tolerance for the two residual routes to agree");
    tol_flag("--tol-structural", &Tolerances::structural,
             "tolerance for exact structural quantities");
    tol_flag("--tol-fd-cross", &Tolerances::fd_cross,
             "tolerance for the finite difference cross-check");
}

void add_grid_options(CLI::App* cmd, SceneEdits& edits) {
    cmd->add_option_function<int>(
           "--grid-s",
           [&edits](int v) {
               edits.push_back([v](Scene& sc) { sc.member.n_s = v; });
           },
           "override the mesh resolution along s")
        ->check(CLI::Range(2, 100000));
    cmd->add_option_function<int>(
           "--grid-t",
           [&edits](int v) {
               edits.push_back([v](Scene& sc) { sc.member.n_t = v; });
           },
           "override the mesh resolution along t")
        ->check(CLI::Range(2, 100000));
}

void apply_edits(Scene& sc, const SceneEdits& edits) {
    for (const auto& f : edits) f(sc);
}

void do_build(const Scene& sc, const std::string& out_obj, const std::string& out_csv,
              std::ostream& out) {
    std::string obj_path = !out_obj.empty() ? out_obj : sc.out_obj;
    if (obj_path.empty())
        throw IoError("no output path: pass -o or set outputs.obj in the scene");
    ObjCounts c = export_obj(sc.member, obj_path);
    out << "wrote " << obj_path << ": " << c.surface_vertices << " surface vertices, " << c.faces
        << " faces, " << c.curve_vertices << " curve vertices\n";

    std::string csv_path = !out_csv.empty() ? out_csv : sc.out_csv;
    if (!csv_path.empty()) {
        std::size_t rows = export_csv(asymptotic_residual(sc.member, sc.samples, sc.tol), csv_path);
        out << "wrote " << csv_path << ": " << rows << " rows\n";
    }
}

const Preset& preset_or_throw(const std::string& name) {
    const Preset* p = find_preset(name);
    if (p) return *p;
    std::string names;
    for (const Preset& q : presets()) {
        if (!names.empty()) names += ", ";
        names += q.name;
    }
    throw Error("unknown preset '" + name + "' (available: " + names + ")");
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"surface families through a common null asymptotic curve", "nullsurf"};
    app.require_subcommand(1);

    int exit_code = 0;
    SceneEdits edits;

    std::string cc_path;
    CLI::App* check = app.add_subcommand(
        "check-curve", "check that the scene's curve is null and its frame is consistent");
    check->add_option("scene", cc_path, "scene file (JSON)")->required();
    add_verify_options(check, edits);
    check->callback([&]() {
        Scene sc = load_scene(cc_path);
        apply_edits(sc, edits);
        VerificationReport rep = validate_frame(sc.member.curve, sc.samples, sc.tol);
        rep.items.insert(rep.items.begin(),
                         check_null(sc.member.curve, sc.samples, sc.tol.null));
        out << rep.render();
        if (!rep.overall_pass()) exit_code = 2;
    });

    std::string v_path;
    CLI::App* verify = app.add_subcommand(
        "verify", "run every verification pass on the scene's surface family member");
    verify->add_option("scene", v_path, "scene file (JSON)")->required();
    add_verify_options(verify, edits);
    verify->callback([&]() {
        Scene sc = load_scene(v_path);
        apply_edits(sc, edits);
        VerificationReport rep = verify_member(sc.member, sc.samples, sc.tol);
        out << rep.render();
        if (!rep.overall_pass()) exit_code = 2;
    });

    std::string b_path, b_obj, b_csv;
    CLI::App* build =
        app.add_subcommand("build", "sample the surface to an OBJ mesh, optionally with a CSV "
                                    "residual report");
    build->add_option("scene", b_path, "scene file (JSON)")->required();
    build->add_option("-o,--output", b_obj, "output OBJ path");
    build->add_option("--report", b_csv, "write a residual sweep CSV to this path");
    add_grid_options(build, edits);
    add_verify_options(build, edits);
    build->callback([&]() {
        Scene sc = load_scene(b_path);
        apply_edits(sc, edits);
        do_build(sc, b_obj, b_csv, out);
    });

    CLI::App* preset = app.add_subcommand("preset", "operate on the built-in example scenes");
    preset->require_subcommand(1);

    CLI::App* plist = preset->add_subcommand("list", "list the built-in presets");
    plist->callback([&]() {
        for (const Preset& p : presets()) {
            out << std::left << std::setw(16) << p.name
                << (p.expected_pass ? "[expected pass] " : "[expected fail] ") << p.description
                << "\n";
        }
    });

    std::string pb_name, pb_obj, pb_csv;
    CLI::App* pbuild = preset->add_subcommand("build", "sample a preset surface to an OBJ mesh");
    pbuild->add_option("name", pb_name, "preset name")->required();
    pbuild->add_option("-o,--output", pb_obj, "output OBJ path")->required();
    pbuild->add_option("--report", pb_csv, "write a residual sweep CSV to this path");
    add_grid_options(pbuild, edits);
    add_verify_options(pbuild, edits);
    pbuild->callback([&]() {
        Scene sc = preset_scene(preset_or_throw(pb_name));
        apply_edits(sc, edits);
        do_build(sc, pb_obj, pb_csv, out);
    });

    std::string pv_name;
    CLI::App* pverify = preset->add_subcommand("verify", "run every verification pass on a preset");
    pverify->add_option("name", pv_name, "preset name")->required();
    add_verify_options(pverify, edits);
    pverify->callback([&]() {
        Scene sc = preset_scene(preset_or_throw(pv_name));
        apply_edits(sc, edits);
        VerificationReport rep = verify_member(sc.member, sc.samples, sc.tol);
        out << rep.render();
        if (!rep.overall_pass()) exit_code = 2;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace nullsurf
