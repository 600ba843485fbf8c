// Acceptance gate. Each criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "form_gen.hpp"
#include "nullsurf/cli.hpp"
#include "nullsurf/curve.hpp"
#include "nullsurf/errors.hpp"
#include "nullsurf/expr.hpp"
#include "nullsurf/marching.hpp"
#include "nullsurf/presets.hpp"
#include "nullsurf/surface.hpp"
#include "nullsurf/util.hpp"

using namespace nullsurf;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int num, const char* label, bool ok, const std::string& note) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, label,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++g_failures;
}

// 1: every preset surface matches its independent closed form on a 10 x 10
// grid to 1e-9.
void criterion1() {
    double worst = 0.0;
    std::string worst_name;
    try {
        for (const Preset& p : presets()) {
            SurfaceFamilyMember mem = preset_scene(p).member;
            auto oracle = preset_oracle(p);
            for (double s : linspace(mem.curve.s_min, mem.curve.s_max, 10))
                for (double t : linspace(mem.ms.t_lo, mem.ms.t_hi, 10)) {
                    MVec3 o{eval(*oracle[0], s, t), eval(*oracle[1], s, t),
                            eval(*oracle[2], s, t)};
                    double d = euclidean_norm(evaluate_surface(mem, s, t) - o);
                    if (d > worst) {
                        worst = d;
                        worst_name = p.name;
                    }
                }
        }
        report(1, "preset surfaces reproduce their closed forms (tol 1e-9)", worst <= 1e-9,
               "max deviation " + fmt_g3(worst) +
                   (worst_name.empty() ? "" : " on " + worst_name));
    } catch (const std::exception& e) {
        report(1, "preset surfaces reproduce their closed forms (tol 1e-9)", false, e.what());
    }
}

// 2: both analytic frames satisfy the metric, derivative, cross product and
// determinant identities to 1e-10 at 256 samples.
void criterion2() {
    double worst = 0.0;
    bool ok = true;
    std::string note;
    try {
        for (const char* name : {"ex31a", "ex32"}) {
            NullCurve c = preset_scene(*find_preset(name)).member.curve;
            Tolerances tol;
            tol.frame = 1e-10;
            VerificationReport rep = validate_frame(c, 256, tol);
            for (const VerificationItem& it : rep.items) {
                if (it.severity != Severity::Mandatory) continue;
                worst = std::max(worst, it.max_defect);
                if (!it.passed) {
                    ok = false;
                    note = std::string(name) + " " + it.id + " defect " + fmt_g3(it.max_defect);
                }
            }
        }
        if (ok) note = "max defect " + fmt_g3(worst);
        report(2, "analytic frame identities hold to 1e-10 at 256 samples", ok && worst <= 1e-10,
               note);
    } catch (const std::exception& e) {
        report(2, "analytic frame identities hold to 1e-10 at 256 samples", false, e.what());
    }
}

// 3: the automatic frame construction reproduces both analytic frames to
// 1e-9 and lands on the known curvature pairs.
void criterion3() {
    struct Row {
        const char* name;
        double k2;
    };
    double worst = 0.0;
    try {
        for (Row row : {Row{"ex31a", 0.5}, Row{"ex32", 0.0}}) {
            NullCurve with = preset_scene(*find_preset(row.name)).member.curve;
            NullCurve without = with;
            without.frame.reset();
            for (double s : linspace(with.s_min, with.s_max, 128)) {
                CartanFrameSample a = build_cartan_frame(with, s);
                CartanFrameSample b = build_cartan_frame(without, s);
                worst = std::max({worst, euclidean_norm(a.ell - b.ell),
                                  euclidean_norm(a.n - b.n), euclidean_norm(a.u - b.u),
                                  std::abs(b.k1 - 1.0), std::abs(b.k2 - row.k2)});
            }
        }
        report(3, "automatic frame matches the analytic frames and curvatures (tol 1e-9)",
               worst <= 1e-9, "max deviation " + fmt_g3(worst));
    } catch (const std::exception& e) {
        report(3, "automatic frame matches the analytic frames and curvatures (tol 1e-9)", false,
               e.what());
    }
}

// 4: asymptotic residual vanishes to 1e-8 on the five passing presets, the
// counterexample residual has modulus 1 to 1e-6, and the direct and reduced
// residual routes agree to 1e-8 everywhere.
void criterion4() {
    double worst_resid = 0.0, worst_agree = 0.0, worst_counter = 0.0;
    try {
        for (const Preset& p : presets()) {
            SurfaceFamilyMember mem = preset_scene(p).member;
            for (const ResidualSample& r : asymptotic_residual(mem, 256, Tolerances{})) {
                worst_agree = std::max(worst_agree, std::abs(r.r_direct - r.r_reduced));
                if (p.expected_pass)
                    worst_resid = std::max(worst_resid, std::abs(r.r_direct));
                else
                    worst_counter =
                        std::max(worst_counter, std::abs(std::abs(r.r_direct) - 1.0));
            }
        }
        bool ok = worst_resid <= 1e-8 && worst_counter <= 1e-6 && worst_agree <= 1e-8;
        report(4, "residual sweeps: presets vanish, counterexample has modulus one", ok,
               "max |R| " + fmt_g3(worst_resid) + ", counterexample ||R|-1| " +
                   fmt_g3(worst_counter) + ", route disagreement " + fmt_g3(worst_agree));
    } catch (const std::exception& e) {
        report(4, "residual sweeps: presets vanish, counterexample has modulus one", false,
               e.what());
    }
}

// 5: along t = t0 the surface normal is the null direction ell scaled by
// phi1: proportionality and nullity to 1e-10, orthogonality to the curve
// acceleration to 1e-8.
void criterion5() {
    double worst_prop = 0.0, worst_null = 0.0, worst_acc = 0.0;
    try {
        for (const char* name : {"ex31b", "ex31c", "ex32"}) {
            SurfaceFamilyMember mem = preset_scene(*find_preset(name)).member;
            for (double s : linspace(mem.curve.s_min, mem.curve.s_max, 128)) {
                NormalSample ns = normal_frame_expansion(mem, s, mem.ms.t0);
                CartanFrameSample fr = build_cartan_frame(mem.curve, s);
                worst_prop = std::max(worst_prop, euclidean_norm(ns.N - ns.phi1 * fr.ell));
                worst_null = std::max(worst_null, std::abs(minkowski_inner(ns.N, ns.N)));
                MVec3 acc{eval_dual(*mem.curve.components[0], Variable::S, s, 0).d2,
                          eval_dual(*mem.curve.components[1], Variable::S, s, 0).d2,
                          eval_dual(*mem.curve.components[2], Variable::S, s, 0).d2};
                worst_acc = std::max(worst_acc, std::abs(minkowski_inner(ns.N, acc)));
            }
        }
        bool ok = worst_prop <= 1e-10 && worst_null <= 1e-10 && worst_acc <= 1e-8;
        report(5, "null normal law along the curve", ok,
               "proportionality " + fmt_g3(worst_prop) + ", <N,N> " + fmt_g3(worst_null) +
                   ", <N,acc> " + fmt_g3(worst_acc));
    } catch (const std::exception& e) {
        report(5, "null normal law along the curve", false, e.what());
    }
}

// 6: the structural sufficient conditions classify known forms correctly.
void criterion6() {
    std::string note;
    bool ok = true;
    auto expect = [&](const char* what, bool got, bool want) {
        if (got != want) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += std::string(what) + (want ? " should pass" : " should fail");
        }
    };
    try {
        for (const char* name : {"ex31a", "ex31b", "ex31c", "ex32"}) {
            MarchingScale ms = preset_scene(*find_preset(name)).member.ms;
            ConditionVerdict v = check_sufficient_form(ms, 0.0, 1.0, 32, 1e-9);
            expect(name, v.passed && v.condition_id == "Suff-3.5", true);
        }
        {
            MarchingScale ms = preset_scene(*find_preset("ex31d")).member.ms;
            ConditionVerdict v = check_sufficient_form(ms, 0.0, 18.8, 32, 1e-9);
            expect("ex31d", v.passed && v.condition_id == "Suff-3.7", true);
        }
        {
            ProductForm f;
            f.k = parse("1");
            f.m = parse("1");
            f.w = parse("0");
            f.X = parse("t");
            f.Y = parse("t");
            f.Z = parse("0");
            MarchingScale ms;
            ms.form = f;
            ms.t_lo = -1;
            ms.t_hi = 1;
            expect("linear y product", check_sufficient_form(ms, 0, 1, 32, 1e-9).passed, false);
        }
        {
            ComposedForm f;
            f.core.k = parse("1");
            f.core.m = parse("1");
            f.core.w = parse("1");
            f.core.X = parse("t");
            f.core.Y = parse("t");
            f.core.Z = parse("t");
            f.core.a1 = {1.0};
            f.core.a2 = {1.0};
            f.core.a3 = {1.0};
            f.f = parse("w");
            f.g = parse("w^2");
            f.h = parse("w");
            MarchingScale ms;
            ms.form = f;
            ms.t_lo = -1;
            ms.t_hi = 1;
            ConditionVerdict v = check_sufficient_form(ms, 0, 1, 32, 1e-9);
            expect("quadratic outer composed", v.passed && v.condition_id == "Suff-3.9", true);
        }
        report(6, "sufficient condition truth table", ok, note);
    } catch (const std::exception& e) {
        report(6, "sufficient condition truth table", false, e.what());
    }
}

// 7: 200 randomly generated forms that satisfy a sufficient condition all
// pass the checker and have asymptotic defect at most 1e-8.
void criterion7() {
    std::mt19937 rng(77);
    double worst = 0.0;
    int suff_failures = 0;
    try {
        for (int i = 0; i < 200; ++i) {
            formgen::Generated g = formgen::random_sufficient_form(rng);
            ConditionVerdict suff = check_sufficient_form(g.ms, -2.0, 2.0, 24, 1e-9);
            if (!suff.passed) ++suff_failures;
            ConditionVerdict asym = check_asymptotic_general(g.ms, -2.0, 2.0, 24, 1e-8, 1e-8);
            worst = std::max(worst, asym.max_defect);
        }
        bool ok = suff_failures == 0 && worst <= 1e-8;
        report(7, "200 random sufficient forms are asymptotic", ok,
               std::to_string(suff_failures) + " checker rejections, max defect " +
                   fmt_g3(worst));
    } catch (const std::exception& e) {
        report(7, "200 random sufficient forms are asymptotic", false, e.what());
    }
}

// 8: dual-number derivatives agree with finite differences on 100 random
// expression-point pairs, and operator precedence follows the grammar.
void criterion8() {
    const std::vector<std::string> pool = {
        "s^3 - 2*s + 1",        "sin(s)*cos(t)",      "exp(s/4) + t^2",
        "s*t^2 - t/2",          "sinh(s)/2 + cosh(t/2)", "1/(2 + s^2)",
        "sqrt(4 + s^2 + t^2)",  "log(3 + s)",         "(s + t)^4/8",
        "tan(s/3)",             "s^2*t^2 - pi*s",     "cos(s*t)",
    };
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> pt(-1.5, 1.5);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int accepted = 0, attempts = 0;
    double worst1 = 0.0, worst2 = 0.0;
    try {
        std::vector<ExprPtr> parsed;
        for (const auto& text : pool) parsed.push_back(parse(text));
        while (accepted < 100 && attempts < 10000) {
            ++attempts;
            const ExprPtr& e = parsed[pick(rng)];
            double s = pt(rng), t = pt(rng);
            bool wrt_s = (attempts % 2) == 0;
            Variable var = wrt_s ? Variable::S : Variable::T;
            try {
                Dual2d d = eval_dual(*e, var, s, t);
                double h = 1e-5;
                double fp = wrt_s ? eval(*e, s + h, t) : eval(*e, s, t + h);
                double fm = wrt_s ? eval(*e, s - h, t) : eval(*e, s, t - h);
                double h2 = 1e-3;
                double gp = wrt_s ? eval(*e, s + h2, t) : eval(*e, s, t + h2);
                double gm = wrt_s ? eval(*e, s - h2, t) : eval(*e, s, t - h2);
                double f0 = eval(*e, s, t);
                if (std::abs(f0) > 50 || std::abs(d.d1) > 50 || std::abs(d.d2) > 50) continue;
                double fd1 = (fp - fm) / (2 * h);
                double fd2 = (gp - 2 * f0 + gm) / (h2 * h2);
                worst1 = std::max(worst1, std::abs(d.d1 - fd1) / std::max(1.0, std::abs(d.d1)));
                worst2 = std::max(worst2, std::abs(d.d2 - fd2) / std::max(1.0, std::abs(d.d2)));
                ++accepted;
            } catch (const EvalError&) {
                continue;  // stepped on a pole; resample
            }
        }
        bool precedence = eval(*parse("2+3*4"), 0, 0) == 14.0 &&
                          eval(*parse("2^3^2"), 0, 0) == 512.0 &&
                          eval(*parse("-s^2"), 3.0, 0) == 9.0 &&
                          eval(*parse("2*3^2"), 0, 0) == 18.0 &&
                          eval(*parse("(2+3)*4"), 0, 0) == 20.0 &&
                          eval(*parse("8/4/2"), 0, 0) == 1.0;
        bool ok = accepted == 100 && worst1 <= 1e-6 && worst2 <= 1e-4 && precedence;
        report(8, "dual derivatives match finite differences; precedence is exact", ok,
               std::to_string(accepted) + " pairs, d1 err " + fmt_g3(worst1) + ", d2 err " +
                   fmt_g3(worst2) + (precedence ? "" : ", precedence broken"));
    } catch (const std::exception& e) {
        report(8, "dual derivatives match finite differences; precedence is exact", false,
               e.what());
    }
}

// 9: the command line round trip: verification exit codes, mesh counts, and
// byte-stable output against the checked-in golden mesh.
void criterion9() {
    std::string note;
    bool ok = true;
    auto expect = [&](const char* what, bool got) {
        if (!got) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += what;
        }
    };
    try {
        fs::path dir = fs::temp_directory_path() / "nullsurf_acceptance";
        fs::create_directories(dir);

        std::ostringstream out1, err1;
        expect("preset verify ex31c exits 0",
               run_command({"preset", "verify", "ex31c"}, out1, err1) == 0);
        std::ostringstream out2, err2;
        expect("preset verify counterexample exits 2",
               run_command({"preset", "verify", "counterexample"}, out2, err2) == 2);

        std::string obj = (dir / "full.obj").string();
        std::ostringstream out3, err3;
        expect("preset build ex31a exits 0",
               run_command({"preset", "build", "ex31a", "-o", obj}, out3, err3) == 0);
        std::ifstream in(obj);
        int v_lines = 0, f_lines = 0;
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("v ", 0) == 0) ++v_lines;
            if (line.rfind("f ", 0) == 0) ++f_lines;
        }
        expect("vertex count is n_s*n_t + n_s", v_lines == 64 * 32 + 64);
        expect("face count is (n_s-1)*(n_t-1)", f_lines == 63 * 31);

        std::string small = (dir / "small.obj").string();
        std::ostringstream out4, err4;
        expect("preset build with grid overrides exits 0",
               run_command({"preset", "build", "ex31a", "-o", small, "--grid-s", "16",
                            "--grid-t", "8"},
                           out4, err4) == 0);
        std::ifstream golden(std::string(NULLSURF_GOLDEN_DIR) + "/ex31a_16x8.obj",
                             std::ios::binary);
        if (!golden.good()) {
            expect("golden mesh file present", false);
        } else {
            std::ostringstream gbuf, fbuf;
            gbuf << golden.rdbuf();
            std::ifstream fresh(small, std::ios::binary);
            fbuf << fresh.rdbuf();
            expect("mesh bytes match the golden file", gbuf.str() == fbuf.str());
        }

        std::error_code ec;
        fs::remove_all(dir, ec);
        report(9, "command line exit codes and byte-stable meshes", ok, note);
    } catch (const std::exception& e) {
        report(9, "command line exit codes and byte-stable meshes", false, e.what());
    }
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
