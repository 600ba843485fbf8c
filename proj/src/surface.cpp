#include "nullsurf/surface.hpp"

#include <cmath>
#include <limits>

#include "nullsurf/util.hpp"

namespace nullsurf {

namespace {

using D1 = Dual1<double>;
using D2 = Dual2<double>;
using D12 = Dual1<D2>;

void require_t_domain(const MarchingScale& ms, double t) {
    if (!(t >= ms.t_lo && t <= ms.t_hi))
        throw OutOfDomainError("surface parameter t = " + fmt_g17(t) + " outside [" +
                               fmt_g17(ms.t_lo) + ", " + fmt_g17(ms.t_hi) + "]");
}

struct ScanPoint {
    Frame<D1> frame;
    D1 phi1, phi2, phi3;
    Vec3<D1> N;
    double null_defect = 0.0;
};

// Everything the residual needs at one s, with first s-derivatives attached.
// Marching jets come from a nested evaluation: outer Dual1 in t, inner Dual2
// in s, which yields order-1 s-jets of x, x_s and x_t in one pass.
ScanPoint scan_point(const SurfaceFamilyMember& mem, double s) {
    ScanPoint sp;
    sp.frame = cartan_frame_d1(mem.curve, s);

    EvalVars<D12> vars;
    vars.s = D12{d2_var(s), d2_const(0.0)};
    vars.t = D12{d2_const(mem.ms.t0), d2_const(1.0)};
    MarchingValue<D12> mv = marching_eval(mem.ms, vars);
    if (!all_finite(mv.x) || !all_finite(mv.y) || !all_finite(mv.z))
        throw EvalError("marching functions evaluated to a non-finite value");

    auto val_jet = [](const D12& r) { return D1{r.v.v, r.v.d1}; };
    auto s_jet = [](const D12& r) { return D1{r.v.d1, r.v.d2}; };
    auto t_jet = [](const D12& r) { return D1{r.d.v, r.d.d1}; };

    D1 x = val_jet(mv.x), y = val_jet(mv.y), z = val_jet(mv.z);
    D1 xs = s_jet(mv.x), ys = s_jet(mv.y), zs = s_jet(mv.z);
    D1 xt = t_jet(mv.x), yt = t_jet(mv.y), zt = t_jet(mv.z);

    D1 A = D1(1.0) + xs - z * sp.frame.k2;
    D1 B = ys + z * sp.frame.k1;
    D1 C = zs + x * sp.frame.k1 - y * sp.frame.k2;

    sp.phi1 = A * zt - C * xt;
    sp.phi2 = C * yt - B * zt;
    sp.phi3 = A * yt - B * xt;
    sp.N = sp.phi1 * sp.frame.ell + sp.phi2 * sp.frame.n + sp.phi3 * sp.frame.u;

    Vec3<D1> aj = curve_point(mem.curve, d1_var(s));
    MVec3 ap = jet_derivs(aj);
    sp.null_defect = std::abs(minkowski_inner(ap, ap));
    return sp;
}

ResidualSample to_sample(const ScanPoint& sp, double s, double eps_null) {
    ResidualSample r;
    r.s = s;
    r.phi1 = sp.phi1.v;
    r.phi2 = sp.phi2.v;
    r.phi3 = sp.phi3.v;
    r.r_direct = minkowski_inner(jet_derivs(sp.N), jet_values(sp.frame.ell));
    r.r_reduced = -(sp.phi2.d + sp.frame.k1.v * sp.phi3.v);
    r.null_defect = sp.null_defect;
    MVec3 nv = jet_values(sp.N);
    r.normal_norm = euclidean_norm(nv);
    r.normal_char = causal_character(nv, eps_null);
    return r;
}

std::vector<ResidualSample> residual_scan(const SurfaceFamilyMember& mem, int n_samples,
                                          const Tolerances& tol) {
    std::vector<ResidualSample> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (double s : linspace(mem.curve.s_min, mem.curve.s_max, n_samples))
        out.push_back(to_sample(scan_point(mem, s), s, tol.null));
    return out;
}

VerificationItem verdict_item(const ConditionVerdict& cv, Severity sev, double tol) {
    VerificationItem it;
    it.id = cv.condition_id;
    it.severity = sev;
    it.passed = cv.passed;
    it.max_defect = cv.max_defect;
    it.mean_defect = cv.mean_defect;
    it.worst_s = cv.worst_s;
    it.tolerance = tol;
    it.detail = cv.detail;
    return it;
}

}  // namespace

void validate_member(const SurfaceFamilyMember& mem) {
    if (mem.n_s < 2 || mem.n_t < 2) throw Error("grid must be at least 2 x 2");
    for (const auto& comp : mem.curve.components)
        if (!comp) throw Error("curve component expression is missing");
    if (!std::isfinite(mem.curve.s_min) || !std::isfinite(mem.curve.s_max) ||
        !(mem.curve.s_min < mem.curve.s_max))
        throw Error("curve domain must satisfy s_min < s_max");
    for (const auto& comp : mem.curve.components)
        if (comp->var_mask() & ~var_bit(Variable::S))
            throw Error("curve components may only use s");
    if (mem.curve.frame) {
        for (const auto& row : {mem.curve.frame->ell, mem.curve.frame->n, mem.curve.frame->u})
            for (const auto& e : row) {
                if (!e) throw Error("frame component expression is missing");
                if (e->var_mask() & ~var_bit(Variable::S))
                    throw Error("frame components may only use s");
            }
    }
    validate_marching(mem.ms);
}

MVec3 evaluate_surface(const SurfaceFamilyMember& mem, double s, double t) {
    require_in_domain(mem.curve, s);
    require_t_domain(mem.ms, t);
    Frame<D1> f = cartan_frame_d1(mem.curve, s);
    EvalVars<double> vars;
    vars.s = s;
    vars.t = t;
    MarchingValue<double> m = marching_eval(mem.ms, vars);
    if (!std::isfinite(m.x) || !std::isfinite(m.y) || !std::isfinite(m.z))
        throw EvalError("marching functions evaluated to a non-finite value");
    MVec3 alpha = curve_point(mem.curve, s);
    return alpha + m.x * jet_values(f.ell) + m.y * jet_values(f.n) + m.z * jet_values(f.u);
}

MVec3 normal_direct(const SurfaceFamilyMember& mem, double s, double t) {
    require_in_domain(mem.curve, s);
    require_t_domain(mem.ms, t);
    Frame<D1> f = cartan_frame_d1(mem.curve, s);
    MVec3 alpha_p = jet_derivs(curve_point(mem.curve, d1_var(s)));
    MarchingPartials mp = partials_marching(mem.ms, s, t);

    MVec3 ell = jet_values(f.ell), n = jet_values(f.n), u = jet_values(f.u);
    MVec3 dell = jet_derivs(f.ell), dn = jet_derivs(f.n), du = jet_derivs(f.u);

    MVec3 phi_s =
        alpha_p + mp.xs * ell + mp.x * dell + mp.ys * n + mp.y * dn + mp.zs * u + mp.z * du;
    MVec3 phi_t = mp.xt * ell + mp.yt * n + mp.zt * u;
    return lorentz_cross(phi_s, phi_t);
}

NormalSample normal_frame_expansion(const SurfaceFamilyMember& mem, double s, double t) {
    require_in_domain(mem.curve, s);
    require_t_domain(mem.ms, t);
    Frame<D1> f = cartan_frame_d1(mem.curve, s);
    MarchingPartials mp = partials_marching(mem.ms, s, t);
    double k1 = f.k1.v, k2 = f.k2.v;

    double A = 1.0 + mp.xs - mp.z * k2;
    double B = mp.ys + mp.z * k1;
    double C = mp.zs + mp.x * k1 - mp.y * k2;

    NormalSample out;
    out.s = s;
    out.t = t;
    out.phi1 = A * mp.zt - C * mp.xt;
    out.phi2 = C * mp.yt - B * mp.zt;
    out.phi3 = A * mp.yt - B * mp.xt;
    out.N = out.phi1 * jet_values(f.ell) + out.phi2 * jet_values(f.n) +
            out.phi3 * jet_values(f.u);
    return out;
}

std::vector<ResidualSample> asymptotic_residual(const SurfaceFamilyMember& mem, int n_samples,
                                                const Tolerances& tol) {
    if (n_samples < 2) throw PreconditionError("asymptotic_residual needs at least 2 samples");
    ConditionVerdict iso =
        check_isoparametric(mem.ms, mem.curve.s_min, mem.curve.s_max, n_samples, tol.iso);
    if (!iso.passed)
        throw PreconditionError(
            "the residual is only meaningful under the isoparametric condition, which fails "
            "with defect " +
            fmt_g3(iso.max_defect) + " at s = " + fmt_g3(iso.worst_s));
    return residual_scan(mem, n_samples, tol);
}

VerificationReport verify_member(const SurfaceFamilyMember& mem, int n_samples,
                                 const Tolerances& tol) {
    VerificationReport rep;
    const double inf = std::numeric_limits<double>::infinity();
    auto fail_item = [&](const std::string& id, const std::string& what) {
        VerificationItem it;
        it.id = id;
        it.severity = Severity::Mandatory;
        it.passed = false;
        it.max_defect = inf;
        it.detail = "not evaluated: " + what;
        rep.items.push_back(it);
    };

    try {
        validate_member(mem);
        if (n_samples < 2) throw PreconditionError("verification needs at least 2 samples");
    } catch (const Error& e) {
        fail_item("structure", e.what());
        return rep;
    }

    const double s_lo = mem.curve.s_min, s_hi = mem.curve.s_max;

    try {
        rep.items.push_back(check_null(mem.curve, n_samples, tol.null));
    } catch (const Error& e) {
        fail_item("null-curve", e.what());
    }

    try {
        VerificationReport fr = validate_frame(mem.curve, n_samples, tol);
        rep.items.insert(rep.items.end(), fr.items.begin(), fr.items.end());
    } catch (const Error& e) {
        fail_item("frame", e.what());
    }

    bool iso_ok = false;
    try {
        ConditionVerdict iso = check_isoparametric(mem.ms, s_lo, s_hi, n_samples, tol.iso);
        iso_ok = iso.passed;
        rep.items.push_back(verdict_item(iso, Severity::Mandatory, tol.iso));
    } catch (const Error& e) {
        fail_item("Iso-3.2", e.what());
    }

    if (!std::holds_alternative<CustomForm>(mem.ms.form)) {
        try {
            ConditionVerdict su =
                check_sufficient_form(mem.ms, s_lo, s_hi, n_samples, tol.structural);
            // Sufficiency-only: a member may be asymptotic without satisfying
            // the structural condition, so this never gates the verdict.
            rep.items.push_back(verdict_item(su, Severity::Diagnostic, tol.structural));
        } catch (const Error& e) {
            VerificationItem it;
            it.id = "Suff-structural";
            it.severity = Severity::Diagnostic;
            it.passed = false;
            it.max_defect = inf;
            it.detail = "not evaluated: " + std::string(e.what());
            rep.items.push_back(it);
        }
    }

    if (iso_ok) {
        try {
            ConditionVerdict as =
                check_asymptotic_general(mem.ms, s_lo, s_hi, n_samples, tol.asym, tol.iso);
            rep.items.push_back(verdict_item(as, Severity::Mandatory, tol.asym));
        } catch (const Error& e) {
            fail_item("Asym-3.4", e.what());
        }
    } else {
        fail_item("Asym-3.4", "the isoparametric precondition failed");
    }

    try {
        std::vector<ResidualSample> rs = residual_scan(mem, n_samples, tol);
        DefectStats direct, cons;
        for (const ResidualSample& r : rs) {
            direct.add(r.s, r.r_direct);
            cons.add(r.s, r.r_direct - r.r_reduced);
        }
        rep.items.push_back(direct.to_item("residual-direct", Severity::Mandatory, tol.residual,
                                           "R(s) = <dN/ds(s,t0), ell(s)>"));
        rep.items.push_back(
            cons.to_item("residual-consistency", Severity::Mandatory, tol.consistency,
                         "R - Rtilde with Rtilde = -(dphi2/ds + k1*phi3)"));

        // Central finite differences of N(s, t0) as an independent sanity
        // check on the dual-number derivative. Deliberately oversteps the
        // domain at the endpoints; the internal scan does not domain-check.
        DefectStats fd;
        int skipped = 0;
        double h = 1e-5 * (s_hi - s_lo);
        for (const ResidualSample& r : rs) {
            try {
                MVec3 np = jet_values(scan_point(mem, r.s + h).N);
                MVec3 nm = jet_values(scan_point(mem, r.s - h).N);
                MVec3 dn_fd = (np - nm) / (2.0 * h);
                ScanPoint sp = scan_point(mem, r.s);
                double r_fd = minkowski_inner(dn_fd, jet_values(sp.frame.ell));
                fd.add(r.s, r.r_direct - r_fd);
            } catch (const Error&) {
                ++skipped;
            }
        }
        std::string fd_detail = "|R_dual - R_fd|, central differences with h = " + fmt_g3(h);
        if (skipped > 0)
            fd_detail += " (" + std::to_string(skipped) + " samples skipped: evaluation error)";
        rep.items.push_back(
            fd.to_item("residual-fd-cross", Severity::Diagnostic, tol.fd_cross, fd_detail));

        // Degeneracy scan: a zero normal along the curve is geometrically
        // degenerate but the construction admits it; warn, never fail.
        double min_norm = inf, max_norm = 0.0, worst = rs.front().s, norm_sum = 0.0;
        int zero_count = 0, null_count = 0;
        for (const ResidualSample& r : rs) {
            norm_sum += r.normal_norm;
            max_norm = std::max(max_norm, r.normal_norm);
            if (r.normal_norm < min_norm) {
                min_norm = r.normal_norm;
                worst = r.s;
            }
            if (r.normal_norm <= tol.structural) ++zero_count;
            else if (r.normal_char == CausalCharacter::Null) ++null_count;
        }
        VerificationItem deg;
        deg.id = "normal-degeneracy";
        deg.severity = Severity::Warning;
        deg.passed = zero_count == 0;
        deg.max_defect = min_norm;
        deg.mean_defect = norm_sum / static_cast<double>(rs.size());
        deg.worst_s = worst;
        deg.tolerance = tol.structural;
        if (zero_count == static_cast<int>(rs.size())) {
            deg.detail = "N(s,t0) = 0 at every sample (defect column holds min ||N||): "
                         "the member is tangent-degenerate along the curve";
        } else if (zero_count > 0) {
            deg.detail = "N(s,t0) = 0 at " + std::to_string(zero_count) + " of " +
                         std::to_string(rs.size()) + " samples (defect column holds min ||N||)";
        } else if (null_count == static_cast<int>(rs.size())) {
            deg.detail = "N(s,t0) is null and nonzero at every sample (lightlike tangent "
                         "plane, the expected state for an asymptotic member); defect column "
                         "holds min ||N||";
        } else {
            deg.detail = std::to_string(null_count) + " of " + std::to_string(rs.size()) +
                         " samples have a null normal (defect column holds min ||N||)";
        }
        rep.items.push_back(deg);
    } catch (const Error& e) {
        fail_item("residual-direct", e.what());
    }

    return rep;
}

}  // namespace nullsurf
