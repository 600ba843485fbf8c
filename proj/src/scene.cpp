#include "nullsurf/scene.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

namespace nullsurf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) {
    throw SceneError(ptr, msg);
}

void check_object(const json& j, const std::string& ptr) {
    if (!j.is_object()) fail(ptr, "expected an object");
}

void check_keys(const json& obj, const std::string& ptr,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known) fail(ptr + "/" + item.key(), "unknown key");
    }
}

const json& require_key(const json& obj, const std::string& ptr, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(ptr, std::string("missing required key '") + key + "'");
    return *it;
}

double as_number(const json& j, const std::string& ptr) {
    if (!j.is_number()) fail(ptr, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) fail(ptr, "number must be finite");
    return v;
}

int as_int(const json& j, const std::string& ptr) {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& ptr) {
    if (!j.is_string()) fail(ptr, "expected a string");
    return j.get<std::string>();
}

ExprPtr as_expr(const json& j, const std::string& ptr, unsigned allowed, const char* desc) {
    std::string text = as_string(j, ptr);
    ExprPtr e;
    try {
        e = parse(text);
    } catch (const ParseError& pe) {
        fail(ptr, std::string("invalid expression: ") + pe.what());
    }
    if (e->var_mask() & ~allowed) fail(ptr, std::string("expression may only use ") + desc);
    return e;
}

std::array<ExprPtr, 3> as_expr_triple(const json& j, const std::string& ptr, unsigned allowed,
                                      const char* desc) {
    if (!j.is_array() || j.size() != 3) fail(ptr, "expected an array of 3 expression strings");
    return {as_expr(j[0], ptr + "/0", allowed, desc), as_expr(j[1], ptr + "/1", allowed, desc),
            as_expr(j[2], ptr + "/2", allowed, desc)};
}

std::vector<double> as_number_array(const json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) fail(ptr, "expected a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_number(j[i], ptr + "/" + std::to_string(i)));
    return out;
}

constexpr unsigned kS = var_bit(Variable::S);
constexpr unsigned kT = var_bit(Variable::T);
constexpr unsigned kW = var_bit(Variable::W);

NullCurve load_curve(const json& j) {
    check_object(j, "/curve");
    check_keys(j, "/curve", {"components", "domain", "frame"});
    NullCurve c;
    c.components =
        as_expr_triple(require_key(j, "/curve", "components"), "/curve/components", kS, "s");
    const json& dom = require_key(j, "/curve", "domain");
    if (!dom.is_array() || dom.size() != 2) fail("/curve/domain", "expected [s_min, s_max]");
    c.s_min = as_number(dom[0], "/curve/domain/0");
    c.s_max = as_number(dom[1], "/curve/domain/1");
    if (!(c.s_min < c.s_max)) fail("/curve/domain", "requires s_min < s_max");
    if (j.contains("frame")) {
        const json& fr = j["frame"];
        check_object(fr, "/curve/frame");
        check_keys(fr, "/curve/frame", {"ell", "n", "u"});
        AnalyticFrame af;
        af.ell =
            as_expr_triple(require_key(fr, "/curve/frame", "ell"), "/curve/frame/ell", kS, "s");
        af.n = as_expr_triple(require_key(fr, "/curve/frame", "n"), "/curve/frame/n", kS, "s");
        af.u = as_expr_triple(require_key(fr, "/curve/frame", "u"), "/curve/frame/u", kS, "s");
        c.frame = std::move(af);
    }
    return c;
}

void load_poly_slots(const json& j, PolynomialForm& f) {
    f.k = as_expr(require_key(j, "/marching", "k"), "/marching/k", kS, "s");
    f.m = as_expr(require_key(j, "/marching", "m"), "/marching/m", kS, "s");
    f.w = as_expr(require_key(j, "/marching", "w"), "/marching/w", kS, "s");
    f.X = as_expr(require_key(j, "/marching", "X"), "/marching/X", kT, "t");
    f.Y = as_expr(require_key(j, "/marching", "Y"), "/marching/Y", kT, "t");
    f.Z = as_expr(require_key(j, "/marching", "Z"), "/marching/Z", kT, "t");
    f.a1 = as_number_array(require_key(j, "/marching", "a1"), "/marching/a1");
    f.a2 = as_number_array(require_key(j, "/marching", "a2"), "/marching/a2");
    f.a3 = as_number_array(require_key(j, "/marching", "a3"), "/marching/a3");
    if (f.a2.size() != f.a1.size()) fail("/marching/a2", "must have the same length as a1");
    if (f.a3.size() != f.a1.size()) fail("/marching/a3", "must have the same length as a1");
}

MarchingScale load_marching(const json& j) {
    check_object(j, "/marching");
    MarchingScale ms;
    std::string form = as_string(require_key(j, "/marching", "form"), "/marching/form");
    ms.t0 = as_number(require_key(j, "/marching", "t0"), "/marching/t0");
    const json& td = require_key(j, "/marching", "t_domain");
    if (!td.is_array() || td.size() != 2) fail("/marching/t_domain", "expected [t_lo, t_hi]");
    ms.t_lo = as_number(td[0], "/marching/t_domain/0");
    ms.t_hi = as_number(td[1], "/marching/t_domain/1");
    if (!(ms.t_lo < ms.t_hi)) fail("/marching/t_domain", "requires t_lo < t_hi");
    if (!(ms.t0 >= ms.t_lo && ms.t0 <= ms.t_hi)) fail("/marching/t0", "must lie inside t_domain");

    if (form == "product") {
        check_keys(j, "/marching", {"form", "t0", "t_domain", "k", "m", "w", "X", "Y", "Z"});
        ProductForm f;
        f.k = as_expr(require_key(j, "/marching", "k"), "/marching/k", kS, "s");
        f.m = as_expr(require_key(j, "/marching", "m"), "/marching/m", kS, "s");
        f.w = as_expr(require_key(j, "/marching", "w"), "/marching/w", kS, "s");
        f.X = as_expr(require_key(j, "/marching", "X"), "/marching/X", kT, "t");
        f.Y = as_expr(require_key(j, "/marching", "Y"), "/marching/Y", kT, "t");
        f.Z = as_expr(require_key(j, "/marching", "Z"), "/marching/Z", kT, "t");
        ms.form = std::move(f);
    } else if (form == "polynomial") {
        check_keys(j, "/marching", {"form", "t0", "t_domain", "k", "m", "w", "X", "Y", "Z",
                                    "a1", "a2", "a3"});
        PolynomialForm f;
        load_poly_slots(j, f);
        ms.form = std::move(f);
    } else if (form == "composed") {
        check_keys(j, "/marching", {"form", "t0", "t_domain", "k", "m", "w", "X", "Y", "Z",
                                    "a1", "a2", "a3", "f", "g", "h"});
        ComposedForm f;
        load_poly_slots(j, f.core);
        f.f = as_expr(require_key(j, "/marching", "f"), "/marching/f", kW, "w");
        f.g = as_expr(require_key(j, "/marching", "g"), "/marching/g", kW, "w");
        f.h = as_expr(require_key(j, "/marching", "h"), "/marching/h", kW, "w");
        ms.form = std::move(f);
    } else if (form == "custom") {
        check_keys(j, "/marching", {"form", "t0", "t_domain", "x", "y", "z"});
        CustomForm f;
        f.x = as_expr(require_key(j, "/marching", "x"), "/marching/x", kS | kT, "s and t");
        f.y = as_expr(require_key(j, "/marching", "y"), "/marching/y", kS | kT, "s and t");
        f.z = as_expr(require_key(j, "/marching", "z"), "/marching/z", kS | kT, "s and t");
        ms.form = std::move(f);
    } else {
        fail("/marching/form", "must be one of product, polynomial, composed, custom");
    }
    return ms;
}

void load_tolerances(const json& j, Tolerances& tol) {
    check_object(j, "/tolerances");
    check_keys(j, "/tolerances", {"null", "frame", "iso", "asym", "residual", "consistency",
                                  "structural", "fd_cross"});
    auto grab = [&](const char* key, double& slot) {
        if (!j.contains(key)) return;
        double v = as_number(j[key], std::string("/tolerances/") + key);
        if (!(v > 0.0)) fail(std::string("/tolerances/") + key, "must be positive");
        slot = v;
    };
    grab("null", tol.null);
    grab("frame", tol.frame);
    grab("iso", tol.iso);
    grab("asym", tol.asym);
    grab("residual", tol.residual);
    grab("consistency", tol.consistency);
    grab("structural", tol.structural);
    grab("fd_cross", tol.fd_cross);
}

}  // namespace

Scene parse_scene(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SceneError(origin, std::string("invalid JSON: ") + e.what());
    }

    check_object(j, "/");
    check_keys(j, "", {"schema_version", "curve", "marching", "grid", "samples", "tolerances",
                       "outputs"});
    int version = as_int(require_key(j, "/", "schema_version"), "/schema_version");
    if (version != 1) fail("/schema_version", "this loader understands schema version 1 only");

    Scene scene;
    scene.member.curve = load_curve(require_key(j, "/", "curve"));
    scene.member.ms = load_marching(require_key(j, "/", "marching"));

    if (j.contains("grid")) {
        const json& g = j["grid"];
        check_object(g, "/grid");
        check_keys(g, "/grid", {"n_s", "n_t"});
        scene.member.n_s = as_int(require_key(g, "/grid", "n_s"), "/grid/n_s");
        scene.member.n_t = as_int(require_key(g, "/grid", "n_t"), "/grid/n_t");
        if (scene.member.n_s < 2) fail("/grid/n_s", "must be at least 2");
        if (scene.member.n_t < 2) fail("/grid/n_t", "must be at least 2");
    }
    if (j.contains("samples")) {
        scene.samples = as_int(j["samples"], "/samples");
        if (scene.samples < 2) fail("/samples", "must be at least 2");
    }
    if (j.contains("tolerances")) load_tolerances(j["tolerances"], scene.tol);
    if (j.contains("outputs")) {
        const json& o = j["outputs"];
        check_object(o, "/outputs");
        check_keys(o, "/outputs", {"obj", "csv"});
        if (o.contains("obj")) scene.out_obj = as_string(o["obj"], "/outputs/obj");
        if (o.contains("csv")) scene.out_csv = as_string(o["csv"], "/outputs/csv");
    }

    try {
        validate_member(scene.member);
    } catch (const SceneError&) {
        throw;
    } catch (const Error& e) {
        throw SceneError(origin.empty() ? "/" : origin, e.what());
    }
    return scene;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading scene file: " + path);
    return parse_scene(buf.str(), path);
}

}  // namespace nullsurf
