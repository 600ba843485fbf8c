#include "nullsurf/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "nullsurf/errors.hpp"
#include "nullsurf/util.hpp"

namespace nullsurf {

namespace {

void write_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move " + tmp.string() + " to " + target.string() + ": " +
                      ec.message());
    }
}

void append_vertex(std::string& out, const MVec3& p) {
    out += "v ";
    out += fmt_g17(p.c0);
    out += ' ';
    out += fmt_g17(p.c1);
    out += ' ';
    out += fmt_g17(p.c2);
    out += '\n';
}

}  // namespace

ObjCounts export_obj(const SurfaceFamilyMember& mem, const std::string& path) {
    validate_member(mem);
    if (mem.n_s < 2 || mem.n_t < 2)
        throw PreconditionError("mesh export needs a grid of at least 2 x 2");

    const std::vector<double> ss = linspace(mem.curve.s_min, mem.curve.s_max, mem.n_s);
    const std::vector<double> ts = linspace(mem.ms.t_lo, mem.ms.t_hi, mem.n_t);

    std::string out;
    out.reserve(static_cast<std::size_t>(mem.n_s) * static_cast<std::size_t>(mem.n_t) * 64);
    out += "# surface family member sampled on a ";
    out += std::to_string(mem.n_s);
    out += " x ";
    out += std::to_string(mem.n_t);
    out += " grid\n";

    out += "o surface\n";
    for (double s : ss)
        for (double t : ts) append_vertex(out, evaluate_surface(mem, s, t));
    for (int i = 0; i + 1 < mem.n_s; ++i)
        for (int j = 0; j + 1 < mem.n_t; ++j) {
            int a = i * mem.n_t + j + 1;
            int b = a + 1;
            int c = a + mem.n_t + 1;
            int d = a + mem.n_t;
            out += "f ";
            out += std::to_string(a);
            out += ' ';
            out += std::to_string(b);
            out += ' ';
            out += std::to_string(c);
            out += ' ';
            out += std::to_string(d);
            out += '\n';
        }

    out += "o curve\n";
    for (double s : ss) append_vertex(out, evaluate_curve(mem.curve, s));
    out += "l";
    const int base = mem.n_s * mem.n_t;
    for (int i = 0; i < mem.n_s; ++i) {
        out += ' ';
        out += std::to_string(base + i + 1);
    }
    out += '\n';

    write_atomic(path, out);

    ObjCounts counts;
    counts.surface_vertices = mem.n_s * mem.n_t;
    counts.curve_vertices = mem.n_s;
    counts.faces = (mem.n_s - 1) * (mem.n_t - 1);
    return counts;
}

std::size_t export_csv(const std::vector<ResidualSample>& samples, const std::string& path) {
    if (samples.empty()) throw PreconditionError("no residual samples to write");

    std::string out = "s,phi1,phi2,phi3,residual_direct,residual_reduced,null_defect,normal_norm\n";
    for (const ResidualSample& r : samples) {
        out += fmt_g17(r.s);
        out += ',';
        out += fmt_g17(r.phi1);
        out += ',';
        out += fmt_g17(r.phi2);
        out += ',';
        out += fmt_g17(r.phi3);
        out += ',';
        out += fmt_g17(r.r_direct);
        out += ',';
        out += fmt_g17(r.r_reduced);
        out += ',';
        out += fmt_g17(r.null_defect);
        out += ',';
        out += fmt_g17(r.normal_norm);
        out += '\n';
    }
    write_atomic(path, out);
    return samples.size();
}

}  // namespace nullsurf
