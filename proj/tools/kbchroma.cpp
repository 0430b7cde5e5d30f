// Command-line front end: polynomial export, point evaluation, coloring
// counts, chromatic zeros, locus traces, q_c, crossings, W, catalog dumps,
// and the verification suites. Outputs are deterministic: identical
// invocations produce byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kbchroma/assembler.hpp"
#include "kbchroma/catalog.hpp"
#include "kbchroma/catalog_json.hpp"
#include "kbchroma/oracle.hpp"
#include "kbchroma/spectra.hpp"
#include "kbchroma/zeros.hpp"

using namespace kbchroma;
using json = nlohmann::ordered_json;

namespace {

// --out is used verbatim when absolute; otherwise resolved against
// KBCHROMA_OUT_DIR when that is set. Empty --out means stdout.
std::string resolve_out(const std::string& out) {
    if (out.empty() || out.front() == '/') return out;
    const char* dir = std::getenv("KBCHROMA_OUT_DIR");
    if (!dir || !*dir) return out;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + out;
}

void write_output(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::string path = resolve_out(out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

Rational parse_rational(const std::string& s) {
    // accepts "7/2", "-3", and plain decimals like "4.25"; base fixed to 10
    // (the gmp default would read a leading zero as octal)
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r(s, 10);
        r.canonicalize();
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long scale = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
    Rational r(digits, 10);
    r /= scale;
    r.canonicalize();
    return r;
}

json report_to_json(const Report& rep) {
    json jr;
    jr["title"] = rep.title;
    jr["all_ok"] = rep.all_ok();
    json lines = json::array();
    for (const auto& l : rep.lines) {
        json jl;
        jl["name"] = l.name;
        jl["ok"] = l.ok;
        if (!l.detail.empty()) jl["detail"] = l.detail;
        lines.push_back(std::move(jl));
    }
    jr["checks"] = std::move(lines);
    return jr;
}

int emit_report(const Report& rep, const std::string& out) {
    if (out.empty()) {
        std::cout << rep.title << "\n";
        for (const auto& l : rep.lines)
            std::cout << (l.ok ? "  ok   " : "  FAIL ") << l.name
                      << (l.detail.empty() ? "" : "  [" + l.detail + "]") << "\n";
        std::cout << (rep.all_ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
    } else {
        write_output(out, report_to_json(rep).dump(2) + "\n");
    }
    return rep.all_ok() ? 0 : 1;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic polynomials for chains of complete graphs (b = 5, 6)"};
    app.require_subcommand(1);

    int b = 5, m = 2;
    std::string boundary = "torus", out, qstr = "0";
    long precision = 256;
    int threads = 2, resolution = 800, max_iters = 400;
    double tol = 1e-9;

    // poly: expand P as integer coefficients
    auto* poly_cmd = app.add_subcommand("poly", "expand the chromatic polynomial");
    poly_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    poly_cmd->add_option("--boundary", boundary)->check(CLI::IsMember({"torus", "klein"}));
    poly_cmd->add_option("--m", m)->check(CLI::PositiveNumber)->required();
    poly_cmd->add_option("--out", out);
    poly_cmd->callback([&] {
        auto res = assemble(b, boundary_from_string(boundary), m);
        json j;
        j["b"] = b;
        j["boundary"] = boundary;
        j["m"] = m;
        j["degree"] = res.poly.degree();
        if (m == 1)
            j["note"] = (boundary == "klein" && b % 2 == 0)
                            ? "formal (m=1: loop-free klein wrap, reduces to one slice)"
                            : "formal (m=1: self-linking loops)";
        json coeffs = json::array();
        for (int k = 0; k <= res.poly.degree(); ++k) coeffs.push_back(res.poly.coeff(k).get_str());
        j["coefficients"] = std::move(coeffs);
        write_output(out, j.dump(2) + "\n");
    });

    // eval: P at a rational or complex point without expanding
    auto* eval_cmd = app.add_subcommand("eval", "evaluate the chromatic polynomial at a point");
    double ev_re = 0, ev_im = 0;
    bool have_complex = false;
    eval_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    eval_cmd->add_option("--boundary", boundary)->check(CLI::IsMember({"torus", "klein"}));
    eval_cmd->add_option("--m", m)->check(CLI::PositiveNumber)->required();
    eval_cmd->add_option("--q", qstr, "rational point, e.g. 7 or 7/2 or 3.5");
    auto* re_opt = eval_cmd->add_option("--re", ev_re, "real part (complex evaluation)");
    eval_cmd->add_option("--im", ev_im, "imaginary part")->needs(re_opt);
    eval_cmd->add_option("--precision", precision)->check(CLI::Range(128L, 65536L));
    eval_cmd->add_option("--out", out);
    eval_cmd->callback([&] {
        const Catalog& cat = catalog(b, boundary_from_string(boundary));
        json j;
        j["b"] = b;
        j["boundary"] = boundary;
        j["m"] = m;
        have_complex = re_opt->count() > 0;
        if (have_complex) {
            auto v = eval_at(cat, m, ApComplex::from(ev_re, ev_im, precision));
            j["q"] = {{"re", ev_re}, {"im", ev_im}};
            j["value"] = {{"re", v.re.str()}, {"im", v.im.str()}};
        } else {
            Rational q = parse_rational(qstr);
            j["q"] = q.get_str();
            j["value"] = eval_at(cat, m, q).get_str();
        }
        if (m == 1) j["note"] = "formal (m=1: self-linking loops)";
        write_output(out, j.dump(2) + "\n");
    });

    // oracle: transfer coloring count at integer q
    auto* oracle_cmd = app.add_subcommand("oracle", "exact proper-coloring count");
    long oq = 0;
    oracle_cmd->add_option("--b", b)->check(CLI::Range(1, 8))->required();
    oracle_cmd->add_option("--boundary", boundary)->check(CLI::IsMember({"torus", "klein"}));
    oracle_cmd->add_option("--m", m)->check(CLI::PositiveNumber)->required();
    oracle_cmd->add_option("--q", oq)->check(CLI::NonNegativeNumber)->required();
    oracle_cmd->callback([&] {
        auto g = build_graph(b, m, boundary_from_string(boundary));
        std::cout << count_colorings_dp(g, oq).get_str() << "\n";
    });

    // zeros: CSV scatter, the figure datasets
    auto* zeros_cmd = app.add_subcommand("zeros", "chromatic zeros of the m-slice chain");
    zeros_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    zeros_cmd->add_option("--boundary", boundary)->check(CLI::IsMember({"torus", "klein"}));
    zeros_cmd->add_option("--m", m)->check(CLI::PositiveNumber)->required();
    zeros_cmd->add_option("--precision", precision)->check(CLI::Range(128L, 65536L));
    zeros_cmd->add_option("--max-iters", max_iters)->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--out", out);
    zeros_cmd->callback([&] {
        auto zs = find_zeros(b, boundary_from_string(boundary), m, precision, max_iters);
        std::string csv = "re,im,residual,multiplicity\n";
        int unconverged = 0;
        for (const auto& r : zs.roots) {
            csv += format_double(r.z.re.to_double()) + "," + format_double(r.z.im.to_double()) +
                   "," + format_double(r.residual.to_double()) + "," +
                   std::to_string(r.multiplicity) + "\n";
            if (!r.converged) ++unconverged;
        }
        write_output(out, csv);
        if (unconverged > 0)
            std::cerr << "warning: " << unconverged
                      << " root(s) did not reach the convergence threshold after " << max_iters
                      << " sweeps\n";
    });

    // locus: CSV boundary trace
    auto* locus_cmd = app.add_subcommand("locus", "dominance-boundary trace over a complex window");
    std::vector<double> window;
    locus_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    locus_cmd
        ->add_option("--window", window, "re_lo,re_hi,im_lo,im_hi (default -1,b+1,-(b-1),b-1)")
        ->expected(4)
        ->delimiter(',');
    locus_cmd->add_option("--res", resolution)->check(CLI::Range(2, 4000));
    locus_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    locus_cmd->add_option("--precision", precision)->check(CLI::Range(24L, 65536L));
    locus_cmd->add_option("--threads", threads)->check(CLI::Range(1, 64));
    locus_cmd->add_option("--out", out);
    locus_cmd->callback([&] {
        if (window.empty())
            window = {-1.0, double(b + 1), -double(b - 1), double(b - 1)};
        auto trace = trace_locus(b, {window[0], window[1], window[2], window[3]}, resolution, tol,
                                 precision, threads);
        std::string csv = "re,im,gap,dominant_d,dominant_j\n";
        for (const auto& p : trace.points)
            csv += format_double(p.re) + "," + format_double(p.im) + "," + format_double(p.gap) +
                   "," + std::to_string(p.d) + "," + std::to_string(p.j) + "\n";
        write_output(out, csv);
    });

    // qc
    auto* qc_cmd = app.add_subcommand("qc", "largest real crossing of the zero locus");
    qc_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    qc_cmd->callback([&] {
        auto r = qc_solve(b);
        std::cout << "q_c(" << b << ") = " << format_double(r.qc)
                  << "  quintic residual = " << format_double(r.quintic_residual) << "\n";
    });

    // crossings
    auto* cross_cmd = app.add_subcommand("crossings", "real-axis dominance changes");
    double lo = -1, hi = 0;
    bool hi_set = false;
    cross_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    cross_cmd->add_option("--lo", lo);
    auto* hi_opt = cross_cmd->add_option("--hi", hi);
    cross_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    cross_cmd->callback([&] {
        hi_set = hi_opt->count() > 0;
        double h = hi_set ? hi : b + 1.0;
        auto scan = real_axis_crossings(b, lo, h, tol);
        for (double c : scan.crossings) std::cout << format_double(c) << "\n";
        for (const auto& iv : scan.intervals)
            std::cerr << "dominant (" << iv.dominant_dj.first << "," << iv.dominant_dj.second
                      << ") on [" << format_double(iv.lo) << ", " << format_double(iv.hi) << "]\n";
    });

    // w
    auto* w_cmd = app.add_subcommand("w", "ground-state degeneracy per site, q > q_c");
    w_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    w_cmd->add_option("--q", qstr)->required();
    w_cmd->add_option("--precision", precision)->check(CLI::Range(64L, 65536L));
    w_cmd->callback([&] {
        std::cout << w_function(b, parse_rational(qstr), precision).str(20) << "\n";
    });

    // catalog dump
    auto* catalog_cmd = app.add_subcommand("catalog", "catalog data");
    auto* dump_cmd = catalog_cmd->add_subcommand("dump", "emit the full catalog as JSON");
    dump_cmd->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    dump_cmd->add_option("--boundary", boundary)->check(CLI::IsMember({"torus", "klein"}));
    dump_cmd->add_option("--out", out);
    dump_cmd->callback(
        [&] { write_output(out, dump_catalog_json(catalog(b, boundary_from_string(boundary)))); });

    // verify suites
    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->require_subcommand(1);
    int exit_code = 0;

    auto* vid = verify_cmd->add_subcommand("identities", "catalog identities and sums");
    vid->add_option("--b", b)->check(CLI::IsMember({5, 6}))->required();
    vid->add_option("--out", out);
    vid->callback([&] { exit_code = emit_report(verify_identities(b), out); });

    auto* vor = verify_cmd->add_subcommand("oracle", "expansion vs transfer count grid");
    vor->add_option("--out", out);
    vor->callback([&] { exit_code = emit_report(verify_oracle_grid(), out); });

    auto* vth = verify_cmd->add_subcommand("theorems", "theorems 1-3 and lemma 2");
    int b_max = 10;
    vth->add_option("--b-max", b_max)->check(CLI::Range(4, 12));
    vth->add_option("--out", out);
    vth->callback([&] {
        Report all;
        all.title = "theorem suite";
        for (int bb : {5, 6}) {
            for (auto rep : {verify_theorem1(bb), verify_theorem2(bb)})
                for (const auto& l : rep.lines) all.add(rep.title + ": " + l.name, l.ok, l.detail);
        }
        auto t3 = verify_theorem3(4, b_max);
        for (const auto& l : t3.lines) all.add(t3.title + ": " + l.name, l.ok, l.detail);
        exit_code = emit_report(all, out);
    });

    auto* vcj = verify_cmd->add_subcommand("conjectures", "[21] family, transforms, level sums");
    vcj->add_option("--out", out);
    vcj->callback([&] {
        Report all;
        all.title = "conjecture suite";
        for (int bb : {5, 6})
            for (auto rep : {verify_lambda21(bb), verify_klein_transform_conjectures(bb),
                             verify_level_sums(bb), verify_crossings(bb)})
                for (const auto& l : rep.lines) all.add(rep.title + ": " + l.name, l.ok, l.detail);
        exit_code = emit_report(all, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
