#include "wsg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsg/backends.hpp"
#include "wsg/plot.hpp"
#include "wsg/semigroup.hpp"
#include "wsg/series.hpp"
#include "wsg/verify.hpp"

namespace wsg {

namespace {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    long q = 0;
    std::size_t m = 0;
    std::string desc;
    std::string alpha;
    std::string box;
    std::string out;
    std::string format;
    std::string op;
    std::string kind;
    unsigned long long cap = 10'000'000ULL;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
    if (!f) throw std::runtime_error("error writing " + o.out);
}

Box checked_box(const Options& o, std::size_t m) {
    Box box = Box::parse(o.box);
    if (box.lower().size() != m)
        throw UsageError("box has dimension " + std::to_string(box.lower().size()) + " but the description has m = " +
                         std::to_string(m));
    if (box.point_count() > Int(std::to_string(o.cap), 10))
        throw CapExceeded("box has " + box.point_count().get_str() + " points, above the cap of " +
                          std::to_string(o.cap) + " (raise it with --cap)");
    return box;
}

std::string tuple_list_json(const std::vector<IntTuple>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : v) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& c : t) row.push_back(c.fits_slong_p() ? nlohmann::ordered_json(c.get_si()) : nlohmann::ordered_json(c.get_str()));
        arr.push_back(std::move(row));
    }
    return arr.dump();
}

int cmd_gen(const Options& o, const std::string& family, std::ostream& out) {
    Description d = family == "hermitian" ? hermitian_description(o.q) : genus0_description(o.m);
    emit(o, to_json_string(d) + "\n", out);
    return kExitOk;
}

int cmd_query(const Options& o, std::ostream& out) {
    const Semigroup sg(load_description(o.desc));
    IntTuple alpha = parse_tuple(o.alpha);
    if (alpha.size() != sg.m())
        throw UsageError("alpha has length " + std::to_string(alpha.size()) + " but the description has m = " +
                         std::to_string(sg.m()));
    std::string text, value_json;
    if (o.op == "dim") {
        text = sg.ell(alpha).get_str();
        value_json = text;
    } else if (o.op == "basis") {
        auto basis = sg.rr_basis_exponents(alpha);
        for (std::size_t i = 0; i < basis.size(); ++i) text += (i ? " " : "") + basis[i].to_string();
        value_json = tuple_list_json(basis);
    } else {
        bool v = o.op == "member" ? sg.member(alpha) : o.op == "maximal" ? sg.is_maximal(alpha) : sg.is_absolute_maximal(alpha);
        text = value_json = v ? "true" : "false";
    }
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["op"] = o.op;
        j["alpha"] = nlohmann::ordered_json::parse(tuple_list_json({alpha}))[0];
        j["result"] = nlohmann::ordered_json::parse(value_json);
        emit(o, j.dump() + "\n", out);
    } else {
        emit(o, text + "\n", out);
    }
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    const Semigroup sg(load_description(o.desc));
    if (o.kind == "polynomial") {
        auto poly = semigroup_polynomial(sg);
        emit(o, (o.format == "text" ? poly.to_string() : poly.to_json()) + "\n", out);
        return kExitOk;
    }
    if (o.box.empty()) throw UsageError("series " + o.kind + " requires --box");
    Box box = checked_box(o, sg.m());
    BoxSeries s = series_on_box(sg, parse_series_kind(o.kind), box);
    if (o.format == "text") {
        std::ostringstream os;
        for (const auto& [a, c] : s.support()) os << a.to_string() << ' ' << c.get_str() << '\n';
        emit(o, os.str(), out);
    } else {
        emit(o, s.to_json() + "\n", out);
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Semigroup sg(load_description(o.desc));
    Box box = checked_box(o, sg.m());
    auto results = run_verification(sg, box);
    if (o.format == "json") {
        auto j = nlohmann::ordered_json::parse(report_json(results));
        j["symmetry"] = nlohmann::ordered_json::parse(symmetry_report(sg).to_json());
        emit(o, j.dump(2) + "\n", out);
    } else {
        emit(o, report_text(results), out);
    }
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

int cmd_plot(const Options& o, std::ostream& out) {
    const Semigroup sg(load_description(o.desc));
    if (sg.m() != 2) throw UsageError("plot requires m = 2, description has m = " + std::to_string(sg.m()));
    Box box = checked_box(o, 2);
    emit(o, plot_svg(sg, box), out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Weierstrass semigroups: fixtures, queries, series, verification and plots"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "write a Description JSON for a built-in family");
    gen->require_subcommand(1);
    auto* herm = gen->add_subcommand("hermitian", "two-point Hermitian curve over F_{q^2}");
    herm->add_option("--q", o.q, "prime power >= 2")->required();
    auto* g0 = gen->add_subcommand("genus0", "m rational points on the projective line");
    g0->add_option("--m", o.m, "number of points, >= 2")->required();
    gen->add_option("--out", o.out, "output path (default stdout)");
    herm->fallthrough();
    g0->fallthrough();

    auto* query = app.add_subcommand("query", "membership, dimension, basis or maximality of one point");
    query->add_option("op", o.op)->required()->check(CLI::IsMember({"member", "dim", "basis", "maximal", "absmaximal"}));
    query->add_option("--desc", o.desc, "description file")->required();
    query->add_option("--alpha", o.alpha, "point, e.g. --alpha=-1,3")->required();
    query->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}))->default_val("text");

    auto* series = app.add_subcommand("series", "coefficients of L, Q, P on a box, or the semigroup polynomial");
    series->add_option("kind", o.kind)->required()->check(CLI::IsMember({"L", "Q", "P", "polynomial"}));
    series->add_option("--desc", o.desc, "description file")->required();
    series->add_option("--box", o.box, "box, e.g. --box=-8..9,-8..10");
    series->add_option("--out", o.out, "output path (default stdout)");
    series->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}))->default_val("json");
    series->add_option("--cap", o.cap, "maximum number of box points")->default_val(o.cap);

    auto* verify = app.add_subcommand("verify", "run every structural check on a box");
    verify->add_option("--desc", o.desc, "description file")->required();
    verify->add_option("--box", o.box, "box, e.g. --box=-3..3,-3..3")->required();
    verify->add_option("--out", o.out, "output path (default stdout)");
    verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}))->default_val("text");
    verify->add_option("--cap", o.cap, "maximum number of box points")->default_val(o.cap);

    auto* plot = app.add_subcommand("plot", "SVG of members and maximal elements (m = 2)");
    plot->add_option("--desc", o.desc, "description file")->required();
    plot->add_option("--box", o.box, "box, e.g. --box=-8..9,-8..10")->required();
    plot->add_option("--out", o.out, "output path (default stdout)");
    plot->add_option("--format", o.format)->check(CLI::IsMember({"svg"}))->default_val("svg");
    plot->add_option("--cap", o.cap, "maximum number of box points")->default_val(o.cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(o, *herm ? "hermitian" : "genus0", out);
        if (*query) return cmd_query(o, out);
        if (*series) return cmd_series(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*plot) return cmd_plot(o, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace wsg
