#include "stacky/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "stacky/fan_json.hpp"
#include "stacky/kth.hpp"
#include "stacky/mor.hpp"
#include "stacky/srco.hpp"

namespace stacky {

namespace {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Rat parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse \"" + s + "\" as a rational number");
    }
}

struct LoadedFan {
    std::string path;
    std::string digest;
    FanCandidate cand;
};

LoadedFan slurp_fan(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedFan lf;
    lf.path = path;
    lf.digest = fnv1a_hex(buf.str());
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("parse error in \"" + path + "\": " + std::string(e.what()));
    }
    lf.cand = fan_candidate_from_json(j);
    return lf;
}

StackyFan validated_or_die(const FanCandidate& cand, std::ostream& err) {
    FanValidation v = validate_fan(cand);
    if (!v.fan) {
        for (const std::string& d : v.diagnostics) err << "invalid fan: " << d << "\n";
        throw std::invalid_argument("fan failed validation (" +
                                    std::to_string(v.diagnostics.size()) + " diagnostic(s))");
    }
    return *v.fan;
}

Json report_header(const char* command, const LoadedFan& lf) {
    Json r = Json::object();
    r["command"] = command;
    r["input"] = lf.path;
    r["input_digest"] = lf.digest;
    return r;
}

Json support_to_json(const SupportInfo& s) {
    Json o = Json::object();
    o["all_maximal_cones_full_dimensional"] = s.pure_full_dim;
    o["complete"] = s.complete;
    o["convex_support"] = s.convex_support;
    return o;
}

Json graded_to_json(const GradedDimension& g) {
    Json o = Json::object();
    for (const auto& [d, c] : g.entries) o[rat_str(d)] = c;
    return o;
}

Json intvec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) {
        if (!x.fits_slong_p()) throw std::domain_error("coordinate too large for JSON output");
        a.push_back(static_cast<long long>(x.get_si()));
    }
    return a;
}

Json box_to_json(const BoxElement& b) {
    Json o = Json::object();
    o["point"] = intvec_to_json(b.point);
    o["minimal_cone"] = b.minimal_cone.ray_indices;
    Json coeffs = Json::object();
    for (const auto& [i, a] : b.coefficients) coeffs[std::to_string(i)] = rat_str(a);
    o["rotation_numbers"] = std::move(coeffs);
    o["degree"] = rat_str(b.degree());
    return o;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) rows.push_back(intvec_to_json(m.row(i)));
    return rows;
}

Json series_check_to_json(const SeriesCheck& sc) {
    Json o = Json::object();
    o["equal"] = sc.equal;
    o["first_mismatch"] = sc.first_mismatch;
    Json orders = Json::array();
    for (size_t t = 0; t < sc.lhs.size(); ++t) {
        Json row = Json::object();
        row["t_power"] = t;
        row["pushforward_side"] = sc.lhs[t];
        row["closed_form_side"] = sc.rhs[t];
        orders.push_back(std::move(row));
    }
    o["orders"] = std::move(orders);
    return o;
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    FanValidation v = validate_fan(lf.cand);
    Json r = report_header("validate", lf);
    r["valid"] = v.fan.has_value();
    r["diagnostics"] = v.diagnostics;
    if (v.fan) {
        r["rays_span_finite_index_subgroup"] = true;
        r["support"] = support_to_json(v.support);
    }
    emit(out, r);
    if (!v.fan) {
        for (const std::string& d : v.diagnostics) err << "invalid fan: " << d << "\n";
        return 1;
    }
    return 0;
}

int cmd_kdim(const std::string& path, std::ostream& out, std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    Json r = report_header("kdim", lf);
    r["k_dimension"] = k_dimension(k_presentation(f));
    emit(out, r);
    return 0;
}

int cmd_srdim(const std::string& path, const std::string& maxdeg, std::ostream& out,
              std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    SRCohomology sr = sr_dimension(f);
    Json r = report_header("srdim", lf);
    r["total"] = sr.total;
    GradedDimension shown = sr.graded;
    if (!maxdeg.empty()) {
        Rat d = parse_rational(maxdeg);
        for (auto it = shown.entries.begin(); it != shown.entries.end();)
            it = it->first > d ? shown.entries.erase(it) : std::next(it);
    }
    r["graded"] = graded_to_json(shown);
    Json sectors = Json::array();
    for (const SectorData& sd : sr.sectors) {
        Json row = box_to_json(sd.box);
        row["dimension"] = sd.dimension;
        row["graded"] = graded_to_json(sd.graded);
        sectors.push_back(std::move(row));
    }
    r["sectors"] = std::move(sectors);
    emit(out, r);
    return 0;
}

int cmd_box(const std::string& path, std::ostream& out, std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    Json r = report_header("box", lf);
    Json rows = Json::array();
    for (const BoxElement& b : box_of_fan(f)) rows.push_back(box_to_json(b));
    r["box"] = std::move(rows);
    emit(out, r);
    return 0;
}

int cmd_chern(const std::string& path, std::ostream& out, std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    ChernTable ct = chern_table(f);
    Json r = report_header("chern", lf);
    Json rows = Json::array();
    for (const ChernRow& row : ct.rows) {
        Json jr = box_to_json(row.box);
        jr["sector_dimension"] = row.sector_dimension;
        rows.push_back(std::move(jr));
    }
    r["rows"] = std::move(rows);
    r["total"] = ct.total;
    r["k_dimension"] = ct.total; // chern_table asserts the equality
    emit(out, r);
    return 0;
}

int cmd_oracle(const std::string& path, const std::string& maxdeg, std::ostream& out,
               std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    Rat d = parse_rational(maxdeg);
    Json r = report_header("oracle", lf);
    r["max_degree"] = rat_str(d);
    r["graded"] = graded_to_json(sr_truncated_oracle(f, d));
    emit(out, r);
    return 0;
}

int cmd_formula(const std::string& path, const std::string& maxdeg, std::ostream& out,
                std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    Rat d = parse_rational(maxdeg);
    FormulaCheck fc = graded_dim_formula_check(f, d);
    for (const std::string& w : fc.warnings) err << "warning: " << w << "\n";
    Json r = report_header("formula", lf);
    r["max_degree"] = rat_str(d);
    r["support_confirmed"] = fc.support_confirmed;
    r["warnings"] = fc.warnings;
    r["equal"] = fc.equal;
    Json rows = Json::array();
    for (const FormulaRow& row : fc.rows) {
        Json jr = Json::object();
        jr["degree"] = rat_str(row.degree);
        jr["product_side"] = row.product_side.get_str();
        jr["sector_side"] = row.sector_side;
        rows.push_back(std::move(jr));
    }
    r["rows"] = std::move(rows);
    emit(out, r);
    return 0;
}

int cmd_blowup(const std::string& path, const std::vector<int>& cone,
               const std::vector<long>& weights, int push_order, std::ostream& out,
               std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    if (cone.size() != weights.size())
        throw std::invalid_argument("--weights must list exactly one weight per --cone index");
    std::map<int, long> weight_of;
    for (size_t i = 0; i < cone.size(); ++i)
        if (!weight_of.emplace(cone[i], weights[i]).second)
            throw std::invalid_argument("--cone repeats ray index " + std::to_string(cone[i]));
    Cone c;
    std::vector<Int> h;
    for (const auto& [i, w] : weight_of) {
        c.ray_indices.push_back(i);
        h.push_back(Int(w));
    }

    BlowupMorphism b = weighted_blowup(f, c, h);
    Json r = report_header("blowup", lf);
    r["center"] = c.ray_indices;
    Json wj = Json::array();
    for (const Int& x : b.weights) wj.push_back(static_cast<long long>(x.get_si()));
    r["weights"] = std::move(wj);
    r["fan"] = fan_to_json(b.base.source);
    r["new_ray"] = b.new_ray;
    r["alpha"] = matrix_to_json(b.base.alpha);

    Json pushes = Json::array();
    bool oracle_ok = true;
    for (int l = 0; l <= push_order; ++l) {
        Json row = Json::object();
        row["power"] = l;
        KClass closed = push_R_inverse_power(b, Int(l));
        row["closed_form"] = k_to_string(closed);
        if (l >= 1) {
            KClass orc = push_hilbert_oracle(b, Int(l));
            row["hilbert_oracle"] = k_to_string(orc);
            bool match = closed == orc;
            row["match"] = match;
            oracle_ok = oracle_ok && match;
        }
        pushes.push_back(std::move(row));
    }
    r["pushforward"] = std::move(pushes);
    r["closed_form_matches_hilbert_oracle"] = oracle_ok;
    r["series_identity"] = series_check_to_json(push_series_identity_check(b, push_order));
    emit(out, r);
    return 0;
}

int cmd_reweight(const std::string& path, int ray, long factor, int push_order, std::ostream& out,
                 std::ostream& err) {
    LoadedFan lf = slurp_fan(path);
    StackyFan f = validated_or_die(lf.cand, err);
    ReweightMorphism m = codim1_reweight(f, ray, Int(factor));
    Json r = report_header("reweight", lf);
    r["ray"] = ray;
    r["factor"] = factor;
    r["fan"] = fan_to_json(m.base.source);
    r["alpha"] = matrix_to_json(m.base.alpha);
    Json pushes = Json::array();
    for (long mm = 1; mm <= 2 * factor; ++mm) {
        Json row = Json::object();
        row["power"] = mm;
        row["class"] = k_to_string(push_codim1(m, Int(mm)));
        pushes.push_back(std::move(row));
    }
    r["pushforward"] = std::move(pushes);
    r["series_identity"] = series_check_to_json(push_codim1_series_check(m, push_order));
    emit(out, r);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact K-theory and SR-cohomology calculator for stacky fans"};
    app.require_subcommand(1);

    std::string path, maxdeg, srdim_maxdeg;
    std::vector<int> cone;
    std::vector<long> weights;
    int ray = 0, push_order = 8;
    long factor = 1;

    auto* v = app.add_subcommand("validate", "check a fan document and report support properties");
    v->add_option("file", path, "fan JSON document")->required();

    auto* kd = app.add_subcommand("kdim", "dimension of the K-theory ring");
    kd->add_option("file", path)->required();

    auto* sd = app.add_subcommand("srdim", "graded SR-cohomology dimensions by sector");
    sd->add_option("file", path)->required();
    sd->add_option("--max-degree", srdim_maxdeg, "only list graded entries up to this degree");

    auto* bx = app.add_subcommand("box", "box elements of the fan");
    bx->add_option("file", path)->required();

    auto* ch = app.add_subcommand("chern", "box/sector table with the K-dimension cross-check");
    ch->add_option("file", path)->required();

    auto* orc = app.add_subcommand("oracle", "direct truncated SR-cohomology computation");
    orc->add_option("file", path)->required();
    orc->add_option("--max-degree", maxdeg, "rational degree bound, e.g. 4 or 9/2")
        ->default_val("4");

    auto* fm = app.add_subcommand("formula", "compare graded dimensions with the product formula");
    fm->add_option("file", path)->required();
    fm->add_option("--max-degree", maxdeg, "rational degree bound")->default_val("4");

    auto* bl = app.add_subcommand("blowup", "weighted star subdivision and its pushforwards");
    bl->add_option("file", path)->required();
    bl->add_option("--cone", cone, "center ray indices, comma separated")
        ->required()
        ->delimiter(',');
    bl->add_option("--weights", weights, "positive weights, one per center ray")
        ->required()
        ->delimiter(',');
    bl->add_option("--push-order", push_order, "series truncation order")->default_val(8);

    auto* rw = app.add_subcommand("reweight", "multiply one ray marking and push forward");
    rw->add_option("file", path)->required();
    rw->add_option("--ray", ray, "ray index")->required();
    rw->add_option("--factor", factor, "positive multiplier")->required();
    rw->add_option("--push-order", push_order, "series truncation order")->default_val(8);

    std::vector<std::string> argv = args;
    try {
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (v->parsed()) return cmd_validate(path, out, err);
        if (kd->parsed()) return cmd_kdim(path, out, err);
        if (sd->parsed()) return cmd_srdim(path, srdim_maxdeg, out, err);
        if (bx->parsed()) return cmd_box(path, out, err);
        if (ch->parsed()) return cmd_chern(path, out, err);
        if (orc->parsed()) return cmd_oracle(path, maxdeg, out, err);
        if (fm->parsed()) return cmd_formula(path, maxdeg, out, err);
        if (bl->parsed()) return cmd_blowup(path, cone, weights, push_order, out, err);
        if (rw->parsed()) return cmd_reweight(path, ray, factor, push_order, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 1;
}

} // namespace stacky
