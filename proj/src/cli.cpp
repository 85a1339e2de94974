#include "skeletal/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeletal/cantor.hpp"
#include "skeletal/constructions.hpp"
#include "skeletal/digits.hpp"
#include "skeletal/exponents.hpp"
#include "skeletal/lattice.hpp"
#include "skeletal/oracle.hpp"
#include "skeletal/report.hpp"
#include "skeletal/shadows.hpp"

namespace skeletal {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        if (!item.empty()) values.push_back(rational_from_string(item));
        start = comma + 1;
    }
    if (values.empty()) throw ValidationError("expected a comma-separated rational list");
    return values;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        if (!item.empty()) values.push_back(std::stoi(item));
        start = comma + 1;
    }
    if (values.empty()) throw ValidationError("expected a comma-separated integer list");
    return values;
}

Json cover_report_json(const std::string& mode, const CoverReport& report) {
    Json j;
    j["mode"] = mode;
    j["satisfied"] = report.satisfied;
    j["checked"] = report.radii.size();
    j["failures"] = report.failure_indices;
    j["witnesses"] = report.radii;
    return j;
}

Json stage_spec_json(const StageSpec& spec) {
    Json stages = Json::array();
    for (const Stage& st : spec.stages) {
        Json s;
        s["i"] = st.index;
        s["scale"] = rational_to_string(st.scale);
        s["ell"] = st.ell;
        s["diameter"] = rational_to_string(st.diameter);
        s["min_gap"] = rational_to_string(st.min_gap);
        stages.push_back(std::move(s));
    }
    Json j;
    j["label"] = spec.label;
    j["stages"] = std::move(stages);
    j["geometric_decay"] = spec.geometric_decay;
    j["nesting"] = spec.nesting;
    return j;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string shape;
    int n = 0;
    int k = 0;
    int l = 1;
    std::int64_t p = 0;
    std::int64_t point_cap = 10'000'000;
    std::string out_b;
    std::string out_s;
};

int run_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    ConstructionResult result = [&] {
        if (a.shape == "skeleton") return skeleton_construction(a.n, a.k, a.p, a.point_cap);
        if (a.shape == "nl") return nl_construction(a.n, a.l, a.p, a.point_cap);
        return orthoplex_construction(a.n, a.p, a.point_cap);
    }();
    if (!a.out_b.empty()) write_point_set(a.out_b, result.B);
    if (!a.out_s.empty()) write_point_set(a.out_s, result.S);
    err << "construct: |B|=" << result.B.size() << " |S|=" << result.S.size() << "\n";
    Json j;
    j["shape"] = a.shape;
    j["n"] = result.n;
    if (a.shape == "skeleton") j["k"] = result.param;
    if (a.shape == "nl") j["l"] = result.param;
    j["p"] = result.p;
    j["i"] = result.i;
    j["scale"] = result.scale;
    j["sizeB"] = result.B.size();
    j["sizeS"] = result.S.size();
    emit_json(out, j);
    return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string mode;
    int k = 0;
    int l = 1;
    std::string b_path;
    std::string s_path;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
    const PointSet B = read_point_set(a.b_path);
    const PointSet S = read_point_set(a.s_path);
    CoverReport report;
    if (a.mode == "skeleton")
        report = verify_cover(B, S, a.k);
    else if (a.mode == "nl")
        report = verify_nl_condition(B, S, a.l);
    else
        report = verify_orthoplex_cover(B, S);
    emit_json(out, cover_report_json(a.mode, report));
    return report.satisfied ? 0 : 1;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string op;
    std::string s_path;
    std::string shape = "skeleton";
    int k = 0;
    std::int64_t r_max = 1;
    std::int64_t node_budget = 10'000'000;
    bool dump_assignment = false;
};

int run_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
    const PointSet S = read_point_set(a.s_path);
    const ShapeKind kind = a.shape == "orthoplex" ? ShapeKind::Orthoplex : ShapeKind::Skeleton;
    if (a.op == "min_cover") {
        CoverInstance inst{S, kind, a.k, a.r_max};
        const OracleResult res = min_cover(inst, a.node_budget);
        if (a.dump_assignment) {
            Json j;
            j["size_s"] = S.size();
            j["min_size"] = res.min_size;
            j["r_max"] = a.r_max;
            j["nodes_explored"] = res.nodes_explored;
            j["complete"] = res.complete;
            Json assign = Json::array();
            for (std::size_t idx = 0; idx < res.assignment.size(); ++idx) {
                Json entry;
                auto row = S.row(idx);
                entry["point"] = std::vector<Coord>(row.begin(), row.end());
                entry["r"] = res.assignment[idx];
                assign.push_back(std::move(entry));
            }
            j["assignment"] = std::move(assign);
            emit_json(out, j);
        } else {
            out << "size_s,min_size,r_max,nodes_explored\n"
                << S.size() << ',' << res.min_size << ',' << a.r_max << ','
                << res.nodes_explored << '\n';
        }
        if (!res.complete) {
            err << "oracle: node budget exhausted; result is not proven minimal\n";
            return 3;
        }
        return 0;
    }
    // sweep: nested lexicographic prefixes of S, one instance per size.
    std::vector<CoverInstance> instances;
    for (std::size_t size = 1; size <= S.size(); ++size) {
        std::vector<Coord> flat(S.flat().begin(), S.flat().begin() + size * S.dim());
        instances.push_back(
            {PointSet::from_flat_sorted(S.dim(), std::move(flat)), kind, a.k, a.r_max});
    }
    const std::vector<SweepRow> rows = min_cover_sweep(instances, a.node_budget);
    out << "size_s,min_size,r_max,nodes_explored\n";
    bool all_complete = true;
    for (const SweepRow& row : rows) {
        out << row.size_s << ',' << row.min_size << ',' << row.r_max << ','
            << row.nodes_explored << '\n';
        all_complete = all_complete && row.complete;
    }
    if (!all_complete) {
        err << "oracle: node budget exhausted during sweep\n";
        return 3;
    }
    return 0;
}

// --- exponents ---------------------------------------------------------------

struct ExponentArgs {
    int n = 0;
    int k = 0;
    std::string alpha;
    bool iterate = false;
    std::string tol = "1e-9";
    int max_steps = 5000;
    bool table = false;
    int n_max = 6;
};

int run_exponents(const ExponentArgs& a, std::ostream& out, std::ostream&) {
    if (a.table) {
        const auto rows = exponent_rows(a.n_max, rational_from_string(a.tol));
        out << exponent_csv(rows);
        return 0;
    }
    Json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["beta"] = rational_to_string(beta_exponent(a.n, a.k));
    if (!a.alpha.empty()) {
        const Rational alpha = rational_from_string(a.alpha);
        j["alpha"] = rational_to_string(alpha);
        j["R"] = rational_to_string(rate_R(a.n, a.k, alpha));
        j["f"] = rational_to_string(f_alpha(a.n, a.k, alpha));
    }
    if (a.iterate) {
        const ExponentReport rep =
            iterate_f(a.n, a.k, rational_from_string(a.tol), a.max_steps);
        Json trace = Json::array();
        for (const Rational& q : rep.trace) trace.push_back(rational_to_string(q));
        j["trace"] = std::move(trace);
        j["converged"] = rep.converged;
        j["converged_at"] = rep.converged_at;
    }
    emit_json(out, j);
    return 0;
}

// --- shadow ------------------------------------------------------------------

struct ShadowArgs {
    std::string op;
    std::int64_t m = 0;
    int b = 0;
    int c = 1;
    std::string family_path;
    std::string out_path;
};

int run_shadow(const ShadowArgs& a, std::ostream& out, std::ostream&) {
    if (a.op == "bounds") {
        Json j;
        j["m"] = a.m;
        j["b"] = a.b;
        j["c"] = a.c;
        Json cascade = Json::array();
        for (const CascadeTerm& term : cascade_representation(a.m, a.b)) {
            Json t;
            t["a"] = term.a;
            t["arity"] = term.arity;
            cascade.push_back(std::move(t));
        }
        j["cascade"] = std::move(cascade);
        j["kk"] = kk_shadow_bound(a.m, a.b, a.c);
        j["lovasz"] = format_double(lovasz_shadow_bound(a.m, a.b, a.c));
        emit_json(out, j);
        return 0;
    }
    const SetFamily family = a.op == "exact" ? read_set_family(a.family_path)
                                             : colex_segment(a.m, a.b);
    const SetFamily result = a.op == "exact" ? exact_shadow(family, a.c) : family;
    if (a.out_path.empty()) {
        write_set_family(out, result);
    } else {
        write_set_family(a.out_path, result);
        out << result.size() << '\n';
    }
    return 0;
}

// --- digits ------------------------------------------------------------------

struct DigitArgs {
    std::string op;
    int i = 2;
    int n = 1;
    int p = 2;
    std::int64_t R = 1;
};

int run_digits(const DigitArgs& a, std::ostream& out, std::ostream&) {
    if (a.op == "dump") {
        const DigitSet D = build_digit_set(a.i, a.n);
        for (Coord v : D.members) out << v << '\n';
        return 0;
    }
    const MultiScaleSet A = build_multiscale_set(a.p, a.n);
    if (a.op == "multiscale") {
        for (Coord v : A.members) out << v << '\n';
        return 0;
    }
    out << "R,count\n" << a.R << ',' << interval_cover_count(A.members, a.R) << '\n';
    return 0;
}

// --- cantor ------------------------------------------------------------------

struct CantorArgs {
    std::string op;
    int n = 1;
    std::string t = "1";
    int depth = 3;
    std::string family = "T";
    std::string scales;
};

int run_cantor(const CantorArgs& a, std::ostream& out, std::ostream&) {
    const VertexStages stages = vertex_stages(a.n, rational_from_string(a.t), a.depth);
    const StageSpec& spec = a.family == "A" ? stages.A : stages.T;
    if (a.op == "stages") {
        Json j;
        j["A"] = stage_spec_json(stages.A);
        j["T"] = stage_spec_json(stages.T);
        emit_json(out, j);
        return 0;
    }
    if (a.op == "sum") {
        const TruncatedSum sum = truncated_sum(spec, a.depth);
        for (const Rational& q : sum.points) out << rational_to_string(q) << '\n';
        return 0;
    }
    // Default scale ladder: the per-stage separations.
    std::vector<Rational> scales;
    if (a.scales.empty()) {
        for (const Stage& st : spec.stages) scales.push_back(st.min_gap);
    } else {
        scales = parse_rational_list(a.scales);
    }
    const TruncatedSum sum = truncated_sum(spec, a.depth);
    if (a.op == "boxcount") {
        std::vector<ScaleRow> rows;
        for (const Rational& scale : scales)
            rows.push_back({scale, box_count(sum.points, scale), 0.0});
        out << box_count_csv(rows);
        return 0;
    }
    // fit
    const DimensionEstimate est = dimension_estimate(sum.points, scales);
    Json j;
    j["label"] = spec.label;
    j["depth"] = a.depth;
    j["slope"] = format_double(est.slope);
    Json rows = Json::array();
    for (const ScaleRow& row : est.rows) {
        Json r;
        r["scale"] = rational_to_string(row.scale);
        r["count"] = row.count;
        r["ratio"] = format_double(row.ratio);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    Json ratios = Json::array();
    for (double v : density_ratio_table(spec)) ratios.push_back(format_double(v));
    j["stage_density_ratios"] = std::move(ratios);
    j["geometric_decay"] = spec.geometric_decay;
    j["nesting"] = spec.nesting;
    emit_json(out, j);
    return 0;
}

// --- report ------------------------------------------------------------------

struct ReportArgs {
    std::string study;
    int n = 2;
    int k = 0;
    int i_min = 2;
    int i_max = 6;
    std::string p_list = "2,3";
    int n_max = 6;
    std::string t = "1";
    int depth = 3;
    std::string family = "T";
};

int run_report(const ReportArgs& a, std::ostream& out, std::ostream&) {
    if (a.study == "skeleton" || a.study == "orthoplex") {
        const std::vector<ScalingRow> rows =
            a.study == "skeleton" ? skeleton_scaling_rows(a.n, a.k, a.i_min, a.i_max)
                                  : orthoplex_scaling_rows(a.n, a.i_min, a.i_max);
        out << scaling_csv(rows);
        out << "# fitted_slope=" << format_double(scaling_slope(rows)) << '\n';
        return 0;
    }
    if (a.study == "multiscale") {
        const std::vector<int> ps = parse_int_list(a.p_list);
        out << multiscale_csv(multiscale_cover_rows(a.n, ps));
        return 0;
    }
    if (a.study == "exponents") {
        out << exponent_csv(exponent_rows(a.n_max));
        return 0;
    }
    // cantor: box-count ladder of the requested family at the stage separations.
    const VertexStages stages = vertex_stages(a.n, rational_from_string(a.t), a.depth);
    const StageSpec& spec = a.family == "A" ? stages.A : stages.T;
    const TruncatedSum sum = truncated_sum(spec, a.depth);
    std::vector<Rational> scales;
    for (const Stage& st : spec.stages) scales.push_back(st.min_gap);
    const DimensionEstimate est = dimension_estimate(sum.points, scales);
    out << box_count_csv(est.rows);
    out << "# fitted_slope=" << format_double(est.slope) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "skeletal: discrete cube-skeleton covering toolkit.\n"
        "Data goes to stdout, progress to stderr.\n"
        "Exit codes: 0 success, 1 cover verification failed, 2 usage/input error,\n"
        "3 size or node budget exhausted.\n"
        "File formats: point sets are one point per line (space-separated integers,\n"
        "'#' comments); set families are one member per line (increasing integers);\n"
        "rationals are written as num/den."};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand(
        "construct", "Build a cover set B and target set S; JSON summary on stdout");
    construct->add_option("--shape", construct_args.shape, "skeleton|nl|orthoplex")
        ->required()
        ->check(CLI::IsMember({"skeleton", "nl", "orthoplex"}));
    construct->add_option("--n", construct_args.n, "dimension")->required();
    construct->add_option("--k", construct_args.k, "skeleton parameter (skeleton shape)");
    construct->add_option("--l", construct_args.l, "corner arity (nl shape)");
    construct->add_option("--p", construct_args.p, "number of target points")->required();
    construct->add_option("--point-cap", construct_args.point_cap, "size budget");
    construct->add_option("--out-b", construct_args.out_b, "write B here (PointSet format)");
    construct->add_option("--out-s", construct_args.out_s, "write S here (PointSet format)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "Check a cover condition; JSON report with witness radii on stdout");
    verify->add_option("--mode", verify_args.mode, "skeleton|nl|orthoplex")
        ->required()
        ->check(CLI::IsMember({"skeleton", "nl", "orthoplex"}));
    verify->add_option("--k", verify_args.k, "skeleton parameter");
    verify->add_option("--l", verify_args.l, "corner arity (nl mode)");
    verify->add_option("--b", verify_args.b_path, "cover set file")->required();
    verify->add_option("--s", verify_args.s_path, "target set file")->required();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand(
        "oracle", "Exact minimal-cover search; CSV size_s,min_size,r_max,nodes_explored");
    oracle->add_option("--op", oracle_args.op, "min_cover|sweep")
        ->required()
        ->check(CLI::IsMember({"min_cover", "sweep"}));
    oracle->add_option("--s", oracle_args.s_path, "target set file")->required();
    oracle->add_option("--shape", oracle_args.shape, "skeleton|orthoplex")
        ->check(CLI::IsMember({"skeleton", "orthoplex"}));
    oracle->add_option("--k", oracle_args.k, "skeleton parameter");
    oracle->add_option("--r-max", oracle_args.r_max, "radius cap")->required();
    oracle->add_option("--node-budget", oracle_args.node_budget, "search node budget");
    oracle->add_flag("--assignment", oracle_args.dump_assignment,
                     "dump the optimal assignment as JSON instead of CSV");

    ExponentArgs exponent_args;
    auto* exponents = app.add_subcommand("exponents",
                                         "Covering exponents: closed forms and iteration");
    exponents->add_option("--n", exponent_args.n, "dimension");
    exponents->add_option("--k", exponent_args.k, "skeleton parameter");
    exponents->add_option("--alpha", exponent_args.alpha, "evaluate R and f at this rational");
    exponents->add_flag("--iterate", exponent_args.iterate, "iterate f from 0 and dump trace");
    exponents->add_option("--tol", exponent_args.tol, "convergence tolerance (rational)");
    exponents->add_option("--max-steps", exponent_args.max_steps, "iteration cap");
    exponents->add_flag("--table", exponent_args.table,
                        "CSV n,k,beta_num,beta_den,converged_at for all n <= n-max");
    exponents->add_option("--n-max", exponent_args.n_max, "table size");

    ShadowArgs shadow_args;
    auto* shadow = app.add_subcommand("shadow", "Shadow bounds and families");
    shadow->add_option("--op", shadow_args.op, "bounds|exact|colex")
        ->required()
        ->check(CLI::IsMember({"bounds", "exact", "colex"}));
    shadow->add_option("--m", shadow_args.m, "family size");
    shadow->add_option("--b", shadow_args.b, "member arity");
    shadow->add_option("--c", shadow_args.c, "shadow depth");
    shadow->add_option("--family", shadow_args.family_path, "family file (exact op)");
    shadow->add_option("--out", shadow_args.out_path, "write family here instead of stdout");

    DigitArgs digit_args;
    auto* digits = app.add_subcommand("digits",
                                      "Digit sets, multiscale sets, interval cover counts");
    digits->add_option("--op", digit_args.op, "dump|multiscale|cover")
        ->required()
        ->check(CLI::IsMember({"dump", "multiscale", "cover"}));
    digits->add_option("--i", digit_args.i, "base (dump)");
    digits->add_option("--n", digit_args.n, "digit-pair count");
    digits->add_option("--p", digit_args.p, "multiscale stage bound");
    digits->add_option("--R", digit_args.R, "interval length (cover)");

    CantorArgs cantor_args;
    auto* cantor = app.add_subcommand("cantor",
                                      "Iterated-sum stages, box counts, dimension fits");
    cantor->add_option("--op", cantor_args.op, "stages|sum|boxcount|fit")
        ->required()
        ->check(CLI::IsMember({"stages", "sum", "boxcount", "fit"}));
    cantor->add_option("--n", cantor_args.n, "dimension");
    cantor->add_option("--t", cantor_args.t, "target dimension (rational; 2n^2/t integral)");
    cantor->add_option("--depth", cantor_args.depth, "number of stages");
    cantor->add_option("--family", cantor_args.family, "A|T")
        ->check(CLI::IsMember({"A", "T"}));
    cantor->add_option("--scales", cantor_args.scales,
                       "comma-separated rational scales (default: stage separations)");

    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "Scaling studies as CSV");
    report->add_option("--study", report_args.study,
                       "skeleton|orthoplex|multiscale|exponents|cantor")
        ->required()
        ->check(CLI::IsMember({"skeleton", "orthoplex", "multiscale", "exponents", "cantor"}));
    report->add_option("--n", report_args.n, "dimension");
    report->add_option("--k", report_args.k, "skeleton parameter");
    report->add_option("--i-min", report_args.i_min, "first base");
    report->add_option("--i-max", report_args.i_max, "last base");
    report->add_option("--p-list", report_args.p_list, "multiscale stage bounds (comma list)");
    report->add_option("--n-max", report_args.n_max, "exponent table size");
    report->add_option("--t", report_args.t, "cantor target dimension");
    report->add_option("--depth", report_args.depth, "cantor stages");
    report->add_option("--family", report_args.family, "A|T");

    try {
        std::vector<const char*> argv;
        argv.push_back("skeletal");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (construct->parsed()) return run_construct(construct_args, out, err);
        if (verify->parsed()) return run_verify(verify_args, out, err);
        if (oracle->parsed()) return run_oracle(oracle_args, out, err);
        if (exponents->parsed()) return run_exponents(exponent_args, out, err);
        if (shadow->parsed()) return run_shadow(shadow_args, out, err);
        if (digits->parsed()) return run_digits(digit_args, out, err);
        if (cantor->parsed()) return run_cantor(cantor_args, out, err);
        if (report->parsed()) return run_report(report_args, out, err);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exhausted: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace skeletal
