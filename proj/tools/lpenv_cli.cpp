#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpenv/analysis.hpp"
#include "lpenv/extremal.hpp"
#include "lpenv/json_io.hpp"
#include "lpenv/verify.hpp"

using namespace lpenv;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr double kMarginTolerance = 1e-9;

// Thrown for inputs the parser accepted but the command cannot use.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: " + text);
    }
    if (used != text.size()) throw UsageError("not a number: " + text);
    return value;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + path);
    return file;
}

int cmd_bound(double p_value, const std::vector<std::string>& args) {
    const auto p = Exponent::classify(p_value);
    auto compute = [&]() -> BoundReport {
        if (args.size() == 3) {
            return report_for_triple(p, ConeTriple::make(parse_double(args[0]), parse_double(args[1]),
                                                         parse_double(args[2])));
        }
        if (args.size() == 2) {
            return sum_and_report(step_function_from_json(read_json_file(args[0])),
                                  step_function_from_json(read_json_file(args[1])), p);
        }
        throw UsageError("bound expects x y z or two step-function JSON files");
    };
    const auto report = compute();
    print_json(to_json(report));
    return report.holds(kMarginTolerance) ? kPass : kViolation;
}

int cmd_extremal(double p_value, double x, double y, double z, const std::string& which) {
    const auto p = Exponent::classify(p_value);
    const auto t = ConeTriple::make(x, y, z);
    const bool is_f = which == "F";
    const auto pair = is_f ? extremal_F(p, t) : extremal_G(p, t);
    const double achieved = sum_power_norm(pair.f, pair.g, p.value());
    const double envelope = is_f ? eval_F(p, t) : eval_G(p, t);
    const double deviation = std::abs(achieved - envelope) / std::max(1.0, std::abs(envelope));
    json out;
    out["p"] = p.value();
    out["which"] = which;
    out["triple"] = to_json(t);
    out["f"] = to_json(pair.f);
    out["g"] = to_json(pair.g);
    out["achieved"] = number_to_json(achieved);
    out["envelope"] = number_to_json(envelope);
    out["relative_deviation"] = number_to_json(deviation);
    print_json(out);
    return deviation <= kMarginTolerance ? kPass : kViolation;
}

struct VerifyFlags {
    std::string suite;
    std::uint64_t seed = 7;
    long long samples = -1;
    int n = 512;
    int grid = 20;
    int points = 1000;
    int threads = 0;
    bool p_neg = false;
};

int cmd_verify(const VerifyFlags& flags) {
    SuiteReport report;
    if (flags.suite == "pair") {
        PairSuiteOptions options;
        options.seed = flags.seed;
        if (flags.samples >= 0) options.samples = flags.samples;
        options.threads = flags.threads;
        report = verify_pairs(options);
    } else if (flags.suite == "sum") {
        SumSuiteOptions options;
        options.seed = flags.seed;
        if (flags.samples >= 0) options.samples = flags.samples;
        options.negative_counterexample = flags.p_neg;
        report = verify_sums(options);
    } else if (flags.suite == "analysis") {
        report = verify_analysis(flags.points);
    } else {
        OracleSuiteOptions options;
        options.resolution = flags.n;
        options.grid = flags.grid;
        report = verify_oracle(options);
    }
    std::cout << "suite: " << report.suite << '\n'
              << "checked: " << report.checked << '\n'
              << "violations: " << report.violations << '\n'
              << "worst_margin: " << format_number(report.worst_margin) << '\n';
    for (const auto& note : report.notes) std::cout << "  " << note << '\n';
    return report.passed() ? kPass : kViolation;
}

int cmd_table(const std::vector<double>& p_list, int grid, const std::string& out_path) {
    if (grid < 2) throw UsageError("--grid must be >= 2");
    const auto rows = envelope_table(p_list, grid);
    std::ofstream file;
    auto& out = output_stream(out_path, file);
    out << "p,s,z,F,G,upper,lower,carlen\n";
    for (const auto& r : rows) {
        out << format_number(r.p) << ',' << format_number(r.s) << ',' << format_number(r.z) << ','
            << format_number(r.F) << ',' << format_number(r.G) << ',' << format_number(r.upper) << ','
            << format_number(r.lower) << ',' << format_number(r.carlen) << '\n';
    }
    out.flush();
    if (!out) throw UsageError("write failed: " + out_path);
    return kPass;
}

int cmd_oracle_compare(const std::vector<double>& p_list, int n, int grid, const std::string& kind_name,
                       double tolerance, const std::string& out_path) {
    if (grid < 1) throw UsageError("--grid must be >= 1");
    const auto kind = kind_name == "concave" ? EnvelopeKind::Concave : EnvelopeKind::Convex;
    std::vector<OracleRow> rows;
    for (double value : p_list) {
        const auto part = oracle_compare(Exponent::classify(value), n, grid, kind);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    std::ofstream file;
    auto& out = output_stream(out_path, file);
    out << "p,s,z,closed_form,oracle,abs_err,N\n";
    bool within = true;
    for (const auto& r : rows) {
        out << format_number(r.p) << ',' << format_number(r.s) << ',' << format_number(r.z) << ','
            << format_number(r.closed_form) << ',' << format_number(r.oracle) << ',' << format_number(r.abs_err)
            << ',' << r.resolution << '\n';
        if (r.abs_err > tolerance * std::max(1.0, std::abs(r.closed_form))) within = false;
    }
    out.flush();
    if (!out) throw UsageError("write failed: " + out_path);
    return within ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp L^p triangle-inequality envelopes"};
    app.require_subcommand(1);

    double p_value = 0.0;
    std::vector<std::string> bound_args;
    auto* bound = app.add_subcommand("bound", "Envelope bounds for a cone triple or a pair of step functions");
    bound->add_option("-p", p_value, "Exponent")->required();
    bound->add_option("args", bound_args, "x y z, or two step-function JSON files")->required();

    double x = 0.0, y = 0.0, z = 0.0;
    std::string which = "F";
    auto* extremal = app.add_subcommand("extremal", "Step-function pair attaining F or G");
    extremal->add_option("-p", p_value, "Exponent")->required();
    extremal->add_option("x", x)->required();
    extremal->add_option("y", y)->required();
    extremal->add_option("z", z)->required();
    extremal->add_option("--which", which, "F or G")->check(CLI::IsMember({"F", "G"}));

    VerifyFlags flags;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", flags.suite)->required()->check(CLI::IsMember({"pair", "sum", "analysis", "oracle"}));
    verify->add_option("--seed", flags.seed, "Base seed");
    verify->add_option("--samples", flags.samples, "Random samples (pair, sum)")->check(CLI::NonNegativeNumber);
    verify->add_option("--n", flags.n, "Oracle arc resolution")->check(CLI::Range(16, 1 << 20));
    verify->add_option("--grid", flags.grid, "Oracle query grid")->check(CLI::PositiveNumber);
    verify->add_option("--points", flags.points, "Sign-table points (analysis)")->check(CLI::Range(2, 1 << 24));
    verify->add_option("--threads", flags.threads, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    verify->add_flag("--p-neg", flags.p_neg, "Also reproduce the p = -1 counterexample (sum)");

    std::vector<double> p_list;
    int grid = 11;
    std::string out_path;
    auto* table = app.add_subcommand("table", "Envelope values on the cross-section x + y = 2 as CSV");
    table->add_option("-p", p_list, "Exponents (repeat or comma separated)")->required()->delimiter(',');
    table->add_option("--grid", grid, "Points per axis");
    table->add_option("--out", out_path, "CSV path (stdout if omitted)");

    int n = 512;
    int oracle_grid = 20;
    std::string kind = "concave";
    double tolerance = 2e-2;
    auto* compare = app.add_subcommand("oracle-compare", "Closed form against the numerical envelope oracle as CSV");
    compare->add_option("-p", p_list, "Exponents (repeat or comma separated)")->required()->delimiter(',');
    compare->add_option("--n", n, "Arc resolution")->check(CLI::Range(16, 1 << 20));
    compare->add_option("--grid", oracle_grid, "Query grid");
    compare->add_option("--kind", kind, "concave or convex")->check(CLI::IsMember({"concave", "convex"}));
    compare->add_option("--tol", tolerance, "Relative tolerance for the exit code");
    compare->add_option("--out", out_path, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*bound) return cmd_bound(p_value, bound_args);
        if (*extremal) return cmd_extremal(p_value, x, y, z, which);
        if (*verify) return cmd_verify(flags);
        if (*table) return cmd_table(p_list, grid, out_path);
        if (*compare) return cmd_oracle_compare(p_list, n, oracle_grid, kind, tolerance, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
