#include "lpenv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "lpenv/analysis.hpp"
#include "lpenv/sampling.hpp"
#include "lpenv/step_function.hpp"

namespace lpenv {

namespace {

constexpr long long kBatchSize = 1000;

// Runs work(b) for b in [0, batches) on a small pool; each batch writes only
// its own slot, so results are independent of scheduling.
void run_batches(long long batches, int threads, const std::function<void(long long)>& work) {
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp<int>(workers, 1, static_cast<int>(std::max<long long>(1, batches)));
    if (workers == 1) {
        for (long long b = 0; b < batches; ++b) work(b);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (long long b = next++; b < batches; b = next++) work(b);
        });
    }
    for (auto& t : pool) t.join();
}

void absorb(SuiteReport& report, double margin, double tolerance) {
    ++report.checked;
    if (report.checked == 1 || margin < report.worst_margin) report.worst_margin = margin;
    if (margin < -tolerance) ++report.violations;
}

}  // namespace

const std::vector<double>& default_p_grid() {
    static const std::vector<double> grid{-2.0, -1.0, -0.5, 0.5, 1.0, 1.3, 1.5, 1.7, 2.0, 3.0, 5.0};
    return grid;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

SuiteReport verify_pairs(const PairSuiteOptions& options) {
    const long long batches = (options.samples + kBatchSize - 1) / kBatchSize;
    std::vector<SuiteReport> partial(static_cast<std::size_t>(batches));
    std::vector<Exponent> exponents;
    for (double p : options.p_grid) exponents.push_back(Exponent::classify(p));

    run_batches(batches, options.threads, [&](long long b) {
        auto& out = partial[static_cast<std::size_t>(b)];
        Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(b));
        const long long begin = b * kBatchSize;
        const long long end = std::min(options.samples, begin + kBatchSize);
        for (long long i = begin; i < end; ++i) {
            const auto& p = exponents[static_cast<std::size_t>(i) % exponents.size()];
            const auto f = random_step_function(rng, p.value());
            const auto g = random_step_function(rng, p.value());
            const auto report = sum_and_report(f, g, p);
            absorb(out, std::min(report.upper_margin, report.lower_margin), options.tolerance);
            if (report.upper_margin < -options.tolerance || report.lower_margin < -options.tolerance) {
                std::ostringstream note;
                note << "violation p=" << p.value() << " actual=" << format_number(report.actual)
                     << " lower=" << format_number(report.lower) << " upper=" << format_number(report.upper);
                out.notes.push_back(note.str());
            }
        }
    });

    SuiteReport report;
    report.suite = "pair";
    for (const auto& part : partial) {
        if (part.checked == 0) continue;
        if (report.checked == 0 || part.worst_margin < report.worst_margin) report.worst_margin = part.worst_margin;
        report.checked += part.checked;
        report.violations += part.violations;
        report.notes.insert(report.notes.end(), part.notes.begin(), part.notes.end());
    }
    return report;
}

SuiteReport verify_sums(const SumSuiteOptions& options) {
    SuiteReport report;
    report.suite = "sum";
    struct Case {
        double p;
        bool upper;
    };
    const Case cases[] = {{1.0, true},  {1.5, true},  {2.0, true},  {0.5, false},
                          {1.0, false}, {2.0, false}, {3.0, false}};
    Rng rng = make_rng(options.seed, 1000);
    std::uniform_int_distribution<int> count(3, 8);
    for (long long i = 0; i < options.samples; ++i) {
        const Case c = cases[i % std::size(cases)];
        const auto p = Exponent::classify(c.p);
        const auto family = random_family(rng, c.p, static_cast<std::size_t>(count(rng)));
        const double actual = family_sum_power_norm(family, c.p);
        const double bound = sum_bound(family_moments(family, c.p), family_overlaps(family, c.p), p);
        const double scale = std::max(1.0, std::abs(actual));
        absorb(report, (c.upper ? bound - actual : actual - bound) / scale, options.tolerance);
    }
    if (options.negative_counterexample) {
        const auto p = Exponent::classify(-1.0);
        const double ones[] = {1.0, 1.0, 1.0};
        const auto sides = pointwise_sum_terms(ones, p);
        const bool reproduced = sides.lhs > sides.rhs;
        std::ostringstream note;
        note << "p=-1, a=(1,1,1): lhs=" << format_number(sides.lhs) << " rhs=" << format_number(sides.rhs)
             << (reproduced ? " -> bound fails (counterexample reproduced)" : " -> bound holds (NOT reproduced)");
        report.notes.push_back(note.str());
        if (!reproduced) ++report.violations;
    }
    return report;
}

std::vector<DerivativeCheck> derivative_checks(const Exponent& p) {
    using Fn = std::function<double(double)>;
    const Fn h = [&p](double t) { return analysis::h_fn(t, p); };
    const Fn h_tilde = [&p](double t) { return analysis::h_tilde_fn(t, p); };
    std::vector<DerivativeCheck> out;
    auto add = [&out](std::string name, double t, double exact, double numeric) {
        const double err = std::abs(exact - numeric) / std::max(1.0, std::abs(exact));
        out.push_back({std::move(name), t, exact, numeric, err});
    };
    for (double t : {0.2, 0.5, 0.9}) {
        add("h'", t, analysis::h_d1(t, p), analysis::central_d1(h, t, kFirstDerivativeStep));
        add("h''", t, analysis::h_d2(t, p), analysis::central_d2(h, t, kSecondDerivativeStep));
        add("h~'", t, analysis::h_tilde_d1(t, p), analysis::central_d1(h_tilde, t, kFirstDerivativeStep));
        add("h~''", t, analysis::h_tilde_d2(t, p), analysis::central_d2(h_tilde, t, kSecondDerivativeStep));
    }
    return out;
}

SuiteReport verify_analysis(int points) {
    SuiteReport report;
    report.suite = "analysis";
    const double exponents[] = {-2.0, -0.5, 0.5, 0.9, 1.3, 1.7, 2.5, 4.0};
    for (double value : exponents) {
        const auto p = Exponent::classify(value);
        for (const auto& row : analysis::sign_table(p, points)) {
            report.checked += row.samples;
            report.violations += row.violations;
            std::ostringstream note;
            note << "p=" << value << " " << row.function << (row.expected_sign > 0 ? " >= 0" : " <= 0") << ": "
                 << (row.violations == 0 ? "ok" : "VIOLATED") << " (" << row.samples << " points)";
            report.notes.push_back(note.str());
            report.worst_margin = std::min(report.worst_margin, row.expected_sign * row.worst);
        }
        ++report.checked;
        if (analysis::v_fn(1.0, p) != 0.0) {
            ++report.violations;
            report.notes.push_back("v(1) != 0 at p=" + format_number(value));
        }
        if (p.positive()) {
            ++report.checked;
            if (analysis::g_fn(0.0, p) != 0.0) {
                ++report.violations;
                report.notes.push_back("g(0) != 0 at p=" + format_number(value));
            }
        }
        for (const auto& check : derivative_checks(p)) {
            ++report.checked;
            if (check.relative_error > kDerivativeTolerance) {
                ++report.violations;
                report.notes.push_back("p=" + format_number(value) + " " + check.name + " at t=" +
                                       format_number(check.t) + ": rel err " + format_number(check.relative_error));
            }
        }
        const auto crossing = analysis::torsion_sign_changes(p, 256);
        ++report.checked;
        const bool ok = crossing.count == 1 && crossing.direction == analysis::expected_torsion_crossing(p) &&
                        std::abs(crossing.location) <= 1e-2;
        if (!ok) ++report.violations;
        std::ostringstream note;
        note << "p=" << value << " torsion: " << crossing.count << " change(s), "
             << analysis::to_string(crossing.direction) << " at s=" << format_number(crossing.location)
             << (ok ? " ok" : " VIOLATED");
        report.notes.push_back(note.str());
    }
    return report;
}

std::vector<SectionPoint> interior_grid(int n) {
    std::vector<SectionPoint> points;
    points.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double s = -1.0 + (2.0 * i + 1.0) / n;
        const double height = std::sqrt((1.0 - s) * (1.0 + s));
        for (int j = 0; j < n; ++j) points.push_back({s, (j + 0.5) / n * height});
    }
    return points;
}

std::vector<OracleRow> oracle_compare(const Exponent& p, int resolution, int grid, EnvelopeKind kind) {
    const auto curve = BoundaryCurve::build(p, resolution);
    std::vector<OracleRow> rows;
    for (const auto& q : interior_grid(grid)) {
        const double exact = closed_form_on_section(p, q.s, q.z, kind);
        const double approx = oracle_envelope(curve, q.s, q.z, kind);
        rows.push_back({p.value(), q.s, q.z, exact, approx, std::abs(exact - approx), resolution});
    }
    return rows;
}

SuiteReport verify_oracle(const OracleSuiteOptions& options) {
    SuiteReport report;
    report.suite = "oracle";
    for (double value : options.p_grid) {
        const auto p = Exponent::classify(value);
        for (auto kind : {EnvelopeKind::Concave, EnvelopeKind::Convex}) {
            double worst_error = 0.0;
            for (const auto& row : oracle_compare(p, options.resolution, options.grid, kind)) {
                const double scale = std::max(1.0, std::abs(row.closed_form));
                // Inner approximation: never beyond the closed form.
                const double side = kind == EnvelopeKind::Concave ? row.closed_form - row.oracle
                                                                  : row.oracle - row.closed_form;
                absorb(report, (options.tolerance * scale - row.abs_err) / scale, 0.0);
                if (side < -1e-12 * scale) {
                    ++report.violations;
                    report.notes.push_back("one-sided bound violated at p=" + format_number(value));
                }
                worst_error = std::max(worst_error, row.abs_err / scale);
            }
            std::ostringstream note;
            note << "p=" << value << (kind == EnvelopeKind::Concave ? " concave" : " convex")
                 << " N=" << options.resolution << " max rel err=" << format_number(worst_error);
            report.notes.push_back(note.str());
        }
    }
    return report;
}

std::vector<TableRow> envelope_table(const std::vector<double>& p_list, int grid) {
    if (grid < 2) throw std::invalid_argument("envelope_table: grid must be >= 2");
    std::vector<TableRow> rows;
    for (double value : p_list) {
        const auto p = Exponent::classify(value);
        for (int i = 0; i < grid; ++i) {
            const double s = -1.0 + 2.0 * i / (grid - 1);
            const double height = std::sqrt((1.0 - s) * (1.0 + s));
            for (int j = 0; j < grid; ++j) {
                const double z = height * j / (grid - 1);
                const auto t = ConeTriple::make(1.0 + s, 1.0 - s, z);
                rows.push_back({value, s, z, eval_F(p, t), eval_G(p, t), upper_envelope(p, t),
                                lower_envelope(p, t), carlen_bound(p, t)});
            }
        }
    }
    return rows;
}

}  // namespace lpenv
