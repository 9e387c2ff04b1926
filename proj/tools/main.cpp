// Command-line front end: closed-form evaluation, Monte Carlo simulation,
// grid sweeps and the self-check suite, emitting plot-ready CSV or JSON.

#include "loclab/montecarlo.hpp"
#include "loclab/report.hpp"
#include "loclab/theory.hpp"
#include "loclab/validation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::vector<std::string> cases;
    std::vector<double> m_values;
    std::optional<double> lambda;
    double d_v = 50.0;
    std::vector<double> eps_values;
    std::vector<double> eps_ratios;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 424242;
    unsigned threads = 0;
    double confidence = 0.95;
    std::string format = "csv";
    std::string out_path;
    std::string gnuplot_path;
};

void add_grid_flags(CLI::App* cmd, CommonFlags& flags, bool with_mc)
{
    cmd->add_option("--case", flags.cases,
                    "Measurement case(s): count, range-vector, relative-set, range-set")
        ->check(CLI::IsMember(
            {"count", "range-vector", "relative-set", "range-set"}));
    cmd->add_option("--m", flags.m_values, "Mean visible-landmark count(s)");
    cmd->add_option("--lambda", flags.lambda,
                    "Landmark intensity per m^2 (alternative to --m)");
    cmd->add_option("--dv", flags.d_v, "Visibility radius in meters")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--eps", flags.eps_values, "Noise span(s) in meters");
    cmd->add_option("--eps-ratio", flags.eps_ratios,
                    "Noise span(s) as a fraction of dv");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags.out_path, "Output file (default: stdout)");
    if (with_mc) {
        cmd->add_option("--trials", flags.trials, "Monte Carlo trials per cell");
        cmd->add_option("--seed", flags.seed, "Master seed");
        cmd->add_option("--threads", flags.threads,
                        "Worker count (0 = hardware concurrency)");
        cmd->add_option("--confidence", flags.confidence,
                        "Wilson interval confidence level")
            ->check(CLI::Range(1e-6, 1.0 - 1e-6));
    }
}

std::vector<loclab::MeasurementCase>
resolve_cases(const std::vector<std::string>& names)
{
    using loclab::MeasurementCase;
    if (names.empty())
        return {MeasurementCase::Count, MeasurementCase::RangeVector,
                MeasurementCase::RelativeLocationSet, MeasurementCase::RangeSet};
    std::vector<MeasurementCase> cases;
    for (const std::string& n : names) {
        if (n == "count")
            cases.push_back(MeasurementCase::Count);
        else if (n == "range-vector")
            cases.push_back(MeasurementCase::RangeVector);
        else if (n == "relative-set")
            cases.push_back(MeasurementCase::RelativeLocationSet);
        else
            cases.push_back(MeasurementCase::RangeSet);
    }
    return cases;
}

std::vector<double> resolve_m(const CommonFlags& flags)
{
    if (flags.lambda && !flags.m_values.empty())
        throw CLI::ValidationError("--m and --lambda are mutually exclusive");
    if (flags.lambda) {
        double pi = 3.14159265358979323846;
        return {*flags.lambda * pi * flags.d_v * flags.d_v};
    }
    if (!flags.m_values.empty())
        return flags.m_values;
    return {2, 3, 4, 5, 6, 7, 8};
}

std::vector<double> resolve_eps(const CommonFlags& flags)
{
    if (!flags.eps_values.empty() && !flags.eps_ratios.empty())
        throw CLI::ValidationError("--eps and --eps-ratio are mutually exclusive");
    if (!flags.eps_values.empty())
        return flags.eps_values;
    std::vector<double> ratios =
        flags.eps_ratios.empty() ? std::vector<double>{0.01, 0.05, 0.1}
                                 : flags.eps_ratios;
    std::vector<double> eps;
    for (double r : ratios)
        eps.push_back(r * flags.d_v);
    return eps;
}

void emit(const std::vector<loclab::OutputRecord>& records,
          const CommonFlags& flags)
{
    std::string body = flags.format == "json" ? loclab::to_json(records)
                                              : loclab::to_csv(records);
    if (flags.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(flags.out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file " + flags.out_path);
        out << body;
    }
}

void emit_gnuplot(const CommonFlags& flags)
{
    if (flags.gnuplot_path.empty())
        return;
    std::ofstream out(flags.gnuplot_path);
    out << "set datafile separator ','\n"
        << "set logscale y\n"
        << "set xlabel 'm'\n"
        << "set ylabel 'P_N-Loc'\n"
        << "set key outside\n"
        << "plot '" << (flags.out_path.empty() ? "sweep.csv" : flags.out_path)
        << "' using 2:10 with points title 'simulation', '' using 2:7 with lines title 'theory'\n";
}

int cmd_theory(const CommonFlags& flags)
{
    auto cases = resolve_cases(flags.cases);
    auto ms = resolve_m(flags);
    auto epses = resolve_eps(flags);

    std::vector<loclab::OutputRecord> records;
    for (auto c : cases)
        for (double m : ms)
            for (double eps : epses)
                records.push_back(loclab::make_record(
                    loclab::theory_for(c, m, eps, flags.d_v), flags.d_v, eps));
    emit(records, flags);
    return kExitOk;
}

int cmd_simulate_or_sweep(const CommonFlags& flags, bool print_summary)
{
    if (flags.trials == 0)
        throw CLI::ValidationError("--trials must be >= 1");
    auto cases = resolve_cases(flags.cases);
    auto ms = resolve_m(flags);
    auto epses = resolve_eps(flags);
    unsigned threads = flags.threads
                           ? flags.threads
                           : std::max(1u, std::thread::hardware_concurrency());

    auto cells = loclab::sweep(cases, ms, epses, flags.d_v, flags.trials,
                               flags.seed, threads, flags.confidence);
    std::vector<loclab::OutputRecord> records;
    for (const auto& cell : cells)
        records.push_back(loclab::make_record(cell.theory, cell.estimate,
                                              flags.d_v,
                                              cell.params.noise_span()));
    emit(records, flags);
    emit_gnuplot(flags);
    if (print_summary)
        std::cerr << "sweep: " << cells.size() << " cells, " << flags.trials
                  << " trials/cell, seed " << flags.seed << "\n";
    return kExitOk;
}

int cmd_validate(std::uint64_t seed, unsigned threads, bool quick,
                 double alpha_scale)
{
    loclab::ValidationOptions opts;
    opts.master_seed = seed;
    opts.threads = threads;
    opts.quick = quick;
    opts.alpha_scale = alpha_scale;

    auto results = loclab::run_acceptance_suite(opts);
    bool all_passed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.detail << ")\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitValidationFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Localizability probabilities under a Poisson landmark model"};
    app.require_subcommand(1);

    CommonFlags flags;
    CLI::App* theory = app.add_subcommand("theory", "Closed-form values only");
    add_grid_flags(theory, flags, false);

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimate plus theory");
    add_grid_flags(simulate, flags, true);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Full case x m x eps grid");
    add_grid_flags(sweep_cmd, flags, true);
    sweep_cmd->add_option("--gnuplot", flags.gnuplot_path,
                          "Also write a gnuplot script to this path");

    bool quick = false;
    double alpha_scale = 1.0;
    CLI::App* validate =
        app.add_subcommand("validate", "Run the acceptance criteria");
    validate->add_option("--seed", flags.seed, "Master seed");
    validate->add_option("--threads", flags.threads,
                         "Worker count (0 = hardware concurrency)");
    validate->add_flag("--quick", quick, "1e4 trials per cell instead of 1e5");
    validate
        ->add_option("--mutate-alpha", alpha_scale,
                     "Scale the theory noise factor (suite sensitivity hook)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (theory->parsed())
            return cmd_theory(flags);
        if (simulate->parsed())
            return cmd_simulate_or_sweep(flags, false);
        if (sweep_cmd->parsed())
            return cmd_simulate_or_sweep(flags, true);
        return cmd_validate(flags.seed, flags.threads, quick, alpha_scale);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
