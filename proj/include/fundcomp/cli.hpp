#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fundcomp/analysis.hpp"
#include "fundcomp/error.hpp"
#include "fundcomp/ingestion.hpp"
#include "fundcomp/report.hpp"

namespace fundcomp::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2 };

struct CliConfig {
    std::optional<std::string> input;    // file path
    std::optional<std::string> builtin;  // builtin dataset name
    double financing_rate = 0.0;
    double deposit_rate = 0.0;
    std::optional<int> from_year;
    std::optional<int> to_year;
    std::string format = "text";
};

inline SeriesDocument load_series(const CliConfig& config) {
    if (config.input) return read_series_file(*config.input);
    const std::string name = config.builtin.value_or("medallion");
    if (name == "medallion") return builtin_medallion();
    throw ValidationError("unknown builtin dataset '" + name + "' (available: medallion)");
}

/// Maps optional calendar-year bounds onto 1-based indices of `series`.
inline std::pair<int, int> resolve_window(const FundSeries& series, std::optional<int> from_year,
                                          std::optional<int> to_year) {
    const int first = series.first_calendar_year();
    const int last = series.last_calendar_year();
    const int from = from_year.value_or(first);
    const int to = to_year.value_or(last);
    if (from > to) {
        throw ValidationError("--from " + std::to_string(from) + " is after --to " +
                              std::to_string(to));
    }
    if (from < first || to > last) {
        throw ValidationError("window " + std::to_string(from) + "-" + std::to_string(to) +
                              " lies outside the series " + std::to_string(first) + "-" +
                              std::to_string(last));
    }
    return {from - first + 1, to - first + 1};
}

inline void check_rate(double rate, const char* flag) {
    if (!(rate > -1.0)) {
        throw ValidationError(std::string(flag) + " must be greater than -1");
    }
}

inline int cmd_report(const CliConfig& config, std::ostream& out) {
    check_rate(config.financing_rate, "--financing-rate");
    check_rate(config.deposit_rate, "--deposit-rate");
    const auto fmt = parse_report_format(config.format);
    const auto doc = load_series(config);
    const auto [from, to] = resolve_window(doc.series, config.from_year, config.to_year);
    const auto analysis =
        analyze_series(doc, from, to, config.deposit_rate, config.financing_rate);
    write_report(analysis, fmt, out);
    return kOk;
}

inline int cmd_wealth(double initial, double final_wealth, int years, const std::string& label,
                      const CliConfig& config, std::ostream& out) {
    const auto fmt = parse_report_format(config.format);
    WealthProxyScenario scenario{label, initial, final_wealth, years};
    WealthReport report{label.empty() ? std::nullopt : std::optional<std::string>(label),
                        wealth_growth(scenario)};
    write_report(report, fmt, out);
    return kOk;
}

inline int cmd_fees(const FeeScenario& scenario, const CliConfig& config, std::ostream& out) {
    const auto fmt = parse_report_format(config.format);
    write_report(FeeReport{scenario, fee_breakdown(scenario)}, fmt, out);
    return kOk;
}

inline int cmd_project(double value, double rate, int years, const CliConfig& config,
                       std::ostream& out) {
    const auto fmt = parse_report_format(config.format);
    write_report(make_projection(value, rate, years), fmt, out);
    return kOk;
}

/// Runs the command line `args` (program name excluded). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Annualized compounded returns for funds with jumping sizes", "fundcomp"};
    app.require_subcommand(1);

    CliConfig config;
    const auto add_format = [&config](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
    };

    auto* report = app.add_subcommand("report", "Naive vs size-profit compounding for a series");
    auto* input_opt = report->add_option("--input", config.input, "CSV file (year,fund_size,trading_profit)");
    auto* builtin_opt = report->add_option("--builtin", config.builtin, "Bundled dataset")
                            ->check(CLI::IsMember({"medallion"}));
    input_opt->excludes(builtin_opt);
    report->add_option("--financing-rate", config.financing_rate, "Flat financing rate (fraction)")
        ->capture_default_str();
    report->add_option("--deposit-rate", config.deposit_rate, "Flat deposit rate (fraction)")
        ->capture_default_str();
    report->add_option("--from", config.from_year, "First calendar year of the window");
    report->add_option("--to", config.to_year, "Last calendar year of the window");
    add_format(report);

    double initial = 0.0, final_wealth = 0.0;
    int years = 0;
    std::string label;
    auto* wealth = app.add_subcommand("wealth", "Annualized growth of a wealth proxy");
    wealth->add_option("initial", initial, "Initial wealth (millions)")->required();
    wealth->add_option("final", final_wealth, "Final wealth (millions)")->required();
    wealth->add_option("years", years, "Number of years")->required();
    wealth->add_option("--label", label, "Scenario label");
    add_format(wealth);

    FeeScenario fee;
    auto* fees = app.add_subcommand("fees", "Manager return after performance-fee redistribution");
    fees->add_option("stake", fee.manager_stake, "Manager share of fund capital")->required();
    fees->add_option("size", fee.fund_size, "Fund size (millions)")->required();
    fees->add_option("profit_rate", fee.gross_profit_rate, "Gross profit rate")->required();
    fees->add_option("fee", fee.performance_fee, "Performance fee fraction")->required();
    fees->add_option("insider_equity", fee.insider_equity, "Manager share of the fee pool")
        ->required();
    add_format(fees);

    double value = 0.0, rate = 0.0;
    int project_years = 0;
    auto* project = app.add_subcommand("project", "Grow a value at a fixed annual rate");
    project->add_option("value", value, "Initial value (millions)")->required();
    project->add_option("rate", rate, "Annual rate (fraction)")->required();
    project->add_option("years", project_years, "Number of years")->required();
    add_format(project);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kValidation;
    }

    try {
        if (report->parsed()) return cmd_report(config, out);
        if (wealth->parsed()) return cmd_wealth(initial, final_wealth, years, label, config, out);
        if (fees->parsed()) return cmd_fees(fee, config, out);
        if (project->parsed()) return cmd_project(value, rate, project_years, config, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kValidation;
}

}  // namespace fundcomp::cli
