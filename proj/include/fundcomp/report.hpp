#pragma once

// Report records and their text / csv / json renderings.
//
// Text is for people: aligned columns, percentages to one decimal (per-year
// net returns to two). JSON is for machines: rates stay fractions and every
// number is written at full precision. CSV is one block per field group,
// each block a header line followed by its data rows, blocks separated by a
// blank line.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fundcomp/analysis.hpp"
#include "fundcomp/compounding.hpp"
#include "fundcomp/error.hpp"
#include "fundcomp/ingestion.hpp"
#include "fundcomp/series.hpp"

namespace fundcomp {

enum class ReportFormat { text, csv, json };

inline ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw ValidationError("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

struct YearlyRow {
    int year = 0;
    double fund_size = 0.0;
    double trading_profit = 0.0;
    double net_return = 0.0;
};

/// Everything `report` prints for one (possibly windowed) series.
struct SeriesAnalysis {
    std::string source;
    std::string unit_label = "millions";
    double deposit_rate = 0.0;
    double financing_rate = 0.0;
    std::vector<YearlyRow> yearly;
    double arithmetic_mean_return = 0.0;
    SubperiodReport period;
    DivergenceReport divergence;
};

/// Analyzes years from..to (1-based) of a document under flat rates.
inline SeriesAnalysis analyze_series(const SeriesDocument& doc, int from_year_no, int to_year_no,
                                     double deposit_rate = 0.0, double financing_rate = 0.0) {
    const auto& series = doc.series;
    series.check_window(from_year_no, to_year_no);
    const auto window = series.window(from_year_no, to_year_no);
    const auto rates = RateSchedule::flat(deposit_rate, financing_rate, window.size());

    SeriesAnalysis out;
    out.source = doc.source;
    out.unit_label = doc.unit_label;
    out.deposit_rate = deposit_rate;
    out.financing_rate = financing_rate;
    const auto returns = net_returns(window);
    for (const auto& r : window.records()) {
        out.yearly.push_back({window.calendar_year(r.year_no), r.fund_size, r.trading_profit,
                              returns[static_cast<std::size_t>(r.year_no - 1)]});
    }
    out.arithmetic_mean_return = arithmetic_mean_return(returns);
    out.period = subperiod_report(series, from_year_no, to_year_no,
                                  RateSchedule::flat(deposit_rate, financing_rate, series.size()));
    out.divergence = divergence_report(window, rates);
    return out;
}

inline SeriesAnalysis analyze_series(const SeriesDocument& doc, double deposit_rate = 0.0,
                                     double financing_rate = 0.0) {
    return analyze_series(doc, 1, doc.series.years(), deposit_rate, financing_rate);
}

struct WealthReport {
    std::optional<std::string> label;
    CompoundedReturn growth;
};

struct FeeReport {
    FeeScenario scenario;
    FeeBreakdown breakdown;
};

struct ProjectionReport {
    double initial = 0.0;
    double rate = 0.0;
    int years = 0;
    double projected = 0.0;
    std::string unit_label = "millions";
};

inline ProjectionReport make_projection(double initial, double rate, int years,
                                        std::string unit_label = "millions") {
    return {initial, rate, years, grow_projection(initial, rate, years), std::move(unit_label)};
}

namespace format {

inline std::string percent(double fraction, int decimals = 1) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << fraction * 100.0 << '%';
    return os.str();
}

inline std::string amount(double value, int decimals = 1) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << value;
    return os.str();
}

/// Multiplier that turns one `unit_label` into plain currency units.
inline std::optional<double> unit_multiplier(std::string_view unit_label) {
    if (unit_label == "units" || unit_label == "dollars") return 1.0;
    if (unit_label == "thousands") return 1e3;
    if (unit_label == "millions") return 1e6;
    if (unit_label == "billions") return 1e9;
    return std::nullopt;
}

/// "78.6 trillion", "225.0 million", ...
inline std::string scale_label(double value, std::string_view unit_label) {
    const auto mult = unit_multiplier(unit_label);
    if (!mult) return amount(value) + " " + std::string(unit_label);
    const double raw = value * *mult;
    struct Scale {
        double size;
        const char* name;
    };
    static constexpr Scale kScales[] = {
        {1e12, "trillion"}, {1e9, "billion"}, {1e6, "million"}, {1e3, "thousand"}};
    for (const auto& s : kScales) {
        if (std::fabs(raw) >= s.size) return amount(raw / s.size) + " " + s.name;
    }
    return amount(raw);
}

inline std::string csv_number(double v) { return detail::format_number(v); }

}  // namespace format

// ---- JSON ---------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json to_json(const CompoundedReturn& r) {
    return Json{{"rate", r.rate},
                {"years", r.years},
                {"initial_value", r.initial_value},
                {"final_value", r.final_value}};
}

inline Json to_json(const AccrualBreakdown& b) {
    return Json{{"accrued_profit", b.accrued_profit},
                {"accrued_inflow", b.accrued_inflow},
                {"final_fund_size", b.final_fund_size},
                {"final_value", b.final_value}};
}

inline Json to_json(const SubperiodReport& r) {
    return Json{{"from_year_no", r.from_year_no},
                {"to_year_no", r.to_year_no},
                {"from_year", r.from_calendar_year},
                {"to_year", r.to_calendar_year},
                {"years", r.years},
                {"initial_value", r.initial_value},
                {"final_fund_size", r.final_fund_size},
                {"total_inflow", r.total_inflow},
                {"total_profit", r.total_profit},
                {"final_value", r.final_value},
                {"compounded_return", r.compounded_return},
                {"naive_return", r.naive_return}};
}

inline Json to_json(const DivergenceReport& d) {
    return Json{{"naive", d.naive},
                {"size_profit", d.size_profit},
                {"gap", d.gap},
                {"naive_projection", d.naive_projection},
                {"actual_final_value", d.actual_final_value}};
}

inline Json to_json(const SeriesAnalysis& a) {
    Json yearly = Json::array();
    for (const auto& y : a.yearly) {
        yearly.push_back(Json{{"year", y.year},
                              {"fund_size", y.fund_size},
                              {"trading_profit", y.trading_profit},
                              {"net_return", y.net_return}});
    }
    return Json{{"source", a.source},
                {"unit_label", a.unit_label},
                {"deposit_rate", a.deposit_rate},
                {"financing_rate", a.financing_rate},
                {"yearly", std::move(yearly)},
                {"naive_return", a.divergence.naive},
                {"arithmetic_mean_return", a.arithmetic_mean_return},
                {"size_profit_return", a.period.compounded_return},
                {"period", to_json(a.period)},
                {"divergence", to_json(a.divergence)}};
}

inline Json to_json(const WealthReport& w) {
    Json j;
    if (w.label && !w.label->empty()) j["label"] = *w.label;
    j["initial_wealth"] = w.growth.initial_value;
    j["final_wealth"] = w.growth.final_value;
    j["years"] = w.growth.years;
    j["growth_rate"] = w.growth.rate;
    return j;
}

inline Json to_json(const FeeReport& f) {
    const auto& s = f.scenario;
    const auto& b = f.breakdown;
    return Json{{"manager_stake", s.manager_stake},
                {"fund_size", s.fund_size},
                {"gross_profit_rate", s.gross_profit_rate},
                {"performance_fee", s.performance_fee},
                {"insider_equity", s.insider_equity},
                {"gross_profit", b.gross_profit},
                {"investor_pool", b.investor_pool},
                {"fee_pool", b.fee_pool},
                {"manager_investor_share", b.manager_investor_share},
                {"manager_fee_share", b.manager_fee_share},
                {"manager_profit", b.manager_profit},
                {"manager_capital", b.manager_capital},
                {"manager_return", b.manager_return}};
}

inline Json to_json(const ProjectionReport& p) {
    return Json{{"initial", p.initial},
                {"rate", p.rate},
                {"years", p.years},
                {"projected", p.projected},
                {"unit_label", p.unit_label},
                {"scale_label", format::scale_label(p.projected, p.unit_label)}};
}

// ---- CSV ----------------------------------------------------------------

namespace detail {

inline std::string csv_cell(const Json& v) {
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number()) return format::csv_number(v.get<double>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + '"';
    }
    return v.dump();
}

/// One header line plus one data line from the scalar members of `obj`.
/// Nested objects are flattened with a `group.` prefix.
inline void flatten(const Json& obj, const std::string& prefix, std::vector<std::string>& keys,
                    std::vector<std::string>& values) {
    for (const auto& [k, v] : obj.items()) {
        if (v.is_array()) continue;
        if (v.is_object()) {
            flatten(v, prefix + k + ".", keys, values);
            continue;
        }
        keys.push_back(prefix + k);
        values.push_back(csv_cell(v));
    }
}

inline void write_csv_block(std::ostream& os, const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

inline void write_flat_csv(const Json& j, std::ostream& os) {
    std::vector<std::string> keys, values;
    flatten(j, "", keys, values);
    write_csv_block(os, keys, {values});
}

}  // namespace detail

inline void render_csv(const SeriesAnalysis& a, std::ostream& os) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& y : a.yearly) {
        rows.push_back({std::to_string(y.year), format::csv_number(y.fund_size),
                        format::csv_number(y.trading_profit), format::csv_number(y.net_return)});
    }
    detail::write_csv_block(os, {"year", "fund_size", "trading_profit", "net_return"}, rows);
    os << '\n';
    detail::write_flat_csv(to_json(a), os);
}

template <typename Report>
void render_csv(const Report& r, std::ostream& os) {
    detail::write_flat_csv(to_json(r), os);
}

// ---- Text ---------------------------------------------------------------

namespace detail {

inline void kv(std::ostream& os, std::string_view key, const std::string& value, int width = 36) {
    os << "  " << std::left << std::setw(width) << key << std::right << value << '\n';
}

}  // namespace detail

inline void render_text(const SubperiodReport& r, std::ostream& os) {
    os << "Period " << r.from_calendar_year << '-' << r.to_calendar_year << " (" << r.years
       << " years)\n";
    detail::kv(os, "Initial size or value", format::amount(r.initial_value));
    detail::kv(os, "Final fund size", format::amount(r.final_fund_size));
    detail::kv(os, "Total cash inflow", format::amount(r.total_inflow));
    detail::kv(os, "Total trading profit", format::amount(r.total_profit));
    detail::kv(os, "Final value", format::amount(r.final_value));
    detail::kv(os, "Compounded return", format::percent(r.compounded_return));
    detail::kv(os, "Naive compounded return", format::percent(r.naive_return));
}

inline void render_text(const DivergenceReport& d, std::ostream& os) {
    os << "Divergence\n";
    detail::kv(os, "Naive compounded return", format::percent(d.naive));
    detail::kv(os, "Size-profit compounded return", format::percent(d.size_profit));
    detail::kv(os, "Gap (naive - size-profit)", format::percent(d.gap));
    detail::kv(os, "Initial value grown at naive rate", format::amount(d.naive_projection));
    detail::kv(os, "Actual final value", format::amount(d.actual_final_value));
}

inline void render_text(const SeriesAnalysis& a, std::ostream& os) {
    const auto& p = a.period;
    os << "Source: " << a.source << " (currency in " << a.unit_label << ")\n";
    os << "Period: " << p.from_calendar_year << '-' << p.to_calendar_year << " (" << p.years
       << " years), deposit rate " << format::percent(a.deposit_rate) << ", financing rate "
       << format::percent(a.financing_rate) << "\n\n";

    os << std::right << std::setw(6) << "Year" << std::setw(14) << "Fund size" << std::setw(16)
       << "Trading profit" << std::setw(12) << "Net return" << '\n';
    for (const auto& y : a.yearly) {
        os << std::setw(6) << y.year << std::setw(14) << format::amount(y.fund_size)
           << std::setw(16) << format::amount(y.trading_profit) << std::setw(12)
           << format::percent(y.net_return, 2) << '\n';
    }
    os << '\n';

    os << "Returns\n";
    detail::kv(os, "Naive compounded return", format::percent(a.divergence.naive));
    detail::kv(os, "Arithmetic mean return", format::percent(a.arithmetic_mean_return));
    detail::kv(os, "Size-profit compounded return", format::percent(p.compounded_return));
    os << '\n';

    os << "Accrual breakdown\n";
    detail::kv(os, "Initial size or value", format::amount(p.initial_value));
    detail::kv(os, "Final fund size", format::amount(p.final_fund_size));
    detail::kv(os, "Total cash inflow", format::amount(p.total_inflow));
    detail::kv(os, "Total trading profit", format::amount(p.total_profit));
    detail::kv(os, "Final value", format::amount(p.final_value));
    os << '\n';

    render_text(a.divergence, os);
}

inline void render_text(const WealthReport& w, std::ostream& os) {
    os << "Wealth growth";
    if (w.label && !w.label->empty()) os << ": " << *w.label;
    os << '\n';
    detail::kv(os, "Initial wealth", format::amount(w.growth.initial_value));
    detail::kv(os, "Final wealth", format::amount(w.growth.final_value));
    detail::kv(os, "Years", std::to_string(w.growth.years));
    detail::kv(os, "Annualized growth", format::percent(w.growth.rate));
}

inline void render_text(const FeeReport& f, std::ostream& os) {
    const auto& s = f.scenario;
    const auto& b = f.breakdown;
    os << "Performance-fee redistribution\n";
    detail::kv(os, "Manager stake", format::percent(s.manager_stake));
    detail::kv(os, "Fund size", format::amount(s.fund_size));
    detail::kv(os, "Gross profit rate", format::percent(s.gross_profit_rate));
    detail::kv(os, "Performance fee", format::percent(s.performance_fee));
    detail::kv(os, "Insider equity", format::percent(s.insider_equity));
    detail::kv(os, "Gross profit", format::amount(b.gross_profit));
    detail::kv(os, "Investor pool", format::amount(b.investor_pool));
    detail::kv(os, "Fee pool", format::amount(b.fee_pool));
    detail::kv(os, "Manager share of investor pool", format::amount(b.manager_investor_share));
    detail::kv(os, "Manager share of fee pool", format::amount(b.manager_fee_share));
    detail::kv(os, "Manager profit", format::amount(b.manager_profit));
    detail::kv(os, "Manager return", format::percent(b.manager_return));
}

inline void render_text(const ProjectionReport& p, std::ostream& os) {
    os << "Projection\n";
    detail::kv(os, "Initial value (" + p.unit_label + ")", format::amount(p.initial));
    detail::kv(os, "Rate", format::percent(p.rate));
    detail::kv(os, "Years", std::to_string(p.years));
    detail::kv(os, "Projected value (" + p.unit_label + ")", format::amount(p.projected));
    detail::kv(os, "Projected value", format::scale_label(p.projected, p.unit_label));
}

inline void render_text(const CompoundedReturn& r, std::ostream& os) {
    detail::kv(os, "Initial value", format::amount(r.initial_value));
    detail::kv(os, "Final value", format::amount(r.final_value));
    detail::kv(os, "Years", std::to_string(r.years));
    detail::kv(os, "Compounded return", format::percent(r.rate));
}

/// Renders `report` to `sink` in the requested format. Throws IoError when
/// the stream reports a failure afterwards.
template <typename Report>
void write_report(const Report& report, ReportFormat fmt, std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::text:
            render_text(report, sink);
            break;
        case ReportFormat::csv:
            render_csv(report, sink);
            break;
        case ReportFormat::json:
            sink << to_json(report).dump(2) << '\n';
            break;
    }
    sink.flush();
    if (!sink) throw IoError("failed to write report to output stream");
}

}  // namespace fundcomp
