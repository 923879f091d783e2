#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "fundcomp/error.hpp"
#include "fundcomp/series.hpp"

namespace fundcomp {

inline constexpr std::string_view kSeriesHeader = "year,fund_size,trading_profit";
inline constexpr std::string_view kBuiltinMedallion = "builtin:medallion";

struct SeriesDocument {
    std::string source;
    FundSeries series;
    std::string unit_label = "millions";

    friend bool operator==(const SeriesDocument&, const SeriesDocument&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

template <typename T>
bool parse_number(std::string_view cell, T& out) {
    if (cell.empty()) return false;
    // from_chars rejects a leading '+', which hand-edited files sometimes carry.
    if (cell.front() == '+') cell.remove_prefix(1);
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

inline std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

struct ParsedRow {
    std::size_t row;
    int year;
    double fund_size;
    double trading_profit;
};

inline std::string join_years(const std::vector<int>& years) {
    std::string out;
    for (std::size_t i = 0; i < years.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(years[i]);
    }
    return out;
}

}  // namespace detail

/// Parses a `year,fund_size,trading_profit` document. Rows may appear in any
/// order; after sorting by year they must be contiguous. Blank lines are
/// ignored but still counted for row numbers.
inline SeriesDocument parse_series(std::string_view text, std::string source = "<memory>") {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<detail::ParsedRow> rows;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = detail::trim(raw);
        if (line.empty()) continue;

        const auto cells = detail::split_commas(line);
        if (!have_header) {
            std::string got;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) got += ',';
                got += cells[i];
            }
            if (got != kSeriesHeader) {
                throw CsvError(CsvErrorKind::schema, line_no,
                               "expected header '" + std::string(kSeriesHeader) + "', found '" +
                                   got + "'");
            }
            have_header = true;
            continue;
        }

        if (cells.size() != 3) {
            throw CsvError(CsvErrorKind::schema, line_no,
                           "expected 3 columns (year, fund_size, trading_profit), found " +
                               std::to_string(cells.size()));
        }
        detail::ParsedRow r{line_no, 0, 0.0, 0.0};
        if (!detail::parse_number(cells[0], r.year)) {
            throw CsvError(CsvErrorKind::non_numeric, line_no,
                           "column 'year' is not an integer: '" + std::string(cells[0]) + "'");
        }
        if (!detail::parse_number(cells[1], r.fund_size) || !std::isfinite(r.fund_size)) {
            throw CsvError(CsvErrorKind::non_numeric, line_no,
                           "column 'fund_size' is not a number: '" + std::string(cells[1]) + "'");
        }
        if (!detail::parse_number(cells[2], r.trading_profit) || !std::isfinite(r.trading_profit)) {
            throw CsvError(CsvErrorKind::non_numeric, line_no,
                           "column 'trading_profit' is not a number: '" + std::string(cells[2]) +
                               "'");
        }
        if (r.fund_size <= 0.0) {
            throw CsvError(CsvErrorKind::non_positive_size, line_no,
                           "fund_size must be positive for year " + std::to_string(r.year));
        }
        rows.push_back(r);
    }

    if (!have_header) {
        throw CsvError(CsvErrorKind::schema, 1,
                       "missing header '" + std::string(kSeriesHeader) + "'");
    }
    if (rows.empty()) {
        throw CsvError(CsvErrorKind::schema, line_no, "document has a header but no data rows");
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.year < b.year; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const int prev = rows[i - 1].year;
        const int cur = rows[i].year;
        if (cur == prev) {
            throw CsvError(CsvErrorKind::contiguity, std::max(rows[i - 1].row, rows[i].row),
                           "duplicate year " + std::to_string(cur), {cur});
        }
        if (cur != prev + 1) {
            std::vector<int> missing;
            for (int y = prev + 1; y < cur; ++y) missing.push_back(y);
            throw CsvError(CsvErrorKind::contiguity, rows[i].row,
                           "years are not contiguous, missing " + detail::join_years(missing),
                           missing);
        }
    }

    std::vector<FundRecord> records;
    records.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        records.push_back({static_cast<int>(i) + 1, rows[i].fund_size, rows[i].trading_profit});
    }
    return SeriesDocument{std::move(source), FundSeries(std::move(records), rows.front().year)};
}

/// Inverse of parse_series. Numbers are written in shortest round-trip form.
inline std::string serialize_series(const FundSeries& series) {
    std::string out(kSeriesHeader);
    out += '\n';
    for (const auto& r : series.records()) {
        out += std::to_string(series.calendar_year(r.year_no));
        out += ',';
        out += detail::format_number(r.fund_size);
        out += ',';
        out += detail::format_number(r.trading_profit);
        out += '\n';
    }
    return out;
}

inline std::string serialize_series(const SeriesDocument& doc) { return serialize_series(doc.series); }

/// Beginning-of-year sizes and yearly trading profits of the Medallion fund,
/// 1988-2018, in millions before fees.
inline SeriesDocument builtin_medallion() {
    static constexpr std::array<std::array<double, 2>, 31> kRows{{
        {20, 3},        {20, 0},        {30, 23},       {42, 23},       {74, 35},
        {122, 66},      {276, 258},     {462, 244},     {637, 283},     {829, 261},
        {1100, 628},    {1540, 549},    {1900, 2434},   {3800, 2149},   {5240, 2676},
        {5090, 2245},   {5200, 2572},   {5200, 2999},   {5200, 4374},   {5200, 7104},
        {5200, 7911},   {5200, 3881},   {10000, 5750},  {10000, 7107},  {10000, 5679},
        {10000, 8875},  {9500, 7125},   {9500, 6582},   {9500, 6514},   {10000, 8536},
        {10000, 7643},
    }};
    std::vector<FundRecord> records;
    records.reserve(kRows.size());
    for (std::size_t i = 0; i < kRows.size(); ++i) {
        records.push_back({static_cast<int>(i) + 1, kRows[i][0], kRows[i][1]});
    }
    return SeriesDocument{std::string(kBuiltinMedallion), FundSeries(std::move(records), 1988)};
}

/// Reads a series from disk. Missing or unreadable files raise IoError;
/// malformed content raises CsvError.
inline SeriesDocument read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading '" + path.string() + "'");
    return parse_series(buf.str(), path.string());
}

inline void write_series_file(const SeriesDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << serialize_series(doc);
    out.flush();
    if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

}  // namespace fundcomp
