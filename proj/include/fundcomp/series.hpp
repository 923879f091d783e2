#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fundcomp/error.hpp"

namespace fundcomp {

/// One year of a fund: beginning-of-year size and the profit earned during
/// the year. Currency is in whatever unit the caller chose (millions for the
/// bundled data).
struct FundRecord {
    int year_no = 1;
    double fund_size = 0.0;
    double trading_profit = 0.0;

    friend bool operator==(const FundRecord&, const FundRecord&) = default;
};

/// Ordered yearly records, year_no = 1..N, anchored to a calendar year.
class FundSeries {
public:
    FundSeries(std::vector<FundRecord> records, int base_year = 1)
        : records_(std::move(records)), base_year_(base_year) {
        validate();
    }

    /// Builds a series from parallel size/profit columns.
    static FundSeries from_columns(std::span<const double> sizes, std::span<const double> profits,
                                   int base_year = 1) {
        if (sizes.size() != profits.size()) {
            throw ValidationError("size and profit columns differ in length (" +
                                  std::to_string(sizes.size()) + " vs " +
                                  std::to_string(profits.size()) + ")");
        }
        std::vector<FundRecord> records;
        records.reserve(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            records.push_back({static_cast<int>(i) + 1, sizes[i], profits[i]});
        }
        return FundSeries(std::move(records), base_year);
    }

    std::size_t size() const noexcept { return records_.size(); }
    int years() const noexcept { return static_cast<int>(records_.size()); }
    int base_year() const noexcept { return base_year_; }
    int first_calendar_year() const noexcept { return base_year_; }
    int last_calendar_year() const noexcept { return base_year_ + years() - 1; }

    const std::vector<FundRecord>& records() const noexcept { return records_; }

    /// Record for a 1-based year index.
    const FundRecord& at(int year_no) const {
        check_index(year_no);
        return records_[static_cast<std::size_t>(year_no - 1)];
    }

    double size_at(int year_no) const { return at(year_no).fund_size; }
    double profit_at(int year_no) const { return at(year_no).trading_profit; }
    double initial_size() const noexcept { return records_.front().fund_size; }
    double final_size() const noexcept { return records_.back().fund_size; }

    std::vector<double> sizes() const {
        std::vector<double> out;
        out.reserve(records_.size());
        for (const auto& r : records_) out.push_back(r.fund_size);
        return out;
    }

    std::vector<double> profits() const {
        std::vector<double> out;
        out.reserve(records_.size());
        for (const auto& r : records_) out.push_back(r.trading_profit);
        return out;
    }

    int calendar_year(int year_no) const noexcept { return base_year_ + year_no - 1; }

    /// Re-bases years from..to as a standalone series whose year 1 is `from`.
    FundSeries window(int from_year_no, int to_year_no) const {
        check_window(from_year_no, to_year_no);
        std::vector<FundRecord> out;
        out.reserve(static_cast<std::size_t>(to_year_no - from_year_no + 1));
        for (int t = from_year_no; t <= to_year_no; ++t) {
            auto r = at(t);
            r.year_no = t - from_year_no + 1;
            out.push_back(r);
        }
        return FundSeries(std::move(out), calendar_year(from_year_no));
    }

    void check_window(int from_year_no, int to_year_no) const {
        if (from_year_no < 1 || to_year_no > years() || from_year_no > to_year_no) {
            throw ValidationError("invalid window [" + std::to_string(from_year_no) + ", " +
                                  std::to_string(to_year_no) + "] for a series of " +
                                  std::to_string(years()) + " years");
        }
    }

    friend bool operator==(const FundSeries&, const FundSeries&) = default;

private:
    void check_index(int year_no) const {
        if (year_no < 1 || year_no > years()) {
            throw ValidationError("year index " + std::to_string(year_no) + " outside 1.." +
                                  std::to_string(years()));
        }
    }

    void validate() const {
        if (records_.empty()) throw ValidationError("a fund series needs at least one year");
        for (std::size_t i = 0; i < records_.size(); ++i) {
            const auto& r = records_[i];
            const int expected = static_cast<int>(i) + 1;
            if (r.year_no != expected) {
                throw ValidationError("year_no " + std::to_string(r.year_no) + " at position " +
                                          std::to_string(expected) + " breaks the 1..N sequence",
                                      r.year_no);
            }
            if (!std::isfinite(r.fund_size) || r.fund_size <= 0.0) {
                throw ValidationError("fund size must be positive in year " +
                                          std::to_string(r.year_no),
                                      r.year_no);
            }
            if (!std::isfinite(r.trading_profit)) {
                throw ValidationError("trading profit is not finite in year " +
                                          std::to_string(r.year_no),
                                      r.year_no);
            }
        }
    }

    std::vector<FundRecord> records_;
    int base_year_ = 1;
};

/// Per-year deposit (profit accrual) and financing (inflow accrual) rates.
class RateSchedule {
public:
    RateSchedule(std::vector<double> deposit_rates, std::vector<double> financing_rates)
        : deposit_(std::move(deposit_rates)), financing_(std::move(financing_rates)) {
        if (deposit_.size() != financing_.size()) {
            throw ValidationError("deposit and financing schedules differ in length");
        }
        check_rates(deposit_, "deposit");
        check_rates(financing_, "financing");
    }

    /// Same rate in both columns for every year.
    static RateSchedule flat(double rate, std::size_t years) { return flat(rate, rate, years); }

    static RateSchedule flat(double deposit_rate, double financing_rate, std::size_t years) {
        return RateSchedule(std::vector<double>(years, deposit_rate),
                            std::vector<double>(years, financing_rate));
    }

    static RateSchedule zero(std::size_t years) { return flat(0.0, years); }

    std::size_t size() const noexcept { return deposit_.size(); }
    const std::vector<double>& deposit_rates() const noexcept { return deposit_; }
    const std::vector<double>& financing_rates() const noexcept { return financing_; }

    // 1-based year index, like FundSeries.
    double deposit(int year_no) const { return deposit_.at(static_cast<std::size_t>(year_no - 1)); }
    double financing(int year_no) const {
        return financing_.at(static_cast<std::size_t>(year_no - 1));
    }

    RateSchedule window(int from_year_no, int to_year_no) const {
        if (from_year_no < 1 || to_year_no > static_cast<int>(size()) ||
            from_year_no > to_year_no) {
            throw ValidationError("rate schedule of " + std::to_string(size()) +
                                  " years does not cover [" + std::to_string(from_year_no) +
                                  ", " + std::to_string(to_year_no) + "]");
        }
        const auto b = static_cast<std::ptrdiff_t>(from_year_no - 1);
        const auto e = static_cast<std::ptrdiff_t>(to_year_no);
        return RateSchedule({deposit_.begin() + b, deposit_.begin() + e},
                            {financing_.begin() + b, financing_.begin() + e});
    }

    RateSchedule with_shift(double deposit_delta, double financing_delta) const {
        auto d = deposit_;
        auto f = financing_;
        for (auto& x : d) x += deposit_delta;
        for (auto& x : f) x += financing_delta;
        return RateSchedule(std::move(d), std::move(f));
    }

private:
    static void check_rates(const std::vector<double>& rates, const char* which) {
        for (std::size_t i = 0; i < rates.size(); ++i) {
            if (!std::isfinite(rates[i]) || rates[i] <= -1.0) {
                throw ValidationError(std::string(which) + " rate in year " +
                                          std::to_string(i + 1) + " must be finite and > -1",
                                      static_cast<int>(i) + 1);
            }
        }
    }

    std::vector<double> deposit_;
    std::vector<double> financing_;
};

}  // namespace fundcomp
