#pragma once

// Annual compounding arithmetic for funds whose size jumps between years.
//
// Two measures live here. naive_compound() chains yearly net returns
// geometrically, which is only meaningful when every year starts from the
// previous year's ending value. size_profit_compound() instead builds the
// money a holder would actually end up with: every yearly profit is taken
// out and grows at the deposit rate from the following year on, every
// external inflow V_t - V_{t-1} is charged at the financing rate from the
// year it arrives, and the last beginning-of-year size is added back.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <iterator>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include "fundcomp/error.hpp"
#include "fundcomp/series.hpp"

namespace fundcomp {

/// Final value split into its three components. Currency unit follows the series.
struct AccrualBreakdown {
    double accrued_profit = 0.0;
    double accrued_inflow = 0.0;
    double final_fund_size = 0.0;
    double final_value = 0.0;
};

/// An annualized rate plus the endpoints it was derived from.
struct CompoundedReturn {
    double rate = 0.0;
    int years = 0;
    double initial_value = 0.0;
    double final_value = 0.0;
};

template <typename R>
concept ReturnRange = std::ranges::input_range<R> &&
                      std::convertible_to<std::ranges::range_value_t<R>, double>;

/// Simple one-year return: profit over beginning-of-year size.
inline double net_return(double profit, double size, std::optional<int> year_no = std::nullopt) {
    if (!(size > 0.0)) {
        throw ValidationError(
            year_no ? "fund size must be positive in year " + std::to_string(*year_no)
                    : std::string("fund size must be positive"),
            year_no);
    }
    return profit / size;
}

inline std::vector<double> net_returns(const FundSeries& series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (const auto& r : series.records()) {
        out.push_back(net_return(r.trading_profit, r.fund_size, r.year_no));
    }
    return out;
}

/// Geometric annualization of yearly returns: (prod(1 + r_t))^(1/n) - 1.
/// Summed in log space so long sequences neither overflow nor underflow.
template <ReturnRange R>
double naive_compound(const R& returns) {
    double log_sum = 0.0;
    std::size_t n = 0;
    for (const auto& value : returns) {
        const double r = static_cast<double>(value);
        ++n;
        if (!(r > -1.0)) {
            throw ValidationError("return " + std::to_string(r) + " in year " +
                                      std::to_string(n) + " is not above -100%",
                                  static_cast<int>(n));
        }
        log_sum += std::log1p(r);
    }
    if (n == 0) throw ValidationError("naive compounding needs at least one return");
    return std::expm1(log_sum / static_cast<double>(n));
}

template <ReturnRange R>
double arithmetic_mean_return(const R& returns) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& value : returns) {
        sum += static_cast<double>(value);
        ++n;
    }
    if (n == 0) throw ValidationError("arithmetic mean needs at least one return");
    return sum / static_cast<double>(n);
}

/// External flows V_t - V_{t-1} for t = 2..N. Empty for a one-year series.
inline std::vector<double> cash_flows(const FundSeries& series) {
    std::vector<double> out;
    if (series.size() < 2) return out;
    out.reserve(series.size() - 1);
    const auto& recs = series.records();
    for (std::size_t i = 1; i < recs.size(); ++i) {
        out.push_back(recs[i].fund_size - recs[i - 1].fund_size);
    }
    return out;
}

/// Accrues profits at deposit rates over years t+1..N and inflows at
/// financing rates over years t..N, then adds the final fund size.
/// Outflows (negative inflows) use the financing rate as well.
inline AccrualBreakdown final_value(const FundSeries& series, const RateSchedule& rates) {
    const int n = series.years();
    if (rates.size() != series.size()) {
        throw ValidationError("rate schedule covers " + std::to_string(rates.size()) +
                              " years but the series has " + std::to_string(n));
    }

    // Walk backwards so each year's growth factor is one multiplication away
    // from the next year's.
    double profit_growth = 1.0;  // prod_{s=t+1..N} (1 + r_s^d)
    double inflow_growth = 1.0;  // prod_{s=t..N} (1 + r_s^f)
    AccrualBreakdown out;
    for (int t = n; t >= 1; --t) {
        out.accrued_profit += series.profit_at(t) * profit_growth;
        profit_growth *= 1.0 + rates.deposit(t);

        inflow_growth *= 1.0 + rates.financing(t);
        if (t >= 2) {
            out.accrued_inflow += (series.size_at(t) - series.size_at(t - 1)) * inflow_growth;
        }
    }
    out.final_fund_size = series.final_size();
    out.final_value = out.accrued_profit - out.accrued_inflow + out.final_fund_size;
    return out;
}

/// Annual growth that turns `initial` into `final_amount` over `years`.
inline double annualized_growth(double initial, double final_amount, int years) {
    if (!(initial > 0.0)) throw ValidationError("initial value must be positive");
    if (!(final_amount > 0.0)) throw ValidationError("final value must be positive");
    if (years < 1) throw ValidationError("years must be at least 1");
    return std::pow(final_amount / initial, 1.0 / years) - 1.0;
}

inline double grow_projection(double initial, double rate, int years) {
    if (!(initial > 0.0)) throw ValidationError("initial value must be positive");
    if (!(rate > -1.0)) throw ValidationError("growth rate must be above -100%");
    if (years < 1) throw ValidationError("years must be at least 1");
    return initial * std::pow(1.0 + rate, years);
}

inline CompoundedReturn size_profit_compound(const FundSeries& series,
                                             const AccrualBreakdown& breakdown) {
    if (!(breakdown.final_value > 0.0)) throw WipedOutFundError(breakdown.final_value);
    const double initial = series.initial_size();
    return {annualized_growth(initial, breakdown.final_value, series.years()), series.years(),
            initial, breakdown.final_value};
}

/// Size-profit compounded return: (final_value / V_1)^(1/N) - 1.
inline CompoundedReturn size_profit_compound(const FundSeries& series, const RateSchedule& rates) {
    return size_profit_compound(series, final_value(series, rates));
}

inline CompoundedReturn size_profit_compound(const FundSeries& series) {
    return size_profit_compound(series, RateSchedule::zero(series.size()));
}

}  // namespace fundcomp
