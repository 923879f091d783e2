#pragma once

#include <cmath>
#include <string>

#include "fundcomp/compounding.hpp"
#include "fundcomp/error.hpp"
#include "fundcomp/series.hpp"

namespace fundcomp {

/// One sub-period of a fund evaluated as a standalone fund.
struct SubperiodReport {
    int from_year_no = 1;
    int to_year_no = 1;
    int from_calendar_year = 1;
    int to_calendar_year = 1;
    int years = 1;
    double initial_value = 0.0;
    double final_fund_size = 0.0;
    double total_inflow = 0.0;  // accrued at the financing rate
    double total_profit = 0.0;  // accrued at the deposit rate
    double final_value = 0.0;
    double compounded_return = 0.0;
    double naive_return = 0.0;
};

/// Windows are re-based: the first year of the window is year 1, so the jump
/// into the window's opening size is not counted as an inflow. `rates` may
/// cover either the whole series or exactly the window.
inline SubperiodReport subperiod_report(const FundSeries& series, int from_year_no, int to_year_no,
                                        const RateSchedule& rates) {
    series.check_window(from_year_no, to_year_no);
    const auto window = series.window(from_year_no, to_year_no);
    const RateSchedule window_rates = rates.size() == window.size() && rates.size() != series.size()
                                          ? rates
                                          : rates.window(from_year_no, to_year_no);

    const auto breakdown = final_value(window, window_rates);
    const auto compounded = size_profit_compound(window, breakdown);

    SubperiodReport out;
    out.from_year_no = from_year_no;
    out.to_year_no = to_year_no;
    out.from_calendar_year = series.calendar_year(from_year_no);
    out.to_calendar_year = series.calendar_year(to_year_no);
    out.years = window.years();
    out.initial_value = window.initial_size();
    out.final_fund_size = breakdown.final_fund_size;
    out.total_inflow = breakdown.accrued_inflow;
    out.total_profit = breakdown.accrued_profit;
    out.final_value = breakdown.final_value;
    out.compounded_return = compounded.rate;
    out.naive_return = naive_compound(net_returns(window));
    return out;
}

inline SubperiodReport subperiod_report(const FundSeries& series, int from_year_no,
                                        int to_year_no) {
    return subperiod_report(series, from_year_no, to_year_no, RateSchedule::zero(series.size()));
}

struct WealthProxyScenario {
    std::string label;
    double initial_wealth = 0.0;
    double final_wealth = 0.0;
    int years = 1;
};

/// Annualized growth of a manager's wealth, used as a stand-in for the
/// fund's after-fee return.
inline CompoundedReturn wealth_growth(const WealthProxyScenario& scenario) {
    const double rate =
        annualized_growth(scenario.initial_wealth, scenario.final_wealth, scenario.years);
    return {rate, scenario.years, scenario.initial_wealth, scenario.final_wealth};
}

struct FeeScenario {
    double manager_stake = 0.0;      // manager's share of fund capital, (0, 1]
    double fund_size = 0.0;
    double gross_profit_rate = 0.0;
    double performance_fee = 0.0;    // share of gross profit kept by the firm, [0, 1)
    double insider_equity = 0.0;     // manager's share of the fee pool, (0, 1]
};

struct FeeBreakdown {
    double gross_profit = 0.0;
    double investor_pool = 0.0;
    double fee_pool = 0.0;
    double manager_investor_share = 0.0;
    double manager_fee_share = 0.0;
    double manager_profit = 0.0;
    double manager_capital = 0.0;
    double manager_return = 0.0;
};

inline void validate(const FeeScenario& s) {
    if (s.manager_stake == 0.0) {
        throw ValidationError("manager stake is zero: return on zero capital is undefined");
    }
    if (!(s.manager_stake > 0.0 && s.manager_stake <= 1.0)) {
        throw ValidationError("manager stake must lie in (0, 1]");
    }
    if (!(s.fund_size > 0.0)) throw ValidationError("fund size must be positive");
    if (!std::isfinite(s.gross_profit_rate)) throw ValidationError("profit rate must be finite");
    if (!(s.performance_fee >= 0.0 && s.performance_fee < 1.0)) {
        throw ValidationError("performance fee must lie in [0, 1)");
    }
    if (!(s.insider_equity > 0.0 && s.insider_equity <= 1.0)) {
        throw ValidationError("insider equity must lie in (0, 1]");
    }
}

/// Splits one year's gross profit between the investor pool and the fee
/// pool and collects what the manager takes from each.
inline FeeBreakdown fee_breakdown(const FeeScenario& s) {
    validate(s);
    FeeBreakdown out;
    out.gross_profit = s.fund_size * s.gross_profit_rate;
    out.investor_pool = (1.0 - s.performance_fee) * out.gross_profit;
    out.fee_pool = s.performance_fee * out.gross_profit;
    out.manager_investor_share = s.manager_stake * out.investor_pool;
    out.manager_fee_share = s.insider_equity * out.fee_pool;
    out.manager_profit = out.manager_investor_share + out.manager_fee_share;
    out.manager_capital = s.manager_stake * s.fund_size;
    out.manager_return = out.manager_profit / out.manager_capital;
    return out;
}

inline double fee_adjusted_manager_return(const FeeScenario& scenario) {
    return fee_breakdown(scenario).manager_return;
}

struct DivergenceReport {
    double naive = 0.0;
    double size_profit = 0.0;
    double gap = 0.0;
    double naive_projection = 0.0;  // V_1 grown at the naive rate for N years
    double actual_final_value = 0.0;
};

inline DivergenceReport divergence_report(const FundSeries& series, const RateSchedule& rates) {
    DivergenceReport out;
    const auto breakdown = final_value(series, rates);
    out.naive = naive_compound(net_returns(series));
    out.size_profit = size_profit_compound(series, breakdown).rate;
    out.gap = out.naive - out.size_profit;
    out.naive_projection = grow_projection(series.initial_size(), out.naive, series.years());
    out.actual_final_value = breakdown.final_value;
    return out;
}

inline DivergenceReport divergence_report(const FundSeries& series) {
    return divergence_report(series, RateSchedule::zero(series.size()));
}

}  // namespace fundcomp
