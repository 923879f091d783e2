// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fundcomp/cli.hpp"
#include "fundcomp/fundcomp.hpp"
#include "support/generators.hpp"
#include "support/properties.hpp"

namespace {

using namespace fundcomp;

// Tolerances.
constexpr double kPctTol = 0.05;          // percentage points
constexpr double kMillionsTol = 2.0;      // 3% scenario, millions
constexpr double kToyRelTol = 1e-4;       // toy counterexamples, relative
constexpr int kPropertyCases = 1000;

class Criterion {
public:
    void check(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void near_pct(double fraction, double expected_pct, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << fraction * 100.0 << "%, want " << expected_pct << " +/- "
           << kPctTol << "pp";
        check(std::fabs(fraction * 100.0 - expected_pct) <= kPctTol, os.str());
    }
    void near_abs(double got, double want, double tol, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want << " +/- " << tol;
        check(std::fabs(got - want) <= tol, os.str());
    }
    void near_rel(double got, double want, double rel, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want << " (rel " << rel << ")";
        check(std::fabs(got - want) <= rel * std::fabs(want), os.str());
    }
    void exact(double got, double want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        check(got == want, os.str());
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

struct Table2Column {
    const char* label;
    int from, to;
    double initial, final_size, inflow, profit, final_value, return_pct;
};

void table2(Criterion& c) {
    static const Table2Column kColumns[] = {
        {"1988-2001", 1, 14, 20, 3800, 3780, 6956, 6976, 51.9},
        {"2002-2009", 15, 22, 5240, 5200, -40, 33762, 39002, 28.5},
        {"2010-2018", 23, 31, 10000, 10000, 0, 63811, 73811, 24.9},
        {"2002-2018", 15, 31, 5240, 10000, 4760, 97573, 102813, 19.1},
        {"1988-2018", 1, 31, 20, 10000, 9980, 104529, 104549, 31.8},
    };
    const auto series = builtin_medallion().series;
    for (const auto& col : kColumns) {
        const auto r = subperiod_report(series, col.from, col.to);
        const std::string p = col.label;
        c.exact(r.initial_value, col.initial, p + " initial value");
        c.exact(r.final_fund_size, col.final_size, p + " final fund size");
        c.exact(r.total_inflow, col.inflow, p + " total inflow");
        c.exact(r.total_profit, col.profit, p + " total profit");
        c.exact(r.final_value, col.final_value, p + " final value");
        c.near_pct(r.compounded_return, col.return_pct, p + " compounded return");
    }
}

void naive_vs_mean(Criterion& c) {
    const auto returns = net_returns(builtin_medallion().series);
    c.near_pct(naive_compound(returns), 63.2, "naive compounded return");
    c.near_pct(arithmetic_mean_return(returns), 66.0, "arithmetic mean return");
}

void three_percent(Criterion& c) {
    const auto series = builtin_medallion().series;
    const auto rates = RateSchedule::flat(0.03, series.size());
    const auto b = final_value(series, rates);
    c.near_abs(b.accrued_inflow, 15329, kMillionsTol, "accrued inflow");
    c.near_abs(b.accrued_profit, 131654, kMillionsTol, "accrued profit");
    c.near_abs(b.final_value, 126326, kMillionsTol, "final value");
    c.near_pct(size_profit_compound(series, rates).rate, 32.6, "compounded return");
}

void toys(Criterion& c) {
    const auto capped2 = FundSeries::from_columns(std::vector<double>{100, 100},
                                                  std::vector<double>{50, 50});
    const auto capped10 = FundSeries::from_columns(std::vector<double>(10, 100),
                                                   std::vector<double>(10, 50));
    const auto growing = FundSeries::from_columns(std::vector<double>{100, 200},
                                                  std::vector<double>{50, 100});
    // Closed forms: (200/100)^(1/2), (600/100)^(1/10), (250/100)^(1/2).
    const double capped2_rate = size_profit_compound(capped2).rate;
    const double capped10_rate = size_profit_compound(capped10).rate;
    const double growing_rate = size_profit_compound(growing).rate;
    c.near_rel(capped2_rate, std::sqrt(2.0) - 1.0, kToyRelTol, "capped two-year");
    c.near_rel(capped10_rate, std::pow(6.0, 0.1) - 1.0, kToyRelTol, "capped ten-year");
    c.near_rel(growing_rate, std::sqrt(2.5) - 1.0, kToyRelTol, "growing two-year");
    // The quoted two-decimal percentages, to half a unit in the last place.
    c.near_abs(capped2_rate * 100.0, 41.42, 0.005, "capped two-year (%)");
    c.near_abs(capped10_rate * 100.0, 19.62, 0.005, "capped ten-year (%)");
    c.near_abs(growing_rate * 100.0, 58.11, 0.005, "growing two-year (%)");
    c.near_rel(grow_projection(100, 0.5, 2), 225, kToyRelTol, "naive projection");
}

void wealth(Criterion& c) {
    c.near_pct(wealth_growth({"1998", 550, 26200, 23}).rate, 18.3, "23-year proxy");
    c.near_pct(wealth_growth({"1988", 14, 26200, 33}).rate, 25.6, "33-year proxy");
}

void fees(Criterion& c) {
    const auto b = fee_breakdown({0.5, 10000, 0.6, 0.4, 0.7});
    c.near_abs(b.manager_profit, 3480, 1e-6, "manager profit (millions)");
    c.near_pct(b.manager_return, 69.6, "manager return");
}

void sanity(Criterion& c) {
    const double a = grow_projection(20e6, 0.632, 31);
    const double b = grow_projection(20e6, 0.661, 33);
    std::ostringstream os;
    os << "63.2% x 31y = " << a / 1e12 << " trillion, want [77, 80]";
    c.check(a >= 77e12 && a <= 80e12, os.str());
    os.str("");
    os << "66.1% x 33y = " << b / 1e12 << " trillion, want [370, 380]";
    c.check(b >= 370e12 && b <= 380e12, os.str());
}

void properties(Criterion& c) {
    const struct {
        const char* name;
        props::Outcome outcome;
    } runs[] = {
        {"self-financing equivalence", props::self_financing_equivalence(kPropertyCases, 101)},
        {"zero-rate final value", props::zero_rate_identity(kPropertyCases, 102)},
        {"telescoping cash flows", props::telescoping_cash_flows(kPropertyCases, 103)},
        {"AM >= GM", props::am_gm(kPropertyCases, 104)},
        {"grow/annualize round trip", props::grow_annualize_round_trip(kPropertyCases, 105)},
        {"scale invariance", props::scale_invariance(kPropertyCases, 106)},
    };
    for (const auto& r : runs) {
        c.check(r.outcome.ok(), std::string(r.name) + ": " + r.outcome.failure.value_or(""));
        c.check(r.outcome.cases >= kPropertyCases,
                std::string(r.name) + ": only " + std::to_string(r.outcome.cases) + " cases");
    }
}

template <typename F>
bool throws_csv(F&& f, CsvErrorKind kind, std::size_t row) {
    try {
        f();
    } catch (const CsvError& e) {
        return e.kind() == kind && e.row() == row;
    }
    return false;
}

void ingestion(Criterion& c) {
    gen::Source src(109);
    int mismatches = 0;
    for (int i = 0; i < kPropertyCases; ++i) {
        const auto s = src.series();
        if (!(parse_series(serialize_series(s)).series == s)) ++mismatches;
    }
    c.check(mismatches == 0, std::to_string(mismatches) + " CSV round-trip mismatches");

    const std::string h = "year,fund_size,trading_profit\n";
    c.check(throws_csv([] { parse_series("year,size,profit\n1988,20,3\n"); },
                       CsvErrorKind::schema, 1),
            "bad header -> schema error at row 1");
    c.check(throws_csv([&] { parse_series(h + "1988,20,3\n1989,abc,0\n"); },
                       CsvErrorKind::non_numeric, 3),
            "non-numeric cell -> parse error at row 3");
    c.check(throws_csv([&] { parse_series(h + "1988,20,3\n1990,30,23\n"); },
                       CsvErrorKind::contiguity, 3),
            "year gap -> contiguity error at row 3");
    c.check(throws_csv([&] { parse_series(h + "1988,20,3\n1989,-20,0\n"); },
                       CsvErrorKind::non_positive_size, 3),
            "non-positive size -> validation error at row 3");

    std::ostringstream out, err;
    const int code = cli::run({"report", "--builtin", "medallion"}, out, err);
    c.check(code == 0, "report --builtin medallion exit code " + std::to_string(code));
    c.check(out.str().find("31.8%") != std::string::npos, "report output lacks 31.8%");
}

}  // namespace

int main() {
    const struct {
        int id;
        const char* name;
        std::function<void(Criterion&)> run;
    } criteria[] = {
        {1, "sub-period table reproduction", table2},
        {2, "naive compounding vs arithmetic mean", naive_vs_mean},
        {3, "flat 3% financing/deposit scenario", three_percent},
        {4, "toy counterexamples", toys},
        {5, "wealth-proxy growth", wealth},
        {6, "performance-fee redistribution", fees},
        {7, "trillion-scale sanity projections", sanity},
        {8, "randomized property suite", properties},
        {9, "ingestion and CLI", ingestion},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Criterion result;
        try {
            c.run(result);
        } catch (const std::exception& e) {
            result.check(false, std::string("unexpected exception: ") + e.what());
        }
        const bool ok = result.failures().empty();
        std::printf("%s  [%d] %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
        for (const auto& f : result.failures()) std::printf("        %s\n", f.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
                std::size(criteria));
    return failed == 0 ? 0 : 1;
}
