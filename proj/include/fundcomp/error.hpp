#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fundcomp {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A domain precondition was violated (bad size, bad rate, empty input, ...).
/// When the problem is tied to a specific year of a series, `year_no()` names it.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::optional<int> year_no = std::nullopt)
        : Error(what), year_no_(year_no) {}

    std::optional<int> year_no() const noexcept { return year_no_; }

private:
    std::optional<int> year_no_;
};

/// The accrued final value is not positive, so no annual growth rate exists.
class WipedOutFundError : public ValidationError {
public:
    explicit WipedOutFundError(double final_value)
        : ValidationError("wiped-out fund: final value " + std::to_string(final_value) +
                          " is not positive, annualized return is undefined"),
          final_value_(final_value) {}

    double final_value() const noexcept { return final_value_; }

private:
    double final_value_;
};

/// Failure while reading or writing a stream or file.
class IoError : public Error {
public:
    using Error::Error;
};

enum class CsvErrorKind {
    schema,            // header missing or wrong
    non_numeric,       // a cell does not parse as a number
    contiguity,        // gap or duplicate in the year column
    non_positive_size  // fund_size <= 0
};

/// Malformed series document. `row()` is the 1-based line number in the
/// source text (the header is row 1).
class CsvError : public Error {
public:
    CsvError(CsvErrorKind kind, std::size_t row, const std::string& what,
             std::vector<int> offending_years = {})
        : Error("row " + std::to_string(row) + ": " + what),
          kind_(kind),
          row_(row),
          offending_years_(std::move(offending_years)) {}

    CsvErrorKind kind() const noexcept { return kind_; }
    std::size_t row() const noexcept { return row_; }
    const std::vector<int>& offending_years() const noexcept { return offending_years_; }

private:
    CsvErrorKind kind_;
    std::size_t row_;
    std::vector<int> offending_years_;
};

}  // namespace fundcomp
