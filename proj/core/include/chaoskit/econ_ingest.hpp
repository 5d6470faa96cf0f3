#pragma once

// Yearly raw series -> log-difference growth indicators and the firm coefficient
// T = (alpha + beta) / (1 + n).

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chaoskit {

struct RawRow {
    int year = 0;
    double rnd_input = 0.0;       // R&D spending, currency units
    double active_patents = 0.0;  // count
    std::optional<double> employment;
    std::optional<double> business_income;
    std::optional<double> per_capita_income;
};

/// Rows ordered by consecutive years. Each row carries employment directly or
/// both income columns from which it is derived.
struct RawSeries {
    std::vector<RawRow> rows;
};

struct IndicatorRow {
    int year = 0;
    double alpha = 0.0;  // growth of technology inputs
    double beta = 0.0;   // growth of technological content of output
    double n = 0.0;      // labour growth
    double alpha_plus_beta = 0.0;
    double one_plus_n = 0.0;
    double T = 0.0;
};

struct IndicatorTable {
    std::vector<IndicatorRow> rows;
};

/// out[k] = ln(values[k+1]) - ln(values[k]).
/// Throws DomainError for fewer than two values or any value <= 0.
std::vector<double> log_diff(std::span<const double> values);

/// business_income / per_capita_income. Throws DomainError unless both are > 0.
double derive_employment(double business_income, double per_capita_income);

/// Employment for one row: the direct column when present, otherwise derived.
double employment_of(const RawRow& row);

/// Throws DomainError on a malformed series (fewer than two rows, non-consecutive
/// years, missing employment, non-positive values) or when 1 + n <= 0.
IndicatorTable build_indicators(const RawSeries& raw);

/// target_r / T. Throws DomainError unless T > 0.
double infer_epsilon(double target_r, double T);

/// Header expected by read_raw_csv.
inline constexpr const char* kRawCsvHeader = "year,rnd_input,active_patents,employment,business_income,per_capita_income";

/// Parses the raw CSV. Empty cells are allowed in the optional columns.
/// Throws DomainError with the offending line number on malformed input.
RawSeries read_raw_csv(std::istream& in);

/// Round to `decimals` places, ties to even.
double round_half_even(double value, int decimals);

enum class CsvPrecision { full, four_decimals };

/// `year,alpha,beta,n,alpha_plus_beta,one_plus_n,T`. Full precision writes 17
/// significant digits; four_decimals applies round_half_even first.
void write_indicator_csv(std::ostream& out, const IndicatorTable& table, CsvPrecision precision);

}  // namespace chaoskit
