#include "chaoskit/econ_ingest.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "chaoskit/errors.hpp"

namespace chaoskit {

std::vector<double> log_diff(std::span<const double> values) {
    if (values.size() < 2) throw DomainError("log difference needs at least two values");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError(fmt::format("log difference needs positive finite values, got {}", v));

    std::vector<double> out(values.size() - 1);
    for (std::size_t k = 0; k + 1 < values.size(); ++k) out[k] = std::log(values[k + 1]) - std::log(values[k]);
    return out;
}

double derive_employment(double business_income, double per_capita_income) {
    if (!(business_income > 0.0) || !(per_capita_income > 0.0))
        throw DomainError(fmt::format("employment derivation needs positive incomes, got {} and {}", business_income,
                                      per_capita_income));
    return business_income / per_capita_income;
}

double employment_of(const RawRow& row) {
    if (row.employment) return *row.employment;
    if (row.business_income && row.per_capita_income)
        return derive_employment(*row.business_income, *row.per_capita_income);
    throw DomainError(fmt::format("year {}: needs employment or both business and per-capita income", row.year));
}

IndicatorTable build_indicators(const RawSeries& raw) {
    const auto& rows = raw.rows;
    if (rows.size() < 2) throw DomainError("indicator table needs at least two years of raw data");
    for (std::size_t k = 1; k < rows.size(); ++k)
        if (rows[k].year != rows[k - 1].year + 1)
            throw DomainError(fmt::format("years must be consecutive: {} follows {}", rows[k].year, rows[k - 1].year));

    std::vector<double> rnd, patents, labour;
    rnd.reserve(rows.size());
    patents.reserve(rows.size());
    labour.reserve(rows.size());
    for (const auto& row : rows) {
        rnd.push_back(row.rnd_input);
        patents.push_back(row.active_patents);
        labour.push_back(employment_of(row));
    }
    const auto alpha = log_diff(rnd);
    const auto beta = log_diff(patents);
    const auto n = log_diff(labour);

    IndicatorTable table;
    table.rows.reserve(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        IndicatorRow row;
        row.year = rows[k + 1].year;
        row.alpha = alpha[k];
        row.beta = beta[k];
        row.n = n[k];
        row.alpha_plus_beta = alpha[k] + beta[k];
        row.one_plus_n = 1.0 + n[k];
        if (!(row.one_plus_n > 0.0))
            throw DomainError(fmt::format("year {}: labour growth {} gives 1 + n <= 0", row.year, row.n));
        row.T = row.alpha_plus_beta / row.one_plus_n;
        table.rows.push_back(row);
    }
    return table;
}

double infer_epsilon(double target_r, double T) {
    if (!(T > 0.0)) throw DomainError(fmt::format("T must be positive, got {}", T));
    return target_r / T;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, std::string_view column) {
    T value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw DomainError(fmt::format("line {}: column {} is not a number: '{}'", line_no, column, field));
    return value;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line_no, std::string_view column) {
    if (field.empty()) return std::nullopt;
    return parse_number<double>(field, line_no, column);
}

}  // namespace

RawSeries read_raw_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw DomainError("raw CSV is empty");
    ++line_no;
    std::string_view header = trim(line);
    if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
    if (header != kRawCsvHeader)
        throw DomainError(fmt::format("unexpected raw CSV header '{}', expected '{}'", header, kRawCsvHeader));

    RawSeries series;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) continue;
        auto fields = split_fields(content);
        if (fields.size() != 6)
            throw DomainError(fmt::format("line {}: expected 6 fields, got {}", line_no, fields.size()));
        for (auto& f : fields) f = trim(f);

        RawRow row;
        row.year = parse_number<int>(fields[0], line_no, "year");
        row.rnd_input = parse_number<double>(fields[1], line_no, "rnd_input");
        row.active_patents = parse_number<double>(fields[2], line_no, "active_patents");
        row.employment = parse_optional(fields[3], line_no, "employment");
        row.business_income = parse_optional(fields[4], line_no, "business_income");
        row.per_capita_income = parse_optional(fields[5], line_no, "per_capita_income");
        if (!row.employment && !(row.business_income && row.per_capita_income))
            throw DomainError(
                fmt::format("line {}: needs employment or both business_income and per_capita_income", line_no));
        series.rows.push_back(row);
    }
    return series;
}

double round_half_even(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    // nearbyint honours the default round-to-nearest-even mode.
    return std::nearbyint(value * scale) / scale;
}

void write_indicator_csv(std::ostream& out, const IndicatorTable& table, CsvPrecision precision) {
    out << "year,alpha,beta,n,alpha_plus_beta,one_plus_n,T\n";
    for (const auto& row : table.rows) {
        const double cols[] = {row.alpha, row.beta, row.n, row.alpha_plus_beta, row.one_plus_n, row.T};
        out << row.year;
        for (double v : cols) {
            if (precision == CsvPrecision::four_decimals) {
                // -0.0 would print as "-0.0000"
                const double shown = round_half_even(v, 4) + 0.0;
                fmt::print(out, ",{:.4f}", shown);
            } else {
                fmt::print(out, ",{:.17g}", v);
            }
        }
        out << '\n';
    }
}

}  // namespace chaoskit
