#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "templap/study.hpp"

namespace templap {

enum class ReportFormat { Csv, Markdown };

/// "csv" or "markdown". Throws std::invalid_argument.
ReportFormat parse_format(std::string_view name);

/// Columns J, M, L2_err, L2_rate, Linf_err, Linf_rate, iters, seconds.
/// Reals use 5 significant digits in scientific notation; a missing rate is
/// "--".
void write_report(const ConvergenceReport& report, ReportFormat format, std::ostream& out);
std::string format_report(const ConvergenceReport& report, ReportFormat format);

/// Throws std::runtime_error if the file cannot be written.
void emit_report(const ConvergenceReport& report, ReportFormat format,
                 const std::filesystem::path& path);

/// Reads a CSV report back. Only the printed columns are restored (h, the
/// convergence flags and the report flags keep their defaults). Throws
/// std::runtime_error on malformed input.
ConvergenceReport parse_csv_report(std::istream& in);

}  // namespace templap
