#include "templap/report.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace templap {

namespace {

constexpr const char* kColumns[] = {"J",        "M",         "L2_err", "L2_rate",
                                    "Linf_err", "Linf_rate", "iters",  "seconds"};
constexpr const char* kAbsent = "--";

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

std::string sci(const std::optional<double>& v) { return v ? sci(*v) : kAbsent; }

std::vector<std::string> cells(const LevelResult& l) {
  return {std::to_string(l.level), std::to_string(l.m), sci(l.l2_error), sci(l.l2_rate),
          sci(l.linf_error),       sci(l.linf_rate),   std::to_string(l.iterations),
          sci(l.seconds)};
}

void write_row(std::ostream& out, const std::vector<std::string>& row, ReportFormat format) {
  const char* sep = format == ReportFormat::Csv ? "," : " | ";
  if (format == ReportFormat::Markdown) out << "| ";
  for (std::size_t k = 0; k < row.size(); ++k) out << (k ? sep : "") << row[k];
  if (format == ReportFormat::Markdown) out << " |";
  out << '\n';
}

std::optional<double> parse_rate(const std::string& s) {
  if (s == kAbsent) return std::nullopt;
  return std::stod(s);
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

void write_report(const ConvergenceReport& report, ReportFormat format, std::ostream& out) {
  write_row(out, {std::begin(kColumns), std::end(kColumns)}, format);
  if (format == ReportFormat::Markdown)
    write_row(out, std::vector<std::string>(std::size(kColumns), "---"), format);
  for (const auto& l : report.levels) write_row(out, cells(l), format);
}

std::string format_report(const ConvergenceReport& report, ReportFormat format) {
  std::ostringstream os;
  write_report(report, format, os);
  return os.str();
}

void emit_report(const ConvergenceReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_report(report, format, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

ConvergenceReport parse_csv_report(std::istream& in) {
  ConvergenceReport report;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("report: missing header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != std::size(kColumns))
      throw std::runtime_error("report: wrong column count on line " + std::to_string(lineno));
    try {
      LevelResult l;
      l.level = std::stoi(f[0]);
      l.m = std::stoull(f[1]);
      l.l2_error = std::stod(f[2]);
      l.l2_rate = parse_rate(f[3]);
      l.linf_error = std::stod(f[4]);
      l.linf_rate = parse_rate(f[5]);
      l.iterations = std::stoull(f[6]);
      l.seconds = std::stod(f[7]);
      report.levels.push_back(l);
    } catch (const std::logic_error&) {
      throw std::runtime_error("report: bad number on line " + std::to_string(lineno));
    }
  }
  return report;
}

}  // namespace templap
