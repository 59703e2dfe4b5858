#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mpkit/testkit.hpp"

namespace mpkit::testkit {

ResidualReport make_report(std::string name, index_t m, index_t n, double ratio, double threshold) {
  ResidualReport r;
  r.name = std::move(name);
  r.m = m;
  r.n = n;
  r.ratio = std::isnan(ratio) ? std::numeric_limits<double>::infinity() : std::fabs(ratio);
  r.threshold = threshold;
  r.passed = r.ratio < threshold;
  return r;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

}  // namespace

std::string format_line(const ResidualReport& r) {
  std::ostringstream os;
  os << r.name << ' ' << r.m << ' ' << r.n << ' ' << num(r.ratio) << ' ' << num(r.threshold) << ' '
     << (r.passed ? "PASS" : "FAIL");
  return os.str();
}

std::string format_csv_row(const ResidualReport& r) {
  std::ostringstream os;
  os << r.name << ',' << r.m << ',' << r.n << ',' << num(r.ratio) << ',' << num(r.threshold) << ','
     << (r.passed ? "PASS" : "FAIL");
  return os.str();
}

void write_text(std::ostream& os, std::span<const ResidualReport> reports) {
  for (const auto& r : reports) os << format_line(r) << '\n';
}

void write_csv(std::ostream& os, std::span<const ResidualReport> reports) {
  os << kReportCsvHeader << '\n';
  for (const auto& r : reports) os << format_csv_row(r) << '\n';
}

std::vector<ResidualReport> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kReportCsvHeader) throw std::runtime_error("report csv: bad header");
  std::vector<ResidualReport> out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 6) throw std::runtime_error("report csv: line " + std::to_string(lineno) + ": expected 6 fields");
    ResidualReport r;
    r.name = f[0];
    r.m = std::stoll(f[1]);
    r.n = std::stoll(f[2]);
    r.ratio = std::stod(f[3]);
    r.threshold = std::stod(f[4]);
    if (f[5] != "PASS" && f[5] != "FAIL")
      throw std::runtime_error("report csv: line " + std::to_string(lineno) + ": bad result");
    r.passed = f[5] == "PASS";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mpkit::testkit
