#include "ansps/trace.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "ansps/types.hpp"

namespace ansps {

namespace {

void put_real(std::ostream& os, double v) {
  if (std::isnan(v)) {
    os << "nan";
    return;
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  os.write(buf, res.ptr - buf);
}

double get_real(std::string_view tok, std::size_t line) {
  if (tok == "nan") return std::nan("");
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError("bad real '" + std::string(tok) + "'", line);
  return v;
}

std::uint64_t get_count(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError("bad integer '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace

std::optional<std::uint64_t> RunTrace::full_sample_iteration(std::uint64_t n_max) const {
  for (const auto& row : rows) {
    if (row.n_k >= n_max) return row.k;
  }
  return std::nullopt;
}

void write_trace_csv(std::ostream& os, const RunTrace& trace) {
  os << kTraceHeader << '\n';
  for (const auto& r : trace.rows) {
    os << r.k << ',' << r.n_k << ',';
    put_real(os, r.alpha_k);
    os << ',';
    put_real(os, r.zeta_k);
    os << ',';
    put_real(os, r.theta_k);
    os << ',' << r.fev_cum << ',';
    put_real(os, r.f_saa);
    os << ',';
    put_real(os, r.f_full);
    os << '\n';
  }
}

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

std::vector<TraceRow> parse_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTraceHeader)
    throw ParseError("missing or unexpected trace header", 1);

  std::vector<TraceRow> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (;;) {
      auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 8) throw ParseError("expected 8 fields", lineno);
    TraceRow r;
    r.k = get_count(f[0], lineno);
    r.n_k = get_count(f[1], lineno);
    r.alpha_k = get_real(f[2], lineno);
    r.zeta_k = get_real(f[3], lineno);
    r.theta_k = get_real(f[4], lineno);
    r.fev_cum = get_count(f[5], lineno);
    r.f_saa = get_real(f[6], lineno);
    r.f_full = get_real(f[7], lineno);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ansps
