#include "ansps/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

namespace ansps {

namespace {

bool compatible_encoding(const std::set<int>& seen) {
  auto within = [&](std::initializer_list<int> allowed) {
    return std::all_of(seen.begin(), seen.end(), [&](int v) {
      return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
    });
  };
  return within({-1, 1}) || within({0, 1}) || within({1, 2});
}

int parse_label(std::string_view tok, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(tok.data() + (tok.starts_with('+') ? 1 : 0), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError("malformed label '" + std::string(tok) + "'", line);
  if (v != -1.0 && v != 0.0 && v != 1.0 && v != 2.0)
    throw ParseError("unsupported label '" + std::string(tok) + "'", line);
  return static_cast<int>(v);
}

void parse_feature(std::string_view tok, std::size_t line, std::uint32_t& index, double& value) {
  auto colon = tok.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == tok.size())
    throw ParseError("malformed feature '" + std::string(tok) + "'", line);
  std::uint64_t idx = 0;
  auto r1 = std::from_chars(tok.data(), tok.data() + colon, idx);
  if (r1.ec != std::errc() || r1.ptr != tok.data() + colon || idx == 0 ||
      idx > std::numeric_limits<std::uint32_t>::max())
    throw ParseError("bad feature index in '" + std::string(tok) + "'", line);
  auto vs = tok.substr(colon + 1);
  auto r2 = std::from_chars(vs.data() + (vs.starts_with('+') ? 1 : 0), vs.data() + vs.size(), value);
  if (r2.ec != std::errc() || r2.ptr != vs.data() + vs.size() || !std::isfinite(value))
    throw ParseError("bad feature value in '" + std::string(tok) + "'", line);
  index = static_cast<std::uint32_t>(idx - 1);
}

}  // namespace

void Dataset::validate() const {
  if (rows.size() != labels.size()) throw ContractViolation("rows and labels differ in length");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (labels[i] != -1 && labels[i] != 1) throw ContractViolation("label must be -1 or +1");
    const auto& r = rows[i];
    if (r.index.size() != r.value.size()) throw ContractViolation("sparse row is inconsistent");
    for (std::size_t j = 0; j < r.index.size(); ++j) {
      if (r.index[j] >= n) throw ContractViolation("feature index out of range");
      if (j > 0 && r.index[j] <= r.index[j - 1])
        throw ContractViolation("sparse indices must be strictly ascending");
    }
  }
}

Dataset parse_libsvm(std::istream& is, std::optional<std::size_t> n) {
  Dataset ds;
  std::vector<int> raw_labels;
  std::set<int> seen;
  std::size_t max_index = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view text(line);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      if (end > pos) tokens.push_back(text.substr(pos, end - pos));
      pos = end;
    }
    if (tokens.empty()) continue;

    const int label = parse_label(tokens[0], lineno);
    seen.insert(label);
    if (!compatible_encoding(seen)) throw ParseError("mixed label encodings", lineno);
    raw_labels.push_back(label);

    std::vector<std::pair<std::uint32_t, double>> feats;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      std::uint32_t idx = 0;
      double val = 0.0;
      parse_feature(tokens[t], lineno, idx, val);
      feats.emplace_back(idx, val);
    }
    std::sort(feats.begin(), feats.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow row;
    for (std::size_t j = 0; j < feats.size(); ++j) {
      if (j > 0 && feats[j].first == feats[j - 1].first)
        throw ParseError("duplicate feature index " + std::to_string(feats[j].first + 1), lineno);
      row.index.push_back(feats[j].first);
      row.value.push_back(feats[j].second);
      max_index = std::max<std::size_t>(max_index, feats[j].first + 1);
    }
    ds.rows.push_back(std::move(row));
  }
  if (ds.rows.empty()) throw ParseError("no samples in input", 0);

  const bool zero_one = seen.contains(0);
  const bool one_two = seen.contains(2);
  ds.labels.reserve(raw_labels.size());
  for (int l : raw_labels) {
    if (zero_one) ds.labels.push_back(l == 0 ? -1 : 1);
    else if (one_two) ds.labels.push_back(l == 2 ? -1 : 1);
    else ds.labels.push_back(l);
  }

  if (n) {
    if (*n < max_index)
      throw ParseError("dimension override " + std::to_string(*n) + " is below the largest index " +
                           std::to_string(max_index),
                       0);
    ds.n = *n;
  } else {
    ds.n = max_index;
  }
  return ds;
}

Dataset load_libsvm(const std::string& path, std::optional<std::size_t> n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file '" + path + "'");
  return parse_libsvm(in, n);
}

void write_libsvm(std::ostream& os, const Dataset& ds) {
  char buf[64];
  for (std::size_t i = 0; i < ds.size(); ++i) {
    os << (ds.labels[i] > 0 ? "+1" : "-1");
    const auto& r = ds.rows[i];
    for (std::size_t j = 0; j < r.index.size(); ++j) {
      auto res = std::to_chars(buf, buf + sizeof(buf), r.value[j]);
      os << ' ' << (r.index[j] + 1) << ':' << std::string_view(buf, res.ptr - buf);
    }
    os << '\n';
  }
}

namespace {

Vector draw_normal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector u(static_cast<Eigen::Index>(n));
  for (auto& c : u) c = gauss(rng);
  const double norm = u.norm();
  if (norm > 0.0) u /= norm;
  else u[0] = 1.0;
  return u;
}

}  // namespace

Vector synthetic_normal(const SyntheticSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  return draw_normal(rng, spec.n);
}

Dataset make_synthetic(const SyntheticSpec& spec) {
  if (spec.n == 0 || spec.samples == 0) throw ContractViolation("synthetic data needs n >= 1 and N >= 1");
  if (!(spec.margin > 0.0)) throw ContractViolation("synthetic margin must be positive");

  std::mt19937_64 rng(spec.seed);
  const Vector u = draw_normal(rng, spec.n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double noise_scale = std::isinf(spec.margin) ? 0.0 : 1.0 / spec.margin;

  Dataset ds;
  ds.n = spec.n;
  ds.rows.reserve(spec.samples);
  ds.labels.reserve(spec.samples);
  for (std::size_t i = 0; i < spec.samples; ++i) {
    SparseRow row;
    row.index.resize(spec.n);
    row.value.resize(spec.n);
    std::iota(row.index.begin(), row.index.end(), 0u);
    double score = 0.0;
    for (std::size_t j = 0; j < spec.n; ++j) {
      row.value[j] = gauss(rng);
      score += u[static_cast<Eigen::Index>(j)] * row.value[j];
    }
    const double noise = gauss(rng);
    score += noise_scale * noise;
    ds.labels.push_back(score >= 0.0 ? 1 : -1);
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

}  // namespace ansps
