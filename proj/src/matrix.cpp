#include "pathmax/matrix.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace pathmax {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Cell {
  bool integral = false;
  std::int64_t i = 0;
  double d = 0.0;
};

Cell parse_cell(std::string_view text, std::size_t row, std::size_t col) {
  const auto s = trim(text);
  Cell c;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), c.i);
  if (ec == std::errc{} && p == s.data() + s.size()) {
    c.integral = true;
    c.d = static_cast<double>(c.i);
    return c;
  }
  auto [q, ec2] = std::from_chars(s.data(), s.data() + s.size(), c.d);
  if (ec2 != std::errc{} || q != s.data() + s.size() || !std::isfinite(c.d)) {
    throw MatrixError(fmt::format("weights CSV: bad number '{}' at row {}, column {}", s, row + 1, col + 1));
  }
  return c;
}

}  // namespace

void require_weight_bounds(const IntMatrix& a) {
  if (a.size() != 0 && a.cwiseAbs().maxCoeff() > kMaxIntWeight) {
    throw MatrixError(fmt::format("integer weights must lie in [-{0}, {0}]", kMaxIntWeight));
  }
}

WeightMatrix parse_weights_csv(std::string_view text) {
  std::vector<std::vector<Cell>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<Cell> row;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      row.push_back(parse_cell(rest.substr(0, comma), rows.size(), row.size()));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  const auto n = rows.size();
  if (n == 0) throw MatrixError("weights CSV: no rows");
  bool integral = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw MatrixError(fmt::format("weights CSV: row {} has {} entries, expected {}", i + 1, rows[i].size(), n));
    }
    for (const auto& c : rows[i]) integral = integral && c.integral;
  }
  const auto size = static_cast<Eigen::Index>(n);
  if (integral) {
    IntMatrix m(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
      for (Eigen::Index j = 0; j < size; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].i;
    require_symmetric(m, "weights CSV");
    require_weight_bounds(m);
    return m;
  }
  RealMatrix m(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].d;
  require_symmetric(m, "weights CSV");
  return m;
}

std::string to_csv(const IntMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const RealMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ',';
      // Shortest round-trip form.
      out += fmt::format("{}", m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace pathmax
