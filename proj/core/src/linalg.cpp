#include "upinv/linalg.hpp"

#include <utility>

#include "upinv/errors.hpp"

namespace upinv {

void ResidueMatrix::append_row(std::span<const std::uint32_t> values) {
  if (values.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

EchelonForm row_reduce(ResidueMatrix m) {
  const auto p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t found = next;
    while (found < m.rows() && m.at(found, c) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != next) {
      auto a = m.row(found), b = m.row(next);
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(a[k], b[k]);
    }
    auto prow = m.row(next);
    const std::uint32_t scale = p.inv(prow[c]);
    for (std::size_t k = c; k < m.cols(); ++k) prow[k] = p.mul(prow[k], scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next) continue;
      const std::uint32_t f = m.at(r, c);
      if (f == 0) continue;
      auto row = m.row(r);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (prow[k] != 0) row[k] = p.sub(row[k], p.mul(f, prow[k]));
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

bool EchelonForm::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != reduced.cols()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  const auto p = reduced.modulus();
  std::vector<std::uint32_t> w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::uint32_t f = w[pivots[i]];
    if (f == 0) continue;
    auto row = reduced.row(i);
    for (std::size_t k = pivots[i]; k < w.size(); ++k) {
      if (row[k] != 0) w[k] = p.sub(w[k], p.mul(f, row[k]));
    }
  }
  for (auto x : w) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t rank(const ResidueMatrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<std::uint32_t>> nullspace(const ResidueMatrix& m) {
  const auto p = m.modulus();
  const auto ech = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;

  ResidueMatrix kernel(p, 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      v[ech.pivots[i]] = p.neg(ech.reduced.at(i, free));
    }
    kernel.append_row(v);
  }
  const auto basis = row_reduce(std::move(kernel));
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(basis.rank());
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    auto row = basis.reduced.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace upinv
