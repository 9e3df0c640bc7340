#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "upinv/field.hpp"

namespace upinv {

/// Dense rows x cols matrix of residues mod p.
class ResidueMatrix {
 public:
  ResidueMatrix(PrimeModulus p, std::size_t rows, std::size_t cols)
      : mod_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  PrimeModulus modulus() const noexcept { return mod_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const std::uint32_t> values);

 private:
  PrimeModulus mod_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form. Rows [0, pivots.size()) are the nonzero rows,
/// row i has a leading 1 in column pivots[i], and pivots are increasing.
struct EchelonForm {
  ResidueMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
  /// Whether v lies in the row space.
  bool contains(std::span<const std::uint32_t> v) const;
};

/// Gauss-Jordan elimination, pivoting on the leftmost available column.
EchelonForm row_reduce(ResidueMatrix m);

std::size_t rank(const ResidueMatrix& m);

/// Basis of {v : m v = 0}, returned in reduced row echelon form so the
/// result depends only on the kernel, not on how m was assembled.
std::vector<std::vector<std::uint32_t>> nullspace(const ResidueMatrix& m);

}  // namespace upinv
