#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "scf/field.hpp"

namespace scf {

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<Coeff> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  Matrix multiply(const Matrix& o, const FieldConfig& F) const;
  Matrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> a_;
};

/// Row space maintained in reduced echelon form, built one vector at a time.
class LinearSpan {
 public:
  LinearSpan(std::size_t dim, const FieldConfig& F) : dim_(dim), F_(F) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v in place against the span; returns true if a nonzero remainder survives.
  bool reduce(std::vector<Coeff>& v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool add(std::vector<Coeff> v);
  bool contains(std::vector<Coeff> v) const { return !reduce(v); }
  const std::vector<std::vector<Coeff>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  FieldConfig F_;
  std::vector<std::vector<Coeff>> rows_;  // monic at pivot, pivot columns cleared elsewhere
  std::vector<std::size_t> pivots_;
};

std::size_t rank(Matrix m, const FieldConfig& F);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Coeff>> nullspace(const Matrix& m, const FieldConfig& F);
/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, const FieldConfig& F);
/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Coeff>> solve(const Matrix& m, std::span<const Coeff> b, const FieldConfig& F);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m, const FieldConfig& F);

}  // namespace scf
