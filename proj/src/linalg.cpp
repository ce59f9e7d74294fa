#include "scf/linalg.hpp"

#include <stdexcept>

namespace scf {

Matrix Matrix::multiply(const Matrix& o, const FieldConfig& F) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(rows_, o.cols_);
  const std::uint64_t p = F.prime();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc = (acc + std::uint64_t{(*this)(i, k)} * o(k, j)) % p;
      }
      r(i, j) = static_cast<Coeff>(acc);
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

namespace {

// v -= f * row, over the columns from `start`
void axpy(std::span<Coeff> v, Coeff f, std::span<const Coeff> row, std::size_t start,
          const FieldConfig& F) {
  const std::uint64_t p = F.prime();
  const std::uint64_t nf = p - f;
  for (std::size_t j = start; j < v.size(); ++j) {
    if (row[j]) v[j] = static_cast<Coeff>((v[j] + nf * row[j]) % p);
  }
}

}  // namespace

bool LinearSpan::reduce(std::vector<Coeff>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Coeff f = v[pivots_[k]];
    if (f) axpy(v, f, rows_[k], pivots_[k], F_);
  }
  for (Coeff x : v) {
    if (x) return true;
  }
  return false;
}

bool LinearSpan::add(std::vector<Coeff> v) {
  if (!reduce(v)) return false;
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  Coeff inv = F_.inv(v[piv]);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = F_.mul(v[j], inv);
  // keep the basis fully reduced so reduce() can use one pass
  for (auto& r : rows_) {
    Coeff f = r[piv];
    if (f) axpy(r, f, v, piv, F_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<std::size_t> row_reduce(Matrix& m, const FieldConfig& F) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    }
    Coeff inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Coeff f = m(i, c);
      if (f) axpy(m.row(i), f, m.row(r), c, F);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const FieldConfig& F) { return row_reduce(m, F).size(); }

std::vector<std::vector<Coeff>> nullspace(const Matrix& m_in, const FieldConfig& F) {
  Matrix m = m_in;
  auto piv = row_reduce(m, F);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = F.neg(m(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Coeff>> solve(const Matrix& m, std::span<const Coeff> b, const FieldConfig& F) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = row_reduce(aug, F);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<Coeff> x(m.cols(), 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m, const FieldConfig& F) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = row_reduce(aug, F);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace scf
