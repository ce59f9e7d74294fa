#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scf/groebner.hpp"
#include "scf/linalg.hpp"

namespace scf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Homogeneous ideal with a lazily computed reduced Groebner basis.
/// Copies share the cache; the cache is filled at most once.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring);
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& gb() const;
  bool is_zero() const { return gb().size() == 0; }
  bool is_unit() const { return gb().is_unit(); }

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& J) const;
  bool operator==(const Ideal& J) const { return contains(J) && J.contains(*this); }

  /// Minimal generators of the leading-term ideal.
  std::vector<Monomial> leading_monomials() const;
  /// Monomials of degree d outside the leading-term ideal.
  std::vector<Monomial> standard_monomials(int d) const;
  /// dim_k I_d.
  long slice_dim(int d) const;
  /// Basis of I_d: m - NF(m) over non-standard monomials m (distinct leading terms).
  std::vector<Polynomial> slice_basis(int d) const;
  /// Reduced basis elements, re-expressed in the ideal's ring.
  std::vector<Polynomial> basis_polynomials() const { return gb().polynomials(); }
  /// A minimal homogeneous generating set.
  std::vector<Polynomial> minimal_generators() const;

  /// Same ideal in a compatible ring (another order); the basis is recomputed there.
  Ideal in_ring(const RingPtr& target) const;

  Ideal operator+(const Ideal& J) const;
  Ideal operator*(const Ideal& J) const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Coefficients a_j with f = sum_j a_j gens[j], solved in the degree-deg(f)
/// slice by linear algebra; nullopt if f is not in the ideal.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const std::vector<Polynomial>& gens);

Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

/// I : x_i^infinity, via grevlex with x_i ranked last (Bayer-Stillman).
Ideal saturate_by_variable(const Ideal& I, int i);
/// I : f^infinity for a linear form f, by moving f to the last coordinate.
Ideal saturate_by_linear_form(const Ideal& I, const Polynomial& f);

enum class SaturationMethod {
  generic_form,  // I : l^infinity for a random linear form, certified by equal Hilbert polynomials
  variables,     // intersection of the I : x_i^infinity
  iterated,      // I : m, (I : m) : m, ... until stable
};

/// I : m^infinity for the irrelevant ideal m.
Ideal saturate(const Ideal& I, SaturationMethod method = SaturationMethod::generic_form, std::uint64_t seed = 0);
/// I : J^infinity by iterated quotients; throws after `cap` rounds.
Ideal saturate(const Ideal& I, const Ideal& J, int cap = 50);

/// True iff a random change of coordinates puts no minimal generator of the
/// leading ideal in the last k variables; this certifies depth(R/I) >= k.
/// false means "not certified" (almost surely depth < k).
bool depth_certificate(const Ideal& I, int k, std::uint64_t seed = 0);

/// I intersected with the subring in the last n - k variables, as an ideal of
/// that smaller ring (variables keep their names).
Ideal eliminate(const Ideal& I, int k);

/// Polynomial with rational coefficients, ascending powers of t.
class HilbertPoly {
 public:
  HilbertPoly() = default;
  explicit HilbertPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational operator()(const Rational& t) const;
  /// Value at an integer; throws if not integral.
  BigInt at(long t) const;
  bool operator==(const HilbertPoly& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// Hilbert series of R/I (or of R/J for a monomial ideal J): numerator N(t) over (1-t)^n.
struct HilbertSeries {
  int nvars = 0;
  std::vector<BigInt> numerator;  // ascending powers

  /// N(t) = (1-t)^(nvars - krull_dim) Q(t) with Q(1) != 0.
  std::vector<BigInt> reduced_numerator() const;
  int krull_dim() const;
  /// dim_k (R/I)_d.
  BigInt value(int d) const;
  HilbertPoly polynomial() const;
};

HilbertSeries hilbert_series_monomial(int nvars, const std::vector<Monomial>& gens);
HilbertSeries hilbert_series(const Ideal& I);

struct DimDeg {
  int dim;  // projective dimension; -1 for the empty scheme
  BigInt degree;
};

DimDeg dim_deg(const HilbertSeries& hs);
DimDeg dim_deg(const Ideal& I);

/// Pullback under the linear change x = A y, i.e. x_i -> sum_j A(i, j) y_j, in the same ring.
Polynomial change_coordinates(const Polynomial& f, const Matrix& A);
Ideal change_coordinates(const Ideal& I, const Matrix& A);

/// Random invertible n x n matrix over GF(p).
Matrix random_invertible(int n, const FieldConfig& F, std::uint64_t seed);

}  // namespace scf
