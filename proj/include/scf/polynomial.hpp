#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scf/field.hpp"
#include "scf/monomial.hpp"

namespace scf {

/// Raised when operands live in incompatible rings or orders.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// k[x0..x_{n-1}] over GF(p) with a fixed term order.
class PolyRing {
 public:
  PolyRing(int nvars, FieldConfig field, MonomialOrder order, std::vector<std::string> names = {});

  static RingPtr make(int nvars, std::uint32_t p = FieldConfig::kDefaultPrime);
  static RingPtr make(int nvars, const FieldConfig& field, const MonomialOrder& order);

  int nvars() const { return nvars_; }
  const FieldConfig& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::string& var_name(int i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }

  RingPtr with_order(const MonomialOrder& order) const;
  /// Same variable count and field, any order.
  bool compatible(const PolyRing& o) const { return nvars_ == o.nvars_ && field_ == o.field_; }
  bool same_as(const PolyRing& o) const { return compatible(o) && order_ == o.order_; }

 private:
  int nvars_;
  FieldConfig field_;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

struct Term {
  Monomial m;
  Coeff c = 0;
};

/// Sparse distributed polynomial; terms strictly decreasing under the ring order,
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` are already normalized.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  Coeff leading_coeff() const { return leading_term().c; }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  Polynomial monic() const;

  Coeff evaluate(std::span<const Coeff> point) const;
  Polynomial derivative(int var) const;
  /// Substitute x_i -> images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Re-sort into a compatible ring (different order).
  Polynomial in_ring(const RingPtr& target) const;
  /// Coefficient of a given monomial (0 if absent).
  Coeff coeff(const Monomial& m) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// Linear form sum_i coeffs[i] * x_i.
Polynomial linear_form(const RingPtr& ring, std::span<const Coeff> coeffs);

}  // namespace scf
