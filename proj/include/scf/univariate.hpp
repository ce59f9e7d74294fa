#pragma once

#include <cstdint>
#include <vector>

#include "scf/field.hpp"

namespace scf {

/// Dense univariate polynomial over GF(p), coefficients from low to high degree.
struct UPoly {
  std::vector<Coeff> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

namespace upoly {

UPoly mul(const UPoly& a, const UPoly& b, const FieldConfig& F);
UPoly sub(const UPoly& a, const UPoly& b, const FieldConfig& F);
/// a = q*b + r; throws ArithmeticError if b is zero.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const FieldConfig& F);
UPoly mod(const UPoly& a, const UPoly& b, const FieldConfig& F);
/// Monic gcd.
UPoly gcd(UPoly a, UPoly b, const FieldConfig& F);
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m, const FieldConfig& F);
Coeff eval(const UPoly& a, Coeff x, const FieldConfig& F);

}  // namespace upoly

/// All roots of f in GF(p), sorted ascending: gcd with x^p - x, then
/// equal-degree splitting with random shifts drawn from `seed`.
/// Throws ArithmeticError for the zero polynomial.
std::vector<Coeff> uv_roots(const UPoly& f, const FieldConfig& F, std::uint64_t seed = 0);

}  // namespace scf
