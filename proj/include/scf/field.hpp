#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scf {

using Coeff = std::uint32_t;

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin for 32-bit inputs (bases 2, 7, 61).
bool is_prime_u32(std::uint32_t n);

/// Arithmetic in GF(p). Elements are canonical residues in [0, p).
class FieldConfig {
 public:
  static constexpr std::uint32_t kDefaultPrime = 65521;

  explicit FieldConfig(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;  // throws ArithmeticError on 0

  /// Reduce an arbitrary signed integer into [0, p).
  Coeff from_int(long long v) const;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  long long to_signed(Coeff a) const;

  bool operator==(const FieldConfig& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace scf
