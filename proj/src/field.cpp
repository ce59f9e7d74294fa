#include "scf/field.hpp"

namespace scf {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a * b) % m;  // a, b < 2^32
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldConfig::FieldConfig(std::uint32_t p) : p_(p) {
  if (!is_prime_u32(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  }
}

Coeff FieldConfig::pow(Coeff a, std::uint64_t e) const {
  return static_cast<Coeff>(powmod64(a, e, p_));
}

Coeff FieldConfig::inv(Coeff a) const {
  if (a % p_ == 0) throw ArithmeticError("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff FieldConfig::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

long long FieldConfig::to_signed(Coeff a) const {
  if (a > p_ / 2) return static_cast<long long>(a) - p_;
  return a;
}

}  // namespace scf
