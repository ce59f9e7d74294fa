#include "scf/lattice.hpp"

#include <stdexcept>

namespace scf {

SurfaceInvariants::SurfaceInvariants(BigInt degree, BigInt genus, BigInt chi, BigInt hK, BigInt K2, BigInt c2)
    : d_(std::move(degree)), g_(std::move(genus)), chi_(std::move(chi)), hK_(std::move(hK)), K2_(std::move(K2)), c2_(std::move(c2)) {
  if (12 * chi_ != K2_ + c2_) throw std::invalid_argument("Noether's formula fails: 12 chi != K^2 + c2");
  if (2 * g_ - 2 != d_ + hK_) throw std::invalid_argument("adjunction fails: 2 genus - 2 != degree + hK");
}

SurfaceInvariants SurfaceInvariants::from_sectional(BigInt degree, BigInt genus, BigInt chi, BigInt K2) {
  BigInt hK = 2 * genus - 2 - degree;
  BigInt c2 = 12 * chi - K2;
  return SurfaceInvariants(std::move(degree), std::move(genus), std::move(chi), std::move(hK), std::move(K2), std::move(c2));
}

namespace {

BigInt integral(const Rational& q, const char* what) {
  if (denominator(q) != 1) throw std::invalid_argument(std::string("non-integral ") + what);
  return numerator(q);
}

}  // namespace

SectionalInvariants sectional_invariants(const HilbertPoly& P) {
  if (P.degree() != 2) throw std::invalid_argument("not the Hilbert polynomial of a surface");
  BigInt d = integral(2 * P.coeff(2), "degree");
  Rational g = Rational(d) / 2 + 1 - P.coeff(1);
  return {d, integral(g, "sectional genus"), integral(P.coeff(0), "chi")};
}

HilbertPoly surface_hilbert_poly(const SectionalInvariants& s) {
  Rational half = Rational(s.degree) / 2;
  return HilbertPoly({Rational(s.chi), half + 1 - Rational(s.genus), half});
}

BigInt chi_ideal_twist(const HilbertPoly& P, int n, long d) {
  // binom(d + n, n) as a polynomial in d, so negative twists work too
  Rational b = 1;
  for (int i = 1; i <= n; ++i) b = b * Rational(d + i) / i;
  return integral(b - P(Rational(d)), "chi");
}

BigInt self_intersection_in_cubic(const SurfaceInvariants& inv) {
  return 6 * inv.degree() + 3 * inv.hK() + inv.K2() - inv.c2();
}

BigInt hassett_discriminant(const RankTwoLattice& L) { return L.h4 * L.S2 - L.h2S * L.h2S; }

bool is_square_free(const BigInt& n0) {
  BigInt n = abs(n0);
  if (n == 0) return false;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

bool hassett_admissible_divisor(const BigInt& d) {
  if (d <= 6) return false;
  BigInt r = d % 6;
  return r == 0 || r == 2;
}

BigInt noether_c2(const BigInt& chi, const BigInt& K2) { return 12 * chi - K2; }

LedgerResult flag_dimension_ledger(const DimensionLedger& L) {
  BigInt flag = L.tangent_dim + L.cubics - 1;
  BigInt fiber = flag - (L.divisor + L.pgl);
  if (fiber < 0) fiber = 0;
  return {flag, fiber};
}

ResidualClass residual_class_solver(const BigInt& deg_s, const BigInt& deg_d, const BigInt& h4) {
  if (h4 == 0) throw std::invalid_argument("h4 must be nonzero");
  for (int b : {1, -1}) {
    BigInt rest = deg_s - deg_d * b;
    if (rest % h4 == 0) return {rest / h4, BigInt(b)};
  }
  throw std::domain_error("no residual class with b = +1 or -1");
}

}  // namespace scf
