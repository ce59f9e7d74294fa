#pragma once

#include <string>

#include "scf/ideal.hpp"

namespace scf {

/// Numerical data of a smooth projective surface S with hyperplane class h.
/// Construction enforces Noether (12 chi = K^2 + c2) and adjunction on the
/// hyperplane section (2 genus - 2 = degree + hK).
class SurfaceInvariants {
 public:
  SurfaceInvariants(BigInt degree, BigInt genus, BigInt chi, BigInt hK, BigInt K2, BigInt c2);
  /// hK from adjunction and c2 from Noether; K2 is an outside input.
  static SurfaceInvariants from_sectional(BigInt degree, BigInt genus, BigInt chi, BigInt K2);

  const BigInt& degree() const { return d_; }
  const BigInt& genus() const { return g_; }
  const BigInt& chi() const { return chi_; }
  const BigInt& hK() const { return hK_; }
  const BigInt& K2() const { return K2_; }
  const BigInt& c2() const { return c2_; }

 private:
  BigInt d_, g_, chi_, hK_, K2_, c2_;
};

struct SectionalInvariants {
  BigInt degree, genus, chi;
  bool operator==(const SectionalInvariants&) const = default;
};

/// Reads (d, genus, chi) off P(t) = (d/2) t^2 + (d/2 + 1 - genus) t + chi.
SectionalInvariants sectional_invariants(const HilbertPoly& P);
/// The inverse map.
HilbertPoly surface_hilbert_poly(const SectionalInvariants& s);

/// chi(I_S(d)) = binom(d + n, n) - P(d) for S in P^n.
BigInt chi_ideal_twist(const HilbertPoly& P, int n, long d);

/// c2 of the normal bundle of S in a cubic fourfold: 6 d + 3 hK + K^2 - c2(S).
BigInt self_intersection_in_cubic(const SurfaceInvariants& inv);

/// Gram matrix of <h^2, S> in the middle cohomology of a cubic fourfold.
struct RankTwoLattice {
  BigInt h4 = 3, h2S, S2;
};

/// h4 * S2 - (h2S)^2.
BigInt hassett_discriminant(const RankTwoLattice& L);
bool is_square_free(const BigInt& n);
/// d > 6 and d = 0, 2 mod 6.
bool hassett_admissible_divisor(const BigInt& d);
BigInt noether_c2(const BigInt& chi, const BigInt& K2);

constexpr int kDimPGL6 = 35;
/// One less than the 20 moduli of cubic fourfolds.
constexpr int kDimC14 = 19;

struct DimensionLedger {
  BigInt tangent_dim = 58;  // h0 of the normal sheaf of S in P5
  BigInt cubics = 12;       // h0(I_S(3))
  BigInt pgl = kDimPGL6;
  BigInt divisor = kDimC14;
};

struct LedgerResult {
  BigInt flag_dim, fiber_bound;
  bool operator==(const LedgerResult&) const = default;
};

/// flag_dim = tangent + cubics - 1; fiber_bound = max(0, flag_dim - (divisor + pgl)).
LedgerResult flag_dimension_ledger(const DimensionLedger& L);

struct ResidualClass {
  BigInt a, b;
  bool operator==(const ResidualClass&) const = default;
};

/// Integer (a, b) with deg_s = h4 a + deg_d b and b = +1 or -1 (b = +1 tried first).
ResidualClass residual_class_solver(const BigInt& deg_s, const BigInt& deg_d, const BigInt& h4);

}  // namespace scf
