#include "doctest.h"
#include "scf/lattice.hpp"

using namespace scf;

TEST_CASE("sectional invariants") {
  CHECK(sectional_invariants(HilbertPoly({2, -1, 5})) == SectionalInvariants{10, 7, 2});
  CHECK(sectional_invariants(HilbertPoly({2, 0, 6})) == SectionalInvariants{12, 7, 2});
  // the plane: (t+1)(t+2)/2
  CHECK(sectional_invariants(HilbertPoly({1, Rational(3, 2), Rational(1, 2)})) == SectionalInvariants{1, 0, 1});
  CHECK_THROWS(sectional_invariants(HilbertPoly({1, 1})));
  CHECK_THROWS(sectional_invariants(HilbertPoly({Rational(1, 2), 0, 1})));
  // round trip on valid triples
  for (int d = 1; d <= 20; ++d)
    for (int g = 0; g <= 10; ++g)
      for (int chi = -3; chi <= 4; ++chi) {
        SectionalInvariants s{d, g, chi};
        CHECK(sectional_invariants(surface_hilbert_poly(s)) == s);
      }
}

TEST_CASE("chi of twisted ideal sheaves in P5") {
  HilbertPoly P({2, -1, 5});
  CHECK(chi_ideal_twist(P, 5, 2) == 1);
  CHECK(chi_ideal_twist(P, 5, 3) == 12);
  CHECK(chi_ideal_twist(P, 5, 0) == -1);
}

TEST_CASE("surface invariants enforce Noether and adjunction") {
  CHECK_THROWS_AS(SurfaceInvariants(10, 7, 2, 2, -2, 25), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceInvariants(10, 7, 2, 3, -2, 26), std::invalid_argument);
  auto S = SurfaceInvariants::from_sectional(10, 7, 2, -2);
  CHECK(S.hK() == 2);
  CHECK(S.c2() == 26);
}

TEST_CASE("self-intersection in a cubic fourfold") {
  CHECK(self_intersection_in_cubic(SurfaceInvariants(10, 7, 2, 2, -2, 26)) == 38);
  // P2 blown up in 4 points: K^2 = 9 - 4, c2 = 3 + 4, anticanonical of degree 5
  CHECK(self_intersection_in_cubic(SurfaceInvariants(5, 1, 1, -5, 5, 7)) == 13);
  // quartic scroll: a Hirzebruch surface, K^2 = 8, c2 = 4
  CHECK(self_intersection_in_cubic(SurfaceInvariants(4, 0, 1, -6, 8, 4)) == 10);
}

TEST_CASE("discriminants") {
  CHECK(hassett_discriminant({3, 10, 38}) == 14);
  CHECK(hassett_discriminant({3, 3, 3}) == 0);
  CHECK(hassett_discriminant({3, 5, 13}) == 14);
  CHECK(is_square_free(14));
  CHECK_FALSE(is_square_free(12));
  // the two routes agree
  for (auto inv : {SurfaceInvariants(10, 7, 2, 2, -2, 26), SurfaceInvariants(5, 1, 1, -5, 5, 7),
                   SurfaceInvariants(4, 0, 1, -6, 8, 4)}) {
    BigInt s2 = self_intersection_in_cubic(inv);
    CHECK(hassett_discriminant({3, inv.degree(), s2}) == 3 * s2 - inv.degree() * inv.degree());
  }
}

TEST_CASE("admissible discriminants") {
  CHECK(hassett_admissible_divisor(14));
  CHECK_FALSE(hassett_admissible_divisor(6));
  CHECK(hassett_admissible_divisor(8));
  CHECK_FALSE(hassett_admissible_divisor(10));
  for (int d = -20; d <= 100; ++d) CHECK(hassett_admissible_divisor(d) == (d > 6 && (d % 6 == 0 || d % 6 == 2)));
}

TEST_CASE("Noether") {
  CHECK(noether_c2(2, -2) == 26);
  CHECK(noether_c2(2, 0) == 24);
  CHECK(noether_c2(1, 9) == 3);
}

TEST_CASE("flag dimension ledger") {
  CHECK(flag_dimension_ledger({}) == LedgerResult{69, 15});
  CHECK(flag_dimension_ledger({58, 12, 35, 19}) == LedgerResult{69, 15});
  CHECK(flag_dimension_ledger({56, 12, 35, 19}) == LedgerResult{67, 13});
  CHECK(flag_dimension_ledger({0, 1, 0, 0}) == LedgerResult{0, 0});
  CHECK(kDimPGL6 + kDimC14 == 54);
}

TEST_CASE("residual classes") {
  CHECK(residual_class_solver(10, 5, 3) == ResidualClass{5, -1});
  CHECK(residual_class_solver(4, 5, 3) == ResidualClass{3, -1});
  CHECK(residual_class_solver(8, 5, 1) == ResidualClass{3, 1});
  CHECK_THROWS_AS(residual_class_solver(1, 6, 3), std::domain_error);
  for (int s = -30; s <= 30; ++s)
    for (int d = 1; d <= 7; ++d)
      for (int h = 1; h <= 4; ++h) {
        try {
          auto r = residual_class_solver(s, d, h);
          CHECK(abs(r.b) == 1);
          CHECK(h * r.a + d * r.b == s);
        } catch (const std::domain_error&) {
          CHECK((s - d) % h != 0);
          CHECK((s + d) % h != 0);
        }
      }
}
