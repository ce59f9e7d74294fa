#include <random>

#include "doctest.h"
#include "scf/ideal.hpp"
#include "scf/parse.hpp"

using namespace scf;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> src) {
  std::vector<Polynomial> g;
  for (auto s : src) g.push_back(parse_polynomial(s, R));
  return Ideal(R, g);
}

std::vector<Monomial> random_monomials(std::mt19937_64& rng, int n, int count, int maxdeg) {
  std::vector<Monomial> out;
  for (int k = 0; k < count; ++k) {
    Monomial m;
    int d = 1 + rng() % maxdeg;
    for (int j = 0; j < d; ++j) {
      int v = rng() % n;
      m.set(v, m[v] + 1);
    }
    out.push_back(m);
  }
  return out;
}

Ideal monomial_ideal(const RingPtr& R, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> g;
  for (const auto& m : ms) g.push_back(Polynomial::monomial(R, m));
  return Ideal(R, g);
}

Polynomial random_form(std::mt19937_64& rng, const RingPtr& R, int d, int terms) {
  auto ms = monomials_of_degree(R->nvars(), d, R->order());
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({ms[rng() % ms.size()], static_cast<Coeff>(rng() % R->field().prime())});
  return Polynomial::from_terms(R, ts);
}

}  // namespace

TEST_CASE("quotient examples") {
  auto R = PolyRing::make(3, 65521);
  CHECK(ideal_quotient(ideal_of(R, {"x0*x1"}), ideal_of(R, {"x0"})) == ideal_of(R, {"x1"}));
  auto I = ideal_of(R, {"x0^2 - x1*x2", "x1^3"});
  CHECK(ideal_quotient(I, Ideal::unit(R)) == I);
}

TEST_CASE("monomial quotients follow the combinatorial rule (property)") {
  auto R = PolyRing::make(3, 65521);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto gi = random_monomials(rng, 3, 4, 4);
    auto gj = random_monomials(rng, 3, 2, 2);
    // I : J = intersection over J's generators of <m / gcd(m, n)>
    std::optional<Ideal> expect;
    for (const auto& nm : gj) {
      std::vector<Monomial> q;
      for (const auto& m : gi) q.push_back(m / m.gcd(nm));
      Ideal part = monomial_ideal(R, q);
      expect = expect ? intersect(*expect, part) : part;
    }
    auto got = ideal_quotient(monomial_ideal(R, gi), monomial_ideal(R, gj));
    CHECK(got == *expect);
    // a monomial x^a is in I : J iff x^a * n in I for every generator n of J
    Ideal I = monomial_ideal(R, gi);
    for (const auto& mu : monomials_of_degree(3, 2, R->order())) {
      bool in = true;
      for (const auto& nm : gj) in &= I.contains(Polynomial::monomial(R, mu * nm));
      CHECK(got.contains(Polynomial::monomial(R, mu)) == in);
    }
  }
}

TEST_CASE("intersection of coordinate ideals") {
  auto R = PolyRing::make(4, 65521);
  auto I = intersect(ideal_of(R, {"x0", "x1"}), ideal_of(R, {"x2", "x3"}));
  CHECK(I == ideal_of(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
}

TEST_CASE("saturation removes the irrelevant component") {
  auto R = PolyRing::make(4, 65521);
  auto I = ideal_of(R, {"x0^2", "x0*x1", "x0*x2", "x0*x3"});
  for (auto m : {SaturationMethod::generic_form, SaturationMethod::variables, SaturationMethod::iterated})
    CHECK(saturate(I, m) == ideal_of(R, {"x0"}));
  auto cubic = ideal_of(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  CHECK(saturate(cubic) == cubic);
}

TEST_CASE("saturation methods agree and are idempotent (property)") {
  auto R = PolyRing::make(4, 32003);
  std::mt19937_64 rng(22);
  auto m = Ideal::irrelevant(R);
  for (int trial = 0; trial < 8; ++trial) {
    // a curve-ish ideal with an embedded irrelevant component glued on
    Ideal P(R, {random_form(rng, R, 1, 3), random_form(rng, R, 2, 5)});
    Ideal I = intersect(P, m * m * m);
    auto a = saturate(I, SaturationMethod::generic_form, trial);
    auto b = saturate(I, SaturationMethod::variables);
    auto c = saturate(I, SaturationMethod::iterated);
    CHECK(a == b);
    CHECK(b == c);
    CHECK(a.contains(I));
    CHECK(saturate(a) == a);
    CHECK(a == P);
    CHECK(hilbert_series(a).polynomial() == hilbert_series(I).polynomial());
  }
}

TEST_CASE("elimination") {
  auto R = PolyRing::make(4, 65521);  // x0 plays t, x3 homogenizes
  auto E = eliminate(ideal_of(R, {"x0 - x1", "x0^2 - x2*x3"}), 1);
  CHECK(E.generators().size() == 1);
  CHECK(E.nvars() == 3);
  CHECK(E == Ideal(E.ring(), {parse_polynomial("x1^2 - x2*x3", E.ring())}));
  auto I = ideal_of(R, {"x0^2 - x1*x2"});
  CHECK_THROWS(eliminate(I, 4));
  CHECK(eliminate(I, 0) == I);
}

TEST_CASE("projecting a conic from an external point keeps its degree") {
  // conic x1^2 = x0 x2 in the plane x3 = 0 of P^3, projected from (0:0:0:1) after a shear
  auto R = PolyRing::make(4, 65521);
  auto C = ideal_of(R, {"x3 - x0 - x1 - x2", "x1^2 - x0*x2"});
  // the point (0:0:0:1) is off the conic; eliminate x3 by moving it to the front
  std::vector<int> perm{3, 0, 1, 2};
  Matrix P(4, 4);
  for (int i = 0; i < 4; ++i) P(perm[i], i) = 1;  // x_{perm[i]} = y_i
  auto Cy = change_coordinates(C, P);
  auto image = eliminate(Cy, 1);
  auto dd = dim_deg(image);
  CHECK(dd.dim == 1);
  CHECK(dd.degree == 2);
  // direct substitution: the image conic vanishes on (s^2 : s t : t^2)
  auto g = image.basis_polynomials().front();
  for (Coeff s : {1u, 2u, 5u})
    for (Coeff t : {3u, 7u}) {
      std::vector<Coeff> pt{s * s, s * t, t * t};
      CHECK(g.evaluate(pt) == 0);
    }
}

TEST_CASE("Hilbert series of basic ideals") {
  auto R = PolyRing::make(6, 65521);
  auto hs = hilbert_series(Ideal::zero(R));
  CHECK(hs.value(2) == 21);
  CHECK(hs.value(3) == 56);
  CHECK(hs.polynomial().at(3) == 56);
  CHECK(dim_deg(Ideal::zero(R)).dim == 5);
  auto irr = hilbert_series(Ideal::irrelevant(R));
  CHECK(irr.polynomial().degree() == -1);
  CHECK(irr.value(0) == 1);
  CHECK(irr.value(1) == 0);
  CHECK(dim_deg(Ideal::irrelevant(R)).dim == -1);
  CHECK(dim_deg(Ideal::unit(R)).dim == -1);
}

TEST_CASE("dimension and degree of hypersurfaces and curves") {
  auto R = PolyRing::make(6, 65521);
  auto Q = ideal_of(R, {"x0*x1 + x2*x3 + x4*x5"});
  CHECK(dim_deg(Q).dim == 4);
  CHECK(dim_deg(Q).degree == 2);
  auto X = ideal_of(R, {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3"});
  CHECK(dim_deg(X).dim == 4);
  CHECK(dim_deg(X).degree == 3);
  auto R4 = PolyRing::make(4, 65521);
  auto tc = ideal_of(R4, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  CHECK(hilbert_series(tc).polynomial().to_string() == "3*t + 1");
}

TEST_CASE("Hilbert series matches staircase counts (property)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + rng() % 4;
    auto gens = random_monomials(rng, n, 2 + rng() % 5, 4);
    auto hs = hilbert_series_monomial(n, gens);
    auto ord = MonomialOrder::grevlex(n);
    for (int d = 0; d <= 8; ++d) {
      long count = 0;
      for (const auto& m : monomials_of_degree(n, d, ord)) {
        bool in = false;
        for (const auto& g : gens) in |= g.divides(m);
        count += !in;
      }
      CHECK(hs.value(d) == count);
    }
    // the polynomial agrees with the function from some degree on
    auto hp = hs.polynomial();
    CHECK(hp.at(30) == hs.value(30));
  }
}

TEST_CASE("lift expresses members in the generators") {
  auto R = PolyRing::make(4, 65521);
  auto gens = ideal_of(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}).generators();
  auto f = parse_polynomial("x3*(x0*x2 - x1^2) + 5*x0*(x1*x3 - x2^2)", R);
  auto c = lift(f, gens);
  REQUIRE(c.has_value());
  Polynomial acc(R);
  for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + (*c)[j] * gens[j];
  CHECK(acc == f);
  CHECK_FALSE(lift(parse_polynomial("x0^3", R), gens).has_value());
}

TEST_CASE("depth certificates") {
  auto R4 = PolyRing::make(4, 65521);
  auto tc = ideal_of(R4, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  CHECK(depth_certificate(tc, 2));
  // two skew lines are not arithmetically Cohen-Macaulay
  auto skew = intersect(ideal_of(R4, {"x0", "x1"}), ideal_of(R4, {"x2", "x3"}));
  CHECK(depth_certificate(skew, 1));
  CHECK_FALSE(depth_certificate(skew, 2));
  // an embedded point kills depth 1
  CHECK_FALSE(depth_certificate(ideal_of(R4, {"x0^2", "x0*x1", "x0*x2", "x0*x3"}), 1));
}

TEST_CASE("slice bases span the ideal in each degree") {
  auto R4 = PolyRing::make(4, 65521);
  auto tc = ideal_of(R4, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  CHECK(tc.slice_dim(2) == 3);
  CHECK(tc.slice_dim(3) == 20 - 10);
  for (const auto& b : tc.slice_basis(3)) CHECK(tc.contains(b));
}
