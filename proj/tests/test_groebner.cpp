#include <random>
#include <set>

#include "doctest.h"
#include "scf/deadline.hpp"
#include "scf/groebner.hpp"
#include "scf/linalg.hpp"
#include "scf/parse.hpp"
#include "scf/slice.hpp"

using namespace scf;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& R, std::initializer_list<const char*> src) {
  std::vector<Polynomial> out;
  for (auto s : src) out.push_back(parse_polynomial(s, R));
  return out;
}

Polynomial random_form(std::mt19937_64& rng, const RingPtr& R, int d, int terms) {
  auto ms = monomials_of_degree(R->nvars(), d, R->order());
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({ms[rng() % ms.size()], static_cast<Coeff>(rng() % R->field().prime())});
  return Polynomial::from_terms(R, ts);
}

// Leading monomials of I_d read off the echelon form of the Macaulay matrix.
std::set<std::size_t> macaulay_leads(const std::vector<Polynomial>& gens, int d) {
  const auto& R = gens.front().ring();
  auto ms = monomials_of_degree(R->nvars(), d, R->order());
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& q : monomials_of_degree(R->nvars(), d - g.degree(), R->order())) {
      std::vector<Coeff> row(ms.size(), 0);
      for (const auto& t : g.terms()) {
        auto m = t.m * q;
        for (std::size_t k = 0; k < ms.size(); ++k)
          if (ms[k] == m) row[k] = t.c;
      }
      rows.push_back(row);
    }
  }
  Matrix M(rows.size(), ms.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) M(i, j) = rows[i][j];
  auto piv = row_reduce(M, R->field());
  return {piv.begin(), piv.end()};
}

std::set<std::size_t> gb_leads(const GroebnerBasis& gb, int d) {
  const auto& R = gb.ring();
  auto ms = monomials_of_degree(R->nvars(), d, R->order());
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (const auto& v : gb.vectors())
      if (v.front().m.divides(ms[k])) out.insert(k);
  return out;
}

}  // namespace

TEST_CASE("twisted cubic") {
  auto R = PolyRing::make(4, 65521);
  auto I = parse_all(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  auto gb = groebner_basis(I);
  CHECK(gb.size() == 3);
  CHECK(verify_buchberger_criterion(gb));
  auto syz = syzygies(I);
  CHECK(syz.size() == 2);
  for (const auto& s : syz) {
    CHECK(s.degree() == 3);
    Polynomial acc(R);
    for (int i = 0; i < 3; ++i) acc = acc + s.components[i] * I[i];
    CHECK(acc.is_zero());
  }
  CHECK(ideal_contains(gb, parse_polynomial("x0*x2^2 - x1^2*x2", R)));
  CHECK_FALSE(ideal_contains(gb, parse_polynomial("x0*x3", R)));
}

TEST_CASE("reduced basis is canonical under generator changes") {
  auto R = PolyRing::make(4, 65521);
  auto I = parse_all(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  auto J = parse_all(R, {"x0*x2 - x1^2 + 3*x1*x3 - 3*x2^2", "x1*x3 - x2^2", "x0*x3 - x1*x2 - x0*x2 + x1^2",
                         "x0^2*x2 - x0*x1^2"});
  CHECK(groebner_basis(I).polynomials() == groebner_basis(J).polynomials());
}

TEST_CASE("Koszul syzygies of a regular sequence") {
  auto R = PolyRing::make(3, 65521);
  auto I = parse_all(R, {"x0^2", "x1^3", "x2^2 + x0*x1"});
  auto syz = syzygies(I);
  CHECK(syz.size() == 3);
  std::multiset<int> degs;
  for (const auto& s : syz) degs.insert(s.degree());
  CHECK(degs == std::multiset<int>{4, 5, 5});
}

TEST_CASE("leading monomials agree with Macaulay matrices (property)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + rng() % 3;
    auto ord = trial % 3 == 0 ? MonomialOrder::lex(n) : (trial % 3 == 1 ? MonomialOrder::grevlex(n)
                                                                           : MonomialOrder::block(n, 1));
    auto R = PolyRing::make(n, FieldConfig(32003), ord);
    std::vector<Polynomial> gens;
    int k = 2 + rng() % 3;
    for (int i = 0; i < k; ++i) gens.push_back(random_form(rng, R, 1 + rng() % 3, 2 + rng() % 4));
    auto gb = groebner_basis(gens);
    CHECK(verify_buchberger_criterion(gb));
    for (int d = 1; d <= 5; ++d) CHECK(gb_leads(gb, d) == macaulay_leads(gens, d));
    for (const auto& g : gens) CHECK(ideal_contains(gb, g));
  }
}

TEST_CASE("syzygies are syzygies and have the right Hilbert function (property)") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto R = PolyRing::make(4, 32003);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3 + static_cast<int>(rng() % 2); ++i) gens.push_back(random_form(rng, R, 1 + rng() % 2, 3));
    auto syz = syzygies(gens);
    std::vector<int> sd;
    for (const auto& g : gens) sd.push_back(g.degree());
    for (const auto& s : syz) {
      Polynomial acc(R);
      for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + s.components[i] * gens[i];
      CHECK(acc.is_zero());
    }
    // dim Syz_d = sum_i dim R_{d - a_i} - dim I_d
    for (int d = 1; d <= 4; ++d) {
      long expected = 0;
      for (int a : sd)
        if (d >= a) expected += static_cast<long>(monomials_of_degree(4, d - a, R->order()).size());
      expected -= static_cast<long>(macaulay_leads(gens, d).size());
      FreeSlice slice(4, sd, d, R->order());
      LinearSpan span(slice.size(), R->field());
      for (const auto& s : syz) {
        if (s.degree() > d) continue;
        for (const auto& q : monomials_of_degree(4, d - s.degree(), R->order()))
          span.add(slice.dense(s.scaled(Polynomial::monomial(R, q)).to_modvec()));
      }
      CHECK(static_cast<long>(span.rank()) == expected);
    }
  }
}

TEST_CASE("module basis and normal form") {
  auto R = PolyRing::make(3, 65521);
  auto x = [&](int i) { return Polynomial::variable(R, i); };
  std::vector<int> degs{0, 0};
  std::vector<FreeModuleElement> gens{
      FreeModuleElement({x(0), x(1)}, degs),
      FreeModuleElement({x(1), x(2)}, degs),
  };
  auto gb = groebner_basis(gens);
  CHECK(verify_buchberger_criterion(gb));
  auto comb = gens[0].scaled(x(2)) - gens[1].scaled(x(0) * x(1));
  CHECK(normal_form(comb, gb).is_zero());
  auto e0 = FreeModuleElement::unit(R, degs, 0);
  CHECK_FALSE(normal_form(e0, gb).is_zero());
}

TEST_CASE("unit ideal and zero generators") {
  auto R = PolyRing::make(2, 65521);
  auto gb = groebner_basis(parse_all(R, {"x0", "x1", "0"}));
  CHECK(gb.size() == 2);
  CHECK_FALSE(gb.is_unit());
  CHECK_THROWS_AS(groebner_basis(parse_all(R, {"x0^2 + x1"})), std::invalid_argument);
}

TEST_CASE("minimal generators drop redundant elements") {
  auto R = PolyRing::make(3, 65521);
  auto I = parse_all(R, {"x0*x1", "x0*x1*x2", "x1^2", "x0*x1 + x1^2", "x2^3"});
  auto m = minimal_generators(I);
  CHECK(m.size() == 3);
}

TEST_CASE("deadline interrupts a long computation") {
  auto R = PolyRing::make(8, 65521);
  std::mt19937_64 rng(13);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(random_form(rng, R, 3, 30));
  DeadlineScope scope(std::chrono::steady_clock::now());
  CHECK_THROWS_AS(groebner_basis(gens), TimeoutError);
}
