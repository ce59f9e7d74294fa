// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Every comparison is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "scf/lattice.hpp"
#include "scf/parse.hpp"
#include "scf/pipeline.hpp"
#include "scf/univariate.hpp"

using namespace scf;

namespace {

const std::string kK3 = SCF_FIXTURE_DIR "/k3_genus7_p7.json";
const std::string kSurface = SCF_FIXTURE_DIR "/surface_typeII_p5.json";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the reasons a criterion fails.
struct Failures {
  std::vector<std::string> items;
  void expect(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
  bool empty() const { return items.empty(); }
};

int failed = 0;

void report(int n, const std::string& title, const Failures& f, double secs) {
  std::ostringstream os;
  os << "criterion " << n << ": " << (f.empty() ? "PASS" : "FAIL") << "  " << title << "  (" << secs << " s)";
  std::cout << os.str() << "\n";
  for (const auto& s : f.items) std::cout << "    " << s << "\n";
  std::cout.flush();
  if (!f.empty()) ++failed;
}

void run(int n, const std::string& title, const std::function<void(Failures&)>& body) {
  Failures f;
  auto t0 = Clock::now();
  try {
    body(f);
  } catch (const std::exception& e) {
    f.items.push_back(std::string("exception: ") + e.what());
  }
  report(n, title, f, seconds_since(t0));
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return &c;
  return nullptr;
}

void expect_check(Failures& f, const VerificationReport& r, const std::string& name, const std::string& value) {
  auto* c = find_check(r, name);
  if (!c) return f.expect(false, "missing check " + name);
  f.expect(c->pass && c->computed == value, name + ": computed " + c->computed + ", want " + value);
}

// ---------------------------------------------------------------- generators

Polynomial random_form(std::mt19937_64& rng, const RingPtr& R, int d, int terms) {
  auto ms = monomials_of_degree(R->nvars(), d, R->order());
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k)
    ts.push_back({ms[rng() % ms.size()], static_cast<Coeff>(1 + rng() % (R->field().prime() - 1))});
  return Polynomial::from_terms(R, ts);
}

Ideal random_ideal(std::mt19937_64& rng, const RingPtr& R, int max_deg, int max_gens) {
  std::vector<Polynomial> g;
  int k = 1 + rng() % max_gens;
  for (int i = 0; i < k; ++i) {
    auto f = random_form(rng, R, 1 + rng() % max_deg, 1 + rng() % 4);
    if (!f.is_zero()) g.push_back(f);
  }
  return Ideal(R, g);
}

// Rank of the degree-d Macaulay matrix: all monomial multiples of the generators.
struct MacaulaySlice {
  std::vector<Monomial> monos;
  LinearSpan span;

  MacaulaySlice(const Ideal& I, int d) : monos(monomials_of_degree(I.nvars(), d, I.ring()->order())),
                                         span(monos.size(), I.ring()->field()) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> at;
    for (std::size_t i = 0; i < monos.size(); ++i) at[monos[i]] = i;
    index = at;
    for (const auto& g : I.generators()) {
      if (g.degree() > d) continue;
      for (const auto& m : monomials_of_degree(I.nvars(), d - g.degree(), I.ring()->order()))
        span.add(dense(g.mul_term(m, 1)));
    }
  }

  std::vector<Coeff> dense(const Polynomial& f) const {
    std::vector<Coeff> v(monos.size(), 0);
    for (const auto& t : f.terms()) v[index.at(t.m)] = t.c;
    return v;
  }

  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p)
    if (is_prime_u32(p)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------- criteria

void engine_properties(Failures& f) {
  // Buchberger's criterion on the bases the pipeline relies on
  auto s = load_witness(kSurface);
  auto k3 = load_witness(kK3);
  auto Rs = s.ring();
  auto Rk = k3.ring();
  f.expect(verify_buchberger_criterion(s.ideal(Rs).gb()), "Buchberger criterion fails on the witness basis");
  f.expect(verify_buchberger_criterion(k3.ideal(Rk).gb()), "Buchberger criterion fails on the K3 basis");
  for (const auto& L : s.line_schemes(Rs))
    f.expect(verify_buchberger_criterion(L.ideal().gb()), "Buchberger criterion fails on a line");

  std::mt19937_64 rng(2024);

  // membership against Macaulay-matrix linear algebra
  int mismatches = 0, members = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + rng() % 3;
    auto R = PolyRing::make(n, 65521);
    Ideal I = random_ideal(rng, R, 3, 3);
    f.expect(verify_buchberger_criterion(I.gb()), "Buchberger criterion fails on a random ideal");
    int d = 3 + rng() % 4;
    MacaulaySlice mac(I, d);
    for (int k = 0; k < 6; ++k) {
      // half the samples are built inside I, the rest are arbitrary
      Polynomial g(R);
      if (k % 2 == 0) {
        for (const auto& h : I.generators())
          if (h.degree() <= d) g = g + h * random_form(rng, R, d - h.degree(), 3);
      } else {
        g = random_form(rng, R, d, 1 + rng() % 5);
      }
      if (g.is_zero()) continue;
      bool oracle = mac.span.contains(mac.dense(g));
      members += oracle;
      if (I.contains(g) != oracle) ++mismatches;
    }
  }
  f.expect(mismatches == 0, std::to_string(mismatches) + " membership disagreements");
  f.expect(members > 0, "membership samples never landed inside an ideal");

  // Hilbert function against the Macaulay rank and the staircase count
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + rng() % 3;
    auto R = PolyRing::make(n, 65521);
    Ideal I = random_ideal(rng, R, 3, 4);
    auto hs = hilbert_series(I);
    for (int d = 0; d <= 8; ++d) {
      MacaulaySlice mac(I, d);
      BigInt quotient = static_cast<long>(mac.monos.size() - mac.span.rank());
      if (hs.value(d) != quotient || BigInt(static_cast<long>(I.standard_monomials(d).size())) != quotient) {
        f.expect(false, "Hilbert function disagrees with linear algebra in degree " + std::to_string(d));
        break;
      }
    }
  }

  // saturation: idempotent, the three methods agree, and nothing is lost
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + rng() % 2;
    auto R = PolyRing::make(n, 65521);
    Ideal J = random_ideal(rng, R, 2, 3);
    Ideal I = J * Ideal::irrelevant(R) * Ideal::irrelevant(R);
    Ideal a = saturate(I, SaturationMethod::generic_form, trial);
    Ideal b = saturate(I, SaturationMethod::variables);
    Ideal c = saturate(I, SaturationMethod::iterated);
    f.expect(a == b && b == c, "saturation methods disagree");
    f.expect(saturate(a, SaturationMethod::generic_form, trial + 100) == a, "saturation is not idempotent");
    f.expect(a.contains(J), "saturation lost a generator");
  }

  // uv_roots against exhaustive evaluation
  for (auto p : primes_up_to(1000)) {
    FieldConfig F(p);
    for (int k = 0; k < 100; ++k) {
      UPoly u;
      int deg = 1 + rng() % 8;
      for (int i = 0; i <= deg; ++i) u.c.push_back(rng() % p);
      // plant some roots so that splitting is exercised
      for (int r = rng() % 3; r > 0; --r) u = upoly::mul(u, UPoly{{F.neg(static_cast<Coeff>(rng() % p)), 1}}, F);
      u.trim();
      if (u.is_zero()) continue;
      std::vector<Coeff> expect;
      for (Coeff x = 0; x < p; ++x)
        if (upoly::eval(u, x, F) == 0) expect.push_back(x);
      if (uv_roots(u, F, k) != expect) {
        f.expect(false, "uv_roots wrong over GF(" + std::to_string(p) + ")");
        break;
      }
    }
  }
}

void negative_controls(Failures& f) {
  // an edited expectation must fail exactly its own check
  auto b = load_witness(kSurface);
  b.expected.h0_normal_in_cubic = 14;
  auto r = run_verification(b, {});
  std::vector<std::string> failing;
  for (const auto& c : r.checks())
    if (!c.pass) failing.push_back(c.name);
  f.expect(!r.verdict(), "edited witness still passes");
  f.expect(failing == std::vector<std::string>{"h0(N_{S/X})"},
           "edited witness fails " + std::to_string(failing.size()) + " checks, want only h0(N_{S/X})");

  // a rank-5 quadric is singular exactly at its vertex
  auto R = PolyRing::make(6, 65521);
  Matrix A = random_invertible(6, R->field(), 5);
  auto q = change_coordinates(parse_polynomial("x0^2 + x1^2 + x2*x3 - 3*x4^2", R), A);
  ProjectiveScheme Q(Ideal(R, {q}));
  f.expect(quadric_rank(q) == 5, "quadric rank is not 5");
  auto sing = singular_locus(Q, 1);
  f.expect(sing.dim() == 0 && sing.degree() == 1, "singular locus of a rank-5 quadric is not one point");
  // the vertex is A^{-1} e5
  auto Ainv = inverse(A, R->field());
  std::vector<Coeff> v(6);
  for (int i = 0; i < 6; ++i) v[i] = (*Ainv)(i, 5);
  auto vertex = RationalPoint::normalized(v, R->field());
  f.expect(sing.contains(vertex), "singular locus misses the vertex");
  f.expect(sample_rational_point(sing, 3) == vertex, "sampled singular point is not the vertex");
  f.expect(!is_smooth(Q, 2), "rank-5 quadric reported smooth");

  // lines through a common point are not skew
  ProjectiveScheme L1(Ideal(R, {parse_polynomial("x2", R), parse_polynomial("x3", R), parse_polynomial("x4", R),
                                parse_polynomial("x5", R)}));
  ProjectiveScheme L2(Ideal(R, {parse_polynomial("x1", R), parse_polynomial("x3", R), parse_polynomial("x4", R),
                                parse_polynomial("x5", R)}));
  ProjectiveScheme L3(Ideal(R, {parse_polynomial("x0", R), parse_polynomial("x1", R), parse_polynomial("x2", R),
                                parse_polynomial("x3", R)}));
  f.expect(!are_skew_lines(L1, L2), "meeting lines reported skew");
  f.expect(!are_skew_lines(L1, L1), "a line reported skew to itself");
  f.expect(are_skew_lines(L1, L3), "disjoint lines reported meeting");
}

}  // namespace

int main() {
  std::cout << "acceptance over GF(65521)\n";
  std::optional<VerificationReport> rep;
  double verify_secs = 0;

  run(1, "bundled witness verifies", [&](Failures& f) {
    auto t0 = Clock::now();
    rep = run_verification(load_witness(kSurface, 65521), {});
    verify_secs = seconds_since(t0);
    f.expect(rep->verdict(), "verdict is fail");
    expect_check(f, *rep, "degree", "10");
    expect_check(f, *rep, "sectional genus", "7");
    expect_check(f, *rep, "chi(O_S)", "2");
    expect_check(f, *rep, "smooth", "-1");
    expect_check(f, *rep, "h0(I_S(2))", "1");
    expect_check(f, *rep, "h0(I_S(3))", "12");
    expect_check(f, *rep, "quadric rank", "6");
    f.expect(verify_secs < 600, "verification took " + std::to_string(verify_secs) + " s");
  });

  run(2, "normal sheaf dimensions, read from the criterion 1 report", [&](Failures& f) {
    if (!rep) return f.expect(false, "no report");
    expect_check(f, *rep, "h0(N_{S/X})", "15");
    expect_check(f, *rep, "h0(N_{S/Q})", "38");
    expect_check(f, *rep, "h0(N_{S/P5})", "58");
    f.expect(verify_secs < 1800, "normal sheaves took longer than the budget");
  });

  run(3, "construction from the K3 for seeds 0, 1, 2", [&](Failures& f) {
    auto k3 = load_witness(kK3);
    std::vector<HistoryEntry> want = {{7, 12, 7, 10, 64, {}}, {6, 11, 7, 5, 34, {}}, {5, 10, 7, 1, 12, {}}};
    for (std::uint64_t seed : {0, 1, 2}) {
      PipelineConfig c;
      c.seed = seed;
      auto b = construct_witness(k3, c);
      auto tag = "seed " + std::to_string(seed) + ": ";
      bool same = b.history.size() == want.size();
      for (std::size_t i = 0; same && i < want.size(); ++i) same = b.history[i].same_numbers(want[i]);
      f.expect(same, tag + "history differs");
      auto R = b.ring();
      ProjectiveScheme S(b.ideal(R), seed);
      auto lines = b.line_schemes(R);
      f.expect(lines.size() == 2, tag + "expected two lines");
      if (lines.size() != 2) continue;
      for (const auto& L : lines) f.expect(S.contains(L) && L.dim() == 1 && L.degree() == 1, tag + "line not on S");
      f.expect(are_skew_lines(lines[0], lines[1]), tag + "lines meet");
    }
  });

  run(4, "three random cubics through S", [&](Failures& f) {
    auto b = load_witness(kSurface);
    auto R = b.ring();
    ProjectiveScheme S(b.ideal(R));
    for (std::uint64_t seed : {101, 202, 303}) {
      auto X = random_hypersurface_containing(S, 3, seed);
      auto tag = "cubic seed " + std::to_string(seed) + ": ";
      f.expect(is_smooth(X.scheme, seed), tag + "singular");
      long h = h0_normal_sheaf(S, X.scheme, seed);
      f.expect(h == 15, tag + "h0(N_{S/X}) = " + std::to_string(h));
    }
  });

  run(5, "arithmetic ledger", [&](Failures& f) {
    auto b = load_witness(kSurface);
    ProjectiveScheme S(b.ideal(b.ring()));
    auto P = S.hilbert_poly();
    auto sec = sectional_invariants(P);
    f.expect(sec == SectionalInvariants{10, 7, 2}, "sectional invariants");
    f.expect(chi_ideal_twist(P, 5, 2) == 1, "chi(I_S(2))");
    f.expect(chi_ideal_twist(P, 5, 3) == 12, "chi(I_S(3))");
    f.expect(noether_c2(2, -2) == 26, "euler number");
    auto inv = SurfaceInvariants::from_sectional(10, 7, 2, -2);
    f.expect(inv.hK() == 2, "hK");
    f.expect(self_intersection_in_cubic(inv) == 38, "S^2");
    BigInt d = hassett_discriminant({3, 10, 38});
    f.expect(d == 14 && is_square_free(d) && hassett_admissible_divisor(d), "discriminant 14");
    f.expect(flag_dimension_ledger({}) == LedgerResult{69, 15}, "flag ledger (69, 15)");
    f.expect(residual_class_solver(10, 5, 3) == ResidualClass{5, -1}, "residual class (5, -1)");
    f.expect(residual_class_solver(4, 5, 3) == ResidualClass{3, -1}, "scroll residual (3, -1)");
  });

  run(6, "engine properties", [&](Failures& f) {
    auto t0 = Clock::now();
    engine_properties(f);
    f.expect(seconds_since(t0) < 300, "property suites exceeded 5 minutes");
  });

  run(7, "negative controls", negative_controls);

  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
