#include "scf/geometry.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "scf/deadline.hpp"
#include "scf/homological.hpp"
#include "scf/lattice.hpp"
#include "scf/univariate.hpp"

namespace scf {

namespace {

Coeff draw(std::mt19937_64& rng, const FieldConfig& F) { return static_cast<Coeff>(rng() % F.prime()); }

Coeff draw_nonzero(std::mt19937_64& rng, const FieldConfig& F) {
  return static_cast<Coeff>(1 + rng() % (F.prime() - 1));
}

Polynomial random_combination(const std::vector<Polynomial>& basis, std::mt19937_64& rng) {
  const FieldConfig& F = basis.front().ring()->field();
  Polynomial out(basis.front().ring());
  for (const auto& b : basis) out = out + b.scaled(draw(rng, F));
  return out;
}

// Laplace expansion along the first row; the matrices here are at most 5x5.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, const RingPtr& R) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Polynomial det(R);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial t = a[0][j] * determinant(minor, R);
    det = (j % 2) ? det - t : det + t;
  }
  return det;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  if (k > n) return;
  for (;;) {
    fn(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// All c x c minors of the Jacobian of `rows`.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& rows, int c, const RingPtr& R) {
  const int n = R->nvars();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& f : rows) {
    std::vector<Polynomial> r;
    for (int v = 0; v < n; ++v) r.push_back(f.derivative(v));
    jac.push_back(std::move(r));
  }
  std::vector<Polynomial> out;
  for_each_subset(static_cast<int>(rows.size()), c, [&](const std::vector<int>& rs) {
    for_each_subset(n, c, [&](const std::vector<int>& cs) {
      check_deadline();
      std::vector<std::vector<Polynomial>> a;
      for (int r : rs) {
        std::vector<Polynomial> row;
        for (int col : cs) row.push_back(jac[r][col]);
        a.push_back(std::move(row));
      }
      Polynomial d = determinant(a, R);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

Ideal with_generators(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(I.ring(), std::move(g));
}

int codimension(const ProjectiveScheme& X) { return X.ambient_dim() - X.dim(); }

std::string point_string(const RationalPoint& p, const FieldConfig& F) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? ":" : "") << F.to_signed(p.coords[i]);
  os << ")";
  return os.str();
}

}  // namespace

RationalPoint RationalPoint::normalized(std::vector<Coeff> v, const FieldConfig& F) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  if (i == v.size()) throw std::invalid_argument("the zero vector is not a projective point");
  Coeff inv = F.inv(v[i]);
  for (auto& c : v) c = F.mul(c, inv);
  return {std::move(v)};
}

// ---------------------------------------------------------------------------
// ProjectiveScheme

ProjectiveScheme::ProjectiveScheme(Ideal I, std::uint64_t seed) {
  if (I.is_unit() || depth_certificate(I, 1, seed)) {
    ideal_ = std::move(I);
  } else {
    ideal_ = saturate(I, SaturationMethod::generic_form, seed);
  }
}

ProjectiveScheme ProjectiveScheme::from_saturated(Ideal I) {
  ProjectiveScheme X;
  X.ideal_ = std::move(I);
  return X;
}

ProjectiveScheme ProjectiveScheme::whole_space(const RingPtr& ring) { return from_saturated(Ideal::zero(ring)); }

const HilbertSeries& ProjectiveScheme::hilbert_series() const {
  std::call_once(cache_->once, [&] { cache_->hs = scf::hilbert_series(ideal_); });
  return cache_->hs;
}

int ProjectiveScheme::dim() const { return dim_deg(hilbert_series()).dim; }
BigInt ProjectiveScheme::degree() const { return dim_deg(hilbert_series()).degree; }

bool ProjectiveScheme::contains(const RationalPoint& p) const {
  if (p.coords.size() != static_cast<std::size_t>(ideal_.nvars())) return false;
  for (const auto& g : ideal_.generators())
    if (g.evaluate(p.coords) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Smoothness

Matrix jacobian_at(const std::vector<Polynomial>& gens, std::span<const Coeff> pt) {
  const int n = static_cast<int>(pt.size());
  Matrix J(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int v = 0; v < n; ++v) J(i, v) = gens[i].derivative(v).evaluate(pt);
  return J;
}

bool is_smooth_at(const ProjectiveScheme& X, const RationalPoint& p) {
  if (!X.contains(p)) throw std::invalid_argument("point is not on the scheme");
  auto gens = X.ideal().minimal_generators();
  if (gens.empty()) return true;
  return static_cast<int>(rank(jacobian_at(gens, p.coords), X.ring()->field())) == codimension(X);
}

ProjectiveScheme singular_locus(const ProjectiveScheme& X, std::uint64_t seed) {
  const RingPtr& R = X.ring();
  const Ideal& I = X.ideal();
  if (X.is_empty()) return X;
  const int c = codimension(X);
  if (c == 0) return ProjectiveScheme::from_saturated(Ideal::unit(R));
  auto gens = I.minimal_generators();
  if (gens.size() == 1) {
    std::vector<Polynomial> partials;
    for (int v = 0; v < R->nvars(); ++v) partials.push_back(gens[0].derivative(v));
    return ProjectiveScheme(with_generators(I, partials), seed);
  }

  auto choose = [](long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  const long exact_count = choose(static_cast<long>(gens.size()), c) * choose(R->nvars(), c);
  if (exact_count <= 400) return ProjectiveScheme(with_generators(I, jacobian_minors(gens, c, R)), seed);

  // Any c elements of I have all c x c Jacobian minors vanishing on Sing X, so
  // the sum below contains the singular locus whatever the random choices.
  std::mt19937_64 rng(seed ^ 0x51u);
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());
  auto system = I.slice_basis(top);
  std::vector<Polynomial> minors;
  for (int round = 0; round < 3; ++round) {
    std::vector<Polynomial> ci;
    for (int k = 0; k < c; ++k) ci.push_back(random_combination(system, rng));
    auto m = jacobian_minors(ci, c, R);
    minors.insert(minors.end(), m.begin(), m.end());
  }
  if (!minors.empty()) {
    std::vector<Polynomial> compressed;
    for (int k = 0; k < X.dim() + 2; ++k) compressed.push_back(random_combination(minors, rng));
    Ideal J = with_generators(I, compressed);
    if (dim_deg(J).dim < 0) return ProjectiveScheme::from_saturated(Ideal::unit(R));
  }
  return ProjectiveScheme(with_generators(I, jacobian_minors(gens, c, R)), seed);
}

bool is_smooth(const ProjectiveScheme& X, std::uint64_t seed) { return singular_locus(X, seed).is_empty(); }

// ---------------------------------------------------------------------------
// Points

RationalPoint sample_rational_point(const ProjectiveScheme& X, std::uint64_t seed, int cap) {
  const RingPtr& R = X.ring();
  const FieldConfig& F = R->field();
  const int n1 = R->nvars();
  const int d = X.dim();
  if (d < 0) throw std::invalid_argument("empty scheme has no points");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < cap; ++attempt) {
    check_deadline();
    Matrix A = random_invertible(n1, F, rng());
    auto to_x = [&](const std::vector<Coeff>& y) {
      std::vector<Coeff> x(n1, 0);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) x[i] = F.add(x[i], F.mul(A(i, j), y[j]));
      return RationalPoint::normalized(std::move(x), F);
    };
    if (d == n1 - 1) {
      std::vector<Coeff> y(n1);
      for (auto& c : y) c = draw(rng, F);
      y[n1 - 1] = 1;
      return to_x(y);
    }
    // x = A y and y_0 = ... = y_{d-1} = 0 leaves finitely many points for a general A.
    Ideal Iy = change_coordinates(X.ideal(), A);
    std::vector<Polynomial> cut;
    for (int v = 0; v < d; ++v) cut.push_back(Polynomial::variable(R, v));
    Ideal Z = with_generators(Iy, cut);
    if (dim_deg(Z).dim != 0) continue;

    // binary forms in (y_{n-2}, y_{n-1}); the affine chart y_{n-1} = 1
    Ideal E = eliminate(Z, n1 - 2);
    UPoly g;
    for (const auto& f : E.generators()) {
      UPoly u;
      for (const auto& t : f.terms()) {
        int e = static_cast<int>(t.m[0]);
        if (static_cast<int>(u.c.size()) <= e) u.c.resize(e + 1, 0);
        u.c[e] = F.add(u.c[e], t.c);
      }
      u.trim();
      g = g.is_zero() ? u : upoly::gcd(g, u, F);
    }
    if (g.is_zero() || g.degree() < 1) continue;
    for (Coeff r : uv_roots(g, F, rng())) {
      Polynomial slope = Polynomial::variable(R, n1 - 2) - Polynomial::variable(R, n1 - 1).scaled(r);
      Ideal fiber = saturate(with_generators(Z, {slope}), SaturationMethod::generic_form, rng());
      auto lin = fiber.slice_basis(1);
      if (static_cast<int>(lin.size()) != n1 - 1) continue;  // not a single reduced point
      Matrix L(lin.size(), n1);
      for (std::size_t i = 0; i < lin.size(); ++i)
        for (const auto& t : lin[i].terms())
          for (int v = 0; v < n1; ++v)
            if (t.m[v]) L(i, v) = t.c;
      auto ker = nullspace(L, F);
      if (ker.size() != 1) continue;
      RationalPoint p = to_x(ker[0]);
      if (X.contains(p)) return p;
    }
  }
  throw std::runtime_error("no rational point found");
}

RationalPoint sample_smooth_point(const ProjectiveScheme& X, std::uint64_t seed, int cap) {
  std::mt19937_64 rng(seed ^ 0x5eu);
  for (int attempt = 0; attempt < cap; ++attempt) {
    RationalPoint p = sample_rational_point(X, rng(), cap);
    if (is_smooth_at(X, p)) return p;
  }
  throw std::runtime_error("no smooth rational point found");
}

// ---------------------------------------------------------------------------
// Projection

LinearProjection LinearProjection::from_center(const RingPtr& source, const RationalPoint& center, std::uint64_t seed) {
  const FieldConfig& F = source->field();
  const int n1 = source->nvars();
  if (static_cast<int>(center.coords.size()) != n1) throw std::invalid_argument("center has the wrong length");
  if (n1 < 2) throw std::invalid_argument("nothing to project to");
  LinearProjection L;
  L.source = source;
  L.target = PolyRing::make(n1 - 1, F, MonomialOrder::grevlex(n1 - 1));
  L.center = center;
  for (std::uint64_t s = seed;; ++s) {
    Matrix M = random_invertible(n1, F, s);
    for (int i = 0; i < n1; ++i) M(i, 0) = center.coords[i];
    if (rank(M, F) == static_cast<std::size_t>(n1)) {
      L.M = std::move(M);
      return L;
    }
  }
}

Ideal LinearProjection::image_ideal(const Ideal& Z) const {
  Ideal E = eliminate(change_coordinates(Z.in_ring(source), M), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(Polynomial::from_terms(target, g.terms()));
  return Ideal(target, std::move(gens));
}

ProjectiveScheme LinearProjection::image(const ProjectiveScheme& Z) const {
  ProjectiveScheme out(image_ideal(Z.ideal()));
  out.history = Z.history;
  return out;
}

InternalProjection internal_projection(const ProjectiveScheme& S, const RationalPoint& p, std::uint64_t seed) {
  const FieldConfig& F = S.ring()->field();
  if (S.dim() != 2) throw std::invalid_argument("internal projection expects a surface");
  if (!S.contains(p)) throw std::invalid_argument("center is not on the surface");
  if (!is_smooth_at(S, p)) throw std::invalid_argument("center is a singular point of the surface");

  LinearProjection map = LinearProjection::from_center(S.ring(), p, seed);
  ProjectiveScheme image = map.image(S);

  // tangent plane at p in the y coordinates: J(p) M y = 0; column 0 vanishes by Euler
  Matrix JM = jacobian_at(S.ideal().minimal_generators(), p.coords).multiply(map.M, F);
  std::vector<Polynomial> lin;
  for (std::size_t i = 0; i < JM.rows(); ++i) {
    std::vector<Coeff> row(JM.row(i).begin() + 1, JM.row(i).end());
    Polynomial l = linear_form(map.target, row);
    if (!l.is_zero()) lin.push_back(std::move(l));
  }
  ProjectiveScheme line = ProjectiveScheme::from_saturated(Ideal(map.target, lin));

  if (line.dim() != 1 || line.degree() != 1) throw ContractError("tangent plane does not project to a line");
  if (image.degree() != S.degree() - 1) throw ContractError("image degree is not deg S - 1");
  if (sectional_genus(image) != sectional_genus(S)) throw ContractError("sectional genus changed");
  if (!image.contains(line)) throw ContractError("exceptional line is not on the image");

  std::ostringstream os;
  os << "projected from " << point_string(p, F) << ": degree " << image.degree() << ", genus "
     << sectional_genus(image) << " in P^" << image.ambient_dim();
  image.history.push_back(os.str());
  return {std::move(map), std::move(image), std::move(line)};
}

bool are_skew_lines(const ProjectiveScheme& L1, const ProjectiveScheme& L2) {
  for (const auto* L : {&L1, &L2})
    if (L->dim() != 1 || L->degree() != 1) throw std::invalid_argument("not a line");
  if (!L1.ring()->compatible(*L2.ring())) throw StructuralError("lines in different spaces");
  Ideal sum = L1.ideal() + L2.ideal().in_ring(L1.ring());
  return dim_deg(sum).dim < 0;
}

Hypersurface random_hypersurface_containing(const ProjectiveScheme& X, int d, std::uint64_t seed) {
  auto basis = X.ideal().slice_basis(d);
  if (basis.empty()) throw std::invalid_argument("no hypersurface of that degree contains the scheme");
  std::mt19937_64 rng(seed);
  const FieldConfig& F = X.ring()->field();
  for (;;) {
    Polynomial f(X.ring());
    for (const auto& b : basis) f = f + b.scaled(draw_nonzero(rng, F));
    if (f.is_zero()) continue;
    f = f.monic();
    return {f, ProjectiveScheme::from_saturated(Ideal(X.ring(), {f})), seed};
  }
}

int quadric_rank(const Polynomial& q) {
  const RingPtr& R = q.ring();
  const FieldConfig& F = R->field();
  if (F.prime() == 2) throw std::invalid_argument("quadric rank needs odd characteristic");
  if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous()) throw std::invalid_argument("not a quadratic form");
  const int n = R->nvars();
  Matrix G(n, n);
  for (const auto& t : q.terms()) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      for (int e = 0; e < static_cast<int>(t.m[v]); ++e) vs.push_back(v);
    if (vs[0] == vs[1]) {
      G(vs[0], vs[0]) = F.add(t.c, t.c);
    } else {
      G(vs[0], vs[1]) = t.c;
      G(vs[1], vs[0]) = t.c;
    }
  }
  return static_cast<int>(rank(G, F));
}

int quadric_rank(const ProjectiveScheme& Q) {
  auto gens = Q.ideal().minimal_generators();
  if (gens.size() != 1) throw std::invalid_argument("not a hypersurface");
  return quadric_rank(gens[0]);
}

long h0_normal_sheaf(const ProjectiveScheme& S, const ProjectiveScheme& Y, std::uint64_t seed) {
  if (!Y.contains(S)) throw std::invalid_argument("the surface is not contained in the ambient scheme");
  const RingPtr& R = S.ring();
  auto gS = S.ideal().minimal_generators();
  if (gS.empty()) throw std::invalid_argument("the whole space has no normal sheaf");
  std::vector<int> degs;
  for (const auto& g : gS) degs.push_back(g.degree());
  // I_S / I_Y: the generators of I_S, their syzygies, and each generator of I_Y
  // written in terms of them
  auto rels = syzygies(gS);
  for (const auto& h : Y.ideal().in_ring(R).minimal_generators()) {
    auto c = lift(h, gS);
    if (!c) throw std::logic_error("containment certified but lift failed");
    rels.emplace_back(std::move(*c), degs);
  }
  GradedModule M(R, degs, std::move(rels));
  HomModule H = graded_hom(M, GradedModule::quotient_ring(S.ideal()));
  return sheaf_h0(H, 0, depth_certificate(S.ideal(), 2, seed));
}

BigInt sectional_genus(const ProjectiveScheme& S) { return sectional_invariants(S.hilbert_poly()).genus; }

std::vector<CheckResult> type_II_certificate(const ProjectiveScheme& S, const ProjectiveScheme& L1,
                                             const ProjectiveScheme& L2, const TypeIIExpectations& want,
                                             std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto str = [](const auto& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };
  out.push_back(timed_check("nondegenerate", "S lies in no hyperplane of P5", "0",
                            [&] { return str(S.ideal().slice_dim(1)); }));
  auto sect = [&] { return sectional_invariants(S.hilbert_poly()); };
  out.push_back(timed_check("degree", "P(t) = 5t^2 - t + 2: degree 10", str(want.degree), [&] { return str(sect().degree); }));
  out.push_back(timed_check("sectional genus", "P(t) = 5t^2 - t + 2: sectional genus 7", str(want.genus),
                            [&] { return str(sect().genus); }));
  out.push_back(timed_check("chi(O_S)", "P(t) = 5t^2 - t + 2: chi(O_S) = 2", str(want.chi), [&] { return str(sect().chi); }));
  out.push_back(timed_check("smooth", "singular locus of S is empty (dimension -1)", "-1",
                            [&] { return str(singular_locus(S, seed).dim()); }));
  out.push_back(timed_check("h0(I_S(2))", "S lies on exactly one quadric", str(want.quadrics),
                            [&] { return str(S.ideal().slice_dim(2)); }));
  out.push_back(timed_check("quadric rank", "the quadric through S is smooth (rank 6)", "6", [&] {
    auto q = S.ideal().slice_basis(2);
    if (q.size() != 1) throw std::runtime_error("no unique quadric");
    return str(quadric_rank(q[0]));
  }));
  out.push_back(timed_check("L1 on S", "first (-1)-line lies on S", "true", [&] {
    if (L1.dim() != 1 || L1.degree() != 1) throw std::invalid_argument("not a line");
    return std::string(S.contains(L1) ? "true" : "false");
  }));
  out.push_back(timed_check("L2 on S", "second (-1)-line lies on S", "true", [&] {
    if (L2.dim() != 1 || L2.degree() != 1) throw std::invalid_argument("not a line");
    return std::string(S.contains(L2) ? "true" : "false");
  }));
  out.push_back(timed_check("lines skew", "the two (-1)-lines are disjoint", "true",
                            [&] { return std::string(are_skew_lines(L1, L2) ? "true" : "false"); }));
  return out;
}

}  // namespace scf
