#include "scf/ideal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "scf/deadline.hpp"

namespace scf {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw StructuralError("ideal without a ring");
  for (auto& g : gens) {
    if (!g.ring() || !g.ring()->same_as(*ring_)) throw StructuralError("generator from another ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous generator: ideals are graded-only");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> xs;
  for (int i = 0; i < ring->nvars(); ++i) xs.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(xs));
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [&] {
    if (gens_.empty()) {
      cache_->gb = GroebnerBasis(ring_, {0}, {}, true);
    } else {
      cache_->gb = groebner_basis(gens_);
    }
  });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f.ring()->same_as(*ring_) ? f : f.in_ring(ring_), gb()).is_zero();
}

bool Ideal::contains(const Ideal& J) const {
  return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& v : gb().vectors()) out.push_back(v.front().m);
  return out;
}

std::vector<Monomial> Ideal::standard_monomials(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  auto leads = leading_monomials();
  for (const auto& m : monomials_of_degree(nvars(), d, ring_->order())) {
    bool reducible = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!reducible) out.push_back(m);
  }
  return out;
}

long Ideal::slice_dim(int d) const {
  if (d < 0) return 0;
  long total = static_cast<long>(monomials_of_degree(nvars(), d, ring_->order()).size());
  return total - static_cast<long>(standard_monomials(d).size());
}

std::vector<Polynomial> Ideal::slice_basis(int d) const {
  std::vector<Polynomial> out;
  if (d < 0) return out;
  auto leads = leading_monomials();
  for (const auto& m : monomials_of_degree(nvars(), d, ring_->order())) {
    bool reducible = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!reducible) continue;
    Polynomial mono = Polynomial::monomial(ring_, m);
    out.push_back(mono - normal_form(mono, gb()));
  }
  return out;
}

std::vector<Polynomial> Ideal::minimal_generators() const { return scf::minimal_generators(gens_); }

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> g;
  for (const auto& f : gens_) g.push_back(f.in_ring(target));
  return Ideal(target, std::move(g));
}

Ideal Ideal::operator+(const Ideal& J) const {
  if (!J.ring_->same_as(*ring_)) throw StructuralError("ideal sum across rings");
  auto g = gens_;
  g.insert(g.end(), J.gens_.begin(), J.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& J) const {
  if (!J.ring_->same_as(*ring_)) throw StructuralError("ideal product across rings");
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    for (const auto& b : J.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

// ---------------------------------------------------------------------------
// lifting, quotients, intersections

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (gens.empty()) {
    if (f.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  const RingPtr& R = gens.front().ring();
  std::vector<Polynomial> coeffs(gens.size(), Polynomial(R));
  if (f.is_zero()) return coeffs;
  if (!f.is_homogeneous()) throw std::invalid_argument("lift: inhomogeneous target");
  const int D = f.degree();
  const int n = R->nvars();
  auto rows = monomials_of_degree(n, D, R->order());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

  struct Col {
    std::size_t gen;
    Monomial q;
  };
  std::vector<Col> cols;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& g = gens[j];
    if (g.is_zero() || g.degree() > D) continue;
    for (const auto& q : monomials_of_degree(n, D - g.degree(), R->order())) cols.push_back({j, q});
  }
  Matrix A(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : gens[cols[c].gen].terms()) A(row_of.at(t.m * cols[c].q), c) = t.c;
  }
  std::vector<Coeff> b(rows.size(), 0);
  for (const auto& t : f.terms()) b[row_of.at(t.m)] = t.c;
  auto x = solve(A, b, R->field());
  if (!x) return std::nullopt;
  std::vector<std::vector<Term>> parts(gens.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if ((*x)[c]) parts[cols[c].gen].push_back({cols[c].q, (*x)[c]});
  }
  for (std::size_t j = 0; j < gens.size(); ++j) coeffs[j] = Polynomial::from_terms(R, std::move(parts[j]));
  return coeffs;
}

namespace {

ModVec as_modvec(const Polynomial& f, std::uint32_t comp) {
  ModVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.m, comp, t.c});
  return v;
}

// Polynomials of the basis elements whose leading term lies in component 1
// (their component-0 part vanishes under position-over-term).
std::vector<Polynomial> second_component(const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& v : gb.vectors()) {
    if (v.front().comp != 1) continue;
    std::vector<Term> ts;
    for (const auto& t : v) ts.push_back({t.m, t.c});
    out.push_back(Polynomial::from_sorted_terms(gb.ring(), std::move(ts)));
  }
  return out;
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  const RingPtr& R = I.ring();
  if (f.is_zero()) return Ideal::unit(R);
  if (!f.is_homogeneous()) throw std::invalid_argument("quotient by an inhomogeneous element");
  if (f.is_constant()) return I;
  // (f, 1) together with (g, 0): the part with zero first entry is (0, I : f)
  std::vector<ModVec> gens;
  ModVec v = as_modvec(f, 0);
  v.push_back({Monomial{}, 1, 1});
  gens.push_back(std::move(v));
  for (const auto& g : I.generators()) gens.push_back(as_modvec(g, 0));
  auto gb = groebner_basis(R, {0, f.degree()}, std::move(gens));
  return Ideal(R, second_component(gb));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_as(*J.ring())) throw StructuralError("quotient across rings");
  if (J.generators().empty()) return Ideal::unit(I.ring());
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal q = ideal_quotient(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_as(*J.ring())) throw StructuralError("intersection across rings");
  const RingPtr& R = I.ring();
  if (I.generators().empty() || J.generators().empty()) return Ideal::zero(R);
  // (f, 0) for f in I and (g, g) for g in J: entries with zero first slot give I n J
  std::vector<ModVec> gens;
  for (const auto& f : I.generators()) gens.push_back(as_modvec(f, 0));
  for (const auto& g : J.generators()) {
    ModVec v = as_modvec(g, 0);
    ModVec w = as_modvec(g, 1);
    v.insert(v.end(), w.begin(), w.end());
    gens.push_back(std::move(v));
  }
  auto gb = groebner_basis(R, {0, 0}, std::move(gens));
  return Ideal(R, second_component(gb));
}

// ---------------------------------------------------------------------------
// saturation

Ideal saturate_by_variable(const Ideal& I, int i) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (i < 0 || i >= n) throw std::out_of_range("saturate_by_variable: variable index");
  std::vector<int> rank;
  for (int v = 0; v < n; ++v)
    if (v != i) rank.push_back(v);
  rank.push_back(i);
  RingPtr Rl = R->with_order(MonomialOrder::grevlex(n).with_permutation(rank));
  Ideal Il = I.in_ring(Rl);
  std::vector<Polynomial> out;
  for (const auto& g : Il.basis_polynomials()) {
    int k = g.leading_monomial()[i];
    for (const auto& t : g.terms()) k = std::min(k, t.m[i]);
    if (k == 0) {
      out.push_back(g.in_ring(R));
      continue;
    }
    std::vector<Term> ts;
    Monomial xk = Monomial::var(i, k);
    for (const auto& t : g.terms()) ts.push_back({t.m / xk, t.c});
    out.push_back(Polynomial::from_terms(R, std::move(ts)));
  }
  return Ideal(R, std::move(out));
}

Polynomial change_coordinates(const Polynomial& f, const Matrix& A) {
  const RingPtr& R = f.ring();
  const int n = R->nvars();
  if (A.rows() != static_cast<std::size_t>(n) || A.cols() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("coordinate change of wrong size");
  }
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Coeff> row(A.row(i).begin(), A.row(i).end());
    images.push_back(linear_form(R, row));
  }
  return f.substitute(images);
}

Ideal change_coordinates(const Ideal& I, const Matrix& A) {
  std::vector<Polynomial> g;
  for (const auto& f : I.generators()) g.push_back(change_coordinates(f, A));
  return Ideal(I.ring(), std::move(g));
}

Matrix random_invertible(int n, const FieldConfig& F, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = static_cast<Coeff>(rng() % F.prime());
    if (rank(A, F) == static_cast<std::size_t>(n)) return A;
  }
}

Ideal saturate_by_linear_form(const Ideal& I, const Polynomial& f) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const FieldConfig& F = R->field();
  if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous()) throw std::invalid_argument("not a linear form");
  // New coordinates y = B x whose last row is f; then x = B^{-1} y.
  int pivot = -1;
  Matrix B(n, n);
  for (const auto& t : f.terms()) {
    for (int v = 0; v < n; ++v) {
      if (t.m[v]) B(n - 1, v) = t.c;
    }
  }
  for (int v = 0; v < n && pivot < 0; ++v)
    if (B(n - 1, v)) pivot = v;
  for (int r = 0, v = 0; r < n - 1; ++v) {
    if (v == pivot) continue;
    B(r++, v) = 1;
  }
  Matrix Binv = *inverse(B, F);
  Ideal Iy = change_coordinates(I, Binv);
  Ideal Sy = saturate_by_variable(Iy, n - 1);
  return change_coordinates(Sy, B);
}

namespace {

Ideal saturate_iterated(const Ideal& I, const Ideal& J, int cap) {
  Ideal cur = I;
  for (int round = 0; round < cap; ++round) {
    check_deadline();
    Ideal next = ideal_quotient(cur, J);
    if (cur.contains(next)) return cur;
    cur = next;
  }
  throw std::runtime_error("saturation did not stabilize within the iteration cap");
}

}  // namespace

Ideal saturate(const Ideal& I, const Ideal& J, int cap) { return saturate_iterated(I, J, cap); }

Ideal saturate(const Ideal& I, SaturationMethod method, std::uint64_t seed) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  switch (method) {
    case SaturationMethod::iterated:
      return saturate_iterated(I, Ideal::irrelevant(R), 50);
    case SaturationMethod::variables: {
      std::optional<Ideal> acc;
      for (int i = 0; i < n; ++i) {
        Ideal s = saturate_by_variable(I, i);
        acc = acc ? intersect(*acc, s) : s;
      }
      return *acc;
    }
    case SaturationMethod::generic_form:
      break;
  }
  if (I.is_zero() || I.is_unit()) return I;
  // I : l^inf contains the saturation; equal Hilbert polynomials make the
  // difference finite length, hence inside the saturation too.
  const HilbertPoly hp = hilbert_series(I).polynomial();
  std::mt19937_64 rng(seed ^ 0x5a7u);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Coeff> c(n);
    for (auto& x : c) x = static_cast<Coeff>(1 + rng() % (R->field().prime() - 1));
    Ideal S = saturate_by_linear_form(I, linear_form(R, c));
    if (hilbert_series(S).polynomial() == hp) return S;
  }
  return saturate(I, SaturationMethod::variables);
}

bool depth_certificate(const Ideal& I, int k, std::uint64_t seed) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (k <= 0) return true;
  if (k > n) return false;
  RingPtr Rg = R->with_order(MonomialOrder::grevlex(n));
  Matrix A = random_invertible(n, R->field(), seed ^ 0xdeu);
  Ideal J = change_coordinates(I.in_ring(Rg), A);
  for (const auto& m : J.leading_monomials()) {
    for (int v = n - k; v < n; ++v)
      if (m[v]) return false;
  }
  return true;
}

Ideal eliminate(const Ideal& I, int k) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (k < 0 || k >= n) throw std::invalid_argument("eliminate: k must lie in [0, nvars)");
  if (k == 0) return I;
  RingPtr Rb = R->with_order(MonomialOrder::block(n, k));
  std::vector<std::string> names(R->var_names().begin() + k, R->var_names().end());
  RingPtr Rs = std::make_shared<const PolyRing>(n - k, R->field(), MonomialOrder::grevlex(n - k), names);
  std::vector<Polynomial> out;
  for (const auto& g : I.in_ring(Rb).basis_polynomials()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (int v = 0; v < k && free; ++v)
        if (t.m[v]) free = false;
      if (!free) break;
    }
    if (!free) continue;
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (int v = k; v < n; ++v) m.set(v - k, t.m[v]);
      ts.push_back({m, t.c});
    }
    out.push_back(Polynomial::from_terms(Rs, std::move(ts)));
  }
  return Ideal(Rs, std::move(out));
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using Num = std::vector<BigInt>;

void trim(Num& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Num add(const Num& a, const Num& b, std::size_t shift_b = 0) {
  Num r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += b[i];
  trim(r);
  return r;
}

Num mul(const Num& a, const Num& b) {
  if (a.empty() || b.empty()) return {};
  Num r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Num one_minus_t_pow(int d) {
  Num r(d + 1, 0);
  r[0] += 1;
  r[d] -= 1;
  trim(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!red) out.push_back(m);
  }
  return out;
}

struct GensKey {
  std::string bytes;
  bool operator==(const GensKey& o) const { return bytes == o.bytes; }
};
struct GensKeyHash {
  std::size_t operator()(const GensKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

class HilbertNumerator {
 public:
  explicit HilbertNumerator(int n) : n_(n) {}

  Num run(std::vector<Monomial> g) {
    check_deadline();
    if (g.empty()) return {1};
    for (const auto& m : g)
      if (m.is_one()) return {};
    // pairwise coprime generators: a complete intersection
    bool coprime = true;
    for (std::size_t i = 0; i < g.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < g.size() && coprime; ++j) coprime = g[i].coprime(g[j]);
    if (coprime) {
      Num r{1};
      for (const auto& m : g) r = mul(r, one_minus_t_pow(m.degree()));
      return r;
    }
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
      auto ba = a.bytes(), bb = b.bytes();
      return ba < bb;
    });
    GensKey key;
    for (const auto& m : g) {
      auto b = m.bytes();
      key.bytes.append(reinterpret_cast<const char*>(b.data()), b.size());
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // pivot x_v^e: v occurs in the most non-pure generators, e its least positive exponent there
    std::vector<int> count(n_, 0), minexp(n_, INT32_MAX);
    for (const auto& m : g) {
      int support = 0;
      for (int v = 0; v < n_; ++v) support += m[v] > 0;
      if (support < 2) continue;
      for (int v = 0; v < n_; ++v) {
        if (m[v] == 0) continue;
        ++count[v];
        minexp[v] = std::min(minexp[v], m[v]);
      }
    }
    int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    Monomial p = Monomial::var(v, minexp[v]);

    std::vector<Monomial> sum = g, quot;
    sum.push_back(p);
    for (const auto& m : g) quot.push_back(m / m.gcd(p));
    Num r = add(run(minimalize(std::move(sum))), run(minimalize(std::move(quot))), p.degree());
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  int n_;
  std::unordered_map<GensKey, Num, GensKeyHash> memo_;
};

BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

HilbertSeries hilbert_series_monomial(int nvars, const std::vector<Monomial>& gens) {
  HilbertNumerator h(nvars);
  HilbertSeries hs;
  hs.nvars = nvars;
  hs.numerator = h.run(minimalize(gens));
  return hs;
}

HilbertSeries hilbert_series(const Ideal& I) { return hilbert_series_monomial(I.nvars(), I.leading_monomials()); }

std::vector<BigInt> HilbertSeries::reduced_numerator() const {
  Num q = numerator;
  trim(q);
  if (q.empty()) return q;
  for (int k = 0; k < nvars; ++k) {
    BigInt s = 0;
    for (const auto& c : q) s += c;
    if (s != 0) break;
    // divide by (1 - t): partial sums
    Num d(q.size() - 1);
    BigInt acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      d[i] = acc;
    }
    q = std::move(d);
    trim(q);
  }
  return q;
}

int HilbertSeries::krull_dim() const {
  Num q = numerator;
  trim(q);
  if (q.empty()) return 0;
  Num r = reduced_numerator();
  // each division lowered the length by one
  return nvars - static_cast<int>(q.size() - r.size());
}

BigInt HilbertSeries::value(int d) const {
  BigInt s = 0;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    long e = d - static_cast<long>(j);
    if (e < 0) break;
    s += numerator[j] * binomial(e + nvars - 1, nvars - 1);
  }
  return s;
}

HilbertPoly HilbertSeries::polynomial() const {
  Num q = reduced_numerator();
  const int D = krull_dim();
  if (q.empty() || D == 0) return HilbertPoly();
  // sum_j q_j * binom(t - j + D - 1, D - 1)
  std::vector<Rational> total;
  BigInt fact = 1;
  for (int i = 2; i <= D - 1; ++i) fact *= i;
  for (std::size_t j = 0; j < q.size(); ++j) {
    std::vector<Rational> p{Rational(1)};
    for (int i = 1; i <= D - 1; ++i) {
      // multiply by (t + (D - i - j))
      Rational a = D - i - static_cast<long>(j);
      std::vector<Rational> np(p.size() + 1, Rational(0));
      for (std::size_t k = 0; k < p.size(); ++k) {
        np[k] += p[k] * a;
        np[k + 1] += p[k];
      }
      p = std::move(np);
    }
    if (total.size() < p.size()) total.resize(p.size(), Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) total[k] += p[k] * Rational(q[j]) / Rational(fact);
  }
  return HilbertPoly(std::move(total));
}

HilbertPoly::HilbertPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational HilbertPoly::operator()(const Rational& t) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

BigInt HilbertPoly::at(long t) const {
  Rational v = (*this)(Rational(t));
  if (denominator(v) != 1) throw std::logic_error("Hilbert polynomial is not integer valued");
  return numerator(v);
}

std::string HilbertPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c == 1 && k > 0;
    if (!unit) os << c;
    if (k > 0) {
      if (!unit) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

DimDeg dim_deg(const HilbertSeries& hs) {
  Num q = hs.reduced_numerator();
  int D = hs.krull_dim();
  if (q.empty() || D == 0) return {-1, 0};
  BigInt deg = 0;
  for (const auto& c : q) deg += c;
  return {D - 1, deg};
}

DimDeg dim_deg(const Ideal& I) { return dim_deg(hilbert_series(I)); }

}  // namespace scf
