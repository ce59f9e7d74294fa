#include "scf/univariate.hpp"

#include <algorithm>
#include <random>

namespace scf::upoly {

UPoly mul(const UPoly& a, const UPoly& b, const FieldConfig& F) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  r.trim();
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b, const FieldConfig& F) {
  UPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
  r.trim();
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const FieldConfig& F) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  r = a;
  r.trim();
  q.c.clear();
  if (r.degree() < b.degree()) return;
  q.c.assign(r.c.size() - b.c.size() + 1, 0);
  Coeff lead_inv = F.inv(b.c.back());
  for (int d = r.degree(); d >= b.degree(); --d) {
    Coeff lc = r.c[d];
    if (lc == 0) continue;
    Coeff f = F.mul(lc, lead_inv);
    int shift = d - b.degree();
    q.c[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) {
      r.c[shift + i] = F.sub(r.c[shift + i], F.mul(f, b.c[i]));
    }
  }
  r.trim();
  q.trim();
}

UPoly mod(const UPoly& a, const UPoly& b, const FieldConfig& F) {
  UPoly q, r;
  divmod(a, b, q, r, F);
  return r;
}

UPoly gcd(UPoly a, UPoly b, const FieldConfig& F) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    UPoly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Coeff inv = F.inv(a.c.back());
    for (auto& x : a.c) x = F.mul(x, inv);
  }
  return a;
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m, const FieldConfig& F) {
  UPoly result;
  result.c = {1};
  result = mod(result, m, F);
  UPoly b = mod(base, m, F);
  while (e) {
    if (e & 1) result = mod(mul(result, b, F), m, F);
    e >>= 1;
    if (e) b = mod(mul(b, b, F), m, F);
  }
  return result;
}

Coeff eval(const UPoly& a, Coeff x, const FieldConfig& F) {
  Coeff acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

}  // namespace scf::upoly

namespace scf {

namespace {

// g is monic, squarefree and splits into distinct linear factors.
void split_linear(const UPoly& g, const FieldConfig& F, std::mt19937_64& rng,
                  std::vector<Coeff>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(F.neg(g.c[0]));  // monic x + c0
    return;
  }
  const std::uint32_t p = F.prime();
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (;;) {
    UPoly shifted;
    shifted.c = {dist(rng), 1};  // x + a
    UPoly h = upoly::powmod(shifted, (p - 1) / 2, g, F);
    UPoly one;
    one.c = {1};
    UPoly d = upoly::gcd(g, upoly::sub(h, one, F), F);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      UPoly q, r;
      upoly::divmod(g, d, q, r, F);
      split_linear(d, F, rng, out);
      split_linear(upoly::gcd(q, q, F), F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Coeff> uv_roots(const UPoly& f_in, const FieldConfig& F, std::uint64_t seed) {
  UPoly f = f_in;
  f.trim();
  if (f.is_zero()) throw ArithmeticError("uv_roots of the zero polynomial");
  std::vector<Coeff> roots;
  if (f.degree() == 0) return roots;
  const std::uint32_t p = F.prime();
  if (p <= 3) {
    for (Coeff a = 0; a < p; ++a) {
      if (upoly::eval(f, a, F) == 0) roots.push_back(a);
    }
    return roots;
  }
  // g = gcd(f, x^p - x) is the product of the distinct linear factors
  UPoly x;
  x.c = {0, 1};
  UPoly xp = upoly::powmod(x, p, f, F);
  UPoly g = upoly::gcd(f, upoly::sub(xp, x, F), F);
  std::mt19937_64 rng(seed ^ 0x5DEECE66Dull);
  // peel off the root 0 so the quadratic-residue split always makes progress
  if (!g.is_zero() && g.degree() > 0 && g.c[0] == 0) {
    roots.push_back(0);
    g.c.erase(g.c.begin());
  }
  split_linear(g, F, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace scf
