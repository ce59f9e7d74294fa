#include "scf/spinor.hpp"

#include <array>
#include <random>

namespace scf {

namespace {

int pair_index(int i, int j) {
  // position of u_ij (i < j) among 1..10
  static const std::array<std::array<int, 5>, 5> idx = [] {
    std::array<std::array<int, 5>, 5> t{};
    int k = 1;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) t[a][b] = k++;
    return t;
  }();
  return idx[i][j];
}

// Pfaffian of the 4x4 principal block on indices q0 < q1 < q2 < q3, with
// entries given by a callback on ordered pairs.
template <class T, class Entry>
T pf4(const std::array<int, 4>& q, Entry a) {
  return a(q[0], q[1]) * a(q[2], q[3]) - a(q[0], q[2]) * a(q[1], q[3]) + a(q[0], q[3]) * a(q[1], q[2]);
}

std::array<int, 4> complement(int m) {
  std::array<int, 4> q{};
  for (int i = 0, k = 0; i < 5; ++i)
    if (i != m) q[k++] = i;
  return q;
}

}  // namespace

std::vector<Polynomial> spinor_quadrics(const RingPtr& R) {
  if (R->nvars() != 16) throw std::invalid_argument("spinor quadrics live in 16 variables");
  auto x = [&](int i) { return Polynomial::variable(R, i); };
  auto u = [&](int i, int j) -> Polynomial {
    if (i == j) return Polynomial(R);
    if (i < j) return x(pair_index(i, j));
    return -x(pair_index(j, i));
  };
  std::vector<Polynomial> out;
  for (int m = 0; m < 5; ++m) {
    Polynomial pf = pf4<Polynomial>(complement(m), u);
    Polynomial sign = Polynomial::constant(R, m % 2 == 0 ? 1 : R->field().prime() - 1);
    out.push_back(x(0) * x(11 + m) - sign * pf);
  }
  for (int i = 0; i < 5; ++i) {
    Polynomial s(R);
    for (int m = 0; m < 5; ++m) s = s + u(i, m) * x(11 + m);
    out.push_back(s);
  }
  return out;
}

std::vector<Coeff> spinor_cell_point(const std::vector<Coeff>& upper, const FieldConfig& F) {
  if (upper.size() != 10) throw std::invalid_argument("a skew 5x5 matrix has 10 upper entries");
  std::vector<Coeff> pt(16, 0);
  pt[0] = 1;
  for (int k = 0; k < 10; ++k) pt[1 + k] = upper[k];
  struct Elem {
    Coeff v;
    const FieldConfig* F;
    Elem operator*(const Elem& o) const { return {F->mul(v, o.v), F}; }
    Elem operator-(const Elem& o) const { return {F->sub(v, o.v), F}; }
    Elem operator+(const Elem& o) const { return {F->add(v, o.v), F}; }
  };
  auto a = [&](int i, int j) -> Elem {
    if (i < j) return {upper[pair_index(i, j) - 1], &F};
    if (i > j) return {F.neg(upper[pair_index(j, i) - 1]), &F};
    return {0, &F};
  };
  for (int m = 0; m < 5; ++m) {
    Coeff pf = pf4<Elem>(complement(m), a).v;
    pt[11 + m] = m % 2 == 0 ? pf : F.neg(pf);
  }
  return pt;
}

std::vector<Polynomial> spinor_k3_section(const RingPtr& ring8, std::uint64_t seed) {
  if (ring8->nvars() != 8) throw std::invalid_argument("the K3 section lives in P^7");
  const FieldConfig& F = ring8->field();
  RingPtr R16 = PolyRing::make(16, F, MonomialOrder::grevlex(16));
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> images;
  for (int i = 0; i < 16; ++i) {
    std::vector<Coeff> row(8);
    for (auto& c : row) c = static_cast<Coeff>(rng() % F.prime());
    images.push_back(linear_form(ring8, row));
  }
  std::vector<Polynomial> out;
  for (const auto& q : spinor_quadrics(R16)) out.push_back(q.substitute(images));
  return out;
}

}  // namespace scf
