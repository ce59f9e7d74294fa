#include "scf/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scf {

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index");
  if (e < 0 || e > kMaxExponent) {
    throw std::overflow_error("exponent " + std::to_string(e) + " out of range");
  }
  auto b = bytes();
  deg_ = static_cast<std::uint16_t>(deg_ - b[i] + e);
  b[i] = static_cast<std::uint8_t>(e);
  std::memcpy(w_.data(), b.data(), 16);
}

bool Monomial::coprime(const Monomial& o) const {
  auto a = bytes(), b = o.bytes();
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.w_[0] = w_[0] + o.w_[0];
  r.w_[1] = w_[1] + o.w_[1];
  constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  if ((r.w_[0] | r.w_[1]) & kHigh) throw std::overflow_error("monomial exponent overflow");
  r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.w_[0] = w_[0] - o.w_[0];
  r.w_[1] = w_[1] - o.w_[1];
  r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  auto a = bytes(), b = o.bytes();
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] || b[i]) r.set(i, std::max(a[i], b[i]));
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  auto a = bytes(), b = o.bytes();
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int g = std::min(a[i], b[i]);
    if (g) r.set(i, g);
  }
  return r;
}

std::uint32_t Monomial::support_mask() const {
  auto a = bytes();
  std::uint32_t m = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i]) m |= 1u << i;
  }
  return m;
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
  MonomialOrder o;
  o.kind_ = OrderKind::grevlex;
  o.rank_.resize(nvars);
  std::iota(o.rank_.begin(), o.rank_.end(), 0);
  return o;
}

MonomialOrder MonomialOrder::lex(int nvars) {
  MonomialOrder o = grevlex(nvars);
  o.kind_ = OrderKind::lex;
  return o;
}

MonomialOrder MonomialOrder::block(int nvars, int k) {
  if (k < 0 || k >= nvars) throw std::invalid_argument("block size must be in [0, nvars)");
  MonomialOrder o = grevlex(nvars);
  o.kind_ = OrderKind::block;
  o.block_ = k;
  return o;
}

MonomialOrder MonomialOrder::with_permutation(std::vector<int> rank) const {
  std::vector<int> check = rank;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < static_cast<int>(check.size()); ++i) {
    if (check[i] != i) throw std::invalid_argument("not a permutation");
  }
  if (rank.size() != rank_.size()) throw std::invalid_argument("permutation size mismatch");
  MonomialOrder o = *this;
  o.rank_ = std::move(rank);
  return o;
}

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
  int da = 0, db = 0;
  for (int r = lo; r < hi; ++r) {
    da += a[rank_[r]];
    db += b[rank_[r]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int r = hi - 1; r >= lo; --r) {
    int ea = a[rank_[r]], eb = b[rank_[r]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  const int n = nvars();
  switch (kind_) {
    case OrderKind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      auto ab = a.bytes(), bb = b.bytes();
      for (int r = n - 1; r >= 0; --r) {
        int v = rank_[r];
        if (ab[v] != bb[v]) return ab[v] < bb[v] ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::lex: {
      for (int r = 0; r < n; ++r) {
        int ea = a[rank_[r]], eb = b[rank_[r]];
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    }
    case OrderKind::block: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, n);
    }
  }
  return 0;
}

namespace {

void gen_monomials(int n, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    gen_monomials(n, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d, const MonomialOrder& ord) {
  std::vector<Monomial> out;
  if (n <= 0 || d < 0) return out;
  Monomial cur;
  gen_monomials(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return out;
}

}  // namespace scf
