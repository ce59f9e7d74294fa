#include "scf/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace scf {

PolyRing::PolyRing(int nvars, FieldConfig field, MonomialOrder order, std::vector<std::string> names)
    : nvars_(nvars), field_(field), order_(std::move(order)), names_(std::move(names)) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw std::invalid_argument("variable count must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  if (order_.nvars() != nvars) throw std::invalid_argument("order arity differs from ring");
  if (names_.empty()) {
    for (int i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != nvars) throw std::invalid_argument("wrong number of names");
}

RingPtr PolyRing::make(int nvars, std::uint32_t p) {
  return std::make_shared<const PolyRing>(nvars, FieldConfig(p), MonomialOrder::grevlex(nvars));
}

RingPtr PolyRing::make(int nvars, const FieldConfig& field, const MonomialOrder& order) {
  return std::make_shared<const PolyRing>(nvars, field, order);
}

RingPtr PolyRing::with_order(const MonomialOrder& order) const {
  return std::make_shared<const PolyRing>(nvars_, field_, order, names_);
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring()) throw StructuralError("polynomial without ring");
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) {
    throw StructuralError("polynomials belong to different rings");
  }
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->field().prime();
  if (c) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index");
  return monomial(std::move(ring), Monomial::var(i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->field().prime();
  if (c) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& ord = p.ring_->order();
  const auto& F = p.ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  for (auto& t : terms) {
    t.c %= F.prime();
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, t.c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.m.degree() != terms_.front().m.degree()) return false;
  }
  return true;
}

namespace {

// Merge a + s*b (s a scalar) for sorted term lists.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, Coeff s,
                            const PolyRing& R) {
  const auto& F = R.field();
  const auto& ord = R.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, F.mul(b[j].c, s)});
      ++j;
    } else {
      Coeff v = F.add(a[i].c, F.mul(b[j].c, s));
      if (v) out.push_back({a[i].m, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m, F.mul(b[j].c, s)});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  return from_sorted_terms(ring_, merge_add(terms_, o.terms_, 1, *ring_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(*this, o);
  return from_sorted_terms(ring_, merge_add(terms_, o.terms_, ring_->field().prime() - 1, *ring_));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().prime() - 1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  const auto& F = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.m * b.m, F.mul(a.c, b.c)});
  }
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->field().prime();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, ring_->field().mul(t.c, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_->field().prime();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, ring_->field().mul(t.c, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  const auto& F = ring_->field();
  const int n = ring_->nvars();
  if (static_cast<int>(point.size()) != n) throw StructuralError("point has wrong dimension");
  Coeff acc = 0;
  for (const auto& t : terms_) {
    Coeff v = t.c;
    for (int i = 0; i < n && v; ++i) {
      int e = t.m[i];
      if (e) v = F.mul(v, F.pow(point[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::derivative(int var) const {
  const auto& F = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.m[var];
    if (e == 0) continue;
    Coeff c = F.mul(t.c, F.from_int(e));
    if (c == 0) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  // differentiation preserves the relative order of surviving terms only for
  // degree-compatible orders, so re-sort.
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars()) {
    throw StructuralError("substitution needs one image per variable");
  }
  const RingPtr& target = images.front().ring();
  for (const auto& im : images) require_same_ring(im, images.front());
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, t.c);
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m[i]) v = v * power(i, t.m[i]);
    }
    acc.insert(acc.end(), v.terms().begin(), v.terms().end());
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!ring_->compatible(*target)) throw StructuralError("rings are not compatible");
  return from_terms(target, terms_);
}

Coeff Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.m == m) return t.c;
  }
  return 0;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    long long c = F.to_signed(t.c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    bool printed = false;
    if (a != 1 || t.m.is_one()) {
      os << a;
      printed = true;
    }
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.m[i];
      if (!e) continue;
      if (printed) os << "*";
      os << ring_->var_name(i);
      if (e > 1) os << "^" << e;
      printed = true;
    }
    first = false;
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

Polynomial linear_form(const RingPtr& ring, std::span<const Coeff> coeffs) {
  std::vector<Term> ts;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
    if (coeffs[i]) ts.push_back({Monomial::var(i), coeffs[i]});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace scf
