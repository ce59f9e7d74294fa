#include "scf/groebner.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <numeric>
#include <sstream>
#include <tuple>

#include "scf/deadline.hpp"
#include "scf/linalg.hpp"
#include "scf/slice.hpp"

namespace scf {

// ---------------------------------------------------------------------------
// FreeModuleElement

FreeModuleElement::FreeModuleElement(std::vector<Polynomial> comps, std::vector<int> degs)
    : components(std::move(comps)), degrees(std::move(degs)) {
  if (components.size() != degrees.size()) throw StructuralError("component/degree count mismatch");
  if (components.empty()) throw StructuralError("free module of rank 0");
  for (const auto& c : components) require_same_ring(c, components.front());
}

FreeModuleElement FreeModuleElement::zero(const RingPtr& ring, std::vector<int> degs) {
  std::vector<Polynomial> comps(degs.size(), Polynomial(ring));
  return FreeModuleElement(std::move(comps), std::move(degs));
}

FreeModuleElement FreeModuleElement::unit(const RingPtr& ring, std::vector<int> degs, int i) {
  auto e = zero(ring, std::move(degs));
  e.components.at(i) = Polynomial::constant(ring, 1);
  return e;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.is_zero(); });
}

bool FreeModuleElement::is_homogeneous() const {
  int d = -1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    int di = c.leading_monomial().degree() + degrees[i];
    if (d >= 0 && di != d) return false;
    d = di;
  }
  return true;
}

int FreeModuleElement::degree() const {
  if (!is_homogeneous() || is_zero()) throw std::logic_error("degree of zero or inhomogeneous element");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!components[i].is_zero()) return components[i].leading_monomial().degree() + degrees[i];
  }
  return -1;
}

FreeModuleElement FreeModuleElement::operator+(const FreeModuleElement& o) const {
  if (degrees != o.degrees) throw StructuralError("free modules differ");
  FreeModuleElement r = *this;
  for (std::size_t i = 0; i < components.size(); ++i) r.components[i] = r.components[i] + o.components[i];
  return r;
}

FreeModuleElement FreeModuleElement::operator-(const FreeModuleElement& o) const {
  if (degrees != o.degrees) throw StructuralError("free modules differ");
  FreeModuleElement r = *this;
  for (std::size_t i = 0; i < components.size(); ++i) r.components[i] = r.components[i] - o.components[i];
  return r;
}

FreeModuleElement FreeModuleElement::scaled(const Polynomial& f) const {
  FreeModuleElement r = *this;
  for (auto& c : r.components) c = c * f;
  return r;
}

ModVec FreeModuleElement::to_modvec() const {
  ModVec v;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const auto& t : components[i].terms()) v.push_back({t.m, static_cast<std::uint32_t>(i), t.c});
  }
  return v;
}

FreeModuleElement FreeModuleElement::from_modvec(const ModVec& v, const RingPtr& ring, std::vector<int> degs) {
  std::vector<std::vector<Term>> parts(degs.size());
  for (const auto& t : v) parts.at(t.comp).push_back({t.m, t.c});
  std::vector<Polynomial> comps;
  comps.reserve(degs.size());
  for (auto& p : parts) comps.push_back(Polynomial::from_sorted_terms(ring, std::move(p)));
  return FreeModuleElement(std::move(comps), std::move(degs));
}

// ---------------------------------------------------------------------------
// FreeSlice

namespace {

void enumerate_monomials(int n, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    enumerate_monomials(n, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

FreeSlice::FreeSlice(int nvars, const std::vector<int>& comp_degrees, int d, const MonomialOrder& ord)
    : d_(d) {
  for (std::uint32_t c = 0; c < comp_degrees.size(); ++c) {
    int e = d - comp_degrees[c];
    if (e < 0) continue;
    std::vector<Monomial> ms;
    Monomial cur;
    enumerate_monomials(nvars, 0, e, cur, ms);
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    for (const auto& m : ms) {
      index_.emplace(Key{c, m}, basis_.size());
      basis_.push_back({m, c, 1});
    }
  }
}

long FreeSlice::index(std::uint32_t comp, const Monomial& m) const {
  auto it = index_.find(Key{comp, m});
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Coeff> FreeSlice::dense(const ModVec& v) const {
  std::vector<Coeff> out(basis_.size(), 0);
  for (const auto& t : v) {
    long k = index(t.comp, t.m);
    if (k < 0) throw std::logic_error("vector is not homogeneous of the slice degree");
    out[k] = t.c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger engine

namespace {

struct Context {
  const FieldConfig& F;
  const MonomialOrder& ord;
  const std::vector<int>& cdeg;

  int degree(const ModTerm& t) const { return t.m.degree() + cdeg[t.comp]; }
};

// out = f - c * (q * g)
void combine(const ModVec& f, Coeff c, const Monomial& q, const ModVec& g, ModVec& out, const Context& ctx) {
  out.clear();
  out.reserve(f.size() + g.size());
  const FieldConfig& F = ctx.F;
  const Coeff nc = F.neg(c);
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    ModTerm gt{g[j].m * q, g[j].comp, 0};
    int cmp = pot_compare(ctx.ord, f[i], gt);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      gt.c = F.mul(g[j].c, nc);
      out.push_back(gt);
      ++j;
    } else {
      Coeff v = F.add(f[i].c, F.mul(g[j].c, nc));
      if (v) {
        gt.c = v;
        out.push_back(gt);
      }
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * q, g[j].comp, F.mul(g[j].c, nc)});
}

void make_monic(ModVec& v, const FieldConfig& F) {
  if (v.empty() || v.front().c == 1) return;
  Coeff inv = F.inv(v.front().c);
  for (auto& t : v) t.c = F.mul(t.c, inv);
}

struct Lead {
  Monomial m;
  std::uint32_t comp;
  std::uint32_t mask;
};

class Reducer {
 public:
  explicit Reducer(const Context& ctx) : ctx_(ctx) {}

  void add(const ModVec* v) {
    polys_.push_back(v);
    const auto& t = v->front();
    leads_.push_back({t.m, t.comp, t.m.support_mask()});
  }

  // first basis element whose lead divides t, or -1
  long find(const ModTerm& t, long skip = -1) const {
    const std::uint32_t mask = t.m.support_mask();
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      const auto& l = leads_[k];
      if (l.comp != t.comp || (l.mask & ~mask) || static_cast<long>(k) == skip) continue;
      if (l.m.divides(t.m)) return static_cast<long>(k);
    }
    return -1;
  }

  // Reduces until the lead is irreducible. Basis elements are monic.
  void top_reduce(ModVec& f, long skip = -1) const {
    ModVec buf;
    while (!f.empty()) {
      long k = find(f.front(), skip);
      if (k < 0) return;
      const ModVec& g = *polys_[k];
      combine(f, f.front().c, f.front().m / g.front().m, g, buf, ctx_);
      f.swap(buf);
      check_deadline();
    }
  }

  // Full normal form.
  ModVec full_reduce(ModVec f, long skip = -1) const {
    ModVec rem, buf;
    while (!f.empty()) {
      top_reduce(f, skip);
      if (f.empty()) break;
      // move the irreducible lead to the remainder; find the next reducible term
      std::size_t pos = 0;
      while (pos < f.size() && find(f[pos], skip) < 0) rem.push_back(f[pos++]);
      if (pos == f.size()) break;
      f.erase(f.begin(), f.begin() + static_cast<long>(pos));
    }
    return rem;
  }

  std::size_t size() const { return polys_.size(); }

 private:
  const Context& ctx_;
  std::vector<const ModVec*> polys_;
  std::vector<Lead> leads_;
};

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int deg;
};

class Buchberger {
 public:
  Buchberger(const Context& ctx, bool product_criterion) : ctx_(ctx), prodcrit_(product_criterion) {}

  std::vector<ModVec> run(std::vector<ModVec> gens) {
    std::stable_sort(gens.begin(), gens.end(), [&](const ModVec& a, const ModVec& b) {
      return ctx_.degree(a.front()) < ctx_.degree(b.front());
    });
    std::size_t gi = 0;
    while (gi < gens.size() || !pairs_.empty()) {
      check_deadline();
      int d = gi < gens.size() ? ctx_.degree(gens[gi].front()) : INT32_MAX;
      for (const auto& p : pairs_) d = std::min(d, p.deg);

      std::vector<Pair> batch, rest;
      for (auto& p : pairs_) (p.deg == d ? batch : rest).push_back(p);
      pairs_.swap(rest);
      std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
        int c = pot_compare(ctx_.ord, {a.lcm, a.comp, 0}, {b.lcm, b.comp, 0});
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });

      while (gi < gens.size() && ctx_.degree(gens[gi].front()) == d) {
        process(std::move(gens[gi++]));
      }
      for (const auto& p : batch) process(spoly(p));
    }
    return finish();
  }

 private:
  ModVec spoly(const Pair& p) {
    const ModVec& a = *basis_[p.i];
    const ModVec& b = *basis_[p.j];
    ModVec left, out;
    Monomial qa = p.lcm / a.front().m;
    left.reserve(a.size());
    for (const auto& t : a) left.push_back({t.m * qa, t.comp, t.c});
    combine(left, 1, p.lcm / b.front().m, b, out, ctx_);
    return out;
  }

  void process(ModVec h) {
    reducer_.top_reduce(h);
    if (h.empty()) return;
    make_monic(h, ctx_.F);
    update(std::move(h));
  }

  void update(ModVec hv) {
    const std::uint32_t hidx = static_cast<std::uint32_t>(basis_.size());
    basis_.push_back(std::make_unique<ModVec>(std::move(hv)));
    const ModVec& h = *basis_.back();
    const Monomial hm = h.front().m;
    const std::uint32_t hc = h.front().comp;
    const int hdeg_shift = ctx_.cdeg[hc];

    // candidate pairs (g, h)
    struct Cand {
      std::uint32_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> C;
    for (std::uint32_t g = 0; g < hidx; ++g) {
      if (redundant_[g]) continue;
      const auto& lt = basis_[g]->front();
      if (lt.comp != hc) continue;
      C.push_back({g, lt.m.lcm(hm), prodcrit_ && lt.m.coprime(hm)});
    }
    // chain criterion among new pairs (Gebauer-Moeller M and F steps)
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Cand& c1 = C[a];
      bool keep = c1.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (C[b].lcm.divides(c1.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < D.size() && keep; ++b) {
          if (D[b].lcm.divides(c1.lcm)) keep = false;
        }
      }
      if (keep) D.push_back(c1);
    }
    // old pairs made superfluous by h (B step)
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (p.comp == hc && hm.divides(p.lcm)) {
        Monomial li = basis_[p.i]->front().m.lcm(hm);
        Monomial lj = basis_[p.j]->front().m.lcm(hm);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(p);
    }
    pairs_.swap(kept);
    for (const auto& c : D) {
      if (c.coprime) continue;
      pairs_.push_back({c.g, hidx, c.lcm, hc, c.lcm.degree() + hdeg_shift});
    }
    for (std::uint32_t g = 0; g < hidx; ++g) {
      if (redundant_[g]) continue;
      const auto& lt = basis_[g]->front();
      if (lt.comp == hc && hm.divides(lt.m)) redundant_[g] = true;
    }
    redundant_.push_back(false);
    reducer_.add(basis_.back().get());
  }

  std::vector<ModVec> finish() {
    std::vector<ModVec> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!redundant_[k]) out.push_back(*basis_[k]);
    }
    std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
      return pot_compare(ctx_.ord, a.front(), b.front()) < 0;
    });
    return out;
  }

  const Context& ctx_;
  bool prodcrit_;
  std::vector<std::unique_ptr<ModVec>> basis_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
  Reducer reducer_{ctx_};
};

std::vector<ModVec> interreduce(std::vector<ModVec> basis, const Context& ctx) {
  Reducer red(ctx);
  for (const auto& b : basis) red.add(&b);
  std::vector<ModVec> out;
  out.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    ModVec tail(basis[k].begin() + 1, basis[k].end());
    ModVec r = red.full_reduce(std::move(tail), static_cast<long>(k));
    ModVec v;
    v.reserve(r.size() + 1);
    v.push_back(basis[k].front());
    v.insert(v.end(), r.begin(), r.end());
    make_monic(v, ctx.F);
    out.push_back(std::move(v));
  }
  return out;
}

void require_homogeneous(const ModVec& v, const Context& ctx) {
  if (v.empty()) return;
  int d = ctx.degree(v.front());
  for (const auto& t : v) {
    if (ctx.degree(t) != d) throw std::invalid_argument("inhomogeneous input: the engine is graded-only");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<int> comp_degrees, std::vector<ModVec> elems, bool reduced)
    : ring_(std::move(ring)), comp_degrees_(std::move(comp_degrees)), elems_(std::move(elems)), reduced_(reduced) {}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank() != 1) throw StructuralError("polynomials() on a module basis");
  std::vector<Polynomial> out;
  for (const auto& v : elems_) {
    std::vector<Term> ts;
    ts.reserve(v.size());
    for (const auto& t : v) ts.push_back({t.m, t.c});
    out.push_back(Polynomial::from_sorted_terms(ring_, std::move(ts)));
  }
  return out;
}

std::vector<FreeModuleElement> GroebnerBasis::elements() const {
  std::vector<FreeModuleElement> out;
  for (const auto& v : elems_) out.push_back(FreeModuleElement::from_modvec(v, ring_, comp_degrees_));
  return out;
}

bool GroebnerBasis::is_unit() const {
  if (rank() != 1) return false;
  return std::any_of(elems_.begin(), elems_.end(), [](const ModVec& v) { return v.front().m.is_one(); });
}

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<int>& comp_degrees, std::vector<ModVec> gens,
                             GroebnerOptions opts) {
  Context ctx{ring->field(), ring->order(), comp_degrees};
  std::vector<ModVec> nonzero;
  for (auto& g : gens) {
    if (g.empty()) continue;
    require_homogeneous(g, ctx);
    for (const auto& t : g) {
      if (t.comp >= comp_degrees.size()) throw StructuralError("component index out of range");
    }
    nonzero.push_back(std::move(g));
  }
  Buchberger engine(ctx, comp_degrees.size() == 1);
  auto basis = engine.run(std::move(nonzero));
  if (opts.reduce) basis = interreduce(std::move(basis), ctx);
  return GroebnerBasis(ring, comp_degrees, std::move(basis), opts.reduce);
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, GroebnerOptions opts) {
  if (gens.empty()) throw StructuralError("groebner_basis needs a ring; pass at least one generator");
  std::vector<ModVec> vs;
  for (const auto& g : gens) {
    require_same_ring(g, gens.front());
    ModVec v;
    v.reserve(g.size());
    for (const auto& t : g.terms()) v.push_back({t.m, 0, t.c});
    vs.push_back(std::move(v));
  }
  return groebner_basis(gens.front().ring(), {0}, std::move(vs), opts);
}

GroebnerBasis groebner_basis(const std::vector<FreeModuleElement>& gens, GroebnerOptions opts) {
  if (gens.empty()) throw StructuralError("groebner_basis needs at least one element");
  std::vector<ModVec> vs;
  for (const auto& g : gens) {
    if (g.degrees != gens.front().degrees) throw StructuralError("elements of different free modules");
    vs.push_back(g.to_modvec());
  }
  return groebner_basis(gens.front().components.front().ring(), gens.front().degrees, std::move(vs), opts);
}

ModVec normal_form(ModVec f, const GroebnerBasis& gb) {
  Context ctx{gb.ring()->field(), gb.ring()->order(), gb.component_degrees()};
  Reducer red(ctx);
  for (const auto& v : gb.vectors()) red.add(&v);
  return red.full_reduce(std::move(f));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.rank() != 1) throw StructuralError("polynomial normal form against a module basis");
  if (!f.ring()->same_as(*gb.ring())) throw StructuralError("normal_form: ring or order mismatch");
  ModVec v;
  for (const auto& t : f.terms()) v.push_back({t.m, 0, t.c});
  ModVec r = normal_form(std::move(v), gb);
  std::vector<Term> ts;
  ts.reserve(r.size());
  for (const auto& t : r) ts.push_back({t.m, t.c});
  return Polynomial::from_sorted_terms(f.ring(), std::move(ts));
}

FreeModuleElement normal_form(const FreeModuleElement& f, const GroebnerBasis& gb) {
  if (f.degrees != gb.component_degrees()) throw StructuralError("normal_form: free module mismatch");
  if (!f.components.front().ring()->same_as(*gb.ring())) throw StructuralError("normal_form: order mismatch");
  return FreeModuleElement::from_modvec(normal_form(f.to_modvec(), gb), gb.ring(), f.degrees);
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

bool verify_buchberger_criterion(const GroebnerBasis& gb) {
  Context ctx{gb.ring()->field(), gb.ring()->order(), gb.component_degrees()};
  Reducer red(ctx);
  const auto& B = gb.vectors();
  for (const auto& v : B) red.add(&v);
  const bool ideal = gb.rank() == 1;
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      const auto& a = B[i].front();
      const auto& b = B[j].front();
      if (a.comp != b.comp) continue;
      if (ideal && a.m.coprime(b.m)) continue;
      Monomial l = a.m.lcm(b.m);
      ModVec left, s;
      Monomial qa = l / a.m;
      Coeff ia = ctx.F.inv(a.c), ib = ctx.F.inv(b.c);
      for (const auto& t : B[i]) left.push_back({t.m * qa, t.comp, ctx.F.mul(t.c, ia)});
      combine(left, ib, l / b.m, B[j], s, ctx);
      red.top_reduce(s);
      if (!s.empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Syzygies and minimal generators

std::vector<FreeModuleElement> minimal_generators(const std::vector<FreeModuleElement>& gens) {
  std::vector<FreeModuleElement> nz;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("minimal_generators: inhomogeneous element");
    nz.push_back(g);
  }
  if (nz.empty()) return {};
  std::stable_sort(nz.begin(), nz.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  const RingPtr& ring = nz.front().components.front().ring();
  const auto& degs = nz.front().degrees;
  const int n = ring->nvars();
  std::vector<FreeModuleElement> kept;
  std::vector<ModVec> kept_v;
  std::vector<int> kept_deg;
  std::size_t k = 0;
  while (k < nz.size()) {
    const int d = nz[k].degree();
    FreeSlice slice(n, degs, d, ring->order());
    LinearSpan span(slice.size(), ring->field());
    for (std::size_t a = 0; a < kept_v.size(); ++a) {
      for (const auto& mono : monomials_of_degree(n, d - kept_deg[a], ring->order())) {
        ModVec v;
        v.reserve(kept_v[a].size());
        for (const auto& t : kept_v[a]) v.push_back({t.m * mono, t.comp, t.c});
        span.add(slice.dense(v));
        if (span.rank() == slice.size()) break;
      }
    }
    for (; k < nz.size() && nz[k].degree() == d; ++k) {
      ModVec v = nz[k].to_modvec();
      if (span.add(slice.dense(v))) {
        kept.push_back(nz[k]);
        kept_v.push_back(std::move(v));
        kept_deg.push_back(d);
      }
    }
  }
  return kept;
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens) {
  std::vector<FreeModuleElement> es;
  for (const auto& g : gens) es.emplace_back(std::vector<Polynomial>{g}, std::vector<int>{0});
  std::vector<Polynomial> out;
  for (auto& e : minimal_generators(es)) out.push_back(e.components[0]);
  return out;
}

std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens,
                                        const std::vector<int>& source_degrees) {
  if (gens.empty()) return {};
  if (source_degrees.size() != gens.size()) throw StructuralError("syzygies: degree count mismatch");
  const RingPtr& ring = gens.front().components.front().ring();
  const auto& fdeg = gens.front().degrees;
  const std::uint32_t m = static_cast<std::uint32_t>(fdeg.size());
  std::vector<int> adeg = fdeg;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.degrees != fdeg) throw StructuralError("syzygies: elements of different free modules");
    if (!g.is_homogeneous()) throw std::invalid_argument("syzygies: inhomogeneous generator");
    if (!g.is_zero() && g.degree() != source_degrees[i]) throw std::invalid_argument("syzygies: degree mismatch");
    adeg.push_back(source_degrees[i]);
  }
  std::vector<ModVec> aug;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ModVec v = gens[i].to_modvec();
    v.push_back({Monomial{}, m + static_cast<std::uint32_t>(i), 1});
    aug.push_back(std::move(v));
  }
  GroebnerBasis gb = groebner_basis(ring, adeg, std::move(aug));
  std::vector<FreeModuleElement> syz;
  for (const auto& v : gb.vectors()) {
    if (v.front().comp < m) continue;
    ModVec s;
    for (const auto& t : v) s.push_back({t.m, t.comp - m, t.c});
    syz.push_back(FreeModuleElement::from_modvec(s, ring, source_degrees));
  }
  return minimal_generators(syz);
}

std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens) {
  std::vector<int> sdeg;
  // a zero generator is given degree 0
  for (const auto& g : gens) sdeg.push_back(g.is_zero() ? 0 : g.degree());
  return syzygies(gens, sdeg);
}

std::vector<FreeModuleElement> syzygies(const std::vector<Polynomial>& gens) {
  std::vector<FreeModuleElement> es;
  for (const auto& g : gens) es.emplace_back(std::vector<Polynomial>{g}, std::vector<int>{0});
  return syzygies(es);
}

std::string dump(const GroebnerBasis& gb) {
  std::ostringstream os;
  if (gb.rank() == 1) {
    for (const auto& p : gb.polynomials()) os << p.to_string() << "\n";
  } else {
    for (const auto& e : gb.elements()) {
      os << "[";
      for (std::size_t i = 0; i < e.components.size(); ++i) {
        if (i) os << ", ";
        os << e.components[i].to_string();
      }
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace scf
