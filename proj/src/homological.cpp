#include "scf/homological.hpp"

#include <algorithm>

#include "scf/deadline.hpp"
#include "scf/linalg.hpp"

namespace scf {

namespace {

// r_j * (m e_c) as a module vector; multiplication by a monomial keeps term order.
ModVec times_term(const Polynomial& f, const Monomial& m, std::uint32_t comp) {
  ModVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.m * m, comp, t.c});
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedModule

GradedModule::GradedModule(RingPtr ring, std::vector<int> gen_degrees, std::vector<FreeModuleElement> relations)
    : ring_(std::move(ring)), degrees_(std::move(gen_degrees)) {
  if (degrees_.empty()) throw StructuralError("module with no generators");
  for (auto& r : relations) {
    if (r.degrees != degrees_) throw StructuralError("relation lives in another free module");
    if (!r.components.front().ring()->same_as(*ring_)) throw StructuralError("relation from another ring");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw std::invalid_argument("inhomogeneous relation");
    relations_.push_back(std::move(r));
  }
}

GradedModule GradedModule::free(const RingPtr& ring, std::vector<int> degrees) {
  return GradedModule(ring, std::move(degrees), {});
}

GradedModule GradedModule::quotient_ring(const Ideal& I) {
  const RingPtr& R = I.ring();
  std::vector<FreeModuleElement> rels;
  for (const auto& g : I.generators()) rels.push_back(FreeModuleElement({g}, {0}));
  GradedModule M(R, {0}, std::move(rels));
  // the ideal's basis is already a rank-1 module basis
  std::call_once(M.cache_->once, [&] { M.cache_->gb = I.gb(); });
  return M;
}

GradedModule GradedModule::ideal_module(const Ideal& I) {
  auto gens = I.minimal_generators();
  if (gens.empty()) throw std::invalid_argument("the zero ideal has no presentation on generators");
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.degree());
  return GradedModule(I.ring(), degs, syzygies(gens));
}

GradedModule GradedModule::irrelevant_power(const RingPtr& R, int k) {
  const int n = R->nvars();
  auto mons = monomials_of_degree(n, k, R->order());
  std::vector<int> degs(mons.size(), k);
  std::unordered_map<Monomial, std::vector<std::pair<std::size_t, int>>, MonomialHash> by_product;
  std::vector<Monomial> order_seen;
  for (std::size_t a = 0; a < mons.size(); ++a) {
    for (int i = 0; i < n; ++i) {
      Monomial nu = mons[a] * Monomial::var(i);
      auto [it, fresh] = by_product.try_emplace(nu);
      if (fresh) order_seen.push_back(nu);
      it->second.push_back({a, i});
    }
  }
  std::vector<FreeModuleElement> rels;
  for (const auto& nu : order_seen) {
    const auto& list = by_product.at(nu);
    for (std::size_t q = 1; q < list.size(); ++q) {
      auto r = FreeModuleElement::zero(R, degs);
      r.components[list[q - 1].first] = Polynomial::variable(R, list[q - 1].second);
      r.components[list[q].first] = -Polynomial::variable(R, list[q].second);
      rels.push_back(std::move(r));
    }
  }
  return GradedModule(R, degs, std::move(rels));
}

std::vector<int> GradedModule::relation_degrees() const {
  std::vector<int> d;
  for (const auto& r : relations_) d.push_back(r.degree());
  return d;
}

const GroebnerBasis& GradedModule::gb() const {
  std::call_once(cache_->once, [&] {
    if (relations_.empty()) {
      cache_->gb = GroebnerBasis(ring_, degrees_, {}, true);
    } else {
      cache_->gb = groebner_basis(relations_);
    }
  });
  return cache_->gb;
}

const ModuleSlice& GradedModule::slice(int e) const {
  const GroebnerBasis& B = gb();
  std::lock_guard<std::mutex> lock(cache_->slice_mutex);
  auto& slot = cache_->slices[e];
  if (slot) return *slot;
  auto s = std::make_unique<ModuleSlice>();
  const int n = ring_->nvars();
  for (std::uint32_t c = 0; c < degrees_.size(); ++c) {
    int k = e - degrees_[c];
    if (k < 0) continue;
    for (const auto& m : monomials_of_degree(n, k, ring_->order())) {
      bool reducible = false;
      for (const auto& v : B.vectors()) {
        const auto& lt = v.front();
        if (lt.comp == c && lt.m.divides(m)) {
          reducible = true;
          break;
        }
      }
      if (reducible) continue;
      s->index.emplace(ModuleSlice::Key{c, m}, s->basis.size());
      s->basis.push_back({m, c, 1});
    }
  }
  slot = std::move(s);
  return *slot;
}

std::vector<Coeff> GradedModule::coords(const ModVec& v, int e) const {
  const ModuleSlice& s = slice(e);
  std::vector<Coeff> out(s.basis.size(), 0);
  for (const auto& t : normal_form(v, gb())) {
    long k = s.find(t.comp, t.m);
    if (k < 0) throw std::logic_error("coords: vector not homogeneous of the requested degree");
    out[k] = t.c;
  }
  return out;
}

GradedModule GradedModule::minimal_presentation() const {
  std::vector<int> degs = degrees_;
  std::vector<FreeModuleElement> rels = relations_;
  const FieldConfig& F = ring_->field();
  for (;;) {
    // a relation with a unit entry expresses that generator through the others
    long ri = -1, cj = -1;
    for (std::size_t r = 0; r < rels.size() && ri < 0; ++r) {
      for (std::size_t j = 0; j < degs.size(); ++j) {
        const auto& p = rels[r].components[j];
        if (!p.is_zero() && p.is_constant()) {
          ri = static_cast<long>(r);
          cj = static_cast<long>(j);
          break;
        }
      }
    }
    if (ri < 0) break;
    FreeModuleElement piv = rels[ri];
    Coeff cinv = F.inv(piv.components[cj].leading_coeff());
    std::vector<FreeModuleElement> next;
    std::vector<int> ndeg;
    for (std::size_t j = 0; j < degs.size(); ++j)
      if (static_cast<long>(j) != cj) ndeg.push_back(degs[j]);
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (static_cast<long>(r) == ri) continue;
      FreeModuleElement s = rels[r];
      const Polynomial& sj = s.components[cj];
      if (!sj.is_zero()) s = s - piv.scaled(sj.scaled(cinv));
      std::vector<Polynomial> comps;
      for (std::size_t j = 0; j < degs.size(); ++j)
        if (static_cast<long>(j) != cj) comps.push_back(s.components[j]);
      if (comps.empty()) continue;
      next.emplace_back(std::move(comps), ndeg);
    }
    if (ndeg.empty()) throw std::invalid_argument("module is zero");
    degs = std::move(ndeg);
    rels = std::move(next);
  }
  return GradedModule(ring_, degs, minimal_generators(rels));
}

HilbertSeries hilbert_series(const GradedModule& M) {
  const int n = M.ring()->nvars();
  HilbertSeries out;
  out.nvars = n;
  for (std::uint32_t c = 0; c < M.gen_degrees().size(); ++c) {
    int shift = M.gen_degrees()[c];
    if (shift < 0) throw std::invalid_argument("hilbert_series: negative generator degree");
    std::vector<Monomial> leads;
    for (const auto& v : M.gb().vectors())
      if (v.front().comp == c) leads.push_back(v.front().m);
    auto part = hilbert_series_monomial(n, leads);
    if (out.numerator.size() < part.numerator.size() + shift) out.numerator.resize(part.numerator.size() + shift, 0);
    for (std::size_t k = 0; k < part.numerator.size(); ++k) out.numerator[k + shift] += part.numerator[k];
  }
  while (!out.numerator.empty() && out.numerator.back() == 0) out.numerator.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Resolutions

std::vector<int> FreeResolution::ranks() const {
  std::vector<int> r;
  for (const auto& d : degrees) r.push_back(static_cast<int>(d.size()));
  return r;
}

std::vector<std::map<int, int>> FreeResolution::betti() const {
  std::vector<std::map<int, int>> b;
  for (const auto& d : degrees) {
    std::map<int, int> m;
    for (int x : d) ++m[x];
    b.push_back(std::move(m));
  }
  return b;
}

int FreeResolution::regularity() const {
  int reg = INT32_MIN;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (int d : degrees[i]) reg = std::max(reg, d - static_cast<int>(i));
  return reg;
}

bool FreeResolution::compositions_vanish() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    for (const auto& s : maps[i + 1]) {
      auto acc = FreeModuleElement::zero(ring, degrees[i]);
      for (std::size_t k = 0; k < s.components.size(); ++k) {
        if (!s.components[k].is_zero()) acc = acc + maps[i][k].scaled(s.components[k]);
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

std::vector<BigInt> FreeResolution::alternating_numerator() const {
  std::vector<BigInt> num;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (int d : degrees[i]) {
      if (d < 0) throw std::invalid_argument("alternating_numerator: negative shift");
      if (num.size() <= static_cast<std::size_t>(d)) num.resize(d + 1, 0);
      num[d] += (i % 2 == 0) ? 1 : -1;
    }
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

FreeResolution free_resolution(const GradedModule& M, int length_cap) {
  const int n = M.ring()->nvars();
  if (length_cap < 0) length_cap = n;
  GradedModule P = M.minimal_presentation();
  FreeResolution res;
  res.ring = M.ring();
  res.degrees.push_back(P.gen_degrees());
  if (P.relations().empty()) return res;
  res.maps.push_back(P.relations());
  res.degrees.push_back(P.relation_degrees());
  for (;;) {
    check_deadline();
    auto syz = syzygies(res.maps.back(), res.degrees.back());
    if (syz.empty()) break;
    if (static_cast<int>(res.maps.size()) >= length_cap) {
      throw std::runtime_error("free resolution longer than the length cap");
    }
    std::vector<int> d;
    for (const auto& s : syz) d.push_back(s.degree());
    res.maps.push_back(std::move(syz));
    res.degrees.push_back(std::move(d));
  }
  return res;
}

int depth(const GradedModule& M) { return M.ring()->nvars() - free_resolution(M).length(); }

// ---------------------------------------------------------------------------
// Hom

long HomModule::dim(int d) const {
  const FieldConfig& F = M_.ring()->field();
  const auto& a = M_.gen_degrees();
  const auto& rels = M_.relations();
  const auto rdeg = M_.relation_degrees();

  std::vector<std::size_t> col_off(a.size() + 1, 0);
  for (std::size_t j = 0; j < a.size(); ++j) col_off[j + 1] = col_off[j] + N_.dim(a[j] + d);
  std::vector<std::size_t> row_off(rels.size() + 1, 0);
  for (std::size_t k = 0; k < rels.size(); ++k) row_off[k + 1] = row_off[k] + N_.dim(rdeg[k] + d);
  const std::size_t ncols = col_off.back(), nrows = row_off.back();
  if (ncols == 0) return 0;
  if (nrows == 0) return static_cast<long>(ncols);

  // one row of A^T per unknown: its images under all relations
  Matrix At(ncols, nrows);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const ModuleSlice& sj = N_.slice(a[j] + d);
    for (std::size_t b = 0; b < sj.basis.size(); ++b) {
      check_deadline();
      const auto& t = sj.basis[b];
      for (std::size_t k = 0; k < rels.size(); ++k) {
        const Polynomial& rkj = rels[k].components[j];
        if (rkj.is_zero()) continue;
        auto v = N_.coords(times_term(rkj, t.m, t.comp), rdeg[k] + d);
        for (std::size_t q = 0; q < v.size(); ++q) At(col_off[j] + b, row_off[k] + q) = v[q];
      }
    }
  }
  return static_cast<long>(ncols - rank(std::move(At), F));
}

GradedModule HomModule::presentation() const {
  const RingPtr& R = M_.ring();
  const auto& a = M_.gen_degrees();
  const auto& g = N_.gen_degrees();
  const auto& rels = M_.relations();
  const auto rdeg = M_.relation_degrees();
  const std::size_t s = a.size(), t = g.size(), K = rels.size();

  // P0 = sum_j N-generators shifted by a_j; components (j, c) -> j * t + c
  std::vector<int> p0;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t c = 0; c < t; ++c) p0.push_back(g[c] - a[j]);
  std::vector<int> q0;
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t c = 0; c < t; ++c) q0.push_back(g[c] - rdeg[k]);

  // relations of N placed in each block
  auto blocks = [&](const std::vector<int>& degs, std::size_t nblocks) {
    std::vector<FreeModuleElement> out;
    for (std::size_t j = 0; j < nblocks; ++j) {
      for (const auto& h : N_.relations()) {
        auto e = FreeModuleElement::zero(R, degs);
        for (std::size_t c = 0; c < t; ++c) e.components[j * t + c] = h.components[c];
        out.push_back(std::move(e));
      }
    }
    return out;
  };
  std::vector<FreeModuleElement> Lp = blocks(p0, s);

  std::vector<FreeModuleElement> kernel_gens;
  if (K == 0) {
    for (std::size_t i = 0; i < p0.size(); ++i) kernel_gens.push_back(FreeModuleElement::unit(R, p0, static_cast<int>(i)));
  } else {
    // x in P0 with phi(x) in the image of the N-relations inside Q0
    std::vector<FreeModuleElement> cols;
    std::vector<int> cdeg;
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t c = 0; c < t; ++c) {
        auto e = FreeModuleElement::zero(R, q0);
        for (std::size_t k = 0; k < K; ++k) e.components[k * t + c] = rels[k].components[j];
        cols.push_back(std::move(e));
        cdeg.push_back(p0[j * t + c]);
      }
    }
    for (auto& e : blocks(q0, K)) {
      cdeg.push_back(e.degree());
      cols.push_back(std::move(e));
    }
    for (const auto& z : syzygies(cols, cdeg)) {
      std::vector<Polynomial> head(z.components.begin(), z.components.begin() + static_cast<long>(p0.size()));
      FreeModuleElement x(std::move(head), p0);
      if (!x.is_zero()) kernel_gens.push_back(std::move(x));
    }
    kernel_gens = minimal_generators(kernel_gens);
  }
  if (kernel_gens.empty()) throw std::invalid_argument("Hom module is zero");

  // Hom = <kernel_gens> / Lp
  std::vector<FreeModuleElement> all = kernel_gens;
  std::vector<int> adeg;
  for (const auto& k : kernel_gens) adeg.push_back(k.degree());
  for (const auto& l : Lp) {
    all.push_back(l);
    adeg.push_back(l.degree());
  }
  std::vector<FreeModuleElement> hrels;
  const std::size_t m = kernel_gens.size();
  std::vector<int> hdeg(adeg.begin(), adeg.begin() + static_cast<long>(m));
  for (const auto& z : syzygies(all, adeg)) {
    std::vector<Polynomial> head(z.components.begin(), z.components.begin() + static_cast<long>(m));
    hrels.emplace_back(std::move(head), hdeg);
  }
  return GradedModule(R, hdeg, std::move(hrels)).minimal_presentation();
}

HomModule graded_hom(const GradedModule& M, const GradedModule& N) {
  if (!M.ring()->same_as(*N.ring())) throw StructuralError("Hom across rings");
  return HomModule(M, N);
}

// ---------------------------------------------------------------------------
// sheaf cohomology in degree 0

long sheaf_h0(const GradedModule& M, int d) {
  const int n = M.ring()->nvars();
  FreeResolution res = free_resolution(M);
  const int dep = n - res.length();
  if (dep >= 2) return M.dim(d);
  if (dep == 1) {
    int k = std::max(0, res.regularity() - d);
    if (k == 0) return M.dim(d);
    return graded_hom(GradedModule::irrelevant_power(M.ring(), k), M).dim(d);
  }
  throw std::domain_error("module has torsion supported at the irrelevant ideal");
}

long sheaf_h0(const HomModule& H, int d, bool target_depth_two_certified) {
  if (target_depth_two_certified) return H.dim(d);
  return sheaf_h0(H.presentation(), d);
}

long sheaf_h0(const Ideal& I, int d) { return saturate(I).slice_dim(d); }

}  // namespace scf
