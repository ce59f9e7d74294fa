#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "scf/ideal.hpp"

namespace scf {

/// Basis of one graded piece of a module: the standard terms (comp, monomial).
struct ModuleSlice {
  struct Key {
    std::uint32_t comp;
    Monomial m;
    bool operator==(const Key& o) const { return comp == o.comp && m == o.m; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.m.hash() ^ (std::size_t{k.comp} * 0x9E3779B1u); }
  };

  std::vector<ModTerm> basis;  // coefficients unused
  std::unordered_map<Key, std::size_t, KeyHash> index;

  long find(std::uint32_t comp, const Monomial& m) const {
    auto it = index.find(Key{comp, m});
    return it == index.end() ? -1 : static_cast<long>(it->second);
  }
};

/// M = coker(F1 -> F0) with F0 = sum_j R(-gen_degrees[j]); relations are the
/// images of the basis of F1, given as homogeneous elements of F0.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(RingPtr ring, std::vector<int> gen_degrees, std::vector<FreeModuleElement> relations);

  static GradedModule free(const RingPtr& ring, std::vector<int> degrees);
  /// R/I.
  static GradedModule quotient_ring(const Ideal& I);
  /// I itself, presented on a minimal generating set by its syzygies.
  static GradedModule ideal_module(const Ideal& I);
  /// m^k for the irrelevant ideal m, presented by the monomials of degree k and
  /// the binomial relations x_i e_a - x_j e_b.
  static GradedModule irrelevant_power(const RingPtr& ring, int k);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& gen_degrees() const { return degrees_; }
  const std::vector<FreeModuleElement>& relations() const { return relations_; }
  std::vector<int> relation_degrees() const;

  /// Basis of the relation submodule under position-over-term.
  const GroebnerBasis& gb() const;
  const ModuleSlice& slice(int e) const;
  long dim(int e) const { return static_cast<long>(slice(e).basis.size()); }
  /// Coordinates of the class of a homogeneous degree-e element of F0.
  std::vector<Coeff> coords(const ModVec& v, int e) const;

  /// Removes generators killed by unit entries and redundant relations.
  GradedModule minimal_presentation() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
    std::mutex slice_mutex;
    std::map<int, std::unique_ptr<ModuleSlice>> slices;
  };

  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<FreeModuleElement> relations_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Hilbert series of M (generator degrees must be non-negative).
HilbertSeries hilbert_series(const GradedModule& M);

struct FreeResolution {
  RingPtr ring;
  /// degrees[i]: shifts of F_i (F_i = sum R(-degrees[i][k])).
  std::vector<std::vector<int>> degrees;
  /// maps[i]: F_{i+1} -> F_i, one element of F_i per basis vector of F_{i+1}.
  std::vector<std::vector<FreeModuleElement>> maps;

  int length() const { return static_cast<int>(degrees.size()) - 1; }
  std::vector<int> ranks() const;
  /// betti[i][d] = number of summands R(-d) in F_i.
  std::vector<std::map<int, int>> betti() const;
  int regularity() const;
  /// Every composition F_{i+2} -> F_{i+1} -> F_i is exactly zero.
  bool compositions_vanish() const;
  /// sum_i (-1)^i sum_k t^{degrees[i][k]}, ascending from t^0.
  std::vector<BigInt> alternating_numerator() const;
};

/// Minimal graded free resolution; throws once more than `length_cap` maps are
/// needed (default: the number of variables, Hilbert's syzygy bound).
FreeResolution free_resolution(const GradedModule& M, int length_cap = -1);

/// Hom_R(M, N), with graded pieces computed by linear algebra on demand.
class HomModule {
 public:
  HomModule(GradedModule M, GradedModule N) : M_(std::move(M)), N_(std::move(N)) {}

  const GradedModule& source() const { return M_; }
  const GradedModule& target() const { return N_; }
  /// dim_k Hom(M, N)_d.
  long dim(int d) const;
  /// Cokernel presentation computed from syzygies (costly; small inputs).
  GradedModule presentation() const;

 private:
  GradedModule M_, N_;
};

HomModule graded_hom(const GradedModule& M, const GradedModule& N);

/// depth of M via Auslander-Buchsbaum on the minimal resolution.
int depth(const GradedModule& M);

/// h^0 of the sheaf associated with M, twisted by d: the degree-d piece of
/// Gamma_*(M~). Depth >= 2 gives M_d; depth 1 uses Hom(m^k, M)_d with
/// k = max(0, reg M - d). Throws std::domain_error for modules with
/// irrelevant-ideal torsion.
long sheaf_h0(const GradedModule& M, int d);
/// For Hom into a target of depth >= 2 (caller-certified), Hom itself has depth >= 2.
long sheaf_h0(const HomModule& H, int d, bool target_depth_two_certified);
/// h^0(I~(d)) = dim of the degree-d piece of the saturation.
long sheaf_h0(const Ideal& I, int d);

}  // namespace scf
