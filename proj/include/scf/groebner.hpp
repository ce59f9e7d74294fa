#pragma once

#include <cstdint>
#include <vector>

#include "scf/polynomial.hpp"

namespace scf {

/// One term of a vector in a free module: coefficient * monomial * e_comp.
struct ModTerm {
  Monomial m;
  std::uint32_t comp = 0;
  Coeff c = 0;
};

/// Sparse module vector, strictly decreasing under the position-over-term order
/// (lower component index ranks higher, ties broken by the ring's term order).
using ModVec = std::vector<ModTerm>;

inline int pot_compare(const MonomialOrder& ord, const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ord.compare(a.m, b.m);
}

/// Element of the graded free module F = sum_i R(-degrees[i]).
struct FreeModuleElement {
  std::vector<Polynomial> components;
  std::vector<int> degrees;

  FreeModuleElement() = default;
  FreeModuleElement(std::vector<Polynomial> comps, std::vector<int> degs);

  static FreeModuleElement zero(const RingPtr& ring, std::vector<int> degs);
  static FreeModuleElement unit(const RingPtr& ring, std::vector<int> degs, int i);

  int rank() const { return static_cast<int>(components.size()); }
  bool is_zero() const;
  bool is_homogeneous() const;
  /// Degree of a homogeneous element; throws for zero or inhomogeneous input.
  int degree() const;

  FreeModuleElement operator+(const FreeModuleElement& o) const;
  FreeModuleElement operator-(const FreeModuleElement& o) const;
  FreeModuleElement scaled(const Polynomial& f) const;

  ModVec to_modvec() const;
  static FreeModuleElement from_modvec(const ModVec& v, const RingPtr& ring, std::vector<int> degs);
};

/// Options for a Buchberger run.
struct GroebnerOptions {
  bool reduce = true;  // inter-reduce and normalize the output
};

/// A Groebner basis of a submodule of a graded free module (rank 1 for ideals).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<int> comp_degrees, std::vector<ModVec> elems, bool reduced);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(comp_degrees_.size()); }
  const std::vector<int>& component_degrees() const { return comp_degrees_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<ModVec>& vectors() const { return elems_; }

  /// Rank-1 view; throws StructuralError for modules.
  std::vector<Polynomial> polynomials() const;
  std::vector<FreeModuleElement> elements() const;

  /// True iff the basis contains a unit (the whole ring / module).
  bool is_unit() const;

 private:
  RingPtr ring_;
  std::vector<int> comp_degrees_;
  std::vector<ModVec> elems_;
  bool reduced_ = false;
};

/// Reduced Groebner basis of the ideal generated by `gens` under their ring's
/// order. Zero generators are dropped; an empty list yields the zero ideal.
/// Inhomogeneous input is rejected.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, GroebnerOptions opts = {});
GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<int>& comp_degrees,
                             std::vector<ModVec> gens, GroebnerOptions opts = {});
GroebnerBasis groebner_basis(const std::vector<FreeModuleElement>& gens, GroebnerOptions opts = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
ModVec normal_form(ModVec f, const GroebnerBasis& gb);
FreeModuleElement normal_form(const FreeModuleElement& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// Re-checks Buchberger's criterion: every S-pair (except coprime pairs of an
/// ideal basis) reduces to zero.
bool verify_buchberger_criterion(const GroebnerBasis& gb);

/// Generators of the first syzygy module of `gens`, i.e. the kernel of
/// R^r -> F sending e_i to gens[i]. Computed from a position-over-term basis of
/// the augmented vectors (gens[i], e_i); the result is minimalized.
/// Throws std::invalid_argument on inhomogeneous input.
std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens);
std::vector<FreeModuleElement> syzygies(const std::vector<Polynomial>& gens);
/// Same, with the source free module's degrees given explicitly (needed when
/// some generators are zero).
std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens,
                                        const std::vector<int>& source_degrees);

/// Drops elements that are redundant in the submodule they generate, scanning
/// in degree order; all inputs must be homogeneous in one free module.
std::vector<FreeModuleElement> minimal_generators(const std::vector<FreeModuleElement>& gens);
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens);

/// Writes the basis in the text grammar, one element per line.
std::string dump(const GroebnerBasis& gb);

}  // namespace scf
