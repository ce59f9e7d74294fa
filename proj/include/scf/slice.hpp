#pragma once

#include <unordered_map>
#include <vector>

#include "scf/groebner.hpp"

namespace scf {

/// Monomial basis of the degree-d piece of a graded free module sum_i R(-deg_i).
class FreeSlice {
 public:
  FreeSlice(int nvars, const std::vector<int>& comp_degrees, int d, const MonomialOrder& ord);

  int degree() const { return d_; }
  std::size_t size() const { return basis_.size(); }
  const ModTerm& at(std::size_t k) const { return basis_[k]; }  // coefficient unused
  /// Column of (comp, m) or -1 if that pair lies in another degree.
  long index(std::uint32_t comp, const Monomial& m) const;
  /// Dense coordinates of a homogeneous degree-d vector.
  std::vector<Coeff> dense(const ModVec& v) const;

 private:
  struct Key {
    std::uint32_t comp;
    Monomial m;
    bool operator==(const Key& o) const { return comp == o.comp && m == o.m; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.m.hash() ^ (std::size_t{k.comp} * 0x9E3779B1u); }
  };

  int d_;
  std::vector<ModTerm> basis_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
};

}  // namespace scf
