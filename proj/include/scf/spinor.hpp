#pragma once

#include <cstdint>
#include <vector>

#include "scf/polynomial.hpp"

namespace scf {

/// The ten quadrics cutting out the spinor tenfold in P^15. Coordinates:
/// 0 is u, 1..10 are u_ij (i < j in 0..4, lexicographic), 11..15 are p_0..p_4.
std::vector<Polynomial> spinor_quadrics(const RingPtr& ring16);

/// The point (1, a_ij, p_m) of the big cell attached to a skew 5x5 matrix given
/// by its upper triangle (10 entries, lexicographic), with p_m the signed
/// complementary 4x4 Pfaffians.
std::vector<Coeff> spinor_cell_point(const std::vector<Coeff>& upper, const FieldConfig& F);

/// Pullback of the spinor quadrics along a random linear map P^7 -> P^15: the
/// ideal of a genus-7 K3 surface of degree 12 for a general choice.
std::vector<Polynomial> spinor_k3_section(const RingPtr& ring8, std::uint64_t seed);

}  // namespace scf
