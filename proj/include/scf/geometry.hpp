#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scf/ideal.hpp"
#include "scf/report.hpp"

namespace scf {

/// Raised when a construction's numerical contract does not hold.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of P^n(GF(p)), first nonzero coordinate 1.
struct RationalPoint {
  std::vector<Coeff> coords;

  static RationalPoint normalized(std::vector<Coeff> v, const FieldConfig& F);
  bool operator==(const RationalPoint&) const = default;
};

/// Closed subscheme of P^n with a saturated ideal; numerical invariants cached.
class ProjectiveScheme {
 public:
  ProjectiveScheme() = default;
  /// Saturates I unless depth(R/I) >= 1 is certified first.
  explicit ProjectiveScheme(Ideal I, std::uint64_t seed = 0);
  /// Trusts the caller that I is saturated.
  static ProjectiveScheme from_saturated(Ideal I);
  static ProjectiveScheme whole_space(const RingPtr& ring);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  int ambient_dim() const { return ideal_.nvars() - 1; }

  const HilbertSeries& hilbert_series() const;
  HilbertPoly hilbert_poly() const { return hilbert_series().polynomial(); }
  int dim() const;
  BigInt degree() const;
  bool is_empty() const { return dim() < 0; }

  bool contains(const RationalPoint& p) const;
  /// Z is a subscheme of this.
  bool contains(const ProjectiveScheme& Z) const { return Z.ideal_.contains(ideal_); }

  /// Free-form provenance lines (projection history).
  std::vector<std::string> history;

 private:
  struct Cache {
    std::once_flag once;
    HilbertSeries hs;
  };
  Ideal ideal_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Jacobian matrix of `gens` evaluated at a point (rows: generators).
Matrix jacobian_at(const std::vector<Polynomial>& gens, std::span<const Coeff> pt);
/// rank of the Jacobian of the minimal generators at p equals the codimension.
bool is_smooth_at(const ProjectiveScheme& X, const RationalPoint& p);

/// Singular locus of an equidimensional scheme. Hypersurfaces use their
/// partials. Otherwise the ideal is first enlarged by minors of random complete
/// intersections through X (an empty answer there is already a proof of
/// smoothness); a nonempty answer falls back to all minors of the Jacobian.
ProjectiveScheme singular_locus(const ProjectiveScheme& X, std::uint64_t seed = 0);
bool is_smooth(const ProjectiveScheme& X, std::uint64_t seed = 0);

/// A GF(p)-point found by slicing down to finitely many points and solving a
/// binary form; throws std::runtime_error("no rational point found") after `cap` slices.
RationalPoint sample_rational_point(const ProjectiveScheme& X, std::uint64_t seed, int cap = 64);
/// Same, but insists on a point where X is smooth.
RationalPoint sample_smooth_point(const ProjectiveScheme& X, std::uint64_t seed, int cap = 64);

/// Linear projection from a point of P^n to P^{n-1}: coordinates y with x = M y,
/// the center at y = e0, and y1..yn kept.
struct LinearProjection {
  RingPtr source, target;
  Matrix M;
  RationalPoint center;

  static LinearProjection from_center(const RingPtr& source, const RationalPoint& center, std::uint64_t seed);
  /// Image of a subscheme, by elimination (saturated when Z is reduced and irreducible).
  Ideal image_ideal(const Ideal& Z) const;
  ProjectiveScheme image(const ProjectiveScheme& Z) const;
};

struct InternalProjection {
  LinearProjection map;
  ProjectiveScheme image;
  ProjectiveScheme exceptional_line;
};

/// Projection of a surface from one of its smooth points. The exceptional line
/// is the image of the embedded tangent plane at p. Throws std::invalid_argument
/// if p is not a smooth point of S and ContractError if the image does not have
/// degree deg S - 1 and the same sectional genus, or misses the line.
InternalProjection internal_projection(const ProjectiveScheme& S, const RationalPoint& p, std::uint64_t seed = 0);

/// Two lines with empty intersection. Throws std::invalid_argument for non-lines.
bool are_skew_lines(const ProjectiveScheme& L1, const ProjectiveScheme& L2);

/// V(F) for a random combination F of a basis of h0(I_X(d)).
struct Hypersurface {
  Polynomial form;
  ProjectiveScheme scheme;
  std::uint64_t seed = 0;
};
Hypersurface random_hypersurface_containing(const ProjectiveScheme& X, int d, std::uint64_t seed);

/// Rank of the symmetric Gram matrix of a quadratic form (odd characteristic).
int quadric_rank(const Polynomial& q);
int quadric_rank(const ProjectiveScheme& Q);

/// h0 of the normal sheaf of S in Y (Y = whole space allowed), as the degree-0
/// piece of Hom_R(I_S / I_Y, R / I_S). When depth(R/I_S) >= 2 is certified this
/// is exactly h0; otherwise the Hom module is resolved and saturated.
long h0_normal_sheaf(const ProjectiveScheme& S, const ProjectiveScheme& Y, std::uint64_t seed = 0);

/// Sectional genus from the Hilbert polynomial of a surface.
BigInt sectional_genus(const ProjectiveScheme& S);

/// Numerical targets of the certificate; the defaults define the type.
struct TypeIIExpectations {
  long degree = 10;
  long genus = 7;
  long chi = 2;
  long quadrics = 1;
};

/// The checks defining a type II surface of degree 10 in P^5 with two skew
/// (-1)-lines; every check is attempted and reported.
std::vector<CheckResult> type_II_certificate(const ProjectiveScheme& S, const ProjectiveScheme& L1,
                                             const ProjectiveScheme& L2, const TypeIIExpectations& want = {},
                                             std::uint64_t seed = 0);

}  // namespace scf
