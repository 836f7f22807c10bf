#pragma once

// Geometric verifications for the double cover w^2 + q(x,y,z) = 0 and its
// branch quartic: smoothness via good reduction, bitangency of a line, the
// two line lifts and their field of definition, and (projective) linear
// automorphisms.

#include "dp2cert/poly.hpp"
#include "dp2cert/quadext.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dp2 {

using QE = QuadExt<-7>;
using TW = Tower<-7>;

// Homogeneous quartic in x, y, z over Q(sqrt(-7)).
struct TernaryQuartic {
  WeightedForm<QE> form;
  explicit TernaryQuartic(WeightedForm<QE> f);
};

// w^2 + quartic in P(2,1,1,1).
struct DoubleCoverSurface {
  WeightedForm<QE> form;
  TernaryQuartic quartic;
  static DoubleCoverSurface from_quartic(const TernaryQuartic& q);
};

// A bitangent together with its lift data: the two lines on the surface over
// the plane line are w + mu*q = 0 and w - mu*q = 0 after eliminating the
// line's pivot variable.
struct BitangentLift {
  WeightedForm<QE> line;  // linear form in x, y, z
  TW mu;
  WeightedForm<QE> q;     // binary quadratic in the two retained variables
};

// ---- smoothness via good reduction ----------------------------------------

struct ReductionScan {
  std::uint32_t prime = 0;
  std::optional<std::uint32_t> root;  // image of sqrt(-7), when needed
  bool smooth = false;
  std::uint64_t points_scanned = 0;   // |P^2(F_p)| = p^2 + p + 1
  std::vector<std::array<std::uint32_t, 3>> singular_points;  // capped
};

struct SmoothnessResult {
  bool smooth = false;                // some reduction is smooth
  std::uint32_t prime = 0;
  std::vector<ReductionScan> scans;   // one per root tried
};

// Smallest square root of a mod p by direct scan, if one exists.
std::optional<std::uint32_t> sqrt_mod(std::int64_t a, std::uint32_t p);

// Reduce the quartic mod p (mapping sqrt(-7) to the given root, when the
// quartic has an irrational part) and scan every point of P^2(F_p) for a
// common zero of the three partials.  Both roots +-s are scanned.  A smooth
// reduction certifies smoothness over the number field; a singular one only
// means p is unusable ("inconclusive at p").
SmoothnessResult smooth_via_good_reduction(const TernaryQuartic& c, std::uint32_t p,
                                           std::optional<std::uint32_t> sqrt_minus7);

// Exact-arithmetic cross-check: among the nonzero points with coordinates in
// {0, 1, -1}, none annihilates the quartic and all three partials.
bool no_small_exact_singularity(const TernaryQuartic& c);

// ---- bitangency ------------------------------------------------------------

struct BitangentCheck {
  enum class Kind { Bitangent, FourfoldContact, NotPerfectSquare, ZeroRestriction };
  Kind kind = Kind::NotPerfectSquare;
  bool is_bitangent = false;
  QE alpha;                          // restriction = alpha * q^2 when square
  WeightedForm<QE> q;                // monic-normalized binary quadratic
  WeightedForm<QE> restriction;      // the binary quartic b
  std::vector<std::string> restricted_vars;
};

// Eliminates the line's pivot variable from the quartic and decides whether
// the restriction is alpha * q(u,v)^2 with q of distinct roots.
BitangentCheck is_bitangent(const WeightedForm<QE>& line, const TernaryQuartic& quartic);

// ---- line lifts ------------------------------------------------------------

// Substitutes the line relation and w = -+ mu*q into the surface form over
// Q(sqrt(-7), i); true iff both signs give the zero polynomial.
bool verify_line_on_surface(const BitangentLift& lift, const DoubleCoverSurface& s);

// The Geiser involution w -> -w carries each lift equation to the other one
// (up to overall sign of the equation).
bool geiser_swaps_lifts(const BitangentLift& lift);

// Coefficient vector [w, u^2, uv, v^2] of the lift equation w + sign*mu*q.
std::vector<TW> lift_equation_coeffs(const BitangentLift& lift, int sign);

// True iff some nonzero rescaling of the equation has all coefficients in
// Q(sqrt(-7)) (i-part zero).
bool defined_over_base_field(std::span<const TW> equation_coeffs);

struct FieldOfDefinitionResult {
  bool not_defined_over_base = false;  // true: genuinely needs i
  bool plus_defined = false;
  bool minus_defined = false;
};

// Requires the lift to verify on the surface (throws otherwise), then tests
// both lift equations for definability over Q(sqrt(-7)) up to rescaling.
FieldOfDefinitionResult field_of_definition_check(const BitangentLift& lift,
                                                  const DoubleCoverSurface& s);

// ---- automorphisms ---------------------------------------------------------

// A linear map respecting the weights (2,1,1,1): w -> w_scale * w and an
// invertible 3x3 block on (x,y,z).  Plane maps use w_scale = 1.
struct ProjectiveAutomorphism {
  std::array<std::array<QE, 3>, 3> plane;
  QE w_scale = QE(1);

  static ProjectiveAutomorphism from_plane(const std::array<std::array<QE, 3>, 3>& m);
  static ProjectiveAutomorphism geiser();
  static ProjectiveAutomorphism signed_permutation(const std::array<int, 3>& perm,
                                                   const std::array<int, 3>& signs);
  ProjectiveAutomorphism compose(const ProjectiveAutomorphism& then) const;
};

struct AutomorphismCheck {
  bool ok = false;
  QE scale;  // f o M = scale * f
};

AutomorphismCheck verify_automorphism(const ProjectiveAutomorphism& aut,
                                      const TernaryQuartic& target);
AutomorphismCheck verify_automorphism(const ProjectiveAutomorphism& aut,
                                      const DoubleCoverSurface& target);

// Signed-permutation symmetries of a quartic, as a projective group (modulo
// +-1).  48 candidate matrices are filtered through verify_automorphism.
struct VisibleSymmetryGroup {
  std::size_t order = 0;
  bool closed = false;
  std::vector<std::array<std::array<int, 3>, 3>> elements;  // canonical reps
};

VisibleSymmetryGroup visible_symmetry_group(const TernaryQuartic& quartic);

// Text form for 3x3 matrices over Q(sqrt(-7)): rows separated by ';', entries
// by ',', each entry in the coefficient syntax (e.g. "0,1,0; 0,0,1; 1,0,0" or
// entries like "1/2 + 1/2*rt").  Lets externally supplied automorphisms be
// fed to verify_automorphism.
std::array<std::array<QE, 3>, 3> parse_matrix3(const std::string& text);

}  // namespace dp2
