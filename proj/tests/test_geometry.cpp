#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2cert/geometry.hpp"
#include "dp2cert/models.hpp"
#include "dp2cert/poly_text.hpp"

#include <random>

using namespace dp2;

namespace {

TernaryQuartic quartic_of(const std::string& text) {
  return TernaryQuartic{parse_form<QE>(text, models::plane_vars(), models::plane_weights())};
}

WeightedForm<QE> line_of(const std::string& text) {
  return parse_form<QE>(text, models::plane_vars(), models::plane_weights());
}

const TernaryQuartic& paper_quartic() {
  static const TernaryQuartic q{models::branch_quartic()};
  return q;
}

const DoubleCoverSurface& paper_surface() {
  static const DoubleCoverSurface s = DoubleCoverSurface::from_quartic(paper_quartic());
  return s;
}

BitangentLift paper_lift() {
  return BitangentLift{models::bitangent_line(), models::lift_scale_mu(),
                       models::lift_quadratic()};
}

}  // namespace

TEST_CASE("type validation") {
  CHECK_THROWS_AS(quartic_of("x^3 + y^3 + z^3"), std::invalid_argument);
  CHECK_THROWS_AS(quartic_of("x^4 + y"), std::invalid_argument);
  const auto s = paper_surface();
  CHECK(s.form == models::surface_form());
}

TEST_CASE("smoothness: branch quartic has good reduction at 11, both roots") {
  const auto res = smooth_via_good_reduction(paper_quartic(), 11, 2);
  CHECK(res.smooth);
  REQUIRE(res.scans.size() == 2);  // roots 2 and 9
  for (const auto& sc : res.scans) {
    CHECK(sc.smooth);
    CHECK(sc.points_scanned == 11 * 11 + 11 + 1);
    CHECK(sc.singular_points.empty());
  }

  // Second good prime as a consistency witness.
  const auto s23 = sqrt_mod(-7, 23);
  REQUIRE(s23.has_value());
  CHECK(smooth_via_good_reduction(paper_quartic(), 23, *s23).smooth);
}

TEST_CASE("smoothness: Fermat quartic at p = 3 (no root needed)") {
  const auto res = smooth_via_good_reduction(quartic_of("x^4 + y^4 + z^4"), 3, std::nullopt);
  CHECK(res.smooth);
  REQUIRE(res.scans.size() == 1);
  CHECK(res.scans[0].points_scanned == 13);
  CHECK_FALSE(res.scans[0].root.has_value());
}

TEST_CASE("smoothness: x^4 is singular along a whole line") {
  const auto res = smooth_via_good_reduction(quartic_of("x^4"), 3, std::nullopt);
  CHECK_FALSE(res.smooth);
  REQUIRE(!res.scans[0].singular_points.empty());
  CHECK(res.scans[0].singular_points[0] == std::array<std::uint32_t, 3>{0, 1, 0});
}

TEST_CASE("smoothness: precondition errors") {
  CHECK_THROWS_AS(smooth_via_good_reduction(paper_quartic(), 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(smooth_via_good_reduction(paper_quartic(), 9, 2), std::invalid_argument);
  CHECK_THROWS_AS(smooth_via_good_reduction(paper_quartic(), 11, 3), std::invalid_argument);
  CHECK_THROWS_AS(smooth_via_good_reduction(paper_quartic(), 11, std::nullopt),
                  std::invalid_argument);
  // p divides a coefficient denominator
  CHECK_THROWS_AS(smooth_via_good_reduction(quartic_of("x^4 + 1/3 * y^4 + z^4"), 3, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("sqrt_mod scans correctly") {
  CHECK(sqrt_mod(-7, 11) == 2);
  CHECK(sqrt_mod(4, 11) == 2);
  CHECK_FALSE(sqrt_mod(-7, 3).has_value());  // -7 = 2 is not a square mod 3
}

TEST_CASE("exact small-point singularity cross-check") {
  CHECK(no_small_exact_singularity(paper_quartic()));
  CHECK_FALSE(no_small_exact_singularity(quartic_of("x^4")));  // (0,1,0) etc.
}

TEST_CASE("bitangent: x + y + z = 0 against the branch quartic") {
  const auto bc = is_bitangent(models::bitangent_line(), paper_quartic());
  CHECK(bc.is_bitangent);
  CHECK(bc.kind == BitangentCheck::Kind::Bitangent);
  CHECK(bc.q == models::lift_quadratic());

  // alpha = ((1 - sqrt(-7))/2)^4 = (1 + 3*sqrt(-7))/2
  const QE half(Rational(1, 2), Rational(-1, 2));
  CHECK(bc.alpha == half * half * half * half);
  CHECK(bc.alpha == QE(Rational(1, 2), Rational(3, 2)));

  // Constructive identity: restriction - alpha * q^2 = 0, exactly.
  CHECK(bc.restriction == (bc.q * bc.q).scaled(bc.alpha));
  CHECK(bc.restricted_vars == std::vector<std::string>{"x", "y"});
}

TEST_CASE("bitangent: x = 0 is not a bitangent of the branch quartic") {
  const auto bc = is_bitangent(line_of("x"), paper_quartic());
  CHECK_FALSE(bc.is_bitangent);
  CHECK(bc.kind == BitangentCheck::Kind::NotPerfectSquare);

  // Independent oracle: the restriction y^4 + z^4 - (3/2)(1-rt) y^2 z^2 as a
  // quadratic in (y^2, z^2) has nonzero discriminant, so its two quadratic
  // factors are distinct and it cannot be a perfect square.
  const QE c(Rational(-3, 2), Rational(3, 2));
  const QE disc = c * c - QE(4);
  CHECK_FALSE(disc.is_zero());
}

TEST_CASE("bitangent: double conic degenerates gracefully") {
  const auto bc = is_bitangent(line_of("z"), quartic_of("(x^2 + y^2 + z^2)^2"));
  CHECK(bc.is_bitangent);  // restriction (x^2+y^2)^2, q separable
  CHECK(bc.q == parse_form<QE>("x^2 + y^2", models::binary_vars(), models::binary_weights()));
}

TEST_CASE("bitangent: fourfold contact and zero restriction are classified") {
  const auto four = is_bitangent(line_of("z"), quartic_of("x^4"));
  CHECK_FALSE(four.is_bitangent);
  CHECK(four.kind == BitangentCheck::Kind::FourfoldContact);

  const auto zero = is_bitangent(line_of("x + y + z"), quartic_of("(x + y + z) * x^3"));
  CHECK_FALSE(zero.is_bitangent);
  CHECK(zero.kind == BitangentCheck::Kind::ZeroRestriction);

  CHECK_THROWS_AS(is_bitangent(WeightedForm<QE>(models::plane_vars(), models::plane_weights()),
                               paper_quartic()),
                  std::invalid_argument);
}

TEST_CASE("bitangent: pivot elimination picks the last variable with nonzero coefficient") {
  // line y = 0 against the Fermat quartic: restriction x^4 + z^4 in (x, z)
  const auto bc = is_bitangent(line_of("y"), quartic_of("x^4 + y^4 + z^4"));
  CHECK(bc.restricted_vars == std::vector<std::string>{"x", "z"});
  CHECK(bc.restriction ==
        parse_form<QE>("x^4 + z^4", {"x", "z"}, {1, 1}));
  CHECK_FALSE(bc.is_bitangent);
  CHECK(bc.kind == BitangentCheck::Kind::NotPerfectSquare);
}

TEST_CASE("bitangent: invariance under line rescaling") {
  const auto a = is_bitangent(models::bitangent_line(), paper_quartic());
  const auto b = is_bitangent(line_of("2*x + 2*y + 2*z"), paper_quartic());
  CHECK(a.is_bitangent == b.is_bitangent);
  CHECK(a.q == b.q);
  CHECK(a.alpha == b.alpha);
}

TEST_CASE("bitangent: symmetry images of a bitangent are bitangents") {
  const auto vis = visible_symmetry_group(paper_quartic());
  const auto& vars = models::plane_vars();
  const auto& wts = models::plane_weights();
  for (const auto& m : vis.elements) {
    // image of the line under the matrix
    WeightedForm<QE> img(vars, wts);
    std::vector<WeightedForm<QE>> assign;
    for (int i = 0; i < 3; ++i) {
      WeightedForm<QE> row(vars, wts);
      for (int j = 0; j < 3; ++j)
        row = row + WeightedForm<QE>::variable(vars, wts, j).scaled(QE(m[i][j]));
      assign.push_back(row);
    }
    img = models::bitangent_line().substitute(assign);
    CHECK(is_bitangent(img, paper_quartic()).is_bitangent);
  }
}

TEST_CASE("line lifts: w = -+ mu (x^2+xy+y^2) lie on the surface") {
  const auto lift = paper_lift();
  CHECK(verify_line_on_surface(lift, paper_surface()));

  BitangentLift doubled = lift;
  doubled.mu = doubled.mu * TW(2);
  CHECK_FALSE(verify_line_on_surface(doubled, paper_surface()));

  BitangentLift malformed = lift;
  malformed.q = parse_form<QE>("x + y", models::binary_vars(), models::binary_weights());
  CHECK_THROWS_AS(verify_line_on_surface(malformed, paper_surface()), std::invalid_argument);
}

TEST_CASE("Geiser exchanges the two lifts") {
  CHECK(geiser_swaps_lifts(paper_lift()));
}

TEST_CASE("field of definition: the lifted lines genuinely need i") {
  const auto lift = paper_lift();
  const auto fod = field_of_definition_check(lift, paper_surface());
  CHECK(fod.not_defined_over_base);
  CHECK_FALSE(fod.plus_defined);
  CHECK_FALSE(fod.minus_defined);

  // Rescaling the equation by i (or any Tower unit) cannot change the verdict.
  auto coeffs = lift_equation_coeffs(lift, +1);
  for (auto& c : coeffs) c = c * TW::imaginary_unit();
  CHECK_FALSE(defined_over_base_field(coeffs));

  // A synthetic equation with mu in Q(sqrt(-7)) is defined over the base.
  const TW mu_base{QE(Rational(0), Rational(1))};  // sqrt(-7), no i part
  std::vector<TW> base_eq{TW(1), mu_base, mu_base, mu_base};
  CHECK(defined_over_base_field(base_eq));

  // An unverified lift is rejected.
  BitangentLift bad = lift;
  bad.mu = bad.mu * TW(2);
  CHECK_THROWS_AS(field_of_definition_check(bad, paper_surface()), std::invalid_argument);
}

TEST_CASE("verify_automorphism examples") {
  const auto geiser = ProjectiveAutomorphism::geiser();
  const auto g = verify_automorphism(geiser, paper_surface());
  CHECK(g.ok);
  CHECK(g.scale == QE(1));

  const auto cyc = ProjectiveAutomorphism::signed_permutation({1, 2, 0}, {1, 1, 1});
  const auto c = verify_automorphism(cyc, paper_quartic());
  CHECK(c.ok);
  CHECK(c.scale == QE(1));

  const auto sgn = ProjectiveAutomorphism::signed_permutation({0, 1, 2}, {-1, 1, 1});
  CHECK(verify_automorphism(sgn, paper_quartic()).ok);

  // x -> x + y is not a symmetry.
  auto shear = ProjectiveAutomorphism::signed_permutation({0, 1, 2}, {1, 1, 1});
  shear.plane[0][1] = QE(1);
  CHECK_FALSE(verify_automorphism(shear, paper_quartic()).ok);

  // singular matrix
  auto sing = shear;
  sing.plane = {{{QE(1), QE(0), QE(0)}, {QE(1), QE(0), QE(0)}, {QE(0), QE(0), QE(1)}}};
  CHECK_THROWS_AS(verify_automorphism(sing, paper_quartic()), std::invalid_argument);
}

TEST_CASE("automorphism checks compose multiplicatively") {
  std::mt19937_64 rng(21);
  const auto vis = visible_symmetry_group(paper_quartic());
  std::uniform_int_distribution<std::size_t> pick(0, vis.elements.size() - 1);
  for (int i = 0; i < 30; ++i) {
    const auto& ma = vis.elements[pick(rng)];
    const auto& mb = vis.elements[pick(rng)];
    auto lift = [](const std::array<std::array<int, 3>, 3>& m) {
      std::array<std::array<QE, 3>, 3> q;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) q[r][c] = QE(m[r][c]);
      return ProjectiveAutomorphism::from_plane(q);
    };
    const auto a = lift(ma), b = lift(mb);
    const auto ca = verify_automorphism(a, paper_quartic());
    const auto cb = verify_automorphism(b, paper_quartic());
    const auto cab = verify_automorphism(a.compose(b), paper_quartic());
    REQUIRE(ca.ok);
    REQUIRE(cb.ok);
    CHECK(cab.ok);
    CHECK(cab.scale == ca.scale * cb.scale);
  }
}

TEST_CASE("matrices parse from text and drive verify_automorphism") {
  const auto cyc = parse_matrix3("0,1,0; 0,0,1; 1,0,0");
  const auto check = verify_automorphism(ProjectiveAutomorphism::from_plane(cyc), paper_quartic());
  CHECK(check.ok);

  const auto stretched = parse_matrix3("1/2 + 1/2*rt, 0, 0; 0, 1, 0; 0, 0, 1");
  CHECK(stretched[0][0] == QE(Rational(1, 2), Rational(1, 2)));
  CHECK_FALSE(
      verify_automorphism(ProjectiveAutomorphism::from_plane(stretched), paper_quartic()).ok);

  CHECK_THROWS_AS(parse_matrix3("1,0;0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix3("1,0,0,0; 0,1,0; 0,0,1"), std::invalid_argument);
}

TEST_CASE("visible symmetry groups") {
  const auto vis = visible_symmetry_group(paper_quartic());
  CHECK(vis.order == 24);
  CHECK(vis.closed);

  const auto fermat = visible_symmetry_group(quartic_of("x^4 + y^4 + z^4"));
  CHECK(fermat.order == 24);  // signed-permutation part only
  CHECK(fermat.closed);

  const auto generic =
      visible_symmetry_group(quartic_of("x^4 + 2*x^3 y + 3*y^4 + 5*z^4 + 7*x z^3 + 11*y^2 z^2"));
  CHECK(generic.order == 1);
}
