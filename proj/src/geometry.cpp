#include "dp2cert/geometry.hpp"

#include "dp2cert/poly_text.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp2 {

namespace {

constexpr std::size_t kSingularPointCap = 8;

std::uint32_t mod_p(const Int& x, std::uint32_t p) {
  Int r = x % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.convert_to<std::uint64_t>());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: not invertible");
  return pow_mod(a, p - 2, p);  // p prime
}

std::uint32_t rational_mod_p(const Rational& q, std::uint32_t p) {
  if (mod_p(den(q), p) == 0)
    throw std::invalid_argument("reduction mod p: denominator divisible by p");
  return static_cast<std::uint32_t>(std::uint64_t(mod_p(num(q), p)) *
                                    inv_mod(mod_p(den(q), p), p) % p);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct ModPTerm {
  std::array<unsigned, 3> e;
  std::uint32_t c;
};

std::vector<ModPTerm> reduce_quartic(const WeightedForm<QE>& f, std::uint32_t p,
                                     std::optional<std::uint32_t> root) {
  std::vector<ModPTerm> out;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t r = rational_mod_p(c.a, p);
    if (c.b != 0) {
      if (!root)
        throw std::invalid_argument("reduction mod p: sqrt(-7) image required");
      r = (r + std::uint64_t(rational_mod_p(c.b, p)) * (*root)) % p;
    }
    if (r % p)
      out.push_back({{m[0], m[1], m[2]}, static_cast<std::uint32_t>(r % p)});
  }
  return out;
}

std::uint32_t eval_mod_p(const std::vector<ModPTerm>& terms,
                         const std::array<std::uint32_t, 3>& pt, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : terms) {
    std::uint64_t v = t.c;
    for (int i = 0; i < 3; ++i)
      for (unsigned e = 0; e < t.e[i]; ++e) v = v * pt[i] % p;
    acc = (acc + v) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::vector<ModPTerm> partial_mod_p(const std::vector<ModPTerm>& terms, int var,
                                    std::uint32_t p) {
  std::vector<ModPTerm> out;
  for (const auto& t : terms) {
    if (t.e[var] == 0) continue;
    std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(t.c) * (t.e[var] % p) % p);
    if (c == 0) continue;
    ModPTerm d = t;
    d.e[var] -= 1;
    d.c = c;
    out.push_back(d);
  }
  return out;
}

ReductionScan scan_one_root(const WeightedForm<QE>& f, std::uint32_t p,
                            std::optional<std::uint32_t> root) {
  ReductionScan scan;
  scan.prime = p;
  scan.root = root;
  auto terms = reduce_quartic(f, p, root);
  std::array<std::vector<ModPTerm>, 3> partials = {
      partial_mod_p(terms, 0, p), partial_mod_p(terms, 1, p), partial_mod_p(terms, 2, p)};

  auto consider = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    ++scan.points_scanned;
    const std::array<std::uint32_t, 3> pt{x, y, z};
    for (int i = 0; i < 3; ++i)
      if (eval_mod_p(partials[i], pt, p) != 0) return;
    if (scan.singular_points.size() < kSingularPointCap) scan.singular_points.push_back(pt);
  };

  for (std::uint32_t y = 0; y < p; ++y)
    for (std::uint32_t z = 0; z < p; ++z) consider(1, y, z);
  for (std::uint32_t z = 0; z < p; ++z) consider(0, 1, z);
  consider(0, 0, 1);

  scan.smooth = scan.singular_points.empty();
  return scan;
}

}  // namespace

TernaryQuartic::TernaryQuartic(WeightedForm<QE> f) : form(std::move(f)) {
  if (form.num_vars() != 3 || form.weights() != std::vector<int>{1, 1, 1})
    throw std::invalid_argument("TernaryQuartic: expected 3 variables of weight 1");
  auto deg = form.weighted_homogeneous_degree();
  if (!deg || *deg != 4)
    throw std::invalid_argument("TernaryQuartic: form must be homogeneous of degree 4");
}

DoubleCoverSurface DoubleCoverSurface::from_quartic(const TernaryQuartic& q) {
  std::vector<std::string> vars{"w"};
  vars.insert(vars.end(), q.form.vars().begin(), q.form.vars().end());
  std::vector<int> weights{2, 1, 1, 1};
  WeightedForm<QE> f(vars, weights);
  f.add_term({2, 0, 0, 0}, QE(1));
  for (const auto& [m, c] : q.form.terms()) f.add_term({0, m[0], m[1], m[2]}, c);
  return DoubleCoverSurface{std::move(f), q};
}

std::optional<std::uint32_t> sqrt_mod(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  for (std::uint32_t s = 0; s < p; ++s)
    if (std::uint64_t(s) * s % p == static_cast<std::uint64_t>(r)) return s;
  return std::nullopt;
}

SmoothnessResult smooth_via_good_reduction(const TernaryQuartic& c, std::uint32_t p,
                                           std::optional<std::uint32_t> sqrt_minus7) {
  if (p < 3 || p % 2 == 0 || !is_prime_u32(p))
    throw std::invalid_argument("smooth_via_good_reduction: p must be an odd prime");
  bool needs_root = false;
  for (const auto& [m, coeff] : c.form.terms())
    if (coeff.b != 0) needs_root = true;

  SmoothnessResult res;
  res.prime = p;
  if (!needs_root) {
    res.scans.push_back(scan_one_root(c.form, p, std::nullopt));
  } else {
    if (!sqrt_minus7)
      throw std::invalid_argument("smooth_via_good_reduction: sqrt(-7) mod p required");
    const std::uint32_t s = *sqrt_minus7 % p;
    if (std::uint64_t(s) * s % p != std::uint64_t((p - 7 % p) % p))
      throw std::invalid_argument("smooth_via_good_reduction: given root has square != -7");
    res.scans.push_back(scan_one_root(c.form, p, s));
    if ((p - s) % p != s) res.scans.push_back(scan_one_root(c.form, p, (p - s) % p));
  }
  for (const auto& sc : res.scans) res.smooth = res.smooth || sc.smooth;
  return res;
}

bool no_small_exact_singularity(const TernaryQuartic& c) {
  const auto fx = c.form.partial(0), fy = c.form.partial(1), fz = c.form.partial(2);
  const Rational vals[3] = {Rational(0), Rational(1), Rational(-1)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d) {
        if (a == 0 && b == 0 && d == 0) continue;
        std::vector<QE> pt{QE(vals[a]), QE(vals[b]), QE(vals[d])};
        if (c.form.eval(pt).is_zero() && fx.eval(pt).is_zero() && fy.eval(pt).is_zero() &&
            fz.eval(pt).is_zero())
          return false;
      }
  return true;
}

namespace {

// Decide b = alpha * (u^2 + q1*u*v + q0*v^2)^2 given the five coefficients of
// a binary quartic with b4 != 0.
struct SquareExtract {
  bool ok = false;
  QE alpha, q1, q0;
};

SquareExtract extract_square_leading(const std::array<QE, 5>& b) {
  SquareExtract r;
  r.alpha = b[4];
  QE inv = b[4].inverse();
  QE m3 = b[3] * inv, m2 = b[2] * inv, m1 = b[1] * inv, m0 = b[0] * inv;
  r.q1 = m3 * QE(Rational(1, 2));
  r.q0 = (m2 - r.q1 * r.q1) * QE(Rational(1, 2));
  r.ok = (m1 == QE(2) * r.q1 * r.q0) && (m0 == r.q0 * r.q0);
  return r;
}

}  // namespace

BitangentCheck is_bitangent(const WeightedForm<QE>& line, const TernaryQuartic& quartic) {
  if (!line.same_context(quartic.form))
    throw std::invalid_argument("is_bitangent: line and quartic contexts differ");
  auto ldeg = line.weighted_homogeneous_degree();
  if (line.is_zero() || !ldeg || *ldeg != 1)
    throw std::invalid_argument("is_bitangent: line must be a nonzero linear form");

  // Pivot: the last variable with nonzero coefficient.
  std::array<QE, 3> lc{QE(0), QE(0), QE(0)};
  for (const auto& [m, c] : line.terms())
    for (int i = 0; i < 3; ++i)
      if (m[i] == 1) lc[i] = c;
  int pivot = -1;
  for (int i = 2; i >= 0; --i)
    if (!lc[i].is_zero() && pivot < 0) pivot = i;

  std::vector<std::string> kept;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) kept.push_back(quartic.form.vars()[i]);
  const std::vector<int> kw{1, 1};

  std::vector<WeightedForm<QE>> assign;
  int slot = 0;
  WeightedForm<QE> pivot_expr(kept, kw);
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    pivot_expr = pivot_expr - WeightedForm<QE>::variable(kept, kw, slot).scaled(lc[i]);
    ++slot;
  }
  pivot_expr = pivot_expr.scaled(lc[pivot].inverse());
  slot = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) {
      assign.push_back(pivot_expr);
    } else {
      assign.push_back(WeightedForm<QE>::variable(kept, kw, slot));
      ++slot;
    }
  }

  BitangentCheck out;
  out.restricted_vars = kept;
  out.restriction = quartic.form.substitute(assign);
  out.q = WeightedForm<QE>(kept, kw);

  if (out.restriction.is_zero()) {
    out.kind = BitangentCheck::Kind::ZeroRestriction;
    return out;
  }

  std::array<QE, 5> b{QE(0), QE(0), QE(0), QE(0), QE(0)};
  for (const auto& [m, c] : out.restriction.terms()) b[m[0]] = c;

  QE q2(0), q1(0), q0(0), alpha(0);
  bool square = false;
  if (!b[4].is_zero()) {
    auto ex = extract_square_leading(b);
    if (ex.ok) { square = true; alpha = ex.alpha; q2 = QE(1); q1 = ex.q1; q0 = ex.q0; }
  } else if (!b[0].is_zero()) {
    auto ex = extract_square_leading({b[4], b[3], b[2], b[1], b[0]});
    if (ex.ok) { square = true; alpha = ex.alpha; q2 = ex.q0; q1 = ex.q1; q0 = QE(1); }
  } else if (b[3].is_zero() && b[1].is_zero() && !b[2].is_zero()) {
    square = true;
    alpha = b[2];
    q2 = QE(0); q1 = QE(1); q0 = QE(0);  // q = u*v
  }

  if (!square) {
    out.kind = BitangentCheck::Kind::NotPerfectSquare;
    return out;
  }

  out.alpha = alpha;
  out.q.add_term({2, 0}, q2);
  out.q.add_term({1, 1}, q1);
  out.q.add_term({0, 2}, q0);

  // Constructive re-check of the factorization.
  if (out.restriction != (out.q * out.q).scaled(alpha)) {
    out.kind = BitangentCheck::Kind::NotPerfectSquare;
    out.q = WeightedForm<QE>(kept, kw);
    return out;
  }

  const QE disc = q1 * q1 - QE(4) * q2 * q0;
  if (disc.is_zero()) {
    out.kind = BitangentCheck::Kind::FourfoldContact;
    return out;
  }
  out.kind = BitangentCheck::Kind::Bitangent;
  out.is_bitangent = true;
  return out;
}

namespace {

// Lift equation w + sign*mu*q as a form over Tower in (w, u, v), weight
// (2,1,1), where (u,v) are the lift's retained plane variables.
WeightedForm<TW> lift_equation_form(const BitangentLift& lift, int sign) {
  std::vector<std::string> vars{"w"};
  vars.insert(vars.end(), lift.q.vars().begin(), lift.q.vars().end());
  WeightedForm<TW> eq(vars, {2, 1, 1});
  eq.add_term({1, 0, 0}, TW(1));
  const TW smu = sign >= 0 ? lift.mu : -lift.mu;
  for (const auto& [m, c] : lift.q.terms()) eq.add_term({0, m[0], m[1]}, smu * TW(c));
  return eq;
}

void validate_lift(const BitangentLift& lift) {
  if (lift.line.num_vars() != 3 || lift.line.is_zero())
    throw std::invalid_argument("malformed lift: line must be a nonzero form in 3 variables");
  auto ldeg = lift.line.weighted_homogeneous_degree();
  if (!ldeg || *ldeg != 1) throw std::invalid_argument("malformed lift: line must be linear");
  auto qdeg = lift.q.weighted_homogeneous_degree();
  if (lift.q.num_vars() != 2 || !qdeg || *qdeg != 2)
    throw std::invalid_argument("malformed lift: q must be a binary quadratic");
}

}  // namespace

bool verify_line_on_surface(const BitangentLift& lift, const DoubleCoverSurface& s) {
  validate_lift(lift);

  std::array<QE, 3> lc{QE(0), QE(0), QE(0)};
  for (const auto& [m, c] : lift.line.terms())
    for (int i = 0; i < 3; ++i)
      if (m[i] == 1) lc[i] = c;
  int pivot = -1;
  for (int i = 2; i >= 0; --i)
    if (!lc[i].is_zero() && pivot < 0) pivot = i;

  // The retained plane variables must be exactly q's variables, in order.
  std::vector<std::string> kept;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) kept.push_back(s.quartic.form.vars()[i]);
  if (kept != lift.q.vars())
    throw std::invalid_argument("malformed lift: q is not in the line's retained variables");

  const auto qtw = convert_form<TW>(lift.q);
  const auto surface = convert_form<TW>(s.form);

  for (int sign : {+1, -1}) {
    // w + sign*mu*q = 0  =>  w = -sign*mu*q
    WeightedForm<TW> w_expr = qtw.scaled(sign > 0 ? -lift.mu : lift.mu);
    WeightedForm<TW> pivot_expr(kept, {1, 1});
    int slot = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == pivot) continue;
      pivot_expr = pivot_expr - WeightedForm<TW>::variable(kept, {1, 1}, slot).scaled(TW(lc[i]));
      ++slot;
    }
    pivot_expr = pivot_expr.scaled(TW(lc[pivot]).inverse());

    std::vector<WeightedForm<TW>> assign;
    assign.push_back(w_expr);
    slot = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == pivot) {
        assign.push_back(pivot_expr);
      } else {
        assign.push_back(WeightedForm<TW>::variable(kept, {1, 1}, slot));
        ++slot;
      }
    }
    if (!surface.substitute(assign).is_zero()) return false;
  }
  return true;
}

bool geiser_swaps_lifts(const BitangentLift& lift) {
  validate_lift(lift);
  const auto plus = lift_equation_form(lift, +1);
  const auto minus = lift_equation_form(lift, -1);

  // Apply w -> -w to the plus equation.
  const auto& vars = plus.vars();
  std::vector<WeightedForm<TW>> geiser;
  geiser.push_back(-WeightedForm<TW>::variable(vars, plus.weights(), 0));
  geiser.push_back(WeightedForm<TW>::variable(vars, plus.weights(), 1));
  geiser.push_back(WeightedForm<TW>::variable(vars, plus.weights(), 2));
  return plus.substitute(geiser) == -minus && minus.substitute(geiser) == -plus;
}

std::vector<TW> lift_equation_coeffs(const BitangentLift& lift, int sign) {
  validate_lift(lift);
  const TW smu = sign >= 0 ? lift.mu : -lift.mu;
  auto coeff = [&](unsigned eu, unsigned ev) {
    auto it = lift.q.terms().find({eu, ev});
    return it == lift.q.terms().end() ? TW(0) : smu * TW(it->second);
  };
  return {TW(1), coeff(2, 0), coeff(1, 1), coeff(0, 2)};
}

bool defined_over_base_field(std::span<const TW> equation_coeffs) {
  const TW* first = nullptr;
  for (const auto& c : equation_coeffs)
    if (!c.is_zero()) { first = &c; break; }
  if (!first) throw std::invalid_argument("defined_over_base_field: zero equation");
  const TW lambda = first->inverse();
  for (const auto& c : equation_coeffs)
    if (!(lambda * c).in_base_field()) return false;
  return true;
}

FieldOfDefinitionResult field_of_definition_check(const BitangentLift& lift,
                                                  const DoubleCoverSurface& s) {
  if (!verify_line_on_surface(lift, s))
    throw std::invalid_argument("field_of_definition_check: lift does not lie on the surface");
  FieldOfDefinitionResult r;
  const auto plus = lift_equation_coeffs(lift, +1);
  const auto minus = lift_equation_coeffs(lift, -1);
  r.plus_defined = defined_over_base_field(plus);
  r.minus_defined = defined_over_base_field(minus);
  r.not_defined_over_base = !r.plus_defined && !r.minus_defined;
  return r;
}

// ---- automorphisms ---------------------------------------------------------

ProjectiveAutomorphism ProjectiveAutomorphism::from_plane(
    const std::array<std::array<QE, 3>, 3>& m) {
  return ProjectiveAutomorphism{m, QE(1)};
}

ProjectiveAutomorphism ProjectiveAutomorphism::geiser() {
  ProjectiveAutomorphism a;
  a.plane = {{{QE(1), QE(0), QE(0)}, {QE(0), QE(1), QE(0)}, {QE(0), QE(0), QE(1)}}};
  a.w_scale = QE(-1);
  return a;
}

ProjectiveAutomorphism ProjectiveAutomorphism::signed_permutation(
    const std::array<int, 3>& perm, const std::array<int, 3>& signs) {
  ProjectiveAutomorphism a;
  a.plane = {{{QE(0), QE(0), QE(0)}, {QE(0), QE(0), QE(0)}, {QE(0), QE(0), QE(0)}}};
  for (int i = 0; i < 3; ++i) a.plane[i][perm[i]] = QE(signs[i]);
  return a;
}

ProjectiveAutomorphism ProjectiveAutomorphism::compose(const ProjectiveAutomorphism& then) const {
  // (this->compose(then))(x) = then(this(x))... matrix product then.plane * plane.
  ProjectiveAutomorphism out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QE acc(0);
      for (int k = 0; k < 3; ++k) acc += then.plane[i][k] * plane[k][j];
      out.plane[i][j] = acc;
    }
  out.w_scale = then.w_scale * w_scale;
  return out;
}

namespace {

QE det3(const std::array<std::array<QE, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

AutomorphismCheck proportionality(const WeightedForm<QE>& image, const WeightedForm<QE>& f) {
  if (f.is_zero()) throw std::invalid_argument("verify_automorphism: zero target form");
  const auto& [m0, c0] = *f.terms().begin();
  auto it = image.terms().find(m0);
  if (it == image.terms().end()) return {false, QE(0)};
  const QE c = it->second / c0;
  if (image == f.scaled(c)) return {true, c};
  return {false, QE(0)};
}

}  // namespace

AutomorphismCheck verify_automorphism(const ProjectiveAutomorphism& aut,
                                      const TernaryQuartic& target) {
  if (det3(aut.plane).is_zero())
    throw std::invalid_argument("verify_automorphism: singular matrix");
  const auto& vars = target.form.vars();
  const auto& w = target.form.weights();
  std::vector<WeightedForm<QE>> assign;
  for (int i = 0; i < 3; ++i) {
    WeightedForm<QE> row(vars, w);
    for (int j = 0; j < 3; ++j)
      row = row + WeightedForm<QE>::variable(vars, w, j).scaled(aut.plane[i][j]);
    assign.push_back(row);
  }
  return proportionality(target.form.substitute(assign), target.form);
}

AutomorphismCheck verify_automorphism(const ProjectiveAutomorphism& aut,
                                      const DoubleCoverSurface& target) {
  if (det3(aut.plane).is_zero() || aut.w_scale.is_zero())
    throw std::invalid_argument("verify_automorphism: singular matrix");
  const auto& vars = target.form.vars();
  const auto& w = target.form.weights();
  std::vector<WeightedForm<QE>> assign;
  assign.push_back(WeightedForm<QE>::variable(vars, w, 0).scaled(aut.w_scale));
  for (int i = 0; i < 3; ++i) {
    WeightedForm<QE> row(vars, w);
    for (int j = 0; j < 3; ++j)
      row = row + WeightedForm<QE>::variable(vars, w, j + 1).scaled(aut.plane[i][j]);
    assign.push_back(row);
  }
  return proportionality(target.form.substitute(assign), target.form);
}

namespace {

using IntMat3 = std::array<std::array<int, 3>, 3>;

IntMat3 canonical_projective(IntMat3 m) {
  for (auto& row : m)
    for (int v : row) {
      if (v > 0) return m;
      if (v < 0) {
        for (auto& r2 : m)
          for (int& x : r2) x = -x;
        return m;
      }
    }
  return m;
}

IntMat3 mul_int3(const IntMat3& a, const IntMat3& b) {
  IntMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int acc = 0;
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  return r;
}

}  // namespace

std::array<std::array<QE, 3>, 3> parse_matrix3(const std::string& text) {
  std::array<std::array<QE, 3>, 3> m;
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == ';') { rows.push_back(cur); cur.clear(); }
    else cur += c;
  }
  rows.push_back(cur);
  if (rows.size() != 3) throw std::invalid_argument("parse_matrix3: expected 3 rows");
  for (int i = 0; i < 3; ++i) {
    std::vector<std::string> entries;
    cur.clear();
    for (char c : rows[i]) {
      if (c == ',') { entries.push_back(cur); cur.clear(); }
      else cur += c;
    }
    entries.push_back(cur);
    if (entries.size() != 3) throw std::invalid_argument("parse_matrix3: expected 3 entries per row");
    for (int j = 0; j < 3; ++j) {
      const auto f = parse_form<QE>(entries[j], {}, {});
      if (f.is_zero()) {
        m[i][j] = QE(0);
      } else {
        m[i][j] = f.terms().begin()->second;
      }
    }
  }
  return m;
}

VisibleSymmetryGroup visible_symmetry_group(const TernaryQuartic& quartic) {
  VisibleSymmetryGroup out;
  std::vector<IntMat3> reps;

  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& pm : perms) {
    for (int bits = 0; bits < 8; ++bits) {
      std::array<int, 3> signs{(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1};
      auto aut = ProjectiveAutomorphism::signed_permutation(pm, signs);
      if (!verify_automorphism(aut, quartic).ok) continue;
      IntMat3 m{};
      for (int i = 0; i < 3; ++i) m[i][pm[i]] = signs[i];
      m = canonical_projective(m);
      if (std::find(reps.begin(), reps.end(), m) == reps.end()) reps.push_back(m);
    }
  }

  out.closed = true;
  for (const auto& a : reps)
    for (const auto& b : reps) {
      IntMat3 p = canonical_projective(mul_int3(a, b));
      if (std::find(reps.begin(), reps.end(), p) == reps.end()) out.closed = false;
    }

  std::sort(reps.begin(), reps.end());
  out.elements = std::move(reps);
  out.order = out.elements.size();
  return out;
}

}  // namespace dp2
