#pragma once

// Finite matrix-group engine over F_2 and the model W = Z/2 x Sp6(F_2) of the
// Weyl group of E7: breadth-first closure of a generating set, centralizers,
// conjugacy classes, element orders, and a normal-closure simplicity test.

#include "dp2cert/gf2.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace dp2 {

// Element of Z/2 x Sp6(F_2): a central sign and a symplectic 6x6 matrix.
struct WeylElem {
  bool sign = false;
  GF2Mat sp{6};

  WeylElem() : sp(GF2Mat::identity(6)) {}
  WeylElem(bool s, GF2Mat m) : sign(s), sp(std::move(m)) {}

  std::uint64_t key() const { return sp.packed_rows() | (std::uint64_t(sign) << 48); }

  friend WeylElem operator*(const WeylElem& a, const WeylElem& b) {
    return WeylElem(a.sign != b.sign, a.sp * b.sp);
  }
  friend bool operator==(const WeylElem& a, const WeylElem& b) {
    return a.sign == b.sign && a.sp == b.sp;
  }
  friend bool operator!=(const WeylElem& a, const WeylElem& b) { return !(a == b); }
  friend bool operator<(const WeylElem& a, const WeylElem& b) { return a.key() < b.key(); }
};

// Minimal trait bundle the engine needs per element type.
template <class E>
struct GroupOps;

template <>
struct GroupOps<GF2Mat> {
  static GF2Mat identity_like(const GF2Mat& g) { return GF2Mat::identity(g.dim()); }
  static GF2Mat inverse(const GF2Mat& g) {
    auto inv = g.inverse();
    if (!inv) throw std::domain_error("group element not invertible");
    return *inv;
  }
  static std::uint64_t key(const GF2Mat& g) { return g.key(); }
};

template <>
struct GroupOps<WeylElem> {
  static WeylElem identity_like(const WeylElem&) { return WeylElem(); }
  static WeylElem inverse(const WeylElem& g) {
    return WeylElem(g.sign, GroupOps<GF2Mat>::inverse(g.sp));
  }
  static std::uint64_t key(const WeylElem& g) { return g.key(); }
};

// A subgroup given by generators, optionally with its full element list
// (breadth-first order, deterministic for a fixed generator list).
template <class E>
struct Subgroup {
  std::vector<E> generators;
  std::vector<E> elements;

  bool enumerated() const { return !elements.empty(); }
  std::size_t order() const {
    if (!enumerated()) throw std::logic_error("Subgroup: not enumerated");
    return elements.size();
  }
};

inline constexpr std::size_t kOrderGuard = 4'000'000;

template <class E>
Subgroup<E> generate_group(std::vector<E> generators, std::size_t guard = kOrderGuard) {
  if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
  Subgroup<E> g;
  g.generators = generators;

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1 << 16);
  const E id = GroupOps<E>::identity_like(generators.front());
  g.elements.push_back(id);
  seen.insert(GroupOps<E>::key(id));

  std::size_t frontier_begin = 0;
  while (frontier_begin < g.elements.size()) {
    const std::size_t frontier_end = g.elements.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const E& s : generators) {
        E next = g.elements[i] * s;
        if (seen.insert(GroupOps<E>::key(next)).second) {
          if (g.elements.size() >= guard)
            throw std::runtime_error("generate_group: order guard exceeded");
          g.elements.push_back(std::move(next));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return g;
}

template <class E>
Subgroup<E> centralizer(const std::vector<E>& sub_generators, const Subgroup<E>& ambient) {
  if (!ambient.enumerated())
    throw std::invalid_argument("centralizer: ambient group not enumerated");
  Subgroup<E> c;
  for (const E& g : ambient.elements) {
    bool commutes = true;
    for (const E& s : sub_generators) {
      if (!(g * s == s * g)) { commutes = false; break; }
    }
    if (commutes) c.elements.push_back(g);
  }
  c.generators = c.elements;  // the full set certainly generates
  return c;
}

// Orbit of g under conjugation, grown by the ambient generators; returns the
// exact class size.  Cross-checks |class| * |centralizer| = |ambient| at the
// call sites that need it.
template <class E>
std::uint64_t conjugacy_class_size(const E& g, const Subgroup<E>& ambient) {
  if (!ambient.enumerated())
    throw std::invalid_argument("conjugacy_class_size: ambient group not enumerated");
  std::vector<E> orbit{g};
  std::unordered_set<std::uint64_t> seen{GroupOps<E>::key(g)};
  std::vector<std::pair<E, E>> conj;  // (s, s^-1)
  for (const E& s : ambient.generators) conj.emplace_back(s, GroupOps<E>::inverse(s));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& [s, sinv] : conj) {
      E next = s * orbit[i] * sinv;
      if (seen.insert(GroupOps<E>::key(next)).second) orbit.push_back(std::move(next));
    }
  }
  return orbit.size();
}

template <class E>
std::vector<E> conjugacy_class(const E& g, const std::vector<E>& group_generators) {
  std::vector<E> orbit{g};
  std::unordered_set<std::uint64_t> seen{GroupOps<E>::key(g)};
  std::vector<std::pair<E, E>> conj;
  for (const E& s : group_generators) conj.emplace_back(s, GroupOps<E>::inverse(s));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& [s, sinv] : conj) {
      E next = s * orbit[i] * sinv;
      if (seen.insert(GroupOps<E>::key(next)).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

template <class E>
std::uint64_t element_order(const E& g) {
  const E id = GroupOps<E>::identity_like(g);
  E p = g;
  std::uint64_t n = 1;
  while (!(p == id)) {
    p = p * g;
    ++n;
    if (n > 10'000'000) throw std::runtime_error("element_order: runaway");
  }
  return n;
}

// A finite group is simple iff the normal closure of every non-identity
// element is the whole group; the closure of g is generated by its full
// conjugacy class.  Guarded to small orders.
template <class E>
bool is_simple(const Subgroup<E>& group, std::size_t guard = 100'000) {
  if (!group.enumerated()) throw std::invalid_argument("is_simple: group not enumerated");
  if (group.order() > guard) throw std::invalid_argument("is_simple: order guard exceeded");
  if (group.order() == 1) return false;

  const E id = GroupOps<E>::identity_like(group.elements.front());
  std::unordered_set<std::uint64_t> covered;  // elements whose class is already handled
  for (const E& g : group.elements) {
    if (g == id) continue;
    if (covered.count(GroupOps<E>::key(g))) continue;
    std::vector<E> cls = conjugacy_class(g, group.generators);
    for (const E& x : cls) covered.insert(GroupOps<E>::key(x));
    Subgroup<E> closure = generate_group(cls, group.order());
    if (closure.order() != group.order()) return false;
  }
  return true;
}

// ---- the concrete groups of the construction ------------------------------

// Fixed symplectic form: J has identity 3x3 blocks off the diagonal; the
// block-diagonal embedding of GL3(F_2) below preserves exactly this form.
GF2Mat symplectic_form_j();
bool is_symplectic(const GF2Mat& m);

// Symplectic transvection x -> x + <x, v>_J * v for a nonzero vector v
// (bits 0..5 of v).
GF2Mat sp6_transvection(std::uint8_t v);

// Documented generating set of Sp6(F_2); certified post hoc by the order
// count 1,451,520.
std::vector<GF2Mat> sp6_generators();

// GL3(F_2) = PSL3(F_2) generators (transvection + 3-cycle), order 168.
std::vector<GF2Mat> psl32_generators();

// Block-diagonal embedding M -> diag(M, (M^-1)^T) of GL3(F_2) into Sp6(F_2).
GF2Mat embed_psl32(const GF2Mat& m);

// The W(E7) model as a direct product: elements (sign, s) for s in sp6.
Subgroup<WeylElem> weyl_e7_model(const Subgroup<GF2Mat>& sp6);

// Canonical order-7 representative: the companion matrix of x^3 + x + 1,
// embedded block-diagonally.
GF2Mat order7_companion_3x3();
WeylElem order7_weyl_representative();

}  // namespace dp2
