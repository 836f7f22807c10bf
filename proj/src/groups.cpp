#include "dp2cert/groups.hpp"

namespace dp2 {

GF2Mat symplectic_form_j() {
  GF2Mat j(6);
  for (unsigned i = 0; i < 3; ++i) {
    j.set(i, i + 3, true);
    j.set(i + 3, i, true);
  }
  return j;
}

bool is_symplectic(const GF2Mat& m) {
  static const GF2Mat j = symplectic_form_j();
  if (m.dim() != 6) return false;
  return m.transposed() * j * m == j;
}

GF2Mat sp6_transvection(std::uint8_t v) {
  v &= 0x3f;
  if (v == 0) throw std::invalid_argument("sp6_transvection: zero vector");
  // J swaps the two 3-bit halves.
  const std::uint8_t jv = static_cast<std::uint8_t>(((v & 7) << 3) | ((v >> 3) & 7));
  GF2Mat m = GF2Mat::identity(6);
  for (unsigned i = 0; i < 6; ++i) {
    if ((v >> i) & 1) {
      for (unsigned j = 0; j < 6; ++j)
        if ((jv >> j) & 1) m.set(i, j, m.get(i, j) ^ 1);
    }
  }
  return m;
}

std::vector<GF2Mat> sp6_generators() {
  // Transvections T_v for a fixed short list of vectors (low bits = e1..e3,
  // high bits = f1..f3).  Completeness is certified by the enumeration count
  // 1,451,520 in the test suite and in the lemma-2.6 certificate.
  static const std::uint8_t vecs[] = {
      0b000001,  // e1
      0b001000,  // f1
      0b000011,  // e1+e2
      0b011000,  // f1+f2
      0b000110,  // e2+e3
      0b110000,  // f2+f3
      0b001001,  // e1+f1
      0b010011,  // e1+e2+f2
  };
  std::vector<GF2Mat> out;
  for (auto v : vecs) out.push_back(sp6_transvection(v));
  return out;
}

std::vector<GF2Mat> psl32_generators() {
  GF2Mat t = GF2Mat::identity(3);
  t.set(0, 1, true);  // x -> x + y
  GF2Mat c(3);
  c.set(0, 2, true);
  c.set(1, 0, true);
  c.set(2, 1, true);  // 3-cycle of basis vectors
  return {t, c};
}

GF2Mat embed_psl32(const GF2Mat& m) {
  if (m.dim() != 3) throw std::invalid_argument("embed_psl32: expected a 3x3 matrix");
  auto inv = m.inverse();
  if (!inv) throw std::invalid_argument("embed_psl32: singular matrix");
  const GF2Mat mt = inv->transposed();
  GF2Mat out(6);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      if (m.get(i, j)) out.set(i, j, true);
      if (mt.get(i, j)) out.set(i + 3, j + 3, true);
    }
  return out;
}

Subgroup<WeylElem> weyl_e7_model(const Subgroup<GF2Mat>& sp6) {
  if (!sp6.enumerated()) throw std::invalid_argument("weyl_e7_model: sp6 not enumerated");
  Subgroup<WeylElem> w;
  for (const GF2Mat& g : sp6.generators) w.generators.emplace_back(false, g);
  w.generators.emplace_back(true, GF2Mat::identity(6));
  w.elements.reserve(2 * sp6.elements.size());
  for (const GF2Mat& g : sp6.elements) {
    w.elements.emplace_back(false, g);
    w.elements.emplace_back(true, g);
  }
  return w;
}

GF2Mat order7_companion_3x3() {
  // Multiplication by x on F_2[x]/(x^3 + x + 1) in the basis {1, x, x^2}.
  GF2Mat c(3);
  c.set(0, 2, true);
  c.set(1, 0, true);
  c.set(1, 2, true);
  c.set(2, 1, true);
  return c;
}

WeylElem order7_weyl_representative() {
  return WeylElem(false, embed_psl32(order7_companion_3x3()));
}

}  // namespace dp2
