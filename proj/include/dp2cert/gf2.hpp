#pragma once

// Small square matrices over F_2, packed one row per byte of a uint64_t.
// Dimensions up to 7 so the packed key (rows plus a dimension tag) stays in
// 64 bits; the toolkit uses 3x3, 5x5 and 6x6.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace dp2 {

class GF2Mat {
 public:
  GF2Mat() = default;
  explicit GF2Mat(unsigned n) : n_(check_dim(n)), rows_(0) {}
  GF2Mat(unsigned n, std::uint64_t rows) : n_(check_dim(n)), rows_(rows & row_mask(n)) {}

  static GF2Mat identity(unsigned n) {
    GF2Mat m(n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  unsigned dim() const { return n_; }
  std::uint64_t packed_rows() const { return rows_; }
  std::uint64_t key() const { return rows_ | (std::uint64_t(n_) << 56); }

  std::uint8_t row(unsigned i) const { return static_cast<std::uint8_t>(rows_ >> (8 * i)); }
  bool get(unsigned i, unsigned j) const { return (rows_ >> (8 * i + j)) & 1; }
  void set(unsigned i, unsigned j, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (8 * i + j);
    rows_ = v ? (rows_ | bit) : (rows_ & ~bit);
  }

  friend GF2Mat operator*(const GF2Mat& a, const GF2Mat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GF2Mat: dimension mismatch");
    GF2Mat r(a.n_);
    for (unsigned i = 0; i < a.n_; ++i) {
      std::uint64_t bits = a.row(i);
      std::uint8_t acc = 0;
      while (bits) {
        const unsigned j = static_cast<unsigned>(__builtin_ctzll(bits));
        acc ^= b.row(j);
        bits &= bits - 1;
      }
      r.rows_ |= std::uint64_t(acc) << (8 * i);
    }
    return r;
  }

  GF2Mat transposed() const {
    GF2Mat r(n_);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        if (get(i, j)) r.set(j, i, true);
    return r;
  }

  // Gauss-Jordan over F_2; nullopt when singular.
  std::optional<GF2Mat> inverse() const {
    GF2Mat a = *this;
    GF2Mat inv = identity(n_);
    for (unsigned col = 0; col < n_; ++col) {
      unsigned pivot = n_;
      for (unsigned r = col; r < n_; ++r)
        if (a.get(r, col)) { pivot = r; break; }
      if (pivot == n_) return std::nullopt;
      a.swap_rows(col, pivot);
      inv.swap_rows(col, pivot);
      for (unsigned r = 0; r < n_; ++r) {
        if (r != col && a.get(r, col)) {
          a.xor_row(r, col);
          inv.xor_row(r, col);
        }
      }
    }
    return inv;
  }

  bool invertible() const { return inverse().has_value(); }

  friend bool operator==(const GF2Mat& a, const GF2Mat& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const GF2Mat& a, const GF2Mat& b) { return !(a == b); }
  friend bool operator<(const GF2Mat& a, const GF2Mat& b) { return a.key() < b.key(); }

  std::string to_text() const {
    std::string s;
    for (unsigned i = 0; i < n_; ++i) {
      if (i) s += "/";
      for (unsigned j = 0; j < n_; ++j) s += get(i, j) ? '1' : '0';
    }
    return s;
  }

 private:
  static unsigned check_dim(unsigned n) {
    if (n == 0 || n > 7) throw std::invalid_argument("GF2Mat: dimension must be in [1, 7]");
    return n;
  }
  static std::uint64_t row_mask(unsigned n) {
    std::uint64_t one_row = (std::uint64_t(1) << n) - 1;
    std::uint64_t m = 0;
    for (unsigned i = 0; i < n; ++i) m |= one_row << (8 * i);
    return m;
  }
  void swap_rows(unsigned i, unsigned j) {
    if (i == j) return;
    const std::uint64_t ri = row(i), rj = row(j);
    rows_ &= ~((std::uint64_t(0xff) << (8 * i)) | (std::uint64_t(0xff) << (8 * j)));
    rows_ |= (rj << (8 * i)) | (ri << (8 * j));
  }
  void xor_row(unsigned dst, unsigned src) { rows_ ^= std::uint64_t(row(src)) << (8 * dst); }

  unsigned n_ = 1;
  std::uint64_t rows_ = 0;
};

}  // namespace dp2

template <>
struct std::hash<dp2::GF2Mat> {
  std::size_t operator()(const dp2::GF2Mat& m) const noexcept {
    // splitmix64 finalizer
    std::uint64_t x = m.key();
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};
