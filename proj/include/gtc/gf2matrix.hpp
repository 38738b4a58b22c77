#pragma once

#include <cstdint>
#include <vector>

namespace gtc {

// Bit-packed vector over GF(2).
class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      w_[i / 64] |= mask;
    else
      w_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  void xor_with(const Gf2Vec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }
  int weight() const;
  bool is_zero() const;
  int lowest_set() const;  // -1 if zero

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

  friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense bit matrix, row-major.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
      bits_[r * words_ + c / 64] |= mask;
    else
      bits_[r * words_ + c / 64] &= ~mask;
  }
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

  void xor_row(std::size_t dst, std::size_t src) {
    auto* d = row(dst);
    const auto* s = row(src);
    for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
  }
  void swap_rows(std::size_t a, std::size_t b);

  Gf2Vec row_vec(std::size_t r) const;
  void set_row(std::size_t r, const Gf2Vec& v);
  int row_weight(std::size_t r) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// GF(2) row rank via bit-parallel Gaussian elimination (works on a copy).
std::size_t rank_gf2(Gf2Matrix m);

// Basis of the right kernel {v : M v = 0}, free columns in ascending order.
std::vector<Gf2Vec> kernel_basis(const Gf2Matrix& m);

// Incremental row space in echelon form; supports membership reduction.
class Gf2RowSpace {
 public:
  explicit Gf2RowSpace(std::size_t n) : n_(n) {}

  // Reduces v against the current basis (result has no pivot in common).
  Gf2Vec reduce(Gf2Vec v) const;
  // Adds v if independent; returns whether the rank grew.
  bool add(Gf2Vec v);
  bool contains(const Gf2Vec& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<Gf2Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace gtc
