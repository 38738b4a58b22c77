#include "gtc/gf2matrix.hpp"

#include <algorithm>
#include <bit>

namespace gtc {

int Gf2Vec::weight() const {
  int w = 0;
  for (auto x : w_) w += std::popcount(x);
  return w;
}

bool Gf2Vec::is_zero() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

int Gf2Vec::lowest_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < words_; ++i) std::swap(bits_[a * words_ + i], bits_[b * words_ + i]);
}

Gf2Vec Gf2Matrix::row_vec(std::size_t r) const {
  Gf2Vec v(cols_);
  std::copy(row(r), row(r) + words_, v.words().begin());
  return v;
}

void Gf2Matrix::set_row(std::size_t r, const Gf2Vec& v) {
  std::copy(v.words().begin(), v.words().end(), row(r));
}

int Gf2Matrix::row_weight(std::size_t r) const {
  int w = 0;
  for (std::size_t i = 0; i < words_; ++i) w += std::popcount(row(r)[i]);
  return w;
}

std::size_t rank_gf2(Gf2Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = pivot + 1; i < m.rows(); ++i)
      if (m.get(i, c)) m.xor_row(i, r);
    ++r;
  }
  return r;
}

std::vector<Gf2Vec> kernel_basis(const Gf2Matrix& m) {
  Gf2Matrix a = m;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a.get(i, c)) a.xor_row(i, r);
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;

  std::vector<Gf2Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vec v(a.cols());
    v.set(f, true);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (a.get(i, f)) v.set(static_cast<std::size_t>(pivot_col[i]), true);
    basis.push_back(std::move(v));
  }
  return basis;
}

Gf2Vec Gf2RowSpace::reduce(Gf2Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(static_cast<std::size_t>(pivots_[i]))) v.xor_with(rows_[i]);
  return v;
}

bool Gf2RowSpace::add(Gf2Vec v) {
  v = reduce(std::move(v));
  int p = v.lowest_set();
  if (p < 0) return false;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace gtc
