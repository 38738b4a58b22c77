#include "gtc/css_lattice.hpp"

#include <bit>
#include <ostream>
#include <vector>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

// Places p's support, translated by the cell and reduced, into the given
// column block of row r. Folded terms cancel in parity, matching the group
// algebra semantics.
void place(Gf2Matrix& m, const CellIndexing& ix, std::size_t r, const LaurentPoly& p,
           Exponent cell, std::size_t block_offset) {
  for (const auto& t : p.support()) {
    std::int64_t col = ix.index({cell.i + t.i, cell.j + t.j});
    m.flip(r, block_offset + static_cast<std::size_t>(col));
  }
}

}  // namespace

std::pair<Gf2Matrix, Gf2Matrix> build_parity_checks(const CssCode& code) {
  const CellIndexing ix{code.torus};
  const auto cells = static_cast<std::size_t>(code.torus.cells());
  Gf2Matrix hx(cells, 2 * cells), hz(cells, 2 * cells);
  const LaurentPoly gbar = antipode(code.g);
  const LaurentPoly fbar = antipode(code.f);
  for (std::size_t r = 0; r < cells; ++r) {
    Exponent cell = ix.cell(static_cast<std::int64_t>(r));
    place(hx, ix, r, code.f, cell, 0);
    place(hx, ix, r, code.g, cell, cells);
    place(hz, ix, r, gbar, cell, 0);
    place(hz, ix, r, fbar, cell, cells);
  }
  return {std::move(hx), std::move(hz)};
}

bool verify_commutation(const Gf2Matrix& hx, const Gf2Matrix& hz) {
  if (hx.cols() != hz.cols()) throw DomainError("verify_commutation: column count mismatch");
  const std::size_t words = hx.words_per_row();
  for (std::size_t a = 0; a < hx.rows(); ++a) {
    const auto* ra = hx.row(a);
    for (std::size_t b = 0; b < hz.rows(); ++b) {
      const auto* rb = hz.row(b);
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < words; ++w) acc ^= ra[w] & rb[w];
      if (std::popcount(acc) % 2 != 0) return false;
    }
  }
  return true;
}

std::int64_t k_from_ranks(const CssCode& code) {
  auto [hx, hz] = build_parity_checks(code);
  return code.n() - static_cast<std::int64_t>(rank_gf2(hx)) -
         static_cast<std::int64_t>(rank_gf2(hz));
}

std::pair<LaurentPoly, LaurentPoly> syndrome_of_pauli(const CssCode& code, PauliSite which,
                                                      Exponent at) {
  LaurentPoly base;
  bool b_sector = false;
  switch (which) {
    case PauliSite::x_edge1: base = code.g; b_sector = true; break;
    case PauliSite::x_edge2: base = code.f; b_sector = true; break;
    case PauliSite::z_edge1: base = antipode(code.f); break;
    case PauliSite::z_edge2: base = antipode(code.g); break;
  }
  std::vector<Exponent> reduced;
  for (const auto& t : base.support())
    reduced.push_back(reduce_point(code.torus, {t.i + at.i, t.j + at.j}));
  LaurentPoly s(std::move(reduced));
  if (b_sector) return {LaurentPoly::zero(), s};
  return {s, LaurentPoly::zero()};
}

void write_dense(const Gf2Matrix& m, std::ostream& os) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (m.get(r, c) ? '1' : '0');
    os << '\n';
  }
}

void write_alist(const Gf2Matrix& m, std::ostream& os) {
  const std::size_t n = m.cols(), rows = m.rows();
  std::vector<std::vector<std::size_t>> col_idx(n), row_idx(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m.get(r, c)) {
        col_idx[c].push_back(r + 1);
        row_idx[r].push_back(c + 1);
      }
  std::size_t max_col = 0, max_row = 0;
  for (const auto& v : col_idx) max_col = std::max(max_col, v.size());
  for (const auto& v : row_idx) max_row = std::max(max_row, v.size());

  os << n << ' ' << rows << '\n';
  os << max_col << ' ' << max_row << '\n';
  for (std::size_t c = 0; c < n; ++c) os << col_idx[c].size() << (c + 1 < n ? ' ' : '\n');
  for (std::size_t r = 0; r < rows; ++r) os << row_idx[r].size() << (r + 1 < rows ? ' ' : '\n');
  for (const auto& v : col_idx) {
    for (std::size_t i = 0; i < max_col; ++i)
      os << (i < v.size() ? v[i] : 0) << (i + 1 < max_col ? ' ' : '\n');
  }
  for (const auto& v : row_idx) {
    for (std::size_t i = 0; i < max_row; ++i)
      os << (i < v.size() ? v[i] : 0) << (i + 1 < max_row ? ' ' : '\n');
  }
}

}  // namespace gtc
