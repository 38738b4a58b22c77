#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "gtc/gf2matrix.hpp"
#include "gtc/laurent.hpp"
#include "gtc/torus.hpp"

namespace gtc {

// Bijection between lattice cosets and indices 0..alpha*beta-1,
// lexicographic in the canonical representative (i, j).
struct CellIndexing {
  TwistedTorus torus;

  std::int64_t index(Exponent p) const {
    Exponent c = reduce_point(torus, p);
    return c.i * torus.alpha + c.j;
  }
  Exponent cell(std::int64_t idx) const { return {idx / torus.alpha, idx % torus.alpha}; }
};

// Generalized toric code: X stabilizers carry (f, g), Z stabilizers the
// antipodes in swapped positions. Two qubits per cell; sublattice-1 qubits
// occupy columns 0..alpha*beta-1, sublattice-2 the next alpha*beta.
struct CssCode {
  LaurentPoly f;
  LaurentPoly g;
  TwistedTorus torus;

  std::int64_t n() const { return torus.qubits(); }
};

std::pair<Gf2Matrix, Gf2Matrix> build_parity_checks(const CssCode& code);

// H_X * H_Z^T == 0 over GF(2). Throws DomainError on column-count mismatch.
bool verify_commutation(const Gf2Matrix& hx, const Gf2Matrix& hz);

std::int64_t k_from_ranks(const CssCode& code);

enum class PauliSite { x_edge1, x_edge2, z_edge1, z_edge2 };

// Syndrome pair (A-sector, B-sector) of a single Pauli at cell `at`,
// reduced to canonical torus representatives.
std::pair<LaurentPoly, LaurentPoly> syndrome_of_pauli(const CssCode& code, PauliSite which,
                                                      Exponent at);

// Plain-text exports; both are byte-stable across platforms.
void write_dense(const Gf2Matrix& m, std::ostream& os);
void write_alist(const Gf2Matrix& m, std::ostream& os);

}  // namespace gtc
