#pragma once

#include <utility>
#include <vector>

#include "severi/rational.hpp"
#include "severi/upoly.hpp"

namespace severi {

/// All rational roots of p with multiplicities, and the root-free
/// cofactor (monic). p must be nonzero.
std::vector<std::pair<Rat, int>> rational_roots(const QUPoly& p, QUPoly* cofactor = nullptr);

/// Monic irreducible factors over Q of a square-free monic polynomial
/// with no rational roots (degree >= 2). Degrees up to 3 are irreducible
/// outright; higher degrees go through Kronecker interpolation.
std::vector<QUPoly> factor_squarefree_rootfree(const QUPoly& p);

/// Full factorization over Q: returns (monic irreducible factor,
/// multiplicity) pairs; the leading coefficient is dropped.
std::vector<std::pair<QUPoly, int>> factor_rational(const QUPoly& p);

bool is_irreducible_q(const QUPoly& p);

} // namespace severi
