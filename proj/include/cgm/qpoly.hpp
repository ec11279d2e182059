#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cgm/poly.hpp"
#include "cgm/rational.hpp"

namespace cgm {

using QPoly = Polynomial<Rational>;

// Yun decomposition: f = lc * prod factor^multiplicity with each factor monic,
// squarefree, and the factors pairwise coprime. Trivial (constant) factors are
// omitted; multiplicities come back in increasing order.
std::vector<std::pair<QPoly, int>> squarefree_decompose(const QPoly& f);

// All rational roots of f, with multiplicity, sorted ascending.
std::vector<Rational> rational_roots(const QPoly& f);

// Full irreducible factorization over Q for deg f <= 4. Returns monic
// irreducible factors with multiplicity (repeated entries), sorted by degree
// then coefficients, so f = lc(f) * product of the returned factors.
//
// Method: strip rational roots; a rootless quadratic or cubic remainder is
// irreducible; a rootless quartic splits into two quadratics iff its resolvent
// cubic has a rational root that is a rational square (or the biquadratic
// discriminant is a rational square).
std::vector<QPoly> factor_low_degree(const QPoly& f);

// Number of distinct real roots of f, on the whole line or in (lo, hi).
// Endpoints must not be roots of f.
int sturm_real_root_count(const QPoly& f, std::optional<std::pair<Rational, Rational>> interval = std::nullopt);

// f(x + c); used to depress quartics and handy in tests.
QPoly compose_shift(const QPoly& f, const Rational& c);

} // namespace cgm
