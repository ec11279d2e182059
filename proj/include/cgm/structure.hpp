#pragma once

#include <optional>

#include "cgm/matrix.hpp"
#include "cgm/qpoly.hpp"

namespace cgm {

using QMatrix = Matrix<Rational>;

enum class FactorPattern {
    single_irreducible_quadratic,
    two_distinct_irreducible_quadratics,
    irreducible_quadratic_squared,
    other,
};

const char* factor_pattern_name(FactorPattern p);

// Eigenstructure summary of a 4x4 rational matrix, read off the minimal
// polynomial's factorization over Q.
struct StructureReport {
    QPoly min_poly;
    FactorPattern factor_pattern;
    bool has_real_eigenvalue;
    bool diagonalizable_over_C;
};

StructureReport classify(const QMatrix& a);

// Which side of a pair is diagonalizable over C with the other having an
// irreducible-quadratic-squared minimal polynomial. Empty when the pair does
// not have that shape.
enum class HardPairOrientation { first_diagonalizable, second_diagonalizable };
std::optional<HardPairOrientation> is_hard_pair(const QMatrix& a, const QMatrix& b);

// Spectral projector as a polynomial in A: with min_poly(A) = p1*p2 coprime,
// returns M = f(A) where f = 0 mod p1 and f = 1 mod p2. M is idempotent,
// commutes with A, and is non-scalar.
QMatrix crt_projector(const QMatrix& a, const QPoly& p1, const QPoly& p2);

// Projector for the repeated-quadratic case (min poly one irreducible
// quadratic): splits Q^4 into two 2-dimensional A-invariant subspaces
// span(e1, A e1) and span(w, A w) for the first workable standard basis
// vector w, and projects onto the second along the first.
QMatrix invariant_split_projector(const QMatrix& a);

} // namespace cgm
