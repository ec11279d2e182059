#include "cgm/structure.hpp"

namespace cgm {

namespace {

const Rational kOne{1};

bool is_squarefree(const QPoly& f) {
    if (f.degree() <= 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

QPoly squarefree_part(const QPoly& f) {
    QPoly out = QPoly::constant(kOne);
    for (const auto& [factor, mult] : squarefree_decompose(f)) out = out * factor;
    return out;
}

bool plays_diagonalizable_role(const StructureReport& r) {
    return (r.factor_pattern == FactorPattern::single_irreducible_quadratic ||
            r.factor_pattern == FactorPattern::two_distinct_irreducible_quadratics) &&
           !r.has_real_eigenvalue && r.diagonalizable_over_C;
}

bool plays_squared_role(const StructureReport& r) {
    return r.factor_pattern == FactorPattern::irreducible_quadratic_squared && !r.has_real_eigenvalue;
}

} // namespace

const char* factor_pattern_name(FactorPattern p) {
    switch (p) {
        case FactorPattern::single_irreducible_quadratic: return "single-irreducible-quadratic";
        case FactorPattern::two_distinct_irreducible_quadratics: return "two-distinct-irreducible-quadratics";
        case FactorPattern::irreducible_quadratic_squared: return "irreducible-quadratic-squared";
        case FactorPattern::other: return "other";
    }
    fail(errc::internal, "unknown factor pattern");
}

StructureReport classify(const QMatrix& a) {
    if (a.rows() != 4 || a.cols() != 4)
        fail(errc::precondition, "classification is defined for 4x4 matrices");
    StructureReport r{a.min_poly(), FactorPattern::other, false, false};
    std::vector<QPoly> factors = factor_low_degree(r.min_poly);
    if (factors.size() == 1 && factors[0].degree() == 2) {
        r.factor_pattern = FactorPattern::single_irreducible_quadratic;
    } else if (factors.size() == 2 && factors[0].degree() == 2 && factors[1].degree() == 2) {
        r.factor_pattern = factors[0] == factors[1] ? FactorPattern::irreducible_quadratic_squared
                                                    : FactorPattern::two_distinct_irreducible_quadratics;
    }
    r.diagonalizable_over_C = is_squarefree(r.min_poly);
    r.has_real_eigenvalue = sturm_real_root_count(squarefree_part(a.char_poly())) > 0;
    return r;
}

std::optional<HardPairOrientation> is_hard_pair(const QMatrix& a, const QMatrix& b) {
    if (a.is_scalar() || b.is_scalar()) fail(errc::precondition, "hard-pair test needs non-scalar matrices");
    StructureReport ra = classify(a);
    StructureReport rb = classify(b);
    if (plays_diagonalizable_role(ra) && plays_squared_role(rb)) return HardPairOrientation::first_diagonalizable;
    if (plays_diagonalizable_role(rb) && plays_squared_role(ra)) return HardPairOrientation::second_diagonalizable;
    return std::nullopt;
}

QMatrix crt_projector(const QMatrix& a, const QPoly& p1, const QPoly& p2) {
    auto [g, u, v] = poly_xgcd(p1, p2);
    if (g.degree() != 0) fail(errc::invalid_factorization, "projector factors are not coprime");
    if (a.min_poly() != (p1 * p2).monic())
        fail(errc::invalid_factorization, "factors do not multiply to the minimal polynomial");
    // u*p1 + v*p2 = 1, so f = u*p1 is 0 mod p1 and 1 mod p2.
    QMatrix m = eval_at_matrix(u * p1, a);
    if (!(m * m == m) || !commutes(m, a) || m.is_zero() || m == QMatrix::identity(a.rows(), a.field_exemplar()))
        fail(errc::internal, "projector postcondition failed");
    return m;
}

QMatrix invariant_split_projector(const QMatrix& a) {
    if (a.rows() != 4 || a.cols() != 4)
        fail(errc::wrong_case, "invariant split is defined for 4x4 matrices");
    QPoly mp = a.min_poly();
    if (mp.degree() != 2 || !rational_roots(mp).empty())
        fail(errc::wrong_case, "invariant split needs an irreducible quadratic minimal polynomial");
    const Rational z{};
    QMatrix v = QMatrix::zero(4, 1, z);
    v.at(0, 0) = kOne;
    QMatrix av = a * v;
    for (int i = 1; i < 4; ++i) {
        QMatrix w = QMatrix::zero(4, 1, z);
        w.at(i, 0) = kOne;
        QMatrix p = QMatrix::from_columns({v, av, w, a * w});
        if (p.rank() != 4) continue;
        QMatrix d = QMatrix::zero(4, 4, z);
        d.at(2, 2) = kOne;
        d.at(3, 3) = kOne;
        QMatrix m = p * d * p.inverse();
        if (!(m * m == m) || !commutes(m, a) || m.is_scalar())
            fail(errc::internal, "invariant split postcondition failed");
        return m;
    }
    fail(errc::internal, "no standard basis vector completes the invariant split");
}

} // namespace cgm
