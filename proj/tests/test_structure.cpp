#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cgm/structure.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using cgm::errc;
using cgm::FactorPattern;
using cgm::HardPairOrientation;
using cgm::QMatrix;
using cgm::QPoly;
using cgm::Rational;
using cgmtest::fails_with;
using cgmtest::Rng;

namespace {

QMatrix qm(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long x : row) r.back().emplace_back(x);
    }
    return QMatrix(r);
}

QPoly qp(std::vector<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

QMatrix golden_a() {
    return cgm::direct_sum(cgm::rot_block(Rational(0), Rational(1)),
                           cgm::rot_block(Rational(0), Rational(2)));
}

QMatrix golden_b() { return cgmtest::upper_pair_block(cgm::rot_block(Rational(0), Rational(1))); }

} // namespace

TEST_CASE("classification of the canonical forms") {
    auto ra = cgm::classify(golden_a());
    CHECK(ra.min_poly == qp({4, 0, 5, 0, 1}));
    CHECK(ra.factor_pattern == FactorPattern::two_distinct_irreducible_quadratics);
    CHECK(!ra.has_real_eigenvalue);
    CHECK(ra.diagonalizable_over_C);

    auto rb = cgm::classify(golden_b());
    CHECK(rb.min_poly == qp({1, 0, 2, 0, 1}));
    CHECK(rb.factor_pattern == FactorPattern::irreducible_quadratic_squared);
    CHECK(!rb.has_real_eigenvalue);
    CHECK(!rb.diagonalizable_over_C);

    QMatrix j = cgm::rot_block(Rational(0), Rational(1));
    auto rj = cgm::classify(cgm::direct_sum(j, j));
    CHECK(rj.min_poly == qp({1, 0, 1}));
    CHECK(rj.factor_pattern == FactorPattern::single_irreducible_quadratic);
    CHECK(!rj.has_real_eigenvalue);
    CHECK(rj.diagonalizable_over_C);
}

TEST_CASE("classification of everything else") {
    auto rd = cgm::classify(qm({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}}));
    CHECK(rd.factor_pattern == FactorPattern::other);
    CHECK(rd.has_real_eigenvalue);
    CHECK(rd.diagonalizable_over_C);

    // nilpotent single block: min poly x^4
    QMatrix nil = qm({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    auto rn = cgm::classify(nil);
    CHECK(rn.min_poly == qp({0, 0, 0, 0, 1}));
    CHECK(rn.factor_pattern == FactorPattern::other);
    CHECK(rn.has_real_eigenvalue);
    CHECK(!rn.diagonalizable_over_C);

    // mixed real and complex eigenvalues
    QMatrix mixed = cgm::direct_sum(qm({{1, 0}, {0, -1}}), cgm::rot_block(Rational(0), Rational(1)));
    auto rm = cgm::classify(mixed);
    CHECK(rm.factor_pattern == FactorPattern::other);
    CHECK(rm.has_real_eigenvalue);
    CHECK(rm.diagonalizable_over_C);

    CHECK(cgm::classify(QMatrix::identity(4, Rational(0))).factor_pattern == FactorPattern::other);
    CHECK(fails_with(errc::precondition, [] { cgm::classify(qm({{1, 0}, {0, 1}})); }));
}

TEST_CASE("classification is a similarity invariant") {
    Rng rng(2718);
    for (int t = 0; t < 60; ++t) {
        auto [a, b] = cgmtest::rand_hard_pair(rng);
        QMatrix p = cgmtest::rand_unimodular(rng, 4);
        auto before = cgm::classify(a);
        auto after = cgm::classify(cgm::conjugate(a, p));
        CHECK(before.min_poly == after.min_poly);
        CHECK(before.factor_pattern == after.factor_pattern);
        CHECK(before.has_real_eigenvalue == after.has_real_eigenvalue);
        CHECK(before.diagonalizable_over_C == after.diagonalizable_over_C);
        CHECK(cgm::classify(b).factor_pattern == FactorPattern::irreducible_quadratic_squared);
    }
}

TEST_CASE("hard pair detection") {
    QMatrix a = golden_a(), b = golden_b();
    CHECK(cgm::is_hard_pair(a, b) == HardPairOrientation::first_diagonalizable);
    CHECK(cgm::is_hard_pair(b, a) == HardPairOrientation::second_diagonalizable);
    CHECK(!cgm::is_hard_pair(a, a).has_value());
    CHECK(!cgm::is_hard_pair(b, b).has_value());

    QMatrix j = cgm::rot_block(Rational(0), Rational(1));
    CHECK(cgm::is_hard_pair(cgm::direct_sum(j, j), b) == HardPairOrientation::first_diagonalizable);

    QMatrix d = qm({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}});
    CHECK(!cgm::is_hard_pair(d, b).has_value());
    CHECK(!cgm::is_hard_pair(a, d).has_value());
    CHECK(fails_with(errc::precondition,
                     [&] { cgm::is_hard_pair(QMatrix::identity(4, Rational(0)), b); }));
}

TEST_CASE("projector from coprime factors on the canonical matrix") {
    QMatrix a = golden_a();
    QPoly p1 = qp({1, 0, 1}), p2 = qp({4, 0, 1});
    QMatrix m = cgm::crt_projector(a, p1, p2);
    CHECK(m == qm({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    // swapping the factors gives the complementary projector
    QMatrix m2 = cgm::crt_projector(a, p2, p1);
    CHECK(m + m2 == QMatrix::identity(4, Rational(0)));
    CHECK((m * m2).is_zero());

    // split eigenvalues work too; nothing requires irreducible factors
    QMatrix d = qm({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    CHECK(cgm::crt_projector(d, qp({-1, 1}), qp({-2, 1})) ==
          qm({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("projector rejects bad factorizations") {
    QMatrix a = golden_a();
    CHECK(fails_with(errc::invalid_factorization,
                     [&] { cgm::crt_projector(a, qp({1, 0, 1}), qp({1, 0, 1})); }));
    CHECK(fails_with(errc::invalid_factorization,
                     [&] { cgm::crt_projector(a, qp({1, 0, 1}), qp({9, 0, 1})); }));
    CHECK(fails_with(errc::invalid_factorization,
                     [&] { cgm::crt_projector(golden_b(), qp({1, 0, 1}), qp({1, 0, 1})); }));
}

TEST_CASE("projector properties on random conjugates") {
    Rng rng(31415);
    for (int t = 0; t < 100; ++t) {
        auto [a, b] = cgmtest::rand_hard_pair(rng);
        auto rep = cgm::classify(a);
        if (rep.factor_pattern != FactorPattern::two_distinct_irreducible_quadratics) continue;
        auto factors = cgm::factor_low_degree(rep.min_poly);
        QMatrix m = cgm::crt_projector(a, factors[0], factors[1]);
        CHECK(m * m == m);
        CHECK(cgm::commutes(m, a));
        CHECK(!m.is_scalar());
        CHECK(m.rank() == 2);
        CHECK(m.trace() == Rational(2));
    }
}

TEST_CASE("invariant split projector on the repeated-block form") {
    QMatrix j = cgm::rot_block(Rational(0), Rational(1));
    QMatrix m = cgm::invariant_split_projector(cgm::direct_sum(j, j));
    CHECK(m == qm({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("invariant split projector on random conjugates") {
    Rng rng(161803);
    int done = 0;
    while (done < 100) {
        Rational a = cgmtest::rand_rational(rng), b = cgmtest::rand_nonzero_rational(rng);
        QMatrix block = cgm::rot_block(a, b);
        QMatrix mat = cgm::conjugate(cgm::direct_sum(block, block), cgmtest::rand_unimodular(rng, 4));
        ++done;
        QMatrix m = cgm::invariant_split_projector(mat);
        CHECK(m * m == m);
        CHECK(cgm::commutes(m, mat));
        CHECK(!m.is_scalar());
        CHECK(m.rank() == 2);
        CHECK(m.trace() == Rational(2));
    }
}

TEST_CASE("invariant split projector rejects other shapes") {
    CHECK(fails_with(errc::wrong_case, [] { cgm::invariant_split_projector(golden_a()); }));
    CHECK(fails_with(errc::wrong_case, [] { cgm::invariant_split_projector(golden_b()); }));
    CHECK(fails_with(errc::wrong_case, [] {
        cgm::invariant_split_projector(qm({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
    }));
    CHECK(fails_with(errc::wrong_case,
                     [] { cgm::invariant_split_projector(cgm::rot_block(Rational(0), Rational(1))); }));
}
