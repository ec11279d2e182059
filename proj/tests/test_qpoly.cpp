#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cgm/qpoly.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using cgm::errc;
using cgm::QPoly;
using cgm::Rational;
using cgmtest::fails_with;
using cgmtest::Rng;

namespace {

QPoly qp(std::vector<long> cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

QPoly product(const std::vector<QPoly>& fs, const QPoly& unit) {
    QPoly acc = unit;
    for (const QPoly& f : fs) acc = acc * f;
    return acc;
}

const QPoly kOne = QPoly::constant(Rational(1));

} // namespace

TEST_CASE("compose_shift is substitution") {
    CHECK(cgm::compose_shift(qp({0, 0, 1}), Rational(1)) == qp({1, 2, 1}));
    CHECK(cgm::compose_shift(qp({3}), Rational(7)) == qp({3}));
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        QPoly f = cgmtest::rand_int_qpoly(rng, 4);
        Rational c = cgmtest::rand_rational(rng);
        Rational x = cgmtest::rand_rational(rng);
        CHECK(cgm::compose_shift(f, c).eval(x) == f.eval(x + c));
    }
}

TEST_CASE("squarefree decomposition on fixed shapes") {
    // (x^2+1)^2
    auto d1 = cgm::squarefree_decompose(qp({1, 0, 1}) * qp({1, 0, 1}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].first == qp({1, 0, 1}));
    CHECK(d1[0].second == 2);

    // (x^2+1)(x^2+4) is squarefree: one multiplicity-1 part, the whole thing
    auto d2 = cgm::squarefree_decompose(qp({4, 0, 5, 0, 1}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == qp({4, 0, 5, 0, 1}));
    CHECK(d2[0].second == 1);

    // x^3
    auto d3 = cgm::squarefree_decompose(qp({0, 0, 0, 1}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].first == qp({0, 1}));
    CHECK(d3[0].second == 3);

    // 5 (x+1) x^2: leading coefficient dropped, parts by multiplicity
    auto d4 = cgm::squarefree_decompose(qp({1, 1}) * qp({0, 0, 5}));
    REQUIRE(d4.size() == 2);
    CHECK(d4[0].first == qp({1, 1}));
    CHECK(d4[0].second == 1);
    CHECK(d4[1].first == qp({0, 1}));
    CHECK(d4[1].second == 2);

    CHECK(cgm::squarefree_decompose(qp({7})).empty());
    CHECK(fails_with(errc::degenerate_input, [] { cgm::squarefree_decompose(QPoly(Rational(0))); }));
}

TEST_CASE("squarefree decomposition reconstructs random products") {
    Rng rng(2024);
    int done = 0;
    while (done < 200) {
        QPoly f = cgmtest::rand_int_qpoly(rng, 2);
        QPoly g = cgmtest::rand_int_qpoly(rng, 2);
        if (f.degree() < 1 || g.degree() < 1) continue;
        ++done;
        QPoly prod = f * f * g;
        auto parts = cgm::squarefree_decompose(prod);
        QPoly re = kOne;
        for (auto& [base, mult] : parts) {
            CHECK(base.leading().is_one());
            CHECK(poly_gcd(base, base.derivative()).is_one()); // each part squarefree
            for (int i = 0; i < mult; ++i) re = re * base;
        }
        // pairwise coprime parts
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK(poly_gcd(parts[i].first, parts[j].first).is_one());
        CHECK(re == prod.monic());
        // multiplicities strictly increasing
        for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1].second < parts[i].second);
    }
}

TEST_CASE("rational roots on fixed shapes") {
    auto r1 = cgm::rational_roots(qp({-1, 0, 1}));
    CHECK(r1 == std::vector<Rational>{Rational(-1), Rational(1)});

    // (2x-1)^2 (x+3) = 4x^3 + 8x^2 - 11x + 3: multiplicity preserved, sorted
    auto r2 = cgm::rational_roots(qp({3, -11, 8, 4}));
    CHECK(r2 == std::vector<Rational>{Rational(-3), Rational(1, 2), Rational(1, 2)});

    CHECK(cgm::rational_roots(qp({1, 0, 1})).empty());
    CHECK(cgm::rational_roots(qp({5})).empty());
    auto r3 = cgm::rational_roots(qp({0, 0, 1}));
    CHECK(r3 == std::vector<Rational>{Rational(0), Rational(0)});
    // large prime-free content exercises the divisor pruning
    auto r4 = cgm::rational_roots(qp({30, -31, 10, -1})); // roots 2, 3, 5
    CHECK(r4 == std::vector<Rational>{Rational(2), Rational(3), Rational(5)});
    CHECK(fails_with(errc::degenerate_input, [] { cgm::rational_roots(QPoly(Rational(0))); }));
}

TEST_CASE("rational roots found on random planted products") {
    Rng rng(909);
    for (int t = 0; t < 200; ++t) {
        Rational a = cgmtest::rand_rational(rng);
        Rational b = cgmtest::rand_rational(rng);
        QPoly f = QPoly::linear_root(a) * QPoly::linear_root(b) * qp({1, 0, 1});
        auto roots = cgm::rational_roots(f);
        std::vector<Rational> want{a, b};
        std::sort(want.begin(), want.end());
        CHECK(roots == want);
    }
}

TEST_CASE("factorization of fixed quartics") {
    CHECK(cgm::factor_low_degree(qp({4, 0, 5, 0, 1})) == std::vector<QPoly>{qp({1, 0, 1}), qp({4, 0, 1})});
    CHECK(cgm::factor_low_degree(qp({1, 0, 0, 0, 1})) == std::vector<QPoly>{qp({1, 0, 0, 0, 1})});
    CHECK(cgm::factor_low_degree(qp({-1, 0, 0, 0, 1})) ==
          std::vector<QPoly>{qp({-1, 1}), qp({1, 1}), qp({1, 0, 1})});
    CHECK(cgm::factor_low_degree(qp({1, 1, 1}) * qp({1, 1, 1})) ==
          std::vector<QPoly>{qp({1, 1, 1}), qp({1, 1, 1})});
    CHECK(cgm::factor_low_degree(qp({4, 0, 0, 0, 1})) ==
          std::vector<QPoly>{qp({2, -2, 1}), qp({2, 2, 1})});
}

TEST_CASE("factorization of low degrees and error cases") {
    CHECK(cgm::factor_low_degree(qp({-2, 0, 1})) == std::vector<QPoly>{qp({-2, 0, 1})});
    CHECK(cgm::factor_low_degree(qp({6, 0, 2})) == std::vector<QPoly>{qp({3, 0, 1})}); // monic of 2x^2+6
    CHECK(cgm::factor_low_degree(qp({-6, 11, -6, 1})) ==
          std::vector<QPoly>{qp({-3, 1}), qp({-2, 1}), qp({-1, 1})});
    CHECK(cgm::factor_low_degree(qp({2, 0, 0, 1})) == std::vector<QPoly>{qp({2, 0, 0, 1})});
    CHECK(cgm::factor_low_degree(qp({-1, 1})) == std::vector<QPoly>{qp({-1, 1})});
    CHECK(cgm::factor_low_degree(qp({9})).empty());
    CHECK(fails_with(errc::degenerate_input, [] { cgm::factor_low_degree(QPoly(Rational(0))); }));
    CHECK(fails_with(errc::unsupported_degree, [] { cgm::factor_low_degree(qp({1, 0, 0, 0, 0, 1})); }));
}

TEST_CASE("random quadratics split exactly when the discriminant is a square") {
    Rng rng(31337);
    for (int t = 0; t < 300; ++t) {
        Rational p = cgmtest::rand_rational(rng);
        Rational q = cgmtest::rand_rational(rng);
        QPoly f(std::vector<Rational>{q, p, Rational(1)});
        auto factors = cgm::factor_low_degree(f);
        CHECK(product(factors, kOne) == f);
        bool split = factors.size() == 2;
        CHECK(split == cgmtest::quadratic_has_rational_root(p, q));
    }
}

TEST_CASE("random quartic factorizations agree with the divisor-search oracle") {
    Rng rng(60601);
    int checked_against_oracle = 0;
    for (int t = 0; t < 400; ++t) {
        long p = rng.range(-9, 9), q = rng.range(-9, 9), r = rng.range(-9, 9), s = rng.range(-9, 9);
        QPoly f = qp({s, r, q, p, 1});
        auto factors = cgm::factor_low_degree(f);
        CHECK(product(factors, kOne) == f);
        for (const QPoly& g : factors) {
            CHECK(g.leading().is_one());
            if (g.degree() >= 2) CHECK(cgm::rational_roots(g).empty()); // no missed linear factor
        }
        if (s != 0 && cgm::rational_roots(f).empty()) {
            // rootless integer quartic: reducible iff it splits into two
            // quadratics, which the independent integer search decides
            bool want_split = cgmtest::integer_quartic_splits(p, q, r, s);
            CHECK((factors.size() == 2) == want_split);
            CHECK((factors.size() == 1) == !want_split);
            ++checked_against_oracle;
        }
    }
    CHECK(checked_against_oracle > 200);
}

TEST_CASE("planted quadratic pairs are recovered") {
    Rng rng(414);
    for (int t = 0; t < 200; ++t) {
        // x^2 + ax + b irreducible over Q when a^2 - 4b is not a square
        long a = rng.range(-6, 6), b = rng.range(1, 9);
        long c = rng.range(-6, 6), d = rng.range(1, 9);
        QPoly f1 = qp({b, a, 1}), f2 = qp({d, c, 1});
        if (cgmtest::quadratic_has_rational_root(Rational(a), Rational(b))) continue;
        if (cgmtest::quadratic_has_rational_root(Rational(c), Rational(d))) continue;
        auto factors = cgm::factor_low_degree(f1 * f2);
        REQUIRE(factors.size() == 2);
        CHECK(factors[0] * factors[1] == f1 * f2);
        CHECK(((factors[0] == f1 && factors[1] == f2) || (factors[0] == f2 && factors[1] == f1)));
    }
}

TEST_CASE("sturm counts on the whole line") {
    CHECK(cgm::sturm_real_root_count(qp({1, 0, 1})) == 0);
    CHECK(cgm::sturm_real_root_count(qp({-2, 0, 1})) == 2);
    CHECK(cgm::sturm_real_root_count(qp({0, -1, 0, 1})) == 3); // x^3 - x
    CHECK(cgm::sturm_real_root_count(qp({1, -2, 1})) == 1);    // distinct roots of (x-1)^2
    CHECK(cgm::sturm_real_root_count(qp({4, 0, 5, 0, 1})) == 0);
    CHECK(cgm::sturm_real_root_count(qp({0, 1, 0, 0, 1})) == 2); // x^4 + x
    CHECK(cgm::sturm_real_root_count(qp({7})) == 0);
    CHECK(fails_with(errc::degenerate_input, [] { cgm::sturm_real_root_count(QPoly(Rational(0))); }));
}

TEST_CASE("sturm counts on intervals") {
    QPoly f = qp({-2, 0, 1}); // roots +-sqrt(2)
    auto count = [&](long lo_n, long lo_d, long hi_n, long hi_d) {
        return cgm::sturm_real_root_count(f, std::make_pair(Rational(lo_n, lo_d), Rational(hi_n, hi_d)));
    };
    CHECK(count(0, 1, 2, 1) == 1);
    CHECK(count(-2, 1, 0, 1) == 1);
    CHECK(count(-2, 1, 2, 1) == 2);
    CHECK(count(1, 1, 7, 5) == 0); // 7/5 < sqrt(2)
    CHECK(count(7, 5, 3, 2) == 1); // sqrt(2) in (7/5, 3/2)

    CHECK(fails_with(errc::degenerate_input,
                     [&] { cgm::sturm_real_root_count(f, std::make_pair(Rational(1), Rational(1))); }));
    CHECK(fails_with(errc::degenerate_input,
                     [&] { cgm::sturm_real_root_count(f, std::make_pair(Rational(2), Rational(1))); }));
    CHECK(fails_with(errc::precondition, [] {
        cgm::sturm_real_root_count(qp({-1, 1}), std::make_pair(Rational(1), Rational(2)));
    }));
}

TEST_CASE("sturm agrees with factorization on random low-degree inputs") {
    Rng rng(717);
    int done = 0;
    while (done < 250) {
        QPoly f = cgmtest::rand_int_qpoly(rng, 4);
        if (f.degree() < 1) continue;
        ++done;
        // count distinct real roots from the irreducible factorization:
        // linear factors contribute their root, quadratics contribute 2 or 0
        // by discriminant sign, and a surviving quartic contributes its own
        // Sturm count (no rational data to read it from).
        auto parts = cgm::squarefree_decompose(f);
        std::vector<Rational> seen;
        int irrational = 0;
        for (auto& [base, mult] : parts) {
            for (const QPoly& g : cgm::factor_low_degree(base)) {
                if (g.degree() == 1) {
                    seen.push_back(-g.coeff(0));
                } else if (g.degree() == 2) {
                    Rational disc = g.coeff(1) * g.coeff(1) - Rational(4) * g.coeff(0);
                    if (disc.sign() > 0) irrational += 2;
                } else if (g.degree() == 3) {
                    irrational += cgm::sturm_real_root_count(g); // cubic: 1 or 3, all irrational here
                } else {
                    irrational += cgm::sturm_real_root_count(g);
                }
            }
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        int expected = static_cast<int>(seen.size()) + irrational;
        CHECK(cgm::sturm_real_root_count(f) == expected);
    }
}
