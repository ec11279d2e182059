#include "cgm/qpoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace cgm {

namespace {

const Rational kZero{};
const Rational kOne{1};

// Canonical order for factor lists: degree first, then coefficients from the
// top down. Keeps factorization output byte-stable.
bool factor_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> small, large;
    mpz_class root = sqrt(n);
    for (mpz_class d = 1; d <= root; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            mpz_class q = n / d;
            if (q != d) large.push_back(q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Integer polynomial with the same roots as f: coefficients scaled by the lcm
// of denominators, then divided by their gcd.
std::vector<mpz_class> primitive_integer_form(const QPoly& f) {
    mpz_class l = 1;
    for (int i = 0; i <= f.degree(); ++i) l = lcm(l, f.coeff(i).den());
    std::vector<mpz_class> a;
    a.reserve(static_cast<std::size_t>(f.degree()) + 1);
    mpz_class g = 0;
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class c = f.coeff(i).num() * (l / f.coeff(i).den());
        g = gcd(g, c);
        a.push_back(std::move(c));
    }
    for (auto& c : a) c /= g;
    return a;
}

mpz_class eval_int(const std::vector<mpz_class>& a, long x) {
    mpz_class acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// One rational root of f, or nothing. f nonzero, deg f >= 1.
std::optional<Rational> find_rational_root(const QPoly& f) {
    if (f.coeff(0).is_zero()) return Rational(0);
    std::vector<mpz_class> a = primitive_integer_form(f);
    mpz_class f1 = eval_int(a, 1);
    if (f1 == 0) return Rational(1);
    mpz_class fm1 = eval_int(a, -1);
    if (fm1 == 0) return Rational(-1);
    // Root u/v in lowest terms needs u | a_0 and v | a_n; additionally
    // (u - v) | f(1) and (u + v) | f(-1).
    std::vector<mpz_class> us = positive_divisors(a.front());
    std::vector<mpz_class> vs = positive_divisors(a.back());
    for (const mpz_class& u : us) {
        for (const mpz_class& v : vs) {
            if (gcd(u, v) != 1) continue;
            for (int s : {1, -1}) {
                mpz_class su = s * u;
                if (su - v == 0 || su + v == 0) continue; // +-1 already tried
                if (f1 % (su - v) != 0) continue;
                if (fm1 % (su + v) != 0) continue;
                Rational r(su, v);
                if (f.eval(r).is_zero()) return r;
            }
        }
    }
    return std::nullopt;
}

// True when q >= 0 is the square of a rational; the root comes back in *root.
bool rational_square_root(const Rational& q, Rational* root) {
    if (q.sign() < 0) return false;
    if (mpz_perfect_square_p(q.num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(q.den().get_mpz_t()) == 0) return false;
    *root = Rational(sqrt(q.num()), sqrt(q.den()));
    return true;
}

// Split of a monic depressed quartic y^4 + P y^2 + Q y + R into two monic
// rational quadratics, if one exists.
std::optional<std::pair<QPoly, QPoly>> split_depressed_quartic(const Rational& P, const Rational& Q, const Rational& R) {
    // (y^2 + k y + m)(y^2 - k y + n) matches iff z = k^2 is a root of the
    // resolvent cubic z^3 + 2P z^2 + (P^2 - 4R) z - Q^2.
    QPoly resolvent(std::vector<Rational>{-(Q * Q), P * P - Rational(4) * R, Rational(2) * P, kOne});
    for (const Rational& z : rational_roots(resolvent)) {
        if (z.is_zero()) {
            // k = 0 forces Q = 0 and a biquadratic split y^4 + P y^2 + R =
            // (y^2 + m)(y^2 + n) with m + n = P, m n = R.
            if (!Q.is_zero()) continue;
            Rational d{};
            if (!rational_square_root(P * P - Rational(4) * R, &d)) continue;
            Rational m = (P - d) / Rational(2);
            Rational n = (P + d) / Rational(2);
            return std::make_pair(QPoly(std::vector<Rational>{m, kZero, kOne}),
                                  QPoly(std::vector<Rational>{n, kZero, kOne}));
        }
        Rational k{};
        if (!rational_square_root(z, &k)) continue;
        Rational m = ((P + z) - Q / k) / Rational(2);
        Rational n = ((P + z) + Q / k) / Rational(2);
        if (m * n != R) fail(errc::internal, "resolvent split lost the constant term");
        return std::make_pair(QPoly(std::vector<Rational>{m, k, kOne}),
                              QPoly(std::vector<Rational>{n, -k, kOne}));
    }
    return std::nullopt;
}

int sign_at(const QPoly& f, const Rational& x) { return f.eval(x).sign(); }

int sign_at_pos_inf(const QPoly& f) { return f.leading().sign(); }

int sign_at_neg_inf(const QPoly& f) {
    int s = f.leading().sign();
    return f.degree() % 2 == 0 ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

QPoly compose_shift(const QPoly& f, const Rational& c) {
    // Horner in (x + c).
    QPoly x_plus_c(std::vector<Rational>{c, kOne});
    QPoly acc(kZero);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x_plus_c + QPoly::constant(f.coeff(i));
    return acc;
}

std::vector<std::pair<QPoly, int>> squarefree_decompose(const QPoly& f) {
    if (f.is_zero()) fail(errc::degenerate_input, "squarefree decomposition of zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() == 0) return out;
    QPoly fm = f.monic();
    // Yun: peel the multiplicity-i part off with one gcd per level.
    QPoly g = poly_gcd(fm, fm.derivative());
    QPoly b = fm / g;
    QPoly c = fm.derivative() / g;
    QPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        QPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

std::vector<Rational> rational_roots(const QPoly& f) {
    if (f.is_zero()) fail(errc::degenerate_input, "rational roots of zero polynomial");
    std::vector<Rational> roots;
    QPoly g = f;
    while (g.degree() >= 1) {
        std::optional<Rational> r = find_rational_root(g);
        if (!r) break;
        roots.push_back(*r);
        g = g / QPoly::linear_root(*r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<QPoly> factor_low_degree(const QPoly& f) {
    if (f.is_zero()) fail(errc::degenerate_input, "factorization of zero polynomial");
    if (f.degree() > 4) fail(errc::unsupported_degree, "factorization beyond degree 4");
    std::vector<QPoly> factors;
    QPoly g = f.monic();
    for (const Rational& r : rational_roots(g)) {
        QPoly lin = QPoly::linear_root(r);
        factors.push_back(lin);
        g = g / lin;
    }
    // A rootless quadratic or cubic is irreducible; a rootless quartic can
    // still be a product of two irreducible quadratics.
    if (g.degree() == 2 || g.degree() == 3) {
        factors.push_back(g);
    } else if (g.degree() == 4) {
        Rational shift = g.coeff(3) / Rational(4);
        QPoly h = compose_shift(g, -shift);
        auto split = split_depressed_quartic(h.coeff(2), h.coeff(1), h.coeff(0));
        if (split) {
            factors.push_back(compose_shift(split->first, shift));
            factors.push_back(compose_shift(split->second, shift));
        } else {
            factors.push_back(g);
        }
    } else if (g.degree() == 1) {
        fail(errc::internal, "linear factor survived root stripping");
    }
    std::sort(factors.begin(), factors.end(), factor_less);
    return factors;
}

int sturm_real_root_count(const QPoly& f, std::optional<std::pair<Rational, Rational>> interval) {
    if (f.is_zero()) fail(errc::degenerate_input, "Sturm count of zero polynomial");
    std::vector<QPoly> chain;
    chain.push_back(f);
    QPoly d = f.derivative();
    while (!d.is_zero()) {
        chain.push_back(d);
        QPoly r = -(chain[chain.size() - 2] % chain.back());
        d = r;
    }
    std::vector<int> lo_signs, hi_signs;
    lo_signs.reserve(chain.size());
    hi_signs.reserve(chain.size());
    if (interval) {
        const auto& [lo, hi] = *interval;
        if (lo >= hi) fail(errc::degenerate_input, "empty Sturm interval");
        if (sign_at(f, lo) == 0 || sign_at(f, hi) == 0)
            fail(errc::precondition, "Sturm interval endpoint is a root");
        for (const QPoly& s : chain) {
            lo_signs.push_back(sign_at(s, lo));
            hi_signs.push_back(sign_at(s, hi));
        }
    } else {
        for (const QPoly& s : chain) {
            lo_signs.push_back(sign_at_neg_inf(s));
            hi_signs.push_back(sign_at_pos_inf(s));
        }
    }
    return variations(lo_signs) - variations(hi_signs);
}

} // namespace cgm
