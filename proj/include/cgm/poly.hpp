#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cgm/errors.hpp"

namespace cgm {

// Dense univariate polynomial over a field K. Coefficients are stored lowest
// degree first and kept canonical: no trailing zeros, so the zero polynomial
// has an empty coefficient vector and degree() == -1.
//
// K carries its own field identity (see Fp), so every polynomial keeps one
// zero element of its field around to answer coeff() beyond the degree and to
// build results of the right field.
template <typename K>
class Polynomial {
  public:
    // Zero polynomial over the field of `exemplar`.
    explicit Polynomial(const K& exemplar) : zero_(zero_like(exemplar)) {}

    // `coeffs` is lowest-first and may carry trailing zeros; must be non-empty
    // so the field is known.
    explicit Polynomial(std::vector<K> coeffs) : zero_(zero_like(coeffs.at(0))), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (!same_field(c, zero_)) fail(errc::type_mismatch, "mixed fields in polynomial");
        normalize();
    }

    static Polynomial zero(const K& exemplar) { return Polynomial(exemplar); }
    static Polynomial constant(const K& value) { return Polynomial(std::vector<K>{value}); }
    // x - r
    static Polynomial linear_root(const K& r) { return Polynomial(std::vector<K>{-r, one_like(r)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    const K& field_zero() const { return zero_; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero_;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K leading() const {
        if (c_.empty()) fail(errc::degenerate_input, "leading coefficient of zero polynomial");
        return c_.back();
    }

    K eval(const K& x) const {
        K acc = zero_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        std::vector<K> out;
        std::size_t n = std::max(c_.size(), o.c_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
        return from_raw(zero_, std::move(out));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Polynomial(zero_);
        std::vector<K> out(c_.size() + o.c_.size() - 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        return from_raw(zero_, std::move(out));
    }

    Polynomial operator*(const K& s) const {
        Polynomial r(*this);
        for (auto& c : r.c_) c = c * s;
        r.normalize();
        return r;
    }

    // Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        check(d);
        if (d.is_zero()) fail(errc::degenerate_input, "polynomial division by zero");
        Polynomial q(zero_), r(*this);
        K lc_inv = one_like(zero_) / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            K f = r.leading() * lc_inv;
            // q += f x^k;  r -= f x^k d
            std::vector<K> term(static_cast<std::size_t>(k) + 1, zero_);
            term.back() = f;
            Polynomial t = from_raw(zero_, std::move(term));
            q = q + t;
            r = r - t * d;
        }
        return {q, r};
    }
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(zero_);
        std::vector<K> out;
        out.reserve(c_.size() - 1);
        K k = one_like(zero_);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            out.push_back(c_[i] * k);
            k += one_like(zero_);
        }
        return from_raw(zero_, std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) fail(errc::degenerate_input, "monic form of zero polynomial");
        return *this * (one_like(zero_) / leading());
    }

    bool operator==(const Polynomial& o) const {
        if (!same_field(zero_, o.zero_)) return false;
        return c_ == o.c_;
    }

    // Coefficient list for diagnostics, lowest first: "[1, 0, 2]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str();
        }
        return s + "]";
    }

  private:
    static Polynomial from_raw(const K& exemplar, std::vector<K> coeffs) {
        Polynomial p(exemplar);
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }
    void check(const Polynomial& o) const {
        if (!same_field(zero_, o.zero_)) fail(errc::type_mismatch, "mixed fields in polynomial arithmetic");
    }
    void normalize() {
        while (!c_.empty() && c_.back() == zero_) c_.pop_back();
    }

    K zero_;
    std::vector<K> c_;
};

// Monic gcd; gcd(0, 0) is rejected.
template <typename K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero() && b.is_zero()) fail(errc::degenerate_input, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial<K> r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// Extended Euclid: returns (g, u, v) with u*a + v*b == g and g monic.
template <typename K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> poly_xgcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero()) fail(errc::degenerate_input, "xgcd of two zero polynomials");
    const K z = a.field_zero();
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0 = Polynomial<K>::constant(one_like(z)), s1 = Polynomial<K>(z);
    Polynomial<K> t0 = Polynomial<K>(z), t1 = Polynomial<K>::constant(one_like(z));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        Polynomial<K> s = s0 - q * s1;
        s0 = s1; s1 = s;
        Polynomial<K> t = t0 - q * t1;
        t0 = t1; t1 = t;
    }
    K lc_inv = one_like(z) / r0.leading();
    return {r0 * lc_inv, s0 * lc_inv, t0 * lc_inv};
}

} // namespace cgm
