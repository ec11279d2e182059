#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "cgm/errors.hpp"

namespace cgm {

// Exact arbitrary-precision rational. Always canonical: reduced to lowest
// terms with a positive denominator. Backed by GMP; no rounding anywhere.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit from integers is intended
    Rational(long num, long den) {
        if (den == 0) fail(errc::degenerate_input, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail(errc::degenerate_input, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Accepts the serialized forms "num" and "num/den" (den > 0).
    static Rational parse(std::string_view s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(static_cast<mpq_class>(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(static_cast<mpq_class>(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(static_cast<mpq_class>(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(static_cast<mpq_class>(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) fail(errc::degenerate_input, "rational division by zero");
        return Rational(static_cast<mpq_class>(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "num/den", with "/den" omitted when den == 1 (e.g. "-3", "1/3").
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

  private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {} // assumed canonical
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { fail(errc::parse, "invalid rational \"" + std::string(s) + "\""); };
    if (s.empty()) bad();
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) bad();
    mpz_class num(std::string(s.substr(0, i)), 10);
    if (i == s.size()) return Rational(num);
    if (s[i] != '/') bad();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i != s.size() || i == den_begin) bad();
    mpz_class den(std::string(s.substr(den_begin)), 10);
    if (den == 0) bad();
    return Rational(num, den);
}

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool same_field(const Rational&, const Rational&) { return true; }

} // namespace cgm
