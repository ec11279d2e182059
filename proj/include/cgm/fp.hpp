#pragma once

#include <cstdint>
#include <string>

#include "cgm/errors.hpp"

namespace cgm {

// Element of the prime field F_p. The modulus travels with each element so
// generic code over an arbitrary field stays modulus-agnostic; mixing moduli
// in one operation is a type error, reported as such.
class Fp {
  public:
    Fp(std::uint64_t value, std::uint32_t p) : p_(p) {
        if (p < 2) fail(errc::degenerate_input, "modulus must be at least 2");
        v_ = static_cast<std::uint32_t>(value % p);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(static_cast<std::uint64_t>(v_) * o.v_ % p_, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
    Fp& operator/=(const Fp& o) { *this = *this / o; return *this; }

    Fp inverse() const {
        if (v_ == 0) fail(errc::degenerate_input, "inverse of zero in F_p");
        // Extended Euclid on (v, p); p prime so the gcd is 1.
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

    std::string str() const { return std::to_string(v_); }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) fail(errc::type_mismatch, "mixed moduli in F_p arithmetic");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline bool same_field(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }

} // namespace cgm
