#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "rookmaze/core.hpp"

namespace rookmaze {

using Rational = mpq_class;

// Integers modulo a prime P.
template <std::uint32_t P>
class Zp {
public:
    static constexpr std::uint32_t modulus = P;

    Zp() = default;
    Zp(long long x) : v_(static_cast<std::uint32_t>(((x % static_cast<long long>(P)) + P) % P)) {}

    std::uint32_t value() const { return v_; }

    Zp operator+(Zp o) const { return raw((v_ + o.v_) % P); }
    Zp operator-(Zp o) const { return raw((v_ + P - o.v_) % P); }
    Zp operator*(Zp o) const { return raw(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % P)); }
    Zp operator/(Zp o) const { return *this * o.inverse(); }
    Zp operator-() const { return raw((P - v_) % P); }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }
    bool operator==(const Zp&) const = default;

    Zp inverse() const {
        if (v_ == 0) throw DomainError("division by zero in prime field");
        std::uint64_t result = 1, base = v_, e = P - 2;
        while (e) {
            if (e & 1) result = result * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(result));
    }

    friend std::ostream& operator<<(std::ostream& os, Zp z) { return os << z.v_; }

private:
    static Zp raw(std::uint32_t v) {
        Zp z;
        z.v_ = v;
        return z;
    }
    std::uint32_t v_ = 0;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <std::uint32_t P>
bool is_zero(Zp<P> x) {
    return x.value() == 0;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }
template <std::uint32_t P>
std::string to_string(Zp<P> x) {
    return std::to_string(x.value());
}

// Accepts "a", "-a", "a/b". Throws DomainError otherwise.
Rational parse_rational(const std::string& s);

}  // namespace rookmaze
