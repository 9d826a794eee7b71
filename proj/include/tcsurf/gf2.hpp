#pragma once

#include <cstdint>

namespace tcsurf {

/// Scalar of the two-element field: addition is XOR, multiplication is AND.
struct Gf2 {
    std::uint8_t v = 0;

    constexpr Gf2() = default;
    constexpr Gf2(int n) : v(static_cast<std::uint8_t>(n & 1)) {}

    constexpr bool isZero() const { return v == 0; }

    friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.v ^ b.v); }
    friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return Gf2(a.v ^ b.v); }
    constexpr Gf2 operator-() const { return *this; }
    friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.v & b.v); }
    Gf2& operator+=(Gf2 o) {
        v ^= o.v;
        return *this;
    }
    friend constexpr bool operator==(Gf2 a, Gf2 b) { return a.v == b.v; }
};

inline bool coeffIsZero(int c) { return c == 0; }
inline bool coeffIsZero(long long c) { return c == 0; }
inline bool coeffIsZero(Gf2 c) { return c.isZero(); }

inline int coeffToInt(int c) { return c; }
inline int coeffToInt(long long c) { return static_cast<int>(c); }
inline int coeffToInt(Gf2 c) { return c.v; }

} // namespace tcsurf
