#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bca {

/// Exact rational number with two reserved infinities.
///
/// Invariant: den > 0 and gcd(|num|, den) == 1 for finite values;
/// den == 0 encodes an infinite endpoint with num in {-1, +1}.
/// Arithmetic is checked through 128-bit intermediates and throws
/// std::overflow_error if a reduced result leaves 64-bit range.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d);

    static Rat pos_inf() { Rat r; r.num = 1; r.den = 0; return r; }
    static Rat neg_inf() { Rat r; r.num = -1; r.den = 0; return r; }

    bool is_finite() const { return den != 0; }
    bool is_pos_inf() const { return den == 0 && num > 0; }
    bool is_neg_inf() const { return den == 0 && num < 0; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    static int cmp(const Rat& a, const Rat& b);

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    /// Renders in lowest terms: "p/q", "p", "inf" or "-inf".
    std::string str() const;
};

Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);
Rat rat_abs(const Rat& a);

/// Largest integer <= a (finite a only).
std::int64_t rat_floor(const Rat& a);
/// Smallest integer >= a (finite a only).
std::int64_t rat_ceil(const Rat& a);

/// Least common multiple of two positive rationals:
/// lcm(a/b, c/d) = lcm(a,c) / gcd(b,d).
Rat rat_lcm(const Rat& a, const Rat& b);

}  // namespace bca
