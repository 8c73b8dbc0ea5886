#include "bca/rational.hpp"

#include <numeric>

namespace bca {

namespace {

using I128 = __int128;

std::int64_t clamp64(I128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rat make_reduced(I128 n, I128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    I128 an = n < 0 ? -n : n;
    I128 g = 1;
    {
        I128 x = an, y = d;
        while (y != 0) { I128 t = x % y; x = y; y = t; }
        g = x == 0 ? 1 : x;
    }
    Rat r;
    r.num = clamp64(n / g);
    r.den = clamp64(d / g);
    return r;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    Rat r = make_reduced(n, d);
    num = r.num;
    den = r.den;
}

int Rat::cmp(const Rat& a, const Rat& b) {
    if (a.den == 0 || b.den == 0) {
        // infinities compare by sign; equal infinities are equal
        int sa = a.den == 0 ? (a.num > 0 ? 2 : -2) : 0;
        int sb = b.den == 0 ? (b.num > 0 ? 2 : -2) : 0;
        if (a.den == 0 && b.den == 0) return sa < sb ? -1 : (sa > sb ? 1 : 0);
        if (a.den == 0) return sa > 0 ? 1 : -1;
        return sb > 0 ? -1 : 1;
    }
    I128 lhs = I128(a.num) * b.den;
    I128 rhs = I128(b.num) * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
}

Rat operator+(const Rat& a, const Rat& b) {
    if (!a.is_finite() || !b.is_finite()) {
        if (a.is_finite()) return b;
        if (b.is_finite()) return a;
        if (a.num == b.num) return a;
        throw std::domain_error("inf + -inf");
    }
    return make_reduced(I128(a.num) * b.den + I128(b.num) * a.den,
                        I128(a.den) * b.den);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    if (!a.is_finite() || !b.is_finite()) {
        int sa = Rat::cmp(a, Rat(0)), sb = Rat::cmp(b, Rat(0));
        if (sa == 0 || sb == 0) throw std::domain_error("0 * inf");
        return sa * sb > 0 ? Rat::pos_inf() : Rat::neg_inf();
    }
    return make_reduced(I128(a.num) * b.num, I128(a.den) * b.den);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (!b.is_finite()) {
        if (!a.is_finite()) throw std::domain_error("inf / inf");
        return Rat(0);
    }
    if (b.num == 0) throw std::domain_error("division by zero");
    if (!a.is_finite())
        return (a.num > 0) == (b.num > 0) ? Rat::pos_inf() : Rat::neg_inf();
    return make_reduced(I128(a.num) * b.den, I128(a.den) * b.num);
}

std::string Rat::str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }
Rat rat_abs(const Rat& a) { return a < Rat(0) ? -a : a; }

std::int64_t rat_floor(const Rat& a) {
    if (!a.is_finite()) throw std::domain_error("floor of infinity");
    std::int64_t q = a.num / a.den;
    if (a.num % a.den != 0 && a.num < 0) --q;
    return q;
}

std::int64_t rat_ceil(const Rat& a) { return -rat_floor(-a); }

Rat rat_lcm(const Rat& a, const Rat& b) {
    if (!(a > Rat(0)) || !(b > Rat(0)))
        throw std::invalid_argument("lcm of non-positive rationals");
    std::int64_t l = std::lcm(a.num, b.num);
    std::int64_t g = std::gcd(a.den, b.den);
    return Rat(l, g);
}

}  // namespace bca
