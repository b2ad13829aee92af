#include "fibmm/surd.hpp"

#include <cmath>
#include <cstddef>

namespace fibmm {

int Surd::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: |a| vs |b|*sqrt5, i.e. a^2 vs 5 b^2.
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(5) * b_ * b_;
    if (lhs == rhs) return 0;  // only possible for a = b = 0, handled above
    return lhs > rhs ? sa : sb;
}

Surd Surd::operator/(const Surd& o) const {
    const Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("Surd: division by zero");
    const Surd scaled = *this * o.conj();
    return Surd(scaled.a_ / n, scaled.b_ / n);
}

Surd Surd::pow(unsigned long e) const {
    Surd acc(Rational(1));
    Surd base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

mpz_class Surd::floor() const {
    if (b_.is_zero()) return a_.floor();
    // Bracket with the rational bounds 2 < sqrt5 < 9/4, then bisect;
    // every step is decided by the exact sign test.
    const Rational lo5(2), hi5(9, 4);
    const Rational v_lo = b_.sign() > 0 ? a_ + b_ * lo5 : a_ + b_ * hi5;
    const Rational v_hi = b_.sign() > 0 ? a_ + b_ * hi5 : a_ + b_ * lo5;
    mpz_class lo = v_lo.floor();
    mpz_class hi = v_hi.floor() + 1;
    // lo <= value < hi must hold before bisection starts.
    while ((*this - Surd(Rational(lo))).sign() < 0) --lo;
    while ((*this - Surd(Rational(hi))).sign() >= 0) ++hi;
    while (hi - lo > 1) {
        const mpz_class mid = (lo + hi) / 2;  // floor division safe: lo < hi
        if ((*this - Surd(Rational(mid))).sign() >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string Surd::str() const {
    return "(" + a_.str() + ") + (" + b_.str() + ")*sqrt5";
}

double Surd::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(5.0);
}

Surd dist_nearest_int(const Surd& v) {
    if (v.is_rational()) return Surd(dist_nearest_int(v.a()));
    const Surd f = v - Surd(Rational(v.floor()));  // in [0, 1)
    const Surd g = Surd(Rational(1)) - f;
    return (f - g).sign() <= 0 ? f : g;
}

}  // namespace fibmm
