#pragma once

#include <string>
#include <string_view>

#include "fibmm/rational.hpp"

namespace fibmm {

/// Element a + b*sqrt(5) of the real quadratic field Q(sqrt5), with
/// rational a, b. The representation is unique, so equality is
/// componentwise. Sign determination and flooring are exact and never
/// consult floating point.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& rational) : a_(rational) {}  // NOLINT: implicit by design
    Surd(long n) : a_(Rational(n)) {}
    Surd(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static Surd sqrt5() { return Surd(Rational(0), Rational(1)); }
    /// The golden ratio (1 + sqrt5)/2.
    static Surd golden_ratio() { return Surd(Rational(1, 2), Rational(1, 2)); }

    static Surd parse(std::string_view text);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign in {-1, 0, +1}, decided by comparing a^2 with 5 b^2.
    int sign() const;

    /// Galois conjugate a - b*sqrt5.
    Surd conj() const { return Surd(a_, -b_); }
    /// Field norm a^2 - 5 b^2 (rational).
    Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

    Surd operator-() const { return Surd(-a_, -b_); }
    Surd operator+(const Surd& o) const { return Surd(a_ + o.a_, b_ + o.b_); }
    Surd operator-(const Surd& o) const { return Surd(a_ - o.a_, b_ - o.b_); }
    Surd operator*(const Surd& o) const {
        return Surd(a_ * o.a_ + Rational(5) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    Surd operator/(const Surd& o) const;

    Surd pow(unsigned long e) const;

    bool operator==(const Surd& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Surd& o) const { return (*this - o).sign() >= 0; }

    /// Largest integer <= value, found by exact binary search.
    mpz_class floor() const;

    /// Exact "(a_num/a_den) + (b_num/b_den)*sqrt5" rendering.
    std::string str() const;

    double to_double() const;  // annotations only

private:
    Rational a_;
    Rational b_;
};

inline int surd_sign(const Surd& s) { return s.sign(); }

/// Distance from v to the nearest integer, in [0, 1/2], exact.
Surd dist_nearest_int(const Surd& v);

}  // namespace fibmm
