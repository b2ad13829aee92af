#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibmm {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. The canonical zero is 0/1.
///
/// Backed by GMP's mpq; this wrapper pins the normalization invariant
/// and exposes only exact operations.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    explicit Rational(const mpz_class& n) : q_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "num/den" or "num"; throws std::invalid_argument on junk.
    static Rational parse(std::string_view text);

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
        return c <=> 0;
    }

    /// Exact "num/den" rendering (denominator always present, e.g. "3/1").
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    /// Approximate value; for annotations and plots only, never verdicts.
    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // canonical at all times
};

inline Rational operator*(const mpz_class& n, const Rational& r) { return Rational(n) * r; }

/// Distance from v to the nearest integer, in [0, 1/2]. A half-integer
/// tie returns exactly 1/2.
inline Rational dist_nearest_int(const Rational& v) {
    const Rational f = v.frac();
    const Rational g = Rational(1) - f;
    return f <= g ? f : g;
}

}  // namespace fibmm
