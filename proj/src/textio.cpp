#include "fibmm/textio.hpp"

#include <cmath>
#include <stdexcept>

namespace fibmm {

namespace {

Rational pow10_rational(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

// 10^{e-1} <= w < 10^e for positive w; `hint` just seeds the exact loop.
template <typename Num>
int leading_exponent(const Num& w, int hint) {
    int e = hint;
    while (!((w - Num(pow10_rational(e))).sign() < 0)) ++e;
    while ((w - Num(pow10_rational(e - 1))).sign() < 0) --e;
    return e;
}

std::string format_scaled(int sign, mpz_class scaled, int e, int digits) {
    // Rounding may carry into an extra digit (e.g. 0.99 -> 1.0).
    mpz_class cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    if (scaled >= cap) {
        scaled /= 10;
        ++e;
    }
    std::string s = scaled.get_str();
    std::string out = sign < 0 ? "-" : "";
    if (e <= 0)
        out += "0." + std::string(static_cast<size_t>(-e), '0') + s;
    else if (e >= digits)
        out += s + std::string(static_cast<size_t>(e - digits), '0');
    else
        out += s.substr(0, static_cast<size_t>(e)) + "." + s.substr(static_cast<size_t>(e));
    return out;
}

template <typename Num>
std::string decimal_impl(const Num& v, int digits, double magnitude_hint) {
    if (digits < 1) throw std::domain_error("decimal_str: digits must be >= 1");
    if (v.is_zero()) return "0";
    const int sign = v.sign();
    const Num w = sign < 0 ? -v : v;
    int hint = 1;
    if (magnitude_hint > 0 && std::isfinite(magnitude_hint))
        hint = static_cast<int>(std::floor(std::log10(magnitude_hint))) + 1;
    const int e = leading_exponent(w, hint);
    // round(w * 10^{digits - e})
    const Num scaled = w * Num(pow10_rational(digits - e)) + Num(Rational(1, 2));
    return format_scaled(sign, scaled.floor(), e, digits);
}

size_t skip_spaces(std::string_view s, size_t pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    return pos;
}

}  // namespace

std::string decimal_str(const Rational& v, int digits) {
    return decimal_impl(v, digits, std::abs(v.to_double()));
}

std::string decimal_str(const Surd& v, int digits) {
    return decimal_impl(v, digits, std::abs(v.to_double()));
}

Rational Rational::parse(std::string_view text) {
    const size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(mpz_class(std::string(text)));
        return Rational(mpz_class(std::string(text.substr(0, slash))),
                        mpz_class(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
    }
}

Surd Surd::parse(std::string_view text) {
    // "(a_num/a_den) + (b_num/b_den)*sqrt5"
    auto fail = [&]() -> Surd {
        throw std::invalid_argument("Surd::parse: bad literal '" + std::string(text) + "'");
    };
    size_t pos = skip_spaces(text, 0);
    if (pos >= text.size() || text[pos] != '(') return fail();
    const size_t a_end = text.find(')', pos);
    if (a_end == std::string_view::npos) return fail();
    const Rational a = Rational::parse(text.substr(pos + 1, a_end - pos - 1));
    pos = skip_spaces(text, a_end + 1);
    if (pos >= text.size() || text[pos] != '+') return fail();
    pos = skip_spaces(text, pos + 1);
    if (pos >= text.size() || text[pos] != '(') return fail();
    const size_t b_end = text.find(')', pos);
    if (b_end == std::string_view::npos) return fail();
    const Rational b = Rational::parse(text.substr(pos + 1, b_end - pos - 1));
    if (text.substr(b_end + 1) != "*sqrt5") return fail();
    return Surd(a, b);
}

}  // namespace fibmm
