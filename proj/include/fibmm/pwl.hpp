#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fibmm/rational.hpp"

namespace fibmm {

/// A continuous piecewise-linear function on a closed subinterval of
/// [0, 1/2]. Canonical form: breakpoints strictly increasing, no two
/// adjacent pieces on the same line, every value in [0, 1/2].
///
/// Every function in this domain is built from x -> ||c x|| pieces, so
/// each piece lies on a line y = a x + b with integer slope a; the
/// constructor enforces that invariant. Pieces are stored as their
/// lines, which keeps the envelope sweep in integer arithmetic.
///
/// The full fundamental domain [0, 1/2] is the default; restricted
/// domains carry segment-local computations (the distance functions are
/// 1-periodic and symmetric about 1/2, so nothing is lost).
class Pwl {
public:
    /// Canonicalizes and validates; throws std::invalid_argument on a
    /// malformed breakpoint list and std::domain_error on out-of-range
    /// values or a non-integer slope.
    static Pwl from_breakpoints(std::vector<Rational> xs, std::vector<Rational> ys);

    /// x -> ||c x|| on [0, 1/2]; breakpoints at the multiples of 1/(2c).
    static Pwl sawtooth(const mpz_class& c);

    /// The same restricted to [lo, hi] (subinterval of [0, 1/2]).
    static Pwl sawtooth(const mpz_class& c, const Rational& lo, const Rational& hi);

    const std::vector<Rational>& xs() const { return xs_; }
    /// Values at the breakpoints (computed from the stored lines).
    std::vector<Rational> ys() const;
    const Rational& domain_lo() const { return xs_.front(); }
    const Rational& domain_hi() const { return xs_.back(); }
    bool full_domain() const;
    size_t piece_count() const { return slopes_.size(); }

    /// Integer slope of piece i (between breakpoints i and i+1).
    const mpz_class& slope(size_t i) const { return slopes_[i]; }
    const Rational& intercept(size_t i) const { return intercepts_[i]; }

    /// Value at x, which must lie inside the domain.
    Rational value_at(const Rational& x) const;

    /// Value at an arbitrary rational, folded by 1-periodicity and the
    /// symmetry about 1/2 into [0, 1/2]. Requires the full domain.
    Rational eval(const Rational& x) const;

    Pwl restrict_to(const Rational& lo, const Rational& hi) const;

    struct Extremum {
        Rational value;
        std::vector<Rational> argmax;  // increasing; more than one on ties
    };
    Extremum global_max() const;

    /// All x in the domain with value 0, increasing.
    std::vector<Rational> zeros() const;

    enum class VertexKind { LocalMax, Zero, SlopeChange };
    struct Vertex {
        Rational x;
        Rational y;
        VertexKind kind;
    };
    /// Interior breakpoints classified by shape.
    std::vector<Vertex> vertices() const;

    bool operator==(const Pwl&) const = default;  // canonical forms compare structurally

    /// Line-oriented record: "pwl <count>" then one
    /// "x_num x_den y_num y_den" quadruple per breakpoint, base 10.
    std::string serialize() const;
    static Pwl parse(const std::string& text);

private:
    friend Pwl min_envelope(const Pwl& f, const Pwl& g);

    Pwl() = default;

    Rational value_on(size_t piece, const Rational& x) const;
    size_t segment_of(const Rational& x) const;

    std::vector<Rational> xs_;           // m+1 breakpoints
    std::vector<mpz_class> slopes_;      // m integer slopes
    std::vector<Rational> intercepts_;   // m intercepts (integers in practice)
};

/// Pointwise minimum of two functions on the same domain, in canonical
/// form; crossings become new rational breakpoints.
Pwl min_envelope(const Pwl& f, const Pwl& g);

/// One explicit case "y = slope*x + intercept on [lo, hi]" of a case
/// list; slope and intercept are integers for every list in this
/// domain.
struct CasePiece {
    mpz_class slope;
    mpz_class intercept;
    Rational lo;
    Rational hi;
};

/// Whether f coincides with the supplied case list on [lo, hi]. The
/// list must tile [lo, hi] exactly and be continuous at the seams
/// (std::invalid_argument otherwise); equivalent subdivisions of the
/// same function compare equal.
bool restrict_equal(const Pwl& f, const Rational& lo, const Rational& hi,
                    const std::vector<CasePiece>& pieces);

}  // namespace fibmm
