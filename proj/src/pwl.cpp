#include "fibmm/pwl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fibmm {

namespace {

const Rational kHalf(1, 2);

// Sign of (a x + b) - (a' x + b') at x, all in integer arithmetic:
// sign(da * num(x) * den(db) + num(db) * den(x)) with da = a - a',
// db = b - b'.
int line_diff_sign(const mpz_class& da, const Rational& db, const Rational& x) {
    const mpz_class v = da * x.num() * db.den() + db.num() * x.den();
    return sgn(v);
}

}  // namespace

Pwl Pwl::from_breakpoints(std::vector<Rational> xs, std::vector<Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("Pwl: mismatched breakpoint lists");
    if (xs.size() < 2) throw std::invalid_argument("Pwl: need at least two breakpoints");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i])) throw std::invalid_argument("Pwl: breakpoints must increase");
    if (xs.front() < Rational(0) || xs.back() > kHalf)
        throw std::domain_error("Pwl: domain must lie inside [0, 1/2]");
    for (const Rational& y : ys)
        if (y < Rational(0) || y > kHalf) throw std::domain_error("Pwl: values must lie in [0, 1/2]");

    Pwl f;
    f.xs_.push_back(xs[0]);
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        if (!slope.is_integer()) throw std::domain_error("Pwl: non-integer slope");
        mpz_class a = slope.num();
        Rational b = ys[i] - slope * xs[i];
        if (!f.slopes_.empty() && f.slopes_.back() == a && f.intercepts_.back() == b) {
            f.xs_.back() = xs[i + 1];  // collinear continuation: extend
        } else {
            f.xs_.push_back(xs[i + 1]);
            f.slopes_.push_back(std::move(a));
            f.intercepts_.push_back(std::move(b));
        }
    }
    return f;
}

Pwl Pwl::sawtooth(const mpz_class& c) { return sawtooth(c, Rational(0), kHalf); }

Pwl Pwl::sawtooth(const mpz_class& c, const Rational& lo, const Rational& hi) {
    if (c < 1) throw std::domain_error("sawtooth: slope parameter must be >= 1");
    if (lo < Rational(0) || hi > kHalf || !(lo < hi))
        throw std::domain_error("sawtooth: bad subinterval");
    const mpz_class two_c = 2 * c;
    // Cells j: x in [j/(2c), (j+1)/(2c)]; even j rises as c x - j/2,
    // odd j falls as (j+1)/2 - c x.
    mpz_class j_lo, j_hi;
    {
        const Rational scaled_lo = lo * Rational(two_c);
        const Rational scaled_hi = hi * Rational(two_c);
        j_lo = scaled_lo.floor();
        j_hi = scaled_hi.floor();
        if (Rational(j_hi) == scaled_hi) --j_hi;  // hi on a grid point: last cell ends there
    }
    Pwl f;
    f.xs_.push_back(lo);
    for (mpz_class j = j_lo; j <= j_hi; ++j) {
        if (mpz_even_p(j.get_mpz_t())) {
            f.slopes_.push_back(c);
            f.intercepts_.push_back(Rational(mpz_class(-j / 2)));
        } else {
            f.slopes_.push_back(-c);
            f.intercepts_.push_back(Rational(mpz_class((j + 1) / 2)));
        }
        const Rational cell_end(j + 1, two_c);
        f.xs_.push_back(cell_end < hi ? cell_end : hi);
    }
    return f;
}

std::vector<Rational> Pwl::ys() const {
    std::vector<Rational> out;
    out.reserve(xs_.size());
    for (size_t i = 0; i < xs_.size(); ++i) out.push_back(value_on(i < slopes_.size() ? i : slopes_.size() - 1, xs_[i]));
    return out;
}

bool Pwl::full_domain() const {
    return xs_.front() == Rational(0) && xs_.back() == kHalf;
}

Rational Pwl::value_on(size_t piece, const Rational& x) const {
    // (a num(x) + b_num/b_den den(x)) / den(x), assembled in integers.
    const Rational& b = intercepts_[piece];
    return Rational(slopes_[piece] * x.num() * b.den() + b.num() * x.den(), x.den() * b.den());
}

size_t Pwl::segment_of(const Rational& x) const {
    if (x < xs_.front() || x > xs_.back()) throw std::domain_error("Pwl: point outside domain");
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    size_t i = static_cast<size_t>(it - xs_.begin());
    if (i > 0) --i;
    if (i >= slopes_.size()) i = slopes_.size() - 1;
    return i;
}

Rational Pwl::value_at(const Rational& x) const { return value_on(segment_of(x), x); }

Rational Pwl::eval(const Rational& x) const {
    if (!full_domain()) throw std::domain_error("Pwl: folding eval needs the full domain");
    Rational t = x.frac();
    if (t > kHalf) t = Rational(1) - t;
    return value_at(t);
}

Pwl Pwl::restrict_to(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi) || lo < xs_.front() || hi > xs_.back())
        throw std::domain_error("Pwl: restriction outside domain");
    Pwl out;
    const size_t first = segment_of(lo);
    out.xs_.push_back(lo);
    for (size_t i = first; i < slopes_.size() && xs_[i] < hi; ++i) {
        out.slopes_.push_back(slopes_[i]);
        out.intercepts_.push_back(intercepts_[i]);
        out.xs_.push_back(xs_[i + 1] < hi ? xs_[i + 1] : hi);
    }
    return out;
}

Pwl::Extremum Pwl::global_max() const {
    const std::vector<Rational> vals = ys();
    Extremum ext;
    ext.value = vals[0];
    for (const Rational& y : vals)
        if (y > ext.value) ext.value = y;
    for (size_t i = 0; i < xs_.size(); ++i)
        if (vals[i] == ext.value) ext.argmax.push_back(xs_[i]);
    return ext;
}

std::vector<Rational> Pwl::zeros() const {
    const std::vector<Rational> vals = ys();
    std::vector<Rational> zs;
    for (size_t i = 0; i < xs_.size(); ++i)
        if (vals[i].is_zero()) zs.push_back(xs_[i]);
    return zs;
}

std::vector<Pwl::Vertex> Pwl::vertices() const {
    const std::vector<Rational> vals = ys();
    std::vector<Vertex> vs;
    for (size_t i = 1; i + 1 < xs_.size(); ++i) {
        const int before = sgn(slopes_[i - 1]);
        const int after = sgn(slopes_[i]);
        VertexKind kind = VertexKind::SlopeChange;
        if (before > 0 && after < 0)
            kind = VertexKind::LocalMax;
        else if (before < 0 && after > 0)
            kind = VertexKind::Zero;  // local min; 0 for every envelope here
        vs.push_back(Vertex{xs_[i], vals[i], kind});
    }
    return vs;
}

std::string Pwl::serialize() const {
    const std::vector<Rational> vals = ys();
    std::ostringstream out;
    out << "pwl " << xs_.size() << "\n";
    for (size_t i = 0; i < xs_.size(); ++i)
        out << xs_[i].num() << " " << xs_[i].den() << " " << vals[i].num() << " " << vals[i].den()
            << "\n";
    return out.str();
}

Pwl Pwl::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    size_t count = 0;
    if (!(in >> tag >> count) || tag != "pwl")
        throw std::invalid_argument("Pwl::parse: bad header");
    std::vector<Rational> xs, ys;
    xs.reserve(count);
    ys.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        std::string xn, xd, yn, yd;
        if (!(in >> xn >> xd >> yn >> yd)) throw std::invalid_argument("Pwl::parse: truncated record");
        xs.emplace_back(mpz_class(xn), mpz_class(xd));
        ys.emplace_back(mpz_class(yn), mpz_class(yd));
    }
    return from_breakpoints(std::move(xs), std::move(ys));
}

Pwl min_envelope(const Pwl& f, const Pwl& g) {
    if (f.domain_lo() != g.domain_lo() || f.domain_hi() != g.domain_hi())
        throw std::domain_error("min_envelope: domains differ");

    Pwl out;
    auto push = [&](const Rational& from, const mpz_class& a, const Rational& b) {
        if (!out.slopes_.empty() && out.slopes_.back() == a && out.intercepts_.back() == b)
            return;  // collinear continuation
        out.xs_.push_back(from);
        out.slopes_.push_back(a);
        out.intercepts_.push_back(b);
    };

    size_t i = 0, j = 0;
    Rational cur = f.domain_lo();
    while (i < f.slopes_.size() && j < g.slopes_.size()) {
        const Rational& f_end = f.xs_[i + 1];
        const Rational& g_end = g.xs_[j + 1];
        const Rational& next = f_end <= g_end ? f_end : g_end;
        // Difference (f - g) restricted to [cur, next] is da*x + db.
        const mpz_class da = f.slopes_[i] - g.slopes_[j];
        const Rational db = f.intercepts_[i] - g.intercepts_[j];
        const int su = line_diff_sign(da, db, cur);
        const int sv = line_diff_sign(da, db, next);
        if (su * sv < 0) {
            const Rational w(-db.num(), db.den() * da);
            if (su < 0) {
                push(cur, f.slopes_[i], f.intercepts_[i]);
                push(w, g.slopes_[j], g.intercepts_[j]);
            } else {
                push(cur, g.slopes_[j], g.intercepts_[j]);
                push(w, f.slopes_[i], f.intercepts_[i]);
            }
        } else if (su < 0 || (su == 0 && sv <= 0)) {
            push(cur, f.slopes_[i], f.intercepts_[i]);
        } else {
            push(cur, g.slopes_[j], g.intercepts_[j]);
        }
        if (f_end == next) ++i;
        if (g_end == next) ++j;
        cur = next;
    }
    out.xs_.push_back(f.domain_hi());
    return out;
}

bool restrict_equal(const Pwl& f, const Rational& lo, const Rational& hi,
                    const std::vector<CasePiece>& pieces) {
    if (!(lo < hi)) throw std::invalid_argument("restrict_equal: empty interval");
    if (pieces.empty()) throw std::invalid_argument("restrict_equal: empty case list");
    if (pieces.front().lo != lo || pieces.back().hi != hi)
        throw std::invalid_argument("restrict_equal: case list does not span the interval");
    std::vector<Rational> xs, ys;
    auto line_at = [](const CasePiece& p, const Rational& x) {
        return Rational(p.slope) * x + Rational(p.intercept);
    };
    for (size_t i = 0; i < pieces.size(); ++i) {
        const CasePiece& p = pieces[i];
        if (!(p.lo < p.hi)) throw std::invalid_argument("restrict_equal: degenerate piece");
        if (i > 0) {
            if (p.lo != pieces[i - 1].hi)
                throw std::invalid_argument("restrict_equal: gap or overlap in case list");
            if (line_at(p, p.lo) != ys.back())
                throw std::invalid_argument("restrict_equal: discontinuous case list");
        } else {
            xs.push_back(p.lo);
            ys.push_back(line_at(p, p.lo));
        }
        xs.push_back(p.hi);
        ys.push_back(line_at(p, p.hi));
    }
    const Pwl supplied = Pwl::from_breakpoints(std::move(xs), std::move(ys));
    return f.restrict_to(lo, hi) == supplied;
}

}  // namespace fibmm
