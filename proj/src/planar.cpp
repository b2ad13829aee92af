#include "fibmm/planar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace fibmm {

namespace {

// All arithmetic on the candidate arrangement runs in int64 with
// __int128 cross-multiplications; the coefficient bounds for N <= 16
// leave two orders of magnitude of headroom.

// Line A x + B y = C/2, normalized: gcd(A, B, C) = 1 and the first
// nonzero of (A, B) positive.
struct Line {
    long long A, B, C;
    auto operator<=>(const Line&) const = default;
};

Line normalized(long long A, long long B, long long C) {
    long long g = std::gcd(std::gcd(std::abs(A), std::abs(B)), std::abs(C));
    if (g == 0) g = 1;
    A /= g;
    B /= g;
    C /= g;
    if (A < 0 || (A == 0 && B < 0)) {
        A = -A;
        B = -B;
        C = -C;
    }
    return {A, B, C};
}

// Reduced fraction n/d, d > 0.
struct Frac {
    long long n, d;
};

Frac reduced(long long n, long long d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(std::abs(n), d);
    return g > 1 ? Frac{n / g, d / g} : Frac{n, d};
}

bool frac_less(const Frac& p, const Frac& q) {
    return static_cast<__int128>(p.n) * q.d < static_cast<__int128>(q.n) * p.d;
}

struct Point {
    Frac x, y;
};

bool point_less(const Point& p, const Point& q) {
    if (frac_less(p.x, q.x)) return true;
    if (frac_less(q.x, p.x)) return false;
    return frac_less(p.y, q.y);
}

bool point_eq(const Point& p, const Point& q) {
    return p.x.n == q.x.n && p.x.d == q.x.d && p.y.n == q.y.n && p.y.d == q.y.d;
}

void require_planar_n(int N) {
    if (N < 2 || N > kPlanarMaxN)
        throw std::domain_error("planar: N must lie in [2, " + std::to_string(kPlanarMaxN) + "]");
}

std::vector<LinearForm> forms_upto(const FibCache& cache, int N) {
    std::vector<LinearForm> forms;
    forms.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) forms.push_back(form_for(cache, n));
    return forms;
}

std::vector<Line> arrangement_lines(const std::vector<LinearForm>& forms) {
    std::vector<Line> lines;
    // Creases: a x + b y = j/2 for every level crossing the square.
    for (const LinearForm& f : forms) {
        const long long w = f.a + f.b;
        for (long long j = 0; j <= 2 * w; ++j) lines.push_back(normalized(f.a, f.b, j));
    }
    // Equal-distance lines of each pair: ||G_i|| = ||G_j|| locally means
    // G_i - G_j or G_i + G_j is an integer.
    for (size_t i = 0; i < forms.size(); ++i) {
        for (size_t j = i + 1; j < forms.size(); ++j) {
            const LinearForm& fi = forms[i];
            const LinearForm& fj = forms[j];
            const long long wi = fi.a + fi.b;
            const long long wj = fj.a + fj.b;
            for (long long s = 0; s <= wi + wj; ++s)
                lines.push_back(normalized(fi.a + fj.a, fi.b + fj.b, 2 * s));
            const long long dA = fi.a - fj.a;
            const long long dB = fi.b - fj.b;
            if (dA == 0 && dB == 0) continue;
            for (long long d = -wj; d <= wi; ++d) lines.push_back(normalized(dA, dB, 2 * d));
        }
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

// Streams every in-square intersection of the line family (plus the
// corners) through the visitor without materializing the set; points
// repeat when several line pairs meet.
template <typename Visitor>
void for_each_intersection(const std::vector<Line>& lines, Visitor&& visit) {
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const Line& p = lines[i];
            const Line& q = lines[j];
            const long long det = p.A * q.B - q.A * p.B;
            if (det == 0) continue;
            // x = (C_p B_q - C_q B_p) / (2 det), y = (A_p C_q - A_q C_p) / (2 det)
            const long long nx = p.C * q.B - q.C * p.B;
            const long long ny = p.A * q.C - q.A * p.C;
            const long long dd = 2 * det;
            const long long lo = std::min(0LL, dd);
            const long long hi = std::max(0LL, dd);
            if (nx < lo || nx > hi || ny < lo || ny > hi) continue;  // outside the unit square
            visit(Point{reduced(nx, dd), reduced(ny, dd)});
        }
    }
    for (long long cx = 0; cx <= 1; ++cx)
        for (long long cy = 0; cy <= 1; ++cy) visit(Point{{cx, 1}, {cy, 1}});
}

std::vector<Point> arrangement_points(const std::vector<Line>& lines) {
    std::vector<Point> pts;
    for_each_intersection(lines, [&](const Point& p) { pts.push_back(p); });
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end(), point_eq), pts.end());
    return pts;
}

// min_n ||a_n x + b_n y|| at px/q, py/q as a fraction over q.
long long min_distance_num(const std::vector<LinearForm>& forms, long long px, long long py,
                           long long q) {
    long long best = q;  // above any distance numerator (q/2 max)
    for (const LinearForm& f : forms) {
        const long long m = (f.a * px + f.b * py) % q;
        const long long d = std::min(m, q - m);
        if (d < best) best = d;
    }
    return best;
}

}  // namespace

LinearForm form_for(const FibCache& cache, int n) {
    if (n < 1) throw std::domain_error("form_for: n must be >= 1");
    const mpz_class& a = cache.fib(n - 2);
    const mpz_class& b = cache.fib(n - 1);
    if (!a.fits_slong_p() || !b.fits_slong_p())
        throw std::out_of_range("form_for: coefficients exceed the machine range");
    return LinearForm{a.get_si(), b.get_si()};
}

std::vector<CreaseLine> crease_lines(const FibCache& cache, int N) {
    require_planar_n(N);
    std::vector<CreaseLine> out;
    for (int n = 1; n <= N; ++n) {
        const LinearForm f = form_for(cache, n);
        const long long w = f.a + f.b;
        for (long long j = 0; j <= 2 * w; ++j) out.push_back(CreaseLine{n, Rational(j, 2)});
    }
    return out;
}

std::vector<PlanarPoint> candidate_vertices(const FibCache& cache, int N) {
    require_planar_n(N);
    const std::vector<LinearForm> forms = forms_upto(cache, N);
    const std::vector<Point> pts = arrangement_points(arrangement_lines(forms));
    std::vector<PlanarPoint> out;
    out.reserve(pts.size());
    for (const Point& p : pts)
        out.push_back(PlanarPoint{Rational(p.x.n, p.x.d), Rational(p.y.n, p.y.d)});
    return out;
}

PlanarResult t_value(const FibCache& cache, int N) {
    require_planar_n(N);
    const std::vector<LinearForm> forms = forms_upto(cache, N);
    const std::vector<Line> lines = arrangement_lines(forms);

    auto value_at = [&](const Point& p, long long& num, long long& den) {
        const long long q = std::lcm(p.x.d, p.y.d);
        const long long px = p.x.n * (q / p.x.d);
        const long long py = p.y.n * (q / p.y.d);
        num = min_distance_num(forms, px, py, q);
        den = q;
    };

    // Pass 1: the extremal value. Pass 2: every point attaining it.
    long long best_num = -1, best_den = 1;
    for_each_intersection(lines, [&](const Point& p) {
        long long d, q;
        value_at(p, d, q);
        if (static_cast<__int128>(d) * best_den > static_cast<__int128>(best_num) * q) {
            const Frac r = reduced(d, q);
            best_num = r.n;
            best_den = r.d;
        }
    });
    std::vector<Point> winners;
    for_each_intersection(lines, [&](const Point& p) {
        long long d, q;
        value_at(p, d, q);
        if (static_cast<__int128>(d) * best_den == static_cast<__int128>(best_num) * q)
            winners.push_back(p);
    });
    std::sort(winners.begin(), winners.end(), point_less);
    winners.erase(std::unique(winners.begin(), winners.end(), point_eq), winners.end());

    PlanarResult res;
    res.t = Rational(best_num, best_den);
    for (const Point& p : winners) {
        PlanarPoint pt{Rational(p.x.n, p.x.d), Rational(p.y.n, p.y.d)};
        std::vector<Rational> profile = orbit_profile(cache, pt.x, pt.y, N);
        Rational lowest = profile[0];
        for (const Rational& d : profile) lowest = std::min(lowest, d);
        if (lowest != res.t)
            throw std::runtime_error("t_value: profile minimum disagrees with the vertex scan");
        res.maximizers.push_back(std::move(pt));
        res.profiles.push_back(std::move(profile));
    }
    return res;
}

std::vector<Rational> orbit_profile(const FibCache& cache, const Rational& x, const Rational& y,
                                    int N) {
    if (N < 1) throw std::domain_error("orbit_profile: N must be >= 1");
    if (N > cache.n_max()) throw std::out_of_range("orbit_profile: N exceeds cache");
    std::vector<Rational> profile;
    profile.reserve(static_cast<size_t>(N));
    // Track G_{n-1}, G_n mod 1; the recurrence survives reduction mod 1.
    Rational u = x.frac();
    Rational v = y.frac();
    profile.push_back(dist_nearest_int(u));
    if (N >= 2) profile.push_back(dist_nearest_int(v));
    for (int n = 3; n <= N; ++n) {
        Rational w = (u + v).frac();
        u = v;
        v = w;
        profile.push_back(dist_nearest_int(v));
    }
    return profile;
}

Rational sample_audit(const FibCache& cache, int N, int count, unsigned long long seed) {
    require_planar_n(N);
    if (count < 1) throw std::domain_error("sample_audit: count must be >= 1");
    const std::vector<LinearForm> forms = forms_upto(cache, N);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> den_dist(1, 1000000);
    long long best_num = 0, best_den = 1;
    for (int i = 0; i < count; ++i) {
        const long long q = den_dist(rng);
        std::uniform_int_distribution<long long> num_dist(0, q);
        const long long px = num_dist(rng);
        const long long py = num_dist(rng);
        const long long d = min_distance_num(forms, px, py, q);
        if (static_cast<__int128>(d) * best_den > static_cast<__int128>(best_num) * q) {
            const Frac r = reduced(d, q);
            best_num = r.n;
            best_den = r.d;
        }
    }
    return Rational(best_num, best_den);
}

}  // namespace fibmm
