#pragma once

#include <vector>

#include "fibmm/fib.hpp"
#include "fibmm/rational.hpp"

namespace fibmm {

/// Hard cap for the planar engine; the candidate arrangement grows
/// roughly quadratically in the total crease count, so large N is a
/// confirmation run, not an interactive one.
inline constexpr int kPlanarMaxN = 16;

/// Integer form a x + b y; index n carries (F_{n-2}, F_{n-1}), so the
/// sequence starts x, y, x+y, x+2y, 2x+3y, ...
struct LinearForm {
    long long a;
    long long b;
};

LinearForm form_for(const FibCache& cache, int n);

/// Line a x + b y = level with a half-integer level; integer levels are
/// the zero lines of the distance, half-integer levels the peak lines.
struct CreaseLine {
    int form_index;
    Rational level;
};

std::vector<CreaseLine> crease_lines(const FibCache& cache, int N);

struct PlanarPoint {
    Rational x;
    Rational y;
    bool operator==(const PlanarPoint&) const = default;
    auto operator<=>(const PlanarPoint&) const = default;  // lexicographic
};

/// Finite candidate set that provably contains every isolated maximizer
/// of min_n ||a_n x + b_n y|| over the unit square: all in-square
/// intersections of the crease lines together with the equal-distance
/// lines of every pair of forms (the min switches minimizer across
/// those), plus the square's corners. Deduplicated, sorted.
std::vector<PlanarPoint> candidate_vertices(const FibCache& cache, int N);

struct PlanarResult {
    Rational t;
    std::vector<PlanarPoint> maximizers;        // lexicographically sorted
    std::vector<std::vector<Rational>> profiles;  // ||G_n|| for n = 1..N, per maximizer
};

/// max over the unit square of min_{n<=N} ||G_n(x,y)||, exact, with the
/// complete maximizer list.
PlanarResult t_value(const FibCache& cache, int N);

/// ||G_n(x,y)|| for n = 1..N at one point.
std::vector<Rational> orbit_profile(const FibCache& cache, const Rational& x, const Rational& y,
                                    int N);

/// Max over `count` pseudo-random rational points of the same min; a
/// soundness cross-check, never above t_value(N).t.
Rational sample_audit(const FibCache& cache, int N, int count, unsigned long long seed);

}  // namespace fibmm
