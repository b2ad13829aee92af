#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fibmm/minmax.hpp"
#include "fibmm/pwl.hpp"

using namespace fibmm;

namespace {

const FibCache& cache() {
    static FibCache c;
    return c;
}

Pwl fold(std::initializer_list<long> slopes) {
    auto it = slopes.begin();
    Pwl env = Pwl::sawtooth(mpz_class(*it));
    for (++it; it != slopes.end(); ++it) env = min_envelope(env, Pwl::sawtooth(mpz_class(*it)));
    return env;
}

Pwl envelope(int N) { return envelope_window(cache(), {1, N}); }

Rational brute_min(int N, const Rational& x) {
    Rational best = dist_nearest_int(cache().fib(1) * x);
    for (int k = 2; k <= N; ++k) best = std::min(best, dist_nearest_int(cache().fib(k) * x));
    return best;
}

std::vector<CasePiece> cases(std::initializer_list<std::tuple<long, long, Rational, Rational>> ps) {
    std::vector<CasePiece> out;
    for (const auto& [a, b, lo, hi] : ps) out.push_back({mpz_class(a), mpz_class(b), lo, hi});
    return out;
}

Rational random_x(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> den(1, 1000000);
    const long long q = den(rng);
    std::uniform_int_distribution<long long> num(0, q);
    return Rational(num(rng), q);
}

}  // namespace

TEST_CASE("sawtooth shapes") {
    const Pwl s1 = Pwl::sawtooth(1);
    CHECK(s1.piece_count() == 1);
    CHECK(s1.xs() == std::vector<Rational>{Rational(0), Rational(1, 2)});
    CHECK(s1.slope(0) == 1);
    CHECK(s1.intercept(0) == Rational(0));

    const Pwl s2 = Pwl::sawtooth(2);
    CHECK(s2.piece_count() == 2);
    CHECK(s2.xs() == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2)});
    CHECK(s2.slope(0) == 2);
    CHECK(s2.slope(1) == -2);
    CHECK(s2.intercept(1) == Rational(1));

    const Pwl s8 = Pwl::sawtooth(8);
    CHECK(s8.piece_count() == 8);
    const auto ys = s8.ys();
    for (size_t j = 0; j < s8.xs().size(); ++j) {
        CHECK(s8.xs()[j] == Rational(static_cast<long>(j), 16));
        CHECK(ys[j] == (j % 2 == 1 ? Rational(1, 2) : Rational(0)));
    }
    CHECK_THROWS_AS(Pwl::sawtooth(0), std::domain_error);
}

TEST_CASE("sawtooth breakpoints sit on the half-period grid") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> cs(1, 50);
    for (int i = 0; i < 30; ++i) {
        const long c = cs(rng);
        const Pwl s = Pwl::sawtooth(c);
        for (const Rational& x : s.xs()) CHECK((Rational(2 * c) * x).is_integer());
        for (size_t p = 0; p < s.piece_count(); ++p)
            CHECK((s.slope(p) == c || s.slope(p) == -c));
    }
}

TEST_CASE("clipped sawtooth equals restriction of the full one") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> cs(1, 40);
    for (int i = 0; i < 30; ++i) {
        const long c = cs(rng);
        Rational a = random_x(rng) * Rational(1, 2);
        Rational b = random_x(rng) * Rational(1, 2);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        CHECK(Pwl::sawtooth(c, a, b) == Pwl::sawtooth(c).restrict_to(a, b));
    }
}

TEST_CASE("small envelopes match their explicit case lists") {
    // N = 3: x up to 1/3, then 1 - 2x.
    CHECK(restrict_equal(envelope(3), Rational(0), Rational(1, 2),
                         cases({{1, 0, Rational(0), Rational(1, 3)},
                                {-2, 1, Rational(1, 3), Rational(1, 2)}})));
    // N = 4: x / 1-3x / 3x-1 / 1-2x with breakpoints 1/4, 1/3, 2/5.
    const auto f4 = cases({{1, 0, Rational(0), Rational(1, 4)},
                           {-3, 1, Rational(1, 4), Rational(1, 3)},
                           {3, -1, Rational(1, 3), Rational(2, 5)},
                           {-2, 1, Rational(2, 5), Rational(1, 2)}});
    CHECK(restrict_equal(envelope(4), Rational(0), Rational(1, 2), f4));
    // N = 5: the eight-piece list.
    const auto f5 = cases({{1, 0, Rational(0), Rational(1, 6)},
                           {-5, 1, Rational(1, 6), Rational(1, 5)},
                           {5, -1, Rational(1, 5), Rational(1, 4)},
                           {-3, 1, Rational(1, 4), Rational(1, 3)},
                           {3, -1, Rational(1, 3), Rational(3, 8)},
                           {-5, 2, Rational(3, 8), Rational(2, 5)},
                           {5, -2, Rational(2, 5), Rational(3, 7)},
                           {-2, 1, Rational(3, 7), Rational(1, 2)}});
    CHECK(restrict_equal(envelope(5), Rational(0), Rational(1, 2), f5));
    CHECK(envelope(5).piece_count() == 8);
    // distinct functions do not match
    CHECK_FALSE(restrict_equal(envelope(4), Rational(0), Rational(1, 2),
                               cases({{1, 0, Rational(0), Rational(1, 3)},
                                      {-2, 1, Rational(1, 3), Rational(1, 2)}})));
}

TEST_CASE("envelope composition is idempotent, commutative, associative") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> cs(1, 30);
    for (int i = 0; i < 25; ++i) {
        const Pwl f = Pwl::sawtooth(cs(rng));
        const Pwl g = Pwl::sawtooth(cs(rng));
        const Pwl h = Pwl::sawtooth(cs(rng));
        CHECK(min_envelope(f, f) == f);
        CHECK(min_envelope(f, g) == min_envelope(g, f));
        CHECK(min_envelope(min_envelope(f, g), h) == min_envelope(f, min_envelope(g, h)));
    }
}

TEST_CASE("envelope equals the direct minimum at random points") {
    std::mt19937_64 rng(14);
    for (int N = 2; N <= 8; ++N) {
        const Pwl env = envelope(N);
        for (int i = 0; i < 60; ++i) {
            const Rational x = random_x(rng);
            CHECK(env.eval(x) == brute_min(N, x));
        }
    }
}

TEST_CASE("envelopes are pointwise nonincreasing in the window length") {
    std::mt19937_64 rng(15);
    std::vector<Pwl> envs;
    for (int N = 1; N <= 10; ++N) envs.push_back(envelope(N));
    for (int i = 0; i < 100; ++i) {
        const Rational x = random_x(rng);
        for (size_t n = 1; n < envs.size(); ++n) CHECK(envs[n].eval(x) <= envs[n - 1].eval(x));
    }
}

TEST_CASE("max of the envelope never exceeds either maximum") {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long> cs(1, 40);
    for (int i = 0; i < 25; ++i) {
        const Pwl f = Pwl::sawtooth(cs(rng));
        const Pwl g = Pwl::sawtooth(cs(rng));
        const Rational m = min_envelope(f, g).global_max().value;
        CHECK(m <= f.global_max().value);
        CHECK(m <= g.global_max().value);
    }
}

TEST_CASE("global maxima of reference envelopes") {
    const auto s1 = Pwl::sawtooth(1).global_max();
    CHECK(s1.value == Rational(1, 2));
    CHECK(s1.argmax == std::vector<Rational>{Rational(1, 2)});

    const auto e7 = envelope(7).global_max();
    CHECK(e7.value == Rational(2, 11));
    CHECK(e7.argmax == std::vector<Rational>{Rational(3, 11)});

    const auto e18 = envelope(18).global_max();
    CHECK(e18.value == Rational(34, 199));
    CHECK(e18.argmax == std::vector<Rational>{Rational(55, 199)});
}

TEST_CASE("zero sets") {
    CHECK(Pwl::sawtooth(2).zeros() == std::vector<Rational>{Rational(0), Rational(1, 2)});
    CHECK(Pwl::sawtooth(3).zeros() == std::vector<Rational>{Rational(0), Rational(1, 3)});
    // The envelope vanishes exactly on the union of the grids j/F_k.
    std::vector<Rational> expected;
    for (int k = 1; k <= 7; ++k) {
        const mpz_class& f = cache().fib(k);
        for (mpz_class j = 0; Rational(j, f) <= Rational(1, 2); ++j)
            expected.push_back(Rational(j, f));
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(envelope(7).zeros() == expected);
    CHECK(expected.size() == 14);
}

TEST_CASE("pointwise evaluation and folding") {
    const Pwl e7 = envelope(7);
    CHECK(e7.eval(Rational(3, 11)) == Rational(2, 11));
    CHECK(e7.eval(Rational(0)) == Rational(0));
    CHECK(envelope(5).eval(Rational(3, 8)) == Rational(1, 8));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const Rational x = random_x(rng);
        CHECK(e7.eval(x + Rational(3)) == e7.eval(x));
        CHECK(e7.eval(-x) == e7.eval(x));
        CHECK(e7.eval(Rational(1) - x) == e7.eval(x));
    }
}

TEST_CASE("the only vertex of the N = 7 envelope above the limit line") {
    const Surd limit = d1_limit();
    int above = 0;
    for (const Pwl::Vertex& v : envelope(7).vertices()) {
        if ((Surd(v.y) - limit).sign() > 0) {
            ++above;
            CHECK(v.x == Rational(3, 11));
            CHECK(v.y == Rational(2, 11));
            CHECK(v.kind == Pwl::VertexKind::LocalMax);
        }
    }
    CHECK(above == 1);
}

TEST_CASE("serialization round-trips") {
    const Pwl env = envelope(6);
    CHECK(Pwl::parse(env.serialize()) == env);
    const Pwl clipped = env.restrict_to(Rational(1, 5), Rational(1, 3));
    CHECK(Pwl::parse(clipped.serialize()) == clipped);
    CHECK_THROWS_AS(Pwl::parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(Pwl::parse("pwl 3\n0 1 0 1\n"), std::invalid_argument);
}

TEST_CASE("construction validation") {
    using V = std::vector<Rational>;
    CHECK_THROWS_AS(Pwl::from_breakpoints(V{Rational(0)}, V{Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(
        Pwl::from_breakpoints(V{Rational(0), Rational(0)}, V{Rational(0), Rational(1, 2)}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        Pwl::from_breakpoints(V{Rational(0), Rational(2, 3)}, V{Rational(0), Rational(1, 3)}),
        std::domain_error);
    CHECK_THROWS_AS(
        Pwl::from_breakpoints(V{Rational(0), Rational(1, 2)}, V{Rational(0), Rational(2, 3)}),
        std::domain_error);
    // slope 2/3 is not an integer
    CHECK_THROWS_AS(
        Pwl::from_breakpoints(V{Rational(0), Rational(1, 2)}, V{Rational(0), Rational(1, 3)}),
        std::domain_error);
}

TEST_CASE("case list validation errors") {
    const Pwl env = envelope(3);
    // gap between pieces
    CHECK_THROWS_AS(restrict_equal(env, Rational(0), Rational(1, 2),
                                   cases({{1, 0, Rational(0), Rational(1, 4)},
                                          {-2, 1, Rational(1, 3), Rational(1, 2)}})),
                    std::invalid_argument);
    // does not span the interval
    CHECK_THROWS_AS(restrict_equal(env, Rational(0), Rational(1, 2),
                                   cases({{1, 0, Rational(0), Rational(1, 3)}})),
                    std::invalid_argument);
    // discontinuous at the seam
    CHECK_THROWS_AS(restrict_equal(env, Rational(0), Rational(1, 2),
                                   cases({{1, 0, Rational(0), Rational(1, 3)},
                                          {-2, 2, Rational(1, 3), Rational(1, 2)}})),
                    std::invalid_argument);
    // degenerate piece
    CHECK_THROWS_AS(restrict_equal(env, Rational(0), Rational(1, 2),
                                   cases({{1, 0, Rational(0), Rational(0)},
                                          {-2, 1, Rational(0), Rational(1, 2)}})),
                    std::invalid_argument);
}

TEST_CASE("restriction keeps values and breakpoints") {
    const Pwl env = envelope(6);
    const Pwl mid = env.restrict_to(Rational(1, 5), Rational(1, 3));
    CHECK(mid.domain_lo() == Rational(1, 5));
    CHECK(mid.domain_hi() == Rational(1, 3));
    std::mt19937_64 rng(18);
    for (int i = 0; i < 40; ++i) {
        Rational x = Rational(1, 5) + random_x(rng) * Rational(2, 15);
        CHECK(mid.value_at(x) == env.value_at(x));
    }
    CHECK_THROWS_AS(env.restrict_to(Rational(1, 3), Rational(1, 5)), std::domain_error);
    CHECK_THROWS_AS(mid.eval(Rational(1, 4)), std::domain_error);  // folding needs full domain
}

TEST_CASE("composition helper example from the module contract") {
    CHECK(fold({1, 1, 2}) == envelope(3));
    CHECK(fold({1, 2}) == envelope_window(cache(), {2, 2}));
    CHECK(envelope_window(cache(), {1, 1}) == Pwl::sawtooth(1));
}
