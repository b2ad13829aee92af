#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibmm/minmax.hpp"

using namespace fibmm;

namespace {

const FibCache& cache() {
    static FibCache c;
    return c;
}

Surd abs_surd(const Surd& s) { return s.sign() < 0 ? -s : s; }

}  // namespace

TEST_CASE("windowed max-min values and maximizers") {
    const MinMaxResult r6 = d_value(cache(), {1, 6});
    CHECK(r6.value == Rational(2, 11));
    CHECK(r6.argmax == std::vector<Rational>{Rational(3, 11)});
    REQUIRE(r6.profiles.size() == 1);
    CHECK(r6.profiles[0].size() == 6);
    Rational lowest = r6.profiles[0][0].dist;
    for (const WindowDistance& wd : r6.profiles[0]) lowest = std::min(lowest, wd.dist);
    CHECK(lowest == r6.value);

    CHECK(d_value(cache(), {1, 10}).value == Rational(5, 29));
    CHECK(d_value(cache(), {1, 10}).argmax == std::vector<Rational>{Rational(8, 29)});
    CHECK(d_value(cache(), {1, 4}).value == Rational(1, 4));
    CHECK(d_value(cache(), {1, 4}).argmax == std::vector<Rational>{Rational(1, 4)});
    CHECK_THROWS_AS(d_value(cache(), {0, 3}), std::domain_error);
    CHECK_THROWS_AS(d_value(cache(), {1, cache().n_max() + 5}), std::out_of_range);
    // full-domain envelopes refuse index ranges whose piece count would
    // be astronomical; the restricted form handles them on segments that
    // are narrow enough, and refuses wide ones cleanly
    CHECK_THROWS_AS(envelope_window(cache(), {1, kMaxEnvelopeIndex + 1}), std::domain_error);
    const auto pieces = lemma4_case_list(cache(), 25);
    CHECK(envelope_window_on(cache(), {1, 103}, pieces.front().lo, pieces.back().hi)
              .piece_count() == 10);
    CHECK_THROWS_AS(
        envelope_window_on(cache(), {1, 103}, Rational(27, 100), Rational(28, 100)),
        std::domain_error);
}

TEST_CASE("closed form for the full-window values") {
    CHECK(closed_form_d1(cache(), 1) == Rational(1, 2));
    CHECK(closed_form_d1(cache(), 2) == Rational(1, 2));
    CHECK(closed_form_d1(cache(), 3) == Rational(1, 3));
    CHECK(closed_form_d1(cache(), 4) == Rational(1, 4));
    CHECK(closed_form_d1(cache(), 5) == Rational(1, 4));
    CHECK(closed_form_d1(cache(), 6) == Rational(2, 11));
    CHECK(closed_form_d1(cache(), 9) == Rational(2, 11));
    CHECK(closed_form_d1(cache(), 18) == Rational(34, 199));
    for (int N = 1; N <= 14; ++N) CHECK(d_value(cache(), {1, N}).value == closed_form_d1(cache(), N));
}

TEST_CASE("d-values decrease and stay above the limit") {
    const Surd limit = d1_limit();
    Rational prev(1);
    for (int N = 1; N <= 14; ++N) {
        const Rational d = d_value(cache(), {1, N}).value;
        CHECK(d <= prev);
        CHECK((Surd(d) - limit).sign() > 0);
        prev = d;
    }
}

TEST_CASE("nearest integers to F_n/(phi+2)") {
    CHECK(nearest_T(cache(), 1) == 0);
    CHECK(nearest_T(cache(), 3) == 1);
    CHECK(nearest_T(cache(), 6) == 2);
    CHECK(nearest_T(cache(), 7) == 4);
    const Surd a1 = alpha1();
    for (int n = 1; n <= 200; ++n) {
        const mpz_class t = nearest_T(cache(), n);
        CHECK(t == nearest_T_closed_form(cache(), n));
        const Surd gap = Surd(Rational(t)) - Surd(Rational(cache().fib(n))) * a1;
        CHECK((abs_surd(gap) - Surd(Rational(1, 2))).sign() < 0);
    }
    CHECK_THROWS_AS(nearest_T(cache(), 0), std::domain_error);
}

TEST_CASE("residual decomposition") {
    // strict decimal brackets for the first four residuals
    const ResidualReport r4 = residual(cache(), 4);
    CHECK(r4.main_term == Rational(1, 5));
    CHECK((r4.r - Surd(Rational(-30, 1000))).sign() > 0);
    CHECK((r4.r - Surd(Rational(-29, 1000))).sign() < 0);
    const ResidualReport r5 = residual(cache(), 5);
    CHECK(r5.main_term == Rational(-2, 5));
    CHECK((r5.r - Surd(Rational(18, 1000))).sign() > 0);
    CHECK((r5.r - Surd(Rational(19, 1000))).sign() < 0);
    const ResidualReport r6 = residual(cache(), 6);
    CHECK(r6.main_term == Rational(-1, 5));
    CHECK((r6.r - Surd(Rational(-12, 1000))).sign() > 0);
    CHECK((r6.r - Surd(Rational(-11, 1000))).sign() < 0);
    const ResidualReport r7 = residual(cache(), 7);
    CHECK(r7.main_term == Rational(2, 5));
    CHECK((r7.r - Surd(Rational(6, 1000))).sign() > 0);
    CHECK((r7.r - Surd(Rational(7, 1000))).sign() < 0);
    CHECK_THROWS_AS(residual(cache(), 3), std::domain_error);
}

TEST_CASE("residuals: decomposition identity, closed form, decay, signs") {
    const Surd a1 = alpha1();
    Surd prev_abs;
    for (int n = 4; n <= 101; ++n) {
        const ResidualReport rep = residual(cache(), n);
        // T_n - F_n/(phi+2) = main + r exactly
        const Surd diff = Surd(Rational(nearest_T(cache(), n))) -
                          Surd(Rational(cache().fib(n))) * a1;
        CHECK(diff == Surd(rep.main_term) + rep.r);
        // same value through the closed form
        CHECK(rep.r == residual_closed_form(cache(), n));
        // strict alternation of sign with n mod 4
        const int expected_sign = (n % 4 == 0 || n % 4 == 2) ? -1 : 1;
        CHECK(rep.r.sign() == expected_sign);
        // strictly decreasing magnitude
        const Surd cur_abs = abs_surd(rep.r);
        if (n > 4) CHECK((cur_abs - prev_abs).sign() < 0);
        prev_abs = cur_abs;
    }
}

TEST_CASE("explicit envelope formula instances") {
    for (int t = 1; t <= 6; ++t) CHECK(verify_lemma4(cache(), t));
    // boundaries for t = 1
    const auto pieces = lemma4_case_list(cache(), 1);
    REQUIRE(pieces.size() == 9);  // the two collinear middle pieces merge
    CHECK(pieces.front().lo == Rational(1, 5));
    CHECK(pieces[0].hi == Rational(2, 9));
    CHECK(pieces[1].hi == Rational(3, 13));
    CHECK(pieces[2].hi == Rational(5, 21));
    CHECK(pieces[3].hi == Rational(1, 4));
    CHECK(pieces[4].hi == Rational(3, 11));
    CHECK(pieces[5].hi == Rational(3, 10));
    CHECK(pieces[6].hi == Rational(4, 13));
    CHECK(pieces[7].hi == Rational(5, 16));
    CHECK(pieces.back().hi == Rational(1, 3));
    for (int t = 2; t <= 4; ++t) CHECK(lemma4_case_list(cache(), t).size() == 10);
}

TEST_CASE("proposition instances") {
    for (int t = 1; t <= 4; ++t) {
        const PropReport rep = verify_propositions(cache(), t);
        CHECK(rep.all_pass());
        CHECK(rep.checks.size() >= 19);
    }
    // the t = 1 product identities in the open
    CHECK(nearest_T(cache(), 6) + 1 == cache().fib(1) * cache().fib(4));
    CHECK(cache().fib(6) + 3 == cache().fib(1) * (cache().fib(4) + cache().fib(6)));
}

TEST_CASE("minimum distance along alpha1") {
    CHECK(theorem2_min(cache(), 1) == alpha1());
    CHECK(theorem2_min(cache(), 2) == alpha1());
    CHECK(theorem2_min(cache(), 4) == d1_limit());
    CHECK(theorem2_min(cache(), 40) == d1_limit());
}

TEST_CASE("window search over alpha1 distances") {
    CHECK(theorem3_search(cache(), 10, Rational(1, 20), 50) == 1);
    // supporting exact bounds: |r(8)| > 1/1000 > |r(12)|, so multiples of
    // four below 12 spoil a window while 12 and 16 do not.
    CHECK((abs_surd(residual(cache(), 8).r) - Surd(Rational(1, 1000))).sign() > 0);
    CHECK((abs_surd(residual(cache(), 12).r) - Surd(Rational(1, 1000))).sign() < 0);
    CHECK(theorem3_search(cache(), 10, Rational(1, 1000), 100) == 9);
    CHECK(theorem3_search(cache(), 10, Rational(0), 100) == std::nullopt);
    const auto profile = alpha1_window_profile(cache(), 9, 10);
    REQUIRE(profile.size() == 11);
    const Surd threshold(Rational(1, 5) - Rational(1, 1000));
    for (const auto& [k, d] : profile) CHECK((d - threshold).sign() > 0);
}

TEST_CASE("three-term and six-term window bounds") {
    CHECK(window_bounds_property(cache(), Rational(0), 5) ==
          std::make_pair(Rational(0), Rational(0)));
    CHECK(window_bounds_property(cache(), Rational(3, 11), 2) ==
          std::make_pair(Rational(3, 11), Rational(2, 11)));
    CHECK(window_bounds_property(cache(), Rational(1, 2), 3).second == Rational(0));
    CHECK_THROWS_AS(window_bounds_property(cache(), Rational(1, 3), 1), std::domain_error);

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long long> den(1, 1000000);
    std::uniform_int_distribution<int> ks(2, 40);
    for (int i = 0; i < 200; ++i) {
        const long long q = den(rng);
        std::uniform_int_distribution<long long> num(0, q);
        const auto [three, six] = window_bounds_property(cache(), Rational(num(rng), q), ks(rng));
        CHECK(three <= Rational(1, 3));
        CHECK(six <= Rational(1, 5));
    }
}

TEST_CASE("three-term bound for powers of phi") {
    CHECK(phi_window_property(cache(), Surd(Rational(0)), 3) == Surd(Rational(0)));
    // alpha = 1, n = 2: the closest is ||phi^3|| = sqrt5 - 2
    CHECK(phi_window_property(cache(), Surd(Rational(1)), 2) == Surd(Rational(-2), Rational(1)));
    const Surd third(Rational(1, 3));
    CHECK((phi_window_property(cache(), alpha1(), 5) - third).sign() <= 0);
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 50);
    std::uniform_int_distribution<int> ns(1, 60);
    for (int i = 0; i < 60; ++i) {
        const Surd alpha(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK((phi_window_property(cache(), alpha, ns(rng)) - third).sign() <= 0);
    }
}

TEST_CASE("six-term windows approach one fifth from below") {
    const Rational fifth(1, 5);
    Rational prev(0);
    for (int K = 1; K <= 10; ++K) {
        const Rational d = d_value(cache(), {K, 6}).value;
        CHECK(d <= fifth);
        if (K > 1) CHECK(d >= prev);  // drifting up towards 1/5
        prev = d;
    }
    CHECK(fifth - prev < Rational(1, 1000));
}
