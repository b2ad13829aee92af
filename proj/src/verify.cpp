#include "fibmm/verify.hpp"

#include <algorithm>
#include <random>

namespace fibmm {

namespace {

void add(std::vector<Check>& out, std::string name, bool pass, std::string detail = "") {
    out.push_back(Check{std::move(name), pass, std::move(detail)});
}

}  // namespace

std::vector<Check> suite_identities(const FibCache& cache, int max_n) {
    std::vector<Check> out;
    if (max_n > cache.n_max()) max_n = cache.n_max();
    {
        bool ok = true;
        for (int n = 0; n < max_n; ++n)
            ok = ok && cache.fib(n + 1) == cache.fib(n) + cache.fib(n - 1);
        add(out, "recurrence F_{n+1} = F_n + F_{n-1} up to " + std::to_string(max_n), ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= max_n; ++n) ok = ok && binet_exact(n) == cache.fib(n);
        add(out, "surd route (phi^n - (1-phi)^n)/sqrt5 = F_n up to " + std::to_string(max_n), ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= max_n; ++n) {
            const mpz_class expected = n % 2 == 0 ? 1 : -1;
            ok = ok && cassini(cache, n) == expected;
        }
        add(out, "Cassini F_{n+1}F_{n-1} - F_n^2 = (-1)^n up to " + std::to_string(max_n), ok);
    }
    {
        bool ok = true;
        for (int t = 1; t <= max_n / 2; ++t) ok = ok && double_index_identity(cache, t);
        add(out, "index doubling F_{2t} = F_{t+1}^2 - F_{t-1}^2 up to t = " +
                     std::to_string(max_n / 2),
            ok);
    }
    {
        bool ok = true;
        const Surd phi = Surd::golden_ratio();
        Surd power(Rational(1));
        for (int n = 0; n <= std::min(max_n, 120); ++n) {
            ok = ok && phi_power(cache, n) == power;
            power = power * phi;
        }
        ok = ok && phi_power(cache, 0) == Surd(Rational(1));
        for (int n = 1; n < std::min(max_n, 120); ++n)
            ok = ok && phi_power(cache, n + 1) == phi_power(cache, n) + phi_power(cache, n - 1);
        add(out, "phi powers (L_n + F_n sqrt5)/2 and their recurrence", ok);
    }
    return out;
}

std::vector<Check> suite_lemma3(const FibCache& cache, int max_n) {
    std::vector<Check> out;
    if (max_n > cache.n_max()) max_n = cache.n_max();
    const Surd a1 = alpha1();
    const Rational half(1, 2);
    bool sums_match = true, nearest = true;
    for (int n = 1; n <= max_n; ++n) {
        const mpz_class t = nearest_T(cache, n);
        sums_match = sums_match && t == nearest_T_closed_form(cache, n);
        const Surd gap = Surd(Rational(t)) - Surd(Rational(cache.fib(n))) * a1;
        const Surd abs_gap = gap.sign() < 0 ? -gap : gap;
        nearest = nearest && (abs_gap - Surd(half)).sign() < 0;
    }
    add(out, "alternating sum matches the mod-4 closed forms up to n = " + std::to_string(max_n),
        sums_match);
    add(out, "|T_n - F_n/(phi+2)| < 1/2 up to n = " + std::to_string(max_n), nearest);
    return out;
}

std::vector<Check> suite_lemma4(const FibCache& cache, int max_t) {
    std::vector<Check> out;
    for (int t = 1; t <= max_t; ++t)
        add(out, "envelope matches the 10-piece case list, t = " + std::to_string(t),
            verify_lemma4(cache, t));
    return out;
}

std::vector<Check> suite_props(const FibCache& cache, int max_t) {
    std::vector<Check> out;
    for (int t = 1; t <= max_t; ++t) {
        const PropReport report = verify_propositions(cache, t);
        for (const Check& c : report.checks)
            add(out, "t = " + std::to_string(t) + ": " + c.name, c.pass, c.detail);
    }
    return out;
}

std::vector<Check> suite_thm2(const FibCache& cache, int max_n) {
    std::vector<Check> out;
    const Surd expected_small = alpha1();
    const Surd expected_tail = d1_limit();
    bool small_ok = true;
    for (int n = 1; n <= std::min(2, max_n); ++n)
        small_ok = small_ok && theorem2_min(cache, n) == expected_small;
    add(out, "minimum for N <= 2 equals alpha1 itself", small_ok);
    bool tail_ok = true;
    for (int n = 4; n <= max_n; ++n) tail_ok = tail_ok && theorem2_min(cache, n) == expected_tail;
    add(out, "minimum equals (phi-1)/(phi+2) for 4 <= N <= " + std::to_string(max_n), tail_ok);
    return out;
}

std::vector<Check> suite_thm3(const FibCache& cache) {
    std::vector<Check> out;
    const auto k1 = theorem3_search(cache, 10, Rational(1, 20), 50);
    add(out, "N = 10, eps = 1/20: window found at K = 1", k1.has_value() && *k1 == 1);
    const auto k2 = theorem3_search(cache, 10, Rational(1, 1000), 100);
    add(out, "N = 10, eps = 1/1000: first admissible window is K = 9", k2.has_value() && *k2 == 9);
    const auto k3 = theorem3_search(cache, 10, Rational(0), 100);
    add(out, "N = 10, eps = 0: no window exists", !k3.has_value());
    return out;
}

std::vector<Check> suite_thm4(const FibCache& cache, int max_n) {
    std::vector<Check> out;
    const Rational expected[] = {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 4),
                                 Rational(1, 5), Rational(1, 5), Rational(1, 5)};
    Rational prev(1);
    for (int n = 2; n <= max_n; ++n) {
        const PlanarResult res = t_value(cache, n);
        if (n - 2 < 7)
            add(out, "t_" + std::to_string(n) + " = " + expected[n - 2].str(),
                res.t == expected[n - 2]);
        add(out, "t_" + std::to_string(n) + " <= t_" + std::to_string(n - 1), res.t <= prev);
        prev = res.t;
    }
    auto point = [](long xn, long xd, long yn, long yd) {
        return PlanarPoint{Rational(xn, xd), Rational(yn, yd)};
    };
    const std::vector<std::pair<int, std::vector<PlanarPoint>>> listings = {
        {2, {point(1, 2, 1, 2)}},
        {3, {point(1, 3, 1, 3), point(2, 3, 2, 3)}},
        {4, {point(1, 4, 1, 4), point(1, 4, 1, 2), point(3, 4, 1, 2), point(3, 4, 3, 4)}},
        {5, {point(1, 4, 1, 4), point(3, 4, 3, 4)}},
        {6, {point(1, 5, 3, 5), point(2, 5, 1, 5), point(3, 5, 4, 5), point(4, 5, 2, 5)}},
    };
    for (const auto& [n, expected_pts] : listings) {
        if (n > max_n) continue;
        const PlanarResult res = t_value(cache, n);
        add(out, "maximizer set for N = " + std::to_string(n), res.maximizers == expected_pts);
    }
    return out;
}

std::vector<Check> suite_windows(const FibCache& cache, int samples, unsigned long long seed) {
    std::vector<Check> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> den_dist(1, 1000000);
    std::uniform_int_distribution<int> k_dist(2, 40);
    const Rational third(1, 3), fifth(1, 5);
    bool three_ok = true, six_ok = true;
    for (int i = 0; i < samples; ++i) {
        const long long q = den_dist(rng);
        std::uniform_int_distribution<long long> num_dist(0, q);
        const Rational alpha(num_dist(rng), q);
        const int K = k_dist(rng);
        const auto [three, six] = window_bounds_property(cache, alpha, K);
        three_ok = three_ok && three <= third;
        six_ok = six_ok && six <= fifth;
    }
    add(out, "three-term window minimum <= 1/3 over " + std::to_string(samples) + " samples",
        three_ok);
    add(out, "six-term window minimum <= 1/5 over " + std::to_string(samples) + " samples", six_ok);
    bool dk_ok = true;
    for (int K = 1; K <= 12; ++K) dk_ok = dk_ok && d_value(cache, {K, 6}).value <= fifth;
    add(out, "six-term max-min <= 1/5 for K = 1..12", dk_ok);
    return out;
}

}  // namespace fibmm
