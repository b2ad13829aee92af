#pragma once

#include <gmpxx.h>

#include <vector>

#include "fibmm/surd.hpp"

namespace fibmm {

/// Table of Fibonacci numbers F_n for -1 <= n <= n_max and Lucas numbers
/// L_n for 0 <= n <= n_max, with F_{-1} = 1, F_0 = 0, F_1 = F_2 = 1 and
/// L_0 = 2, L_1 = 1. Built once, immutable afterwards.
class FibCache {
public:
    static constexpr int kDefaultNMax = 256;

    explicit FibCache(int n_max = kDefaultNMax);

    int n_max() const { return n_max_; }

    /// F_n; throws std::out_of_range outside [-1, n_max].
    const mpz_class& fib(int n) const;

    /// L_n; throws std::out_of_range outside [0, n_max].
    const mpz_class& lucas(int n) const;

private:
    int n_max_;
    std::vector<mpz_class> fib_;    // fib_[i] = F_{i-1}
    std::vector<mpz_class> lucas_;  // lucas_[i] = L_i
};

/// (phi^n - (1-phi)^n)/sqrt5, evaluated by exact Surd exponentiation.
/// The difference must come out as a pure sqrt5 multiple with an integer
/// coefficient; anything else signals an arithmetic bug and throws
/// std::runtime_error. Deliberately does not consult the cache tables,
/// so the result is an independent route to F_n.
mpz_class binet_exact(int n);

/// F_{n+1} F_{n-1} - F_n^2, which equals (-1)^n.
mpz_class cassini(const FibCache& cache, int n);

/// Whether F_{2t} = F_{t+1}^2 - F_{t-1}^2.
bool double_index_identity(const FibCache& cache, int t);

/// phi^n = (L_n + F_n sqrt5)/2 from the cached tables.
Surd phi_power(const FibCache& cache, int n);

}  // namespace fibmm
