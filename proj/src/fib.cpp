#include "fibmm/fib.hpp"

#include <stdexcept>
#include <string>

namespace fibmm {

FibCache::FibCache(int n_max) : n_max_(n_max) {
    if (n_max < 2) throw std::domain_error("FibCache: n_max must be at least 2");
    fib_.reserve(static_cast<size_t>(n_max) + 2);
    fib_.push_back(1);  // F_{-1}
    fib_.push_back(0);  // F_0
    for (int n = 1; n <= n_max; ++n) fib_.push_back(fib_[n] + fib_[n - 1]);
    lucas_.reserve(static_cast<size_t>(n_max) + 1);
    lucas_.push_back(2);  // L_0
    lucas_.push_back(1);  // L_1
    for (int n = 2; n <= n_max; ++n) lucas_.push_back(lucas_[n - 1] + lucas_[n - 2]);
}

const mpz_class& FibCache::fib(int n) const {
    if (n < -1 || n > n_max_)
        throw std::out_of_range("fib: index " + std::to_string(n) + " outside [-1, " +
                                std::to_string(n_max_) + "]");
    return fib_[static_cast<size_t>(n) + 1];
}

const mpz_class& FibCache::lucas(int n) const {
    if (n < 0 || n > n_max_)
        throw std::out_of_range("lucas: index " + std::to_string(n) + " outside [0, " +
                                std::to_string(n_max_) + "]");
    return lucas_[static_cast<size_t>(n)];
}

mpz_class binet_exact(int n) {
    if (n < 0) throw std::domain_error("binet_exact: n must be >= 0");
    const Surd phi = Surd::golden_ratio();
    const Surd psi = Surd(Rational(1)) - phi;  // 1 - phi, the conjugate root
    const Surd diff = phi.pow(static_cast<unsigned long>(n)) - psi.pow(static_cast<unsigned long>(n));
    // diff = F_n * sqrt5 exactly.
    if (!diff.a().is_zero() || !diff.b().is_integer())
        throw std::runtime_error("binet_exact: inconsistent surd arithmetic at n=" +
                                 std::to_string(n));
    return diff.b().num();
}

mpz_class cassini(const FibCache& cache, int n) {
    if (n < 1) throw std::domain_error("cassini: n must be >= 1");
    return cache.fib(n + 1) * cache.fib(n - 1) - cache.fib(n) * cache.fib(n);
}

bool double_index_identity(const FibCache& cache, int t) {
    if (t < 1) throw std::domain_error("double_index_identity: t must be >= 1");
    const mpz_class& hi = cache.fib(t + 1);
    const mpz_class& lo = cache.fib(t - 1);
    return cache.fib(2 * t) == hi * hi - lo * lo;
}

Surd phi_power(const FibCache& cache, int n) {
    if (n < 0) throw std::domain_error("phi_power: n must be >= 0");
    return Surd(Rational(cache.lucas(n), mpz_class(2)), Rational(cache.fib(n), mpz_class(2)));
}

}  // namespace fibmm
