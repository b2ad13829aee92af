#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibmm/fib.hpp"
#include "fibmm/pwl.hpp"
#include "fibmm/surd.hpp"

namespace fibmm {

/// Window of Fibonacci indices k = K, ..., K+N-1.
struct WindowSpec {
    int K = 1;  // first index, >= 1
    int N = 1;  // window length, >= 1
};

/// Largest Fibonacci index admitted in a full-domain envelope; the
/// piece count grows like F_{K+N}, so this is a memory guard, not a
/// mathematical limit. Restricted envelopes are exempt.
inline constexpr int kMaxEnvelopeIndex = 30;

/// Distance ||F_k x|| tagged with its index.
struct WindowDistance {
    int k;
    Rational dist;
};

/// Extremal value of a windowed envelope together with every maximizer
/// and, per maximizer, the full per-index distance profile.
struct MinMaxResult {
    Rational value;
    std::vector<Rational> argmax;                       // increasing
    std::vector<std::vector<WindowDistance>> profiles;  // parallel to argmax
};

/// Nearest-integer decomposition T_n - F_n/(phi+2) = main_term + r.
struct ResidualReport {
    int n;
    Rational main_term;  // one of 1/5, -2/5, -1/5, 2/5 by n mod 4
    Surd r;
};

/// One named pass/fail outcome of an instance verification.
struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

/// Per-instance report; all_pass() is the aggregate verdict.
struct PropReport {
    int t = 0;
    std::vector<Check> checks;
    bool all_pass() const;
};

/// 1/(phi+2) = (5 - sqrt5)/10.
Surd alpha1();

/// (phi-1)/(phi+2) = (3 sqrt5 - 5)/10, the limit of the d-values.
Surd d1_limit();

/// (sqrt5 - 1)/4, the general power-sequence bound specialized to phi.
Surd dubickas_constant();

/// min_{k in window} ||F_k x|| as a piecewise-linear function on [0, 1/2].
Pwl envelope_window(const FibCache& cache, WindowSpec spec);

/// The same restricted to [lo, hi]; cost scales with the subinterval,
/// so it stays cheap even when the full envelope would be astronomically
/// large.
Pwl envelope_window_on(const FibCache& cache, WindowSpec spec, const Rational& lo,
                       const Rational& hi);

/// Exact max-min value over the window, with all maximizers.
MinMaxResult d_value(const FibCache& cache, WindowSpec spec);

/// The closed form for the K = 1 value: 1/2, 1/2, 1/3, 1/4, 1/4 for
/// N <= 5 and F_{2n+1}/(F_{2n+2} + F_{2n+4}) with n = floor((N-2)/4)
/// for N >= 6.
Rational closed_form_d1(const FibCache& cache, int N);

/// T_n = F_{n-2} - F_{n-4} + F_{n-6} - ..., the nearest integer to
/// F_n/(phi+2).
mpz_class nearest_T(const FibCache& cache, int n);

/// The same via the mod-4 closed forms (2 F_{4t} - F_{4t-1} + 1)/5 etc.
mpz_class nearest_T_closed_form(const FibCache& cache, int n);

/// Residual r(n) computed from the exact difference T_n - F_n/(phi+2).
ResidualReport residual(const FibCache& cache, int n);

/// r(n) via the closed form c * (1-phi)^{4t-2} / (sqrt5 (phi+2)) with
/// c one of (1-phi), (2-phi), (3-2phi), (5-3phi) by n mod 4.
Surd residual_closed_form(const FibCache& cache, int n);

/// The 10-piece explicit case list for the envelope of k = 1..4t+3 on
/// [T_{4t+1}/F_{4t+1}, T_{4t}/F_{4t}]. At t = 1 two adjacent pieces
/// share the line 1-3x and the degenerate boundary between them is
/// dropped.
std::vector<CasePiece> lemma4_case_list(const FibCache& cache, int t);

/// Whether the computed envelope matches lemma4_case_list on its segment.
bool verify_lemma4(const FibCache& cache, int t);

/// Exact instance checks of the ordering chain, the zero set, the seam
/// equalities, the single-sawtooth case lists and the product
/// identities behind the closed form, for one t.
PropReport verify_propositions(const FibCache& cache, int t);

/// min_{n<=N} ||F_n/(phi+2)||, exact; equals (phi-1)/(phi+2) once N >= 4.
Surd theorem2_min(const FibCache& cache, int N);

/// Smallest K <= k_max with min_{k=K..K+N} ||F_k/(phi+2)|| > 1/5 - eps
/// (note the window has N+1 indices), or nullopt.
std::optional<int> theorem3_search(const FibCache& cache, int N, const Rational& eps, int k_max);

/// Exact distances ||F_k/(phi+2)|| for k = K..K+N, for reporting.
std::vector<std::pair<int, Surd>> alpha1_window_profile(const FibCache& cache, int K, int N);

/// (min over {K-1, K, K+1}, min over {K..K+5}) of ||F_j alpha||; the
/// first is always <= 1/3 and the second <= 1/5.
std::pair<Rational, Rational> window_bounds_property(const FibCache& cache, const Rational& alpha,
                                                     int K);

/// min over j in {n-1, n, n+1} of ||phi^j alpha||, exact; always <= 1/3.
Surd phi_window_property(const FibCache& cache, const Surd& alpha, int n);

}  // namespace fibmm
