#ifndef CWL_BOUNDS_HPP
#define CWL_BOUNDS_HPP

#include "cwl/counting.hpp"
#include "cwl/numeric.hpp"

#include <string>
#include <vector>

namespace cwl::bounds {

// One exact lhs <= rhs comparison. `ratio` is lhs/rhs rendered as a decimal
// string for display; every pass/fail decision is made on the exact values.
struct BoundReport {
    std::string check;
    int k = 0;
    long long n = -1;  // -1 = not applicable
    int t = -1;        // -1 = not applicable
    std::string detail;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    std::string ratio;
};

BoundReport make_report(std::string check, int k, long long n, int t,
                        std::string detail, Rational lhs, Rational rhs);

std::string csv_header();
std::string to_csv(const BoundReport& report);
bool all_hold(const std::vector<BoundReport>& reports);

// beta_k(t) = k - (k-1) k^{-t-1}, the upper-bound base for A_k(n,0^t).
Rational beta(int k, int t);

// beta_k(t) >= k - (k-1) beta_k(t)^{-t}
BoundReport check_beta_fixedpoint(int k, int t);

// A_k(n,0^t) <= beta_k(t)^n for 2t <= n <= n_max
std::vector<BoundReport> check_A_beta_bound(int k, int t, int n_max);

// k^t - g t k^{t-1} <= (k-g)^t <= k^t - g t k^{t-1} + g^2 t(t-1) k^{t-2}/2
// for 0 < g <= 6/t; one report per side.
std::vector<BoundReport> check_binomial_ineq(int k, int t, const Rational& gamma);

// B_k(n,u) <= A_k(n-2t,0^t) for every length-t word u.
std::vector<BoundReport> check_B_bounded_by_A(int k, int n, int t,
                                              const EnumOptions& opts = {});

// Per-t rows C_k(n,t) <= k^t A_k(n-2t,0^t) for t <= n/2, plus the total
// C_k(n) <= sum_t k^t A_k(n-2t,0^t) + n k^{ceil(n/2)}.
std::vector<BoundReport> check_corollary8(int k, int n, counting::TableCache& cache);

// P_k(n,t) <= P_k(t) A_k(n-2t,0^t) for 1 <= t <= n/2.
std::vector<BoundReport> check_lemma15(int k, int n, counting::TableCache& cache);

// t-selection: the scan works with exact integer thresholds
// A_t = t + ceil(k^t ln(k)/(k-1)), so every comparison against the
// irrational bound is decided exactly (via rational interval enclosures of
// ln k, widened until the ceiling is determined).
struct TStarResult {
    int t = 0;                // largest t with (ln k/(k-1)) k^t <= n - t
    bool interval_hit = false;  // double inequality holds at that t
    int solution_count = 0;   // exact solution count of the double inequality (0 or 1)
};

TStarResult t_star_scan(int k, long long n);

// The unique double-inequality solution when one exists; otherwise the
// largest t satisfying the lower inequality (the two agree whenever the
// double inequality has a solution at all).
int t_star(int k, long long n);

// Height-j exponential tower of k; iter_log's domain is n strictly above it.
double iter_log_threshold(int k, int j);
double iter_log(int k, int j, double n);  // log_k iterated j times

struct LogLimitRow {
    double n = 0;
    double ratio = 0;
};
struct LogLimitReport {
    double target = 1;  // gamma when i == 1, else 1
    std::vector<LogLimitRow> rows;
};

// Ratio log^{(i)}(n^gamma) / log^{(i)}(n) along a squaring ladder of n.
// Numeric illustration only; never used in a pass/fail check.
LogLimitReport check_loglimit(int k, int i, double gamma, int samples);

struct EnvelopeRow {
    int n = 0;
    std::string c_ratio;        // C_k(n) n / k^n (exact decimal)
    std::string p_upper_ratio;  // P_k(n) n prod_{i=1..j} log^{(i)}(n) / k^n
    std::string p_lower_ratio;  // previous times log^{(j)}(n)
};

std::string envelope_csv_header();
std::string to_csv(const EnvelopeRow& row);

// Ratio columns for the asymptotic envelopes; report-only (the constants
// are existential). Log-factor cells are blank below the iter_log domain.
std::vector<EnvelopeRow> envelope_report(int k, int n_lo, int n_hi, int j,
                                         counting::TableCache& cache);

// Correlation-polynomial ordering: f_{a(u)}(2) > f_{a(v)}(2) implies
// A_k(m,u) >= A_k(m,v) for m <= m_max, checked over all length-t pattern
// pairs; also checks that runs maximize f(2) and A.
std::vector<BoundReport> check_correlation_order(int k, int t, int m_max,
                                                 const EnumOptions& opts = {});

}  // namespace cwl::bounds

#endif
