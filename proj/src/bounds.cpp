#include "cwl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cwl::bounds {

namespace {

std::string symbols_to_text(std::span<const Symbol> w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol c : w) s.push_back(c < 10 ? static_cast<char>('0' + c)
                                          : static_cast<char>('a' + c - 10));
    return s;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

}  // namespace

BoundReport make_report(std::string check, int k, long long n, int t,
                        std::string detail, Rational lhs, Rational rhs) {
    BoundReport r;
    r.check = std::move(check);
    r.k = k;
    r.n = n;
    r.t = t;
    r.detail = std::move(detail);
    r.holds = lhs <= rhs;
    r.ratio = rhs == 0 ? std::string() : decimal_ratio(lhs / rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

std::string csv_header() { return "check,k,n,t,detail,lhs,rhs,holds,ratio"; }

std::string to_csv(const BoundReport& r) {
    std::ostringstream os;
    os << r.check << ',' << r.k << ',';
    if (r.n >= 0) os << r.n;
    os << ',';
    if (r.t >= 0) os << r.t;
    os << ',' << r.detail << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ','
       << (r.holds ? "true" : "false") << ',' << r.ratio;
    return os.str();
}

bool all_hold(const std::vector<BoundReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const BoundReport& r) { return r.holds; });
}

Rational beta(int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("beta needs k >= 2 and t >= 1");
    return Rational(k) - Rational(k - 1, pow_count(k, static_cast<unsigned>(t) + 1));
}

BoundReport check_beta_fixedpoint(int k, int t) {
    const Rational b = beta(k, t);
    const Rational lhs = Rational(k) - Rational(k - 1) / pow_rational(b, static_cast<unsigned>(t));
    return make_report("lemma12", k, -1, t, "", lhs, b);
}

std::vector<BoundReport> check_A_beta_bound(int k, int t, int n_max) {
    if (k < 2 || t < 2) throw std::invalid_argument("the run bound needs k >= 2 and t >= 2");
    if (n_max < 2 * t) throw std::invalid_argument("n_max must be at least 2t");
    const Rational b = beta(k, t);
    Rational power = pow_rational(b, static_cast<unsigned>(2 * t));
    std::vector<BoundReport> rows;
    rows.reserve(static_cast<std::size_t>(n_max - 2 * t) + 1);
    for (int n = 2 * t; n <= n_max; ++n) {
        rows.push_back(make_report("lemma14", k, n, t, "",
                                   Rational(counting::count_avoiding_run(k, n, t)), power));
        power *= b;
    }
    return rows;
}

std::vector<BoundReport> check_binomial_ineq(int k, int t, const Rational& gamma) {
    if (k < 2 || t < 2) throw std::invalid_argument("the binomial bound needs k, t >= 2");
    if (gamma <= 0 || gamma > Rational(6, t)) {
        throw std::domain_error("gamma must satisfy 0 < gamma <= 6/t");
    }
    const Rational mid = pow_rational(Rational(k) - gamma, static_cast<unsigned>(t));
    const Rational kt1 = Rational(pow_count(k, static_cast<unsigned>(t - 1)));
    const Rational lower = Rational(pow_count(k, static_cast<unsigned>(t))) - gamma * t * kt1;
    const Rational upper =
        lower + gamma * gamma * t * (t - 1) * Rational(pow_count(k, static_cast<unsigned>(t - 2))) / 2;
    std::vector<BoundReport> rows;
    rows.push_back(make_report("lemma3", k, -1, t, "lower<=(k-g)^t", lower, mid));
    rows.push_back(make_report("lemma3", k, -1, t, "(k-g)^t<=upper", mid, upper));
    return rows;
}

std::vector<BoundReport> check_B_bounded_by_A(int k, int n, int t, const EnumOptions& opts) {
    if (t < 1 || n < 2 * t) throw std::invalid_argument("need n >= 2t >= 2");
    const auto closed_by = counting::count_closed_by_all(k, n, t, opts);
    const Rational bound(counting::count_avoiding_run(k, n - 2 * t, t));
    std::vector<BoundReport> rows;
    rows.reserve(closed_by.size());
    std::vector<Symbol> pattern(static_cast<std::size_t>(t), 0);
    for (const Count& b : closed_by) {
        rows.push_back(make_report("lemma6", k, n, t, symbols_to_text(pattern), Rational(b), bound));
        detail::increment_word(pattern, k);
    }
    return rows;
}

std::vector<BoundReport> check_corollary8(int k, int n, counting::TableCache& cache) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<BoundReport> rows;
    Rational sum = 0;
    for (int t = 1; t <= n / 2; ++t) {
        const auto& row = cache.closed_row(k, n);
        auto it = row.find(t);
        const Count cell = it == row.end() ? Count(0) : it->second;
        const Rational bound = Rational(pow_count(k, static_cast<unsigned>(t))) *
                               Rational(counting::count_avoiding_run(k, n - 2 * t, t));
        sum += bound;
        rows.push_back(make_report("lemma7", k, n, t, "", Rational(cell), bound));
    }
    sum += Rational(n) * Rational(pow_count(k, static_cast<unsigned>((n + 1) / 2)));
    rows.push_back(make_report("corollary8", k, n, -1, "total",
                               Rational(cache.closed_total(k, n)), sum));
    return rows;
}

std::vector<BoundReport> check_lemma15(int k, int n, counting::TableCache& cache) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::vector<BoundReport> rows;
    const auto& row = cache.privileged_row(k, n);
    for (int t = 1; t <= n / 2; ++t) {
        auto it = row.find(t);
        const Count cell = it == row.end() ? Count(0) : it->second;
        const Rational bound = Rational(cache.privileged_total(k, t)) *
                               Rational(counting::count_avoiding_run(k, n - 2 * t, t));
        rows.push_back(make_report("lemma15", k, n, t, "", Rational(cell), bound));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// t-selection with exact thresholds
// ---------------------------------------------------------------------------

namespace {

struct RatInterval {
    Rational lo, hi;
};

// Enclosure of ln k via the atanh series at x = (k-1)/(k+1), tightened
// until the tail bound drops below 2^-bits.
RatInterval ln_enclosure(int k, int bits) {
    const Rational x(k - 1, k + 1);
    const Rational x2 = x * x;
    const Rational eps(1, pow_count(2, static_cast<unsigned>(bits)));
    Rational term = x;  // x^{2i+1}
    Rational sum = 0;
    for (int i = 0;; ++i) {
        sum += term / (2 * i + 1);
        const Rational next = term * x2;
        const Rational tail = 2 * next / (Rational(2 * i + 3) * (1 - x2));
        if (tail <= eps) return {2 * sum, 2 * sum + tail};
        term = next;
    }
}

std::mutex g_tstar_mutex;
std::map<int, std::pair<int, RatInterval>> g_ln_cache;          // k -> (bits, enclosure)
std::map<int, std::vector<long long>> g_threshold_cache;        // k -> A_t list

const RatInterval& ln_cached(int k, int bits) {
    auto& entry = g_ln_cache[k];
    if (entry.first < bits) entry = {bits, ln_enclosure(k, bits)};
    return entry.second;
}

// ceil(k^t ln(k)/(k-1)), exact. ln k is irrational, so the enclosure
// eventually separates the value from every integer.
Count threshold_ceiling(int k, int t) {
    const Rational scale = Rational(pow_count(k, static_cast<unsigned>(t)), k - 1);
    for (int bits = 96;; bits *= 2) {
        const RatInterval& iv = ln_cached(k, bits);
        const Count lo = ceil_rational(iv.lo * scale);
        const Count hi = ceil_rational(iv.hi * scale);
        if (lo == hi) return lo;
    }
}

// A_t = t + ceil(k^t ln(k)/(k-1)): the smallest n whose lower inequality
// holds at t. Strictly increasing in t.
const std::vector<long long>& thresholds(int k, long long need_above) {
    auto& list = g_threshold_cache[k];
    while (list.empty() || list.back() <= need_above) {
        const int t = static_cast<int>(list.size());
        const Count value = Count(t) + threshold_ceiling(k, t);
        if (value > std::numeric_limits<long long>::max() / 2) {
            throw std::domain_error("t-selection scan out of supported range");
        }
        list.push_back(static_cast<long long>(value));
    }
    return list;
}

}  // namespace

TStarResult t_star_scan(int k, long long n) {
    if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (n < 1) throw std::invalid_argument("t-selection needs n >= 1");
    std::scoped_lock lock(g_tstar_mutex);
    const auto& a = thresholds(k, n);  // a.back() > n, a[0] = 1 <= n
    int t = 0;
    while (a[static_cast<std::size_t>(t) + 1] <= n) ++t;
    // The double inequality holds at t iff n - t < (ln k/(k-1)) k^{t+1},
    // i.e. n <= A_{t+1} - 2; the single integer A_{t+1} - 1 falls in the
    // one-unit gap between consecutive intervals and has no solution.
    TStarResult result;
    result.t = t;
    result.interval_hit = n <= a[static_cast<std::size_t>(t) + 1] - 2;
    result.solution_count = result.interval_hit ? 1 : 0;
    return result;
}

int t_star(int k, long long n) { return t_star_scan(k, n).t; }

double iter_log_threshold(int k, int j) {
    double tower = 1.0;
    for (int i = 0; i < j; ++i) {
        tower = std::pow(static_cast<double>(k), tower);
        if (std::isinf(tower)) break;
    }
    return tower;
}

double iter_log(int k, int j, double n) {
    if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (j < 0) throw std::invalid_argument("iteration depth must be nonnegative");
    if (!(n > iter_log_threshold(k, j))) {
        throw std::domain_error("iterated logarithm argument at or below its validity threshold");
    }
    double v = n;
    const double logk = std::log(static_cast<double>(k));
    for (int i = 0; i < j; ++i) v = std::log(v) / logk;
    return v;
}

LogLimitReport check_loglimit(int k, int i, double gamma, int samples) {
    if (i < 1) throw std::invalid_argument("loglimit needs i >= 1");
    if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    LogLimitReport report;
    report.target = i == 1 ? gamma : 1.0;
    // Start high enough that both n and n^gamma are inside the domain.
    double n = std::max(16.0, iter_log_threshold(k, i) * k * k);
    while (!(std::pow(n, gamma) > iter_log_threshold(k, i))) n *= n;
    for (int s = 0; s < samples; ++s) {
        const double powered = std::pow(n, gamma);
        if (std::isinf(n) || std::isinf(powered)) break;
        report.rows.push_back({n, iter_log(k, i, powered) / iter_log(k, i, n)});
        n *= n;  // squaring ladder
    }
    return report;
}

std::string envelope_csv_header() { return "n,c_ratio,p_ratio_upper,p_ratio_lower"; }

std::string to_csv(const EnvelopeRow& row) {
    std::ostringstream os;
    os << row.n << ',' << row.c_ratio << ',' << row.p_upper_ratio << ','
       << row.p_lower_ratio;
    return os.str();
}

std::vector<EnvelopeRow> envelope_report(int k, int n_lo, int n_hi, int j,
                                         counting::TableCache& cache) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    if (j < 0) throw std::invalid_argument("j must be nonnegative");
    std::vector<EnvelopeRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        EnvelopeRow row;
        row.n = n;
        const Count kn = pow_count(k, static_cast<unsigned>(n));
        row.c_ratio = decimal_ratio(Rational(cache.closed_total(k, n) * n, kn));
        const double p_base =
            static_cast<double>(Rational(cache.privileged_total(k, n) * n, kn));
        try {
            double log_product = 1.0;
            for (int i = 1; i <= j; ++i) log_product *= iter_log(k, i, n);
            row.p_upper_ratio = format_double(p_base * log_product);
            row.p_lower_ratio = format_double(p_base * log_product * iter_log(k, j, n));
        } catch (const std::domain_error&) {
            // below the iterated-log domain; leave the log columns blank
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// correlation-polynomial ordering
// ---------------------------------------------------------------------------

namespace {

// Avoid counts for every length-t pattern in one pass over the length-m
// word space, via a rolling window id and a per-word stamp.
struct WindowAvoidAcc {
    explicit WindowAvoidAcc(std::uint64_t patterns)
        : avoid(patterns, 0), stamp(patterns, 0) {}

    std::vector<std::uint64_t> avoid;
    std::vector<std::uint64_t> stamp;
    std::uint64_t serial = 0;

    void scan(std::span<const Symbol> w, std::uint64_t mult, int k, int t,
              std::uint64_t window_mod) {
        ++serial;
        const int m = static_cast<int>(w.size());
        if (m >= t) {
            std::uint64_t id = 0;
            for (int i = 0; i < m; ++i) {
                id = (id % window_mod) * static_cast<std::uint64_t>(k) + w[i];
                if (i >= t - 1) stamp[id] = serial;
            }
        }
        for (std::size_t u = 0; u < avoid.size(); ++u) {
            if (stamp[u] != serial) avoid[u] += mult;
        }
    }

    void absorb(WindowAvoidAcc&& other) {
        for (std::size_t i = 0; i < avoid.size(); ++i) avoid[i] += other.avoid[i];
    }
};

}  // namespace

std::vector<BoundReport> check_correlation_order(int k, int t, int m_max,
                                                 const EnumOptions& opts) {
    if (t < 1) throw std::invalid_argument("pattern length must be at least 1");
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    const std::uint64_t patterns = word_space_size(k, t, opts.max_states);
    const std::uint64_t window_mod =
        t == 1 ? 1 : word_space_size(k, t - 1, opts.max_states);

    // f_{a(u)}(2) for every pattern, in id order.
    std::vector<Count> f2(patterns);
    {
        std::vector<Symbol> pattern(static_cast<std::size_t>(t), 0);
        for (std::uint64_t id = 0; id < patterns; ++id) {
            f2[id] = correlation_poly_eval(
                autocorrelation(Word::from_symbols(pattern, k)), 2);
            detail::increment_word(pattern, k);
        }
    }

    // A_k(m, u) for every pattern and m <= m_max.
    std::vector<std::vector<std::uint64_t>> avoid(static_cast<std::size_t>(m_max) + 1);
    EnumOptions plain = opts;
    plain.canonical = false;
    for (int m = 0; m <= m_max; ++m) {
        auto acc = fold_words(k, m, plain, WindowAvoidAcc(patterns),
                              [&](WindowAvoidAcc& a, std::span<const Symbol> w,
                                  std::uint64_t mult) { a.scan(w, mult, k, t, window_mod); });
        avoid[static_cast<std::size_t>(m)] = std::move(acc.avoid);
    }

    const Count f2_max = pow_count(2, static_cast<unsigned>(t)) - 1;  // all-ones correlation
    std::vector<BoundReport> rows;
    std::vector<Symbol> pattern(static_cast<std::size_t>(t), 0);
    for (std::uint64_t id = 0; id < patterns; ++id) {
        rows.push_back(make_report("corrorder", k, -1, t, symbols_to_text(pattern),
                                   Rational(f2[id]), Rational(f2_max)));
        detail::increment_word(pattern, k);
    }

    // Pairwise ordering violations, plus the run-maximality check.
    long long violations = 0;
    for (std::uint64_t u = 0; u < patterns; ++u) {
        for (std::uint64_t v = 0; v < patterns; ++v) {
            if (f2[u] <= f2[v]) continue;
            for (int m = 1; m <= m_max; ++m) {
                if (avoid[static_cast<std::size_t>(m)][u] <
                    avoid[static_cast<std::size_t>(m)][v]) {
                    ++violations;
                    rows.push_back(make_report(
                        "corrorder", k, m, t, "pair",
                        Rational(avoid[static_cast<std::size_t>(m)][v]),
                        Rational(avoid[static_cast<std::size_t>(m)][u])));
                }
            }
        }
    }
    for (int m = 1; m <= m_max; ++m) {
        const auto& row = avoid[static_cast<std::size_t>(m)];
        for (std::uint64_t v = 0; v < patterns; ++v) {
            if (row[0] < row[v]) ++violations;  // id 0 is the all-zero run
        }
    }
    rows.push_back(make_report("corrorder", k, m_max, t, "violations",
                               Rational(violations), Rational(0)));
    return rows;
}

}  // namespace cwl::bounds
