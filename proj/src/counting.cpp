#include "cwl/counting.hpp"

#include <mutex>
#include <stdexcept>

namespace cwl::counting {

std::string to_string(TableKind kind) {
    switch (kind) {
        case TableKind::closed: return "closed";
        case TableKind::privileged: return "privileged";
        case TableKind::closed_by_pattern: return "closed_by_pattern";
        case TableKind::avoid: return "avoid";
    }
    return "unknown";
}

std::string to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::brute_force: return "brute_force";
        case Provenance::recurrence: return "recurrence";
        case Provenance::closed_form: return "closed_form";
    }
    return "unknown";
}

std::optional<TableKind> table_kind_from(std::string_view name) {
    if (name == "closed") return TableKind::closed;
    if (name == "privileged") return TableKind::privileged;
    if (name == "closed_by_pattern") return TableKind::closed_by_pattern;
    if (name == "avoid") return TableKind::avoid;
    return std::nullopt;
}

std::optional<Provenance> provenance_from(std::string_view name) {
    if (name == "brute_force") return Provenance::brute_force;
    if (name == "recurrence") return Provenance::recurrence;
    if (name == "closed_form") return Provenance::closed_form;
    return std::nullopt;
}

Count CountTable::cell(int n, int t) const {
    auto it = entries.find({n, t});
    return it == entries.end() ? Count(0) : it->second;
}

Count CountTable::row_total(int n) const {
    Count total = 0;
    for (auto it = entries.lower_bound({n, 0});
         it != entries.end() && it->first.first == n; ++it) {
        total += it->second;
    }
    return total;
}

bool CountTable::has_full_row(int n) const {
    for (int t = 1; t <= n - 1; ++t) {
        if (!entries.contains({n, t})) return false;
    }
    return true;
}

namespace {

void require_counting_args(int k, int n) {
    if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
}

// Accumulates closed (and optionally privileged) counts bucketed by the
// closing-border length.
struct BucketAcc {
    explicit BucketAcc(int n, bool privileged)
        : closed_by_t(static_cast<std::size_t>(n) + 1, 0),
          priv_by_t(privileged ? static_cast<std::size_t>(n) + 1 : 0, 0),
          want_privileged(privileged) {}

    std::vector<std::uint64_t> closed_by_t;
    std::vector<std::uint64_t> priv_by_t;
    bool want_privileged;
    detail::WordClassifier cls;

    void operator()(std::span<const Symbol> w, std::uint64_t mult) {
        const int t = cls.closed_border(w);
        if (t == 0) return;
        closed_by_t[static_cast<std::size_t>(t)] += mult;
        if (want_privileged && cls.privileged_prefix(w, t)) {
            priv_by_t[static_cast<std::size_t>(t)] += mult;
        }
    }

    void absorb(BucketAcc&& other) {
        for (std::size_t i = 0; i < closed_by_t.size(); ++i) closed_by_t[i] += other.closed_by_t[i];
        for (std::size_t i = 0; i < priv_by_t.size(); ++i) priv_by_t[i] += other.priv_by_t[i];
    }
};

std::map<int, Count> to_row(const std::vector<std::uint64_t>& buckets) {
    std::map<int, Count> row;
    for (std::size_t t = 0; t < buckets.size(); ++t) {
        if (buckets[t] != 0) row[static_cast<int>(t)] = buckets[t];
    }
    return row;
}

BucketAcc bucket_pass(int k, int n, bool privileged, const EnumOptions& opts) {
    return fold_words(k, n, opts, BucketAcc(n, privileged),
                      [](BucketAcc& acc, std::span<const Symbol> w, std::uint64_t m) { acc(w, m); });
}

}  // namespace

std::map<int, Count> count_closed_by_length(int k, int n, const EnumOptions& opts) {
    require_counting_args(k, n);
    if (n < 2) throw std::invalid_argument("by-length counting needs n >= 2");
    return to_row(bucket_pass(k, n, false, opts).closed_by_t);
}

std::map<int, Count> count_privileged_by_length(int k, int n, const EnumOptions& opts) {
    require_counting_args(k, n);
    if (n < 2) throw std::invalid_argument("by-length counting needs n >= 2");
    return to_row(bucket_pass(k, n, true, opts).priv_by_t);
}

namespace {

// Plain total accumulator driven by a per-word predicate.
template <bool Privileged>
struct TotalAcc {
    std::uint64_t total = 0;
    detail::WordClassifier cls;

    void operator()(std::span<const Symbol> w, std::uint64_t mult) {
        if constexpr (Privileged) {
            if (cls.privileged(w)) total += mult;
        } else {
            if (cls.closed_border(w) != 0) total += mult;
        }
    }

    void absorb(TotalAcc&& other) { total += other.total; }
};

}  // namespace

Count count_closed(int k, int n, const EnumOptions& opts) {
    require_counting_args(k, n);
    if (n <= 1) return pow_count(k, static_cast<unsigned>(n));
    auto acc = fold_words(k, n, opts, TotalAcc<false>{},
                          [](TotalAcc<false>& a, std::span<const Symbol> w, std::uint64_t m) { a(w, m); });
    return acc.total;
}

Count count_privileged(int k, int n, const EnumOptions& opts) {
    require_counting_args(k, n);
    if (n <= 1) return pow_count(k, static_cast<unsigned>(n));
    auto acc = fold_words(k, n, opts, TotalAcc<true>{},
                          [](TotalAcc<true>& a, std::span<const Symbol> w, std::uint64_t m) { a(w, m); });
    return acc.total;
}

namespace {

struct ClosedByAcc {
    const Word* pattern;
    BorderTable pi;
    std::uint64_t total = 0;

    void operator()(std::span<const Symbol> w, std::uint64_t mult) {
        const auto& u = pattern->symbols;
        const int t = static_cast<int>(u.size());
        const int n = static_cast<int>(w.size());
        // prefix and suffix check first, then exactly-two occurrences
        for (int i = 0; i < t; ++i) {
            if (w[i] != u[i] || w[n - t + i] != u[i]) return;
        }
        int occ = 0;
        int j = 0;
        for (int i = 0; i < n; ++i) {
            while (j > 0 && w[i] != u[j]) j = pi[j - 1];
            if (w[i] == u[j]) ++j;
            if (j == t) {
                if (++occ > 2) return;
                j = pi[t - 1];
            }
        }
        if (occ == 2) total += mult;
    }

    void absorb(ClosedByAcc&& other) { total += other.total; }
};

struct AvoidAcc {
    const Word* pattern;
    BorderTable pi;
    std::uint64_t total = 0;

    void operator()(std::span<const Symbol> w, std::uint64_t mult) {
        const auto& u = pattern->symbols;
        const int t = static_cast<int>(u.size());
        int j = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            while (j > 0 && w[i] != u[j]) j = pi[j - 1];
            if (w[i] == u[j]) ++j;
            if (j == t) return;  // factor found
        }
        total += mult;
    }

    void absorb(AvoidAcc&& other) { total += other.total; }
};

}  // namespace

Count count_closed_by(int n, const Word& u, const EnumOptions& opts) {
    if (u.empty()) throw std::invalid_argument("closing word must be non-empty");
    if (u.length() > n) throw std::invalid_argument("closing word longer than the word length");
    EnumOptions plain = opts;
    plain.canonical = false;  // pattern buckets are not orbit-invariant
    ClosedByAcc init{&u, border_table(u), 0};
    auto acc = fold_words(u.alphabet_size, n, plain, init,
                          [](ClosedByAcc& a, std::span<const Symbol> w, std::uint64_t m) { a(w, m); });
    return acc.total;
}

Count count_avoiding(int n, const Word& u, const EnumOptions& opts) {
    if (u.empty()) throw std::invalid_argument("avoided factor must be non-empty");
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
    EnumOptions plain = opts;
    plain.canonical = false;
    AvoidAcc init{&u, border_table(u), 0};
    auto acc = fold_words(u.alphabet_size, n, plain, init,
                          [](AvoidAcc& a, std::span<const Symbol> w, std::uint64_t m) { a(w, m); });
    return acc.total;
}

namespace {

std::mutex g_avoid_run_mutex;
std::map<std::pair<int, int>, std::vector<Count>> g_avoid_run_memo;

Count avoid_run_middle(int k, int n, int t) {
    // k^{n-t}(k^t - 1) - (n-t) k^{n-t-1} (k-1), valid for t <= n <= 2t
    Count head = pow_count(k, static_cast<unsigned>(n - t)) *
                 (pow_count(k, static_cast<unsigned>(t)) - 1);
    if (n == t) return head;
    return head - Count(n - t) * pow_count(k, static_cast<unsigned>(n - t - 1)) * (k - 1);
}

}  // namespace

Count count_avoiding_run(int k, int n, int t) {
    if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (t < 1) throw std::invalid_argument("run length must be at least 1");
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
    std::scoped_lock lock(g_avoid_run_mutex);
    auto& seq = g_avoid_run_memo[{k, t}];
    while (static_cast<int>(seq.size()) <= n) {
        const int m = static_cast<int>(seq.size());
        if (m < t) {
            seq.push_back(pow_count(k, static_cast<unsigned>(m)));
        } else if (m <= 2 * t) {
            seq.push_back(avoid_run_middle(k, m, t));
        } else {
            seq.push_back(k * seq[static_cast<std::size_t>(m - 1)] -
                          Count(k - 1) * seq[static_cast<std::size_t>(m - t - 1)]);
        }
    }
    return seq[static_cast<std::size_t>(n)];
}

namespace {

struct PatternBucketAcc {
    explicit PatternBucketAcc(std::size_t patterns, int t) : buckets(patterns, 0), t(t) {}

    std::vector<std::uint64_t> buckets;
    int t;
    detail::WordClassifier cls;

    void operator()(std::span<const Symbol> w, std::uint64_t mult, int k) {
        if (cls.closed_border(w) != t) return;
        std::uint64_t id = 0;
        for (int i = 0; i < t; ++i) id = id * static_cast<std::uint64_t>(k) + w[i];
        buckets[id] += mult;
    }

    void absorb(PatternBucketAcc&& other) {
        for (std::size_t i = 0; i < buckets.size(); ++i) buckets[i] += other.buckets[i];
    }
};

}  // namespace

std::vector<Count> count_closed_by_all(int k, int n, int t, const EnumOptions& opts) {
    require_counting_args(k, n);
    if (t < 1 || t > n) throw std::invalid_argument("pattern length out of range");
    const std::uint64_t patterns = word_space_size(k, t, opts.max_states);
    EnumOptions plain = opts;
    plain.canonical = false;
    auto acc = fold_words(k, n, plain, PatternBucketAcc(patterns, t),
                          [k](PatternBucketAcc& a, std::span<const Symbol> w, std::uint64_t m) {
                              a(w, m, k);
                          });
    std::vector<Count> out;
    out.reserve(acc.buckets.size());
    for (auto b : acc.buckets) out.emplace_back(b);
    return out;
}

void TableCache::ensure_rows(int k, int n) {
    const auto key = std::make_pair(k, n);
    if (closed_.contains(key) && privileged_.contains(key)) return;
    auto acc = bucket_pass(k, n, true, opts_);
    if (!closed_.contains(key)) closed_[key] = to_row(acc.closed_by_t);
    if (!privileged_.contains(key)) privileged_[key] = to_row(acc.priv_by_t);
}

const std::map<int, Count>& TableCache::closed_row(int k, int n) {
    ensure_rows(k, n);
    return closed_.at({k, n});
}

const std::map<int, Count>& TableCache::privileged_row(int k, int n) {
    ensure_rows(k, n);
    return privileged_.at({k, n});
}

Count TableCache::closed_total(int k, int n) {
    if (n <= 1) return pow_count(k, static_cast<unsigned>(n));
    Count total = 0;
    for (const auto& [t, c] : closed_row(k, n)) total += c;
    return total;
}

Count TableCache::privileged_total(int k, int n) {
    if (n <= 1) return pow_count(k, static_cast<unsigned>(n));
    Count total = 0;
    for (const auto& [t, c] : privileged_row(k, n)) total += c;
    return total;
}

void TableCache::prime_closed(int k, int n, std::map<int, Count> row) {
    closed_[{k, n}] = std::move(row);
}

void TableCache::prime_privileged(int k, int n, std::map<int, Count> row) {
    privileged_[{k, n}] = std::move(row);
}

}  // namespace cwl::counting
