#ifndef CWL_ENUMERATE_HPP
#define CWL_ENUMERATE_HPP

#include "cwl/word.hpp"

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cwl {

inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 26;

struct EnumOptions {
    // Visit only words whose distinct symbols first appear in increasing
    // order, reporting the orbit multiplier k(k-1)...(k-m+1) instead of 1.
    bool canonical = false;
    unsigned jobs = 1;  // 0 = hardware concurrency
    std::uint64_t max_states = kDefaultMaxStates;
};

// k^n exceeded the configured enumeration budget.
struct BudgetError : std::runtime_error {
    BudgetError(int k, int n, std::uint64_t budget);
};

// k^n after checking it against the budget.
std::uint64_t word_space_size(int k, int n, std::uint64_t max_states);

unsigned resolve_jobs(unsigned jobs);

// Multiplier of the alphabet orbit of a canonical word, or nullopt if the
// word is not canonical.
std::optional<std::uint64_t> canonical_multiplier(std::span<const Symbol> w, int k);

// Sequential visit of every length-n word over {0..k-1} in lexicographic
// order (canonical subset only when opts.canonical). Returns the number of
// words visited. opts.jobs is ignored here; use fold_words for the
// partitioned parallel path.
std::uint64_t enumerate_words(
    int k, int n, const EnumOptions& opts,
    const std::function<void(std::span<const Symbol>, std::uint64_t)>& visit);

namespace detail {

void decode_index(std::uint64_t index, int k, int n, std::vector<Symbol>& out);

inline bool increment_word(std::vector<Symbol>& w, int k) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        if (++w[i] < k) return true;
        w[i] = 0;
    }
    return false;
}

// Walks indices [lo, hi) of the length-n word space.
template <class Fn>
void visit_range(int k, int n, std::uint64_t lo, std::uint64_t hi, bool canonical,
                 Fn&& fn) {
    std::vector<Symbol> buf;
    decode_index(lo, k, n, buf);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (canonical) {
            if (auto mult = canonical_multiplier(buf, k)) fn(std::span<const Symbol>(buf), *mult);
        } else {
            fn(std::span<const Symbol>(buf), std::uint64_t{1});
        }
        increment_word(buf, k);
    }
}

}  // namespace detail

// Deterministic partitioned fold over the word space: the index range is
// split into disjoint contiguous blocks, each worker folds its block into a
// copy of `init`, and partial results are absorbed in block order. Acc must
// provide absorb(Acc&&); visit is (Acc&, word, multiplier) and must touch
// only its own Acc.
template <class Acc, class Visit>
Acc fold_words(int k, int n, const EnumOptions& opts, Acc init, Visit visit) {
    const std::uint64_t total = word_space_size(k, n, opts.max_states);
    const unsigned jobs = std::min<std::uint64_t>(resolve_jobs(opts.jobs),
                                                  std::max<std::uint64_t>(total, 1));
    if (jobs <= 1 || total == 0) {
        detail::visit_range(k, n, 0, total, opts.canonical,
                            [&](std::span<const Symbol> w, std::uint64_t m) { visit(init, w, m); });
        return init;
    }
    std::vector<Acc> partials(jobs, init);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t lo = chunk * j;
        const std::uint64_t hi = std::min(total, lo + chunk);
        workers.emplace_back([&, j, lo, hi] {
            try {
                detail::visit_range(k, n, lo, hi, opts.canonical,
                                    [&](std::span<const Symbol> w, std::uint64_t m) {
                                        visit(partials[j], w, m);
                                    });
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Acc result = std::move(partials.front());
    for (unsigned j = 1; j < jobs; ++j) result.absorb(std::move(partials[j]));
    return result;
}

}  // namespace cwl

#endif
