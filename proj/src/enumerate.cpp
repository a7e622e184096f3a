#include "cwl/enumerate.hpp"

#include "cwl/numeric.hpp"

#include <algorithm>

namespace cwl {

namespace {

std::string budget_message(int k, int n, std::uint64_t budget) {
    return "enumeration budget exceeded: " + std::to_string(k) + "^" +
           std::to_string(n) + " words requested, budget is " + std::to_string(budget) +
           " (raise --max-states to override)";
}

}  // namespace

BudgetError::BudgetError(int k, int n, std::uint64_t budget)
    : std::runtime_error(budget_message(k, n, budget)) {}

std::uint64_t word_space_size(int k, int n, std::uint64_t max_states) {
    if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
    // Stay well inside uint64 so index arithmetic cannot wrap.
    const std::uint64_t cap = std::min<std::uint64_t>(max_states, std::uint64_t{1} << 62);
    Count space = pow_count(k, static_cast<unsigned>(n));
    if (space > cap) throw BudgetError(k, n, cap);
    return static_cast<std::uint64_t>(space);
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::optional<std::uint64_t> canonical_multiplier(std::span<const Symbol> w, int k) {
    int next_fresh = 0;  // the only admissible first appearance
    for (Symbol s : w) {
        if (s > next_fresh) return std::nullopt;
        if (s == next_fresh) ++next_fresh;
    }
    std::uint64_t mult = 1;
    for (int i = 0; i < next_fresh; ++i) mult *= static_cast<std::uint64_t>(k - i);
    return mult;
}

std::uint64_t enumerate_words(
    int k, int n, const EnumOptions& opts,
    const std::function<void(std::span<const Symbol>, std::uint64_t)>& visit) {
    const std::uint64_t total = word_space_size(k, n, opts.max_states);
    std::uint64_t visited = 0;
    detail::visit_range(k, n, 0, total, opts.canonical,
                        [&](std::span<const Symbol> w, std::uint64_t m) {
                            ++visited;
                            visit(w, m);
                        });
    return visited;
}

namespace detail {

void decode_index(std::uint64_t index, int k, int n, std::vector<Symbol>& out) {
    out.assign(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0 && index != 0; --i) {
        out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(k));
        index /= static_cast<std::uint64_t>(k);
    }
}

}  // namespace detail

}  // namespace cwl
