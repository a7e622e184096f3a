#ifndef CWL_COUNTING_HPP
#define CWL_COUNTING_HPP

#include "cwl/enumerate.hpp"
#include "cwl/numeric.hpp"
#include "cwl/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cwl::counting {

enum class TableKind { closed, privileged, closed_by_pattern, avoid };
enum class Provenance { brute_force, recurrence, closed_form };

std::string to_string(TableKind kind);
std::string to_string(Provenance provenance);
std::optional<TableKind> table_kind_from(std::string_view name);
std::optional<Provenance> provenance_from(std::string_view name);

// Keyed collection of exact counts; the second key is the closing-border /
// pattern length t.
struct CountTable {
    TableKind kind = TableKind::closed;
    int k = 2;
    Provenance provenance = Provenance::brute_force;
    std::map<std::pair<int, int>, Count> entries;  // (n, t) -> count

    Count cell(int n, int t) const;   // 0 when absent
    Count row_total(int n) const;
    bool has_full_row(int n) const;   // every t in 1..n-1 present
};

// Number of length-n words closed by a length-t word, for each t; absent t
// means 0. Exhaustive enumeration.
std::map<int, Count> count_closed_by_length(int k, int n, const EnumOptions& opts = {});
std::map<int, Count> count_privileged_by_length(int k, int n, const EnumOptions& opts = {});

// Totals, counted by a direct predicate pass (not derived from the
// bucketed rows, so the sum identities are a real cross-check).
Count count_closed(int k, int n, const EnumOptions& opts = {});
Count count_privileged(int k, int n, const EnumOptions& opts = {});

// B_k(n,u): length-n words closed by u, by the definitional test.
Count count_closed_by(int n, const Word& u, const EnumOptions& opts = {});

// A_k(n,u): length-n words over u's alphabet avoiding u as a factor.
Count count_avoiding(int n, const Word& u, const EnumOptions& opts = {});

// A_k(n,0^t) by the power / closed-form / linear-recurrence rule,
// memoized per (k,t). Exact for any n.
Count count_avoiding_run(int k, int n, int t);

// B_k(n,u) for every length-t pattern u in one pass over the length-n word
// space; index = base-k encoding of u.
std::vector<Count> count_closed_by_all(int k, int n, int t, const EnumOptions& opts = {});

// Memoizing provider for by-length rows and totals; the closed and
// privileged rows for one (k,n) are produced by a single shared pass.
// Totals here are row sums (the independent predicate passes stay in
// count_closed / count_privileged).
class TableCache {
  public:
    explicit TableCache(EnumOptions opts = {}) : opts_(opts) {}

    const std::map<int, Count>& closed_row(int k, int n);
    const std::map<int, Count>& privileged_row(int k, int n);
    Count closed_total(int k, int n);      // k^n for n <= 1
    Count privileged_total(int k, int n);  // k^n for n <= 1

    // Adopt an externally computed row (e.g. loaded from the results cache).
    void prime_closed(int k, int n, std::map<int, Count> row);
    void prime_privileged(int k, int n, std::map<int, Count> row);

    const EnumOptions& options() const { return opts_; }

  private:
    void ensure_rows(int k, int n);

    EnumOptions opts_;
    std::map<std::pair<int, int>, std::map<int, Count>> closed_;
    std::map<std::pair<int, int>, std::map<int, Count>> privileged_;
};

}  // namespace cwl::counting

#endif
