#ifndef CWL_WORD_HPP
#define CWL_WORD_HPP

#include "cwl/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cwl {

using Symbol = std::uint8_t;

// A finite word over the alphabet {0, ..., k-1}. Immutable after
// construction; the empty word is permitted.
struct Word {
    std::vector<Symbol> symbols;
    int alphabet_size = 2;  // k >= 2

    static Word from_symbols(std::vector<Symbol> symbols, int k);

    // Maps ASCII text to symbol indices in first-appearance order
    // ("entanglement" -> 0,1,2,0,1,3,4,0,5,0,1,2). If k is given it must
    // cover every distinct character; otherwise k = max(2, #distinct).
    static Word parse(std::string_view text, std::optional<int> k = std::nullopt);

    int length() const { return static_cast<int>(symbols.size()); }
    bool empty() const { return symbols.empty(); }
    std::span<const Symbol> view() const { return symbols; }

    bool operator==(const Word&) const = default;
};

// Entry i = length of the longest non-empty proper border of the prefix
// w[0..i] (0 if unbordered). Following entries transitively from the last
// position enumerates all border lengths of w in decreasing order.
using BorderTable = std::vector<int>;

BorderTable border_table(const Word& w);
void border_table_into(std::span<const Symbol> w, BorderTable& out);

// All border lengths of w, longest first (empty for unbordered words).
std::vector<int> border_chain(const BorderTable& table);

// Number of (possibly overlapping) occurrences of u as a factor of w.
// The empty pattern and an alphabet-size mismatch signal a caller bug.
Count occurrences(const Word& w, const Word& u);

struct ClosedResult {
    bool closed = false;
    // Length of the closing border; absent when |w| <= 1 or w is not closed.
    std::optional<int> border_length;
};

// A word is closed if |w| <= 1, or if its longest border occurs exactly
// twice in w. (Testing only the longest border suffices: a shorter border
// occurs wherever the longest one does, hence at least three times.)
ClosedResult is_closed(const Word& w);

// Closed by a privileged border, iterated down to length <= 1.
bool is_privileged(const Word& w);

// Binary vector a_1...a_t; a_1 = 1 (full-length self-match) and, for
// i >= 2, a_i = 1 exactly when the word has a border of length t-i+1.
struct AutoCorrelation {
    std::vector<std::uint8_t> bits;  // bits[i-1] = a_i

    int length() const { return static_cast<int>(bits.size()); }
    std::string to_string() const;
    bool operator==(const AutoCorrelation&) const = default;
};

AutoCorrelation autocorrelation(const Word& u);

// f(z) = sum_{i=0}^{t-1} a_{t-i} z^i, evaluated exactly.
Count correlation_poly_eval(const AutoCorrelation& a, int z);

namespace detail {

// Scratch-buffer classifier for enumeration loops; avoids per-word
// allocation. Not thread-safe; give each worker its own instance.
class WordClassifier {
  public:
    // Closing border length t >= 1 if w (|w| >= 2) is closed, 0 otherwise.
    int closed_border(std::span<const Symbol> w);
    // Full privilege test (recomputes the border table).
    bool privileged(std::span<const Symbol> w);
    // Privilege of the length-len prefix of w, assuming the border table
    // from the preceding closed_border(w) call is still valid.
    bool privileged_prefix(std::span<const Symbol> w, int len);

  private:
    BorderTable pi_;
};

// Occurrences of the length-b prefix of w inside the length-len prefix of
// w, given w's border table. O(len).
int count_prefix_occurrences(std::span<const Symbol> w, const BorderTable& pi,
                             int b, int len);

}  // namespace detail

}  // namespace cwl

#endif
