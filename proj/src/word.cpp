#include "cwl/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace cwl {

Word Word::from_symbols(std::vector<Symbol> symbols, int k) {
    if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (k > 255) throw std::invalid_argument("alphabet size must be at most 255");
    for (Symbol s : symbols) {
        if (s >= k) throw std::invalid_argument("symbol index out of range for alphabet");
    }
    Word w;
    w.symbols = std::move(symbols);
    w.alphabet_size = k;
    return w;
}

Word Word::parse(std::string_view text, std::optional<int> k) {
    std::array<int, 256> index;
    index.fill(-1);
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    int distinct = 0;
    for (char c : text) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (!std::isgraph(uc)) {
            throw std::invalid_argument("word characters must be printable ASCII");
        }
        if (index[uc] < 0) index[uc] = distinct++;
        symbols.push_back(static_cast<Symbol>(index[uc]));
    }
    int alphabet = k.value_or(std::max(2, distinct));
    if (alphabet < distinct) {
        throw std::invalid_argument("word uses more distinct symbols than the alphabet size");
    }
    return from_symbols(std::move(symbols), std::max(2, alphabet));
}

void border_table_into(std::span<const Symbol> w, BorderTable& out) {
    const int n = static_cast<int>(w.size());
    out.assign(n, 0);
    for (int i = 1; i < n; ++i) {
        int j = out[i - 1];
        while (j > 0 && w[i] != w[j]) j = out[j - 1];
        if (w[i] == w[j]) ++j;
        out[i] = j;
    }
}

BorderTable border_table(const Word& w) {
    BorderTable t;
    border_table_into(w.view(), t);
    return t;
}

std::vector<int> border_chain(const BorderTable& table) {
    std::vector<int> chain;
    if (table.empty()) return chain;
    for (int b = table.back(); b > 0; b = table[b - 1]) chain.push_back(b);
    return chain;
}

namespace detail {

int count_prefix_occurrences(std::span<const Symbol> w, const BorderTable& pi,
                             int b, int len) {
    // KMP scan of w[0..len) for the pattern w[0..b); pi doubles as the
    // pattern's failure table since the pattern is a prefix of w.
    int count = 0;
    int j = 0;
    for (int i = 0; i < len; ++i) {
        while (j > 0 && w[i] != w[j]) j = pi[j - 1];
        if (w[i] == w[j]) ++j;
        if (j == b) {
            ++count;
            j = pi[b - 1];
        }
    }
    return count;
}

int WordClassifier::closed_border(std::span<const Symbol> w) {
    const int n = static_cast<int>(w.size());
    border_table_into(w, pi_);
    if (n < 2) return 0;
    const int b = pi_[n - 1];
    if (b == 0) return 0;
    return count_prefix_occurrences(w, pi_, b, n) == 2 ? b : 0;
}

bool WordClassifier::privileged(std::span<const Symbol> w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return true;
    border_table_into(w, pi_);
    return privileged_prefix(w, n);
}

bool WordClassifier::privileged_prefix(std::span<const Symbol> w, int len) {
    // Walk the closing-border chain; every level must be closed by the next.
    for (; len > 1;) {
        const int b = pi_[len - 1];
        if (b == 0) return false;
        if (count_prefix_occurrences(w, pi_, b, len) != 2) return false;
        len = b;
    }
    return true;
}

}  // namespace detail

Count occurrences(const Word& w, const Word& u) {
    if (u.empty()) throw std::invalid_argument("occurrence pattern must be non-empty");
    if (u.alphabet_size != w.alphabet_size) {
        throw std::invalid_argument("occurrence pattern alphabet mismatch");
    }
    BorderTable pi;
    border_table_into(u.view(), pi);
    const int m = u.length();
    int count = 0;
    int j = 0;
    for (int i = 0; i < w.length(); ++i) {
        while (j > 0 && w.symbols[i] != u.symbols[j]) j = pi[j - 1];
        if (w.symbols[i] == u.symbols[j]) ++j;
        if (j == m) {
            ++count;
            j = pi[m - 1];
        }
    }
    return count;
}

ClosedResult is_closed(const Word& w) {
    if (w.length() <= 1) return {true, std::nullopt};
    detail::WordClassifier cls;
    const int b = cls.closed_border(w.view());
    if (b == 0) return {false, std::nullopt};
    return {true, b};
}

bool is_privileged(const Word& w) {
    detail::WordClassifier cls;
    return cls.privileged(w.view());
}

AutoCorrelation autocorrelation(const Word& u) {
    if (u.empty()) throw std::invalid_argument("autocorrelation of the empty word is undefined");
    const int t = u.length();
    AutoCorrelation a;
    a.bits.assign(t, 0);
    a.bits[0] = 1;  // full-length self-match
    BorderTable pi;
    border_table_into(u.view(), pi);
    for (int b = pi[t - 1]; b > 0; b = pi[b - 1]) {
        a.bits[t - b] = 1;  // border of length b sets a_i with i = t-b+1
    }
    return a;
}

std::string AutoCorrelation::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

Count correlation_poly_eval(const AutoCorrelation& a, int z) {
    // Horner over a_1...a_t: f(z) = sum_{i=0}^{t-1} a_{t-i} z^i.
    Count value = 0;
    for (std::uint8_t bit : a.bits) {
        value *= z;
        value += bit;
    }
    return value;
}

}  // namespace cwl
