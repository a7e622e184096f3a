#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwl/word.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cwl;

namespace {

Word bits(std::string_view text, int k = 2) { return Word::parse(text, k); }

std::vector<int> chain_of(const Word& w) { return border_chain(border_table(w)); }

}  // namespace

TEST_CASE("border table on dictionary words") {
    const Word alfalfa = Word::parse("alfalfa");
    const auto table = border_table(alfalfa);
    CHECK(table.back() == 4);
    CHECK(chain_of(alfalfa) == std::vector<int>{4, 1});

    CHECK(border_table(bits("01")).back() == 0);
    CHECK(chain_of(bits("01")).empty());

    CHECK(border_table(bits("0000")).back() == 3);
    CHECK(chain_of(bits("0000")) == std::vector<int>{3, 2, 1});

    CHECK(border_table(Word::parse("")).empty());
}

TEST_CASE("occurrence counting overlaps") {
    const Word w = Word::parse("entanglement");
    const Word u = Word::parse("ent", w.alphabet_size);
    // same first-appearance mapping: "ent" maps to the same symbols as the prefix
    CHECK(occurrences(w, u) == 2);

    const Word eerie = Word::parse("eerie");
    CHECK(occurrences(eerie, Word::parse("e", eerie.alphabet_size)) == 3);

    CHECK(occurrences(bits("0000"), bits("00")) == 3);

    CHECK_THROWS_AS(occurrences(w, Word::parse("", w.alphabet_size)), std::invalid_argument);
    CHECK_THROWS_AS(occurrences(bits("01"), bits("1", 3)), std::invalid_argument);
}

TEST_CASE("closure classification") {
    const auto ent = is_closed(Word::parse("entanglement"));
    CHECK(ent.closed);
    CHECK(ent.border_length == 3);

    CHECK_FALSE(is_closed(Word::parse("eerie")).closed);

    const auto aa = is_closed(bits("aa"));
    CHECK(aa.closed);
    CHECK(aa.border_length == 1);

    CHECK(is_closed(Word::parse("")).closed);
    CHECK_FALSE(is_closed(Word::parse("")).border_length.has_value());
    CHECK(is_closed(bits("0")).closed);
    CHECK_FALSE(is_closed(bits("0")).border_length.has_value());
    CHECK_FALSE(is_closed(bits("01")).closed);
}

TEST_CASE("privilege classification") {
    CHECK(is_privileged(Word::parse("alfalfa")));
    CHECK_FALSE(is_privileged(Word::parse("entanglement")));
    CHECK(is_privileged(bits("0")));
    CHECK(is_privileged(Word::parse("")));
    CHECK(is_privileged(bits("00")));
    CHECK_FALSE(is_privileged(Word::parse("eerie")));
}

TEST_CASE("autocorrelation examples") {
    CHECK(autocorrelation(Word::parse("entente")).to_string() == "1001001");
    CHECK(autocorrelation(bits("0000")).to_string() == "1111");
    CHECK(autocorrelation(bits("01")).to_string() == "10");
    CHECK_THROWS_AS(autocorrelation(Word::parse("")), std::invalid_argument);
}

TEST_CASE("correlation polynomial evaluation") {
    CHECK(correlation_poly_eval(autocorrelation(Word::parse("entente")), 2) == 73);
    CHECK(correlation_poly_eval(autocorrelation(bits("01")), 2) == 2);

    // all-ones correlation of a run evaluates to the geometric sum
    for (int k : {2, 3, 5}) {
        for (int t : {1, 3, 6}) {
            const Word run = Word::from_symbols(std::vector<Symbol>(t, 0), k);
            const Count expected = (pow_count(k, static_cast<unsigned>(t)) - 1) / (k - 1);
            CHECK(correlation_poly_eval(autocorrelation(run), k) == expected);
        }
    }
}

TEST_CASE("word parsing and validation") {
    CHECK(Word::parse("entanglement").alphabet_size == 7);
    CHECK(Word::parse("a").alphabet_size == 2);  // k is at least 2
    CHECK(Word::parse("abc", 5).alphabet_size == 5);
    CHECK_THROWS_AS(Word::parse("abc", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a b"), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_symbols({0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_symbols({0}, 1), std::invalid_argument);
}

namespace {

// Runs fn on every word over {0..k-1} of length 0..n_max.
template <class Fn>
void for_all_words(int k, int n_max, Fn&& fn) {
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Symbol> w(static_cast<std::size_t>(n), 0);
        while (true) {
            fn(std::span<const Symbol>(w));
            int i = n - 1;
            for (; i >= 0; --i) {
                if (++w[static_cast<std::size_t>(i)] < k) break;
                w[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) break;
        }
    }
}

}  // namespace

TEST_CASE("exhaustive agreement with definitional oracles") {
    detail::WordClassifier cls;
    BorderTable pi;
    for (int k : {2, 3}) {
        const int n_max = 14;
        for_all_words(k, n_max, [&](std::span<const Symbol> w) {
            const int n = static_cast<int>(w.size());
            border_table_into(w, pi);

            // border chain soundness against direct prefix/suffix comparison
            std::vector<int> chain;
            if (n > 0) {
                for (int b = pi[static_cast<std::size_t>(n - 1)]; b > 0;
                     b = pi[static_cast<std::size_t>(b - 1)]) {
                    chain.push_back(b);
                }
            }
            REQUIRE(chain == oracle::border_lengths(w));

            // closure shortcut (longest border only) matches the all-borders oracle
            const bool closed = n <= 1 || cls.closed_border(w) != 0;
            REQUIRE(closed == oracle::is_closed(w));

            // privilege matches the definitional recursion, and implies closure
            const bool privileged = cls.privileged(w);
            REQUIRE(privileged == oracle::is_privileged(w));
            if (privileged) REQUIRE(closed);

            // all-ones autocorrelation exactly for one-symbol runs
            if (n > 0) {
                const auto bits = oracle::autocorrelation_bits(w);
                const bool all_ones =
                    std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 1; });
                const bool run = std::all_of(w.begin(), w.end(),
                                             [&](Symbol s) { return s == w.front(); });
                REQUIRE(all_ones == run);
            }
        });
    }
}

TEST_CASE("autocorrelation matches the shift oracle") {
    for (int k : {2, 3}) {
        for_all_words(k, 10, [&](std::span<const Symbol> w) {
            if (w.empty()) return;
            const Word word = Word::from_symbols({w.begin(), w.end()}, k);
            REQUIRE(autocorrelation(word).bits == oracle::autocorrelation_bits(w));
        });
    }
}

TEST_CASE("alphabet permutation invariance") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 400; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Symbol> symbols(static_cast<std::size_t>(n));
        for (auto& s : symbols) s = static_cast<Symbol>(rng() % static_cast<unsigned>(k));

        std::vector<Symbol> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), Symbol{0});
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<Symbol> mapped(symbols.size());
        for (std::size_t i = 0; i < symbols.size(); ++i) mapped[i] = perm[symbols[i]];

        const Word a = Word::from_symbols(symbols, k);
        const Word b = Word::from_symbols(mapped, k);
        CHECK(border_table(a) == border_table(b));
        CHECK(is_closed(a).closed == is_closed(b).closed);
        CHECK(is_closed(a).border_length == is_closed(b).border_length);
        CHECK(is_privileged(a) == is_privileged(b));
        CHECK(autocorrelation(a) == autocorrelation(b));
    }
}
