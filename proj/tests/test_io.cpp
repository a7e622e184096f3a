#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwl/bfile.hpp"
#include "cwl/cache.hpp"
#include "cwl/counting.hpp"
#include "cwl/golden.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace cwl;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("cwl-test-" + std::to_string(std::rand()) + "-" +
                std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& contents) {
    std::ofstream out(p);
    out << contents;
}

}  // namespace

TEST_CASE("golden data spot values") {
    using counting::TableKind;
    CHECK(io::golden_value(TableKind::closed, 10, 2) == 30);
    CHECK(io::golden_value(TableKind::closed, 20, 4) == 26524);
    CHECK(io::golden_value(TableKind::closed, 10, 10) == 0);
    CHECK(io::golden_value(TableKind::privileged, 17, 10) == 26);
    CHECK(io::golden_value(TableKind::privileged, 10, 2) == 16);
    // the published closed table carries one known misprint, kept verbatim
    CHECK(io::golden_value(TableKind::closed, 11, 7) == 13);

    CHECK(io::golden_covers(10, 1));
    CHECK_FALSE(io::golden_covers(9, 1));
    CHECK_FALSE(io::golden_covers(10, 11));
    CHECK_THROWS_AS(io::golden_value(TableKind::closed, 9, 1), std::out_of_range);
    CHECK_THROWS_AS(io::golden_value(TableKind::avoid, 10, 1), std::invalid_argument);
}

TEST_CASE("golden diff flags only the published misprint on row 11") {
    using counting::TableKind;
    counting::CountTable closed;
    closed.kind = TableKind::closed;
    for (const auto& [t, c] : counting::count_closed_by_length(2, 11)) {
        closed.entries[{11, t}] = c;
    }
    const auto closed_mismatches = io::diff_golden(TableKind::closed, closed, 11, 11, 1, 10);
    REQUIRE(closed_mismatches.size() == 1);
    CHECK(closed_mismatches[0].n == 11);
    CHECK(closed_mismatches[0].t == 7);
    CHECK(closed_mismatches[0].expected == 13);  // as published
    CHECK(closed_mismatches[0].actual == 12);    // exact count
    // the computed row still satisfies the row-sum identity
    CHECK(closed.row_total(11) == 364);

    counting::CountTable priv;
    priv.kind = TableKind::privileged;
    for (const auto& [t, c] : counting::count_privileged_by_length(2, 11)) {
        priv.entries[{11, t}] = c;
    }
    CHECK(io::diff_golden(TableKind::privileged, priv, 11, 11, 1, 10).empty());
}

TEST_CASE("golden diff reports injected corruption") {
    using counting::TableKind;
    counting::CountTable table;
    table.kind = TableKind::privileged;
    for (int t = 1; t <= 9; ++t) {
        table.entries[{10, t}] = io::golden_value(TableKind::privileged, 10, t);
    }
    CHECK(io::diff_golden(TableKind::privileged, table, 10, 10, 1, 10).empty());

    table.entries[{10, 5}] += 1;
    const auto mismatches = io::diff_golden(TableKind::privileged, table, 10, 10, 1, 10);
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].t == 5);
}

TEST_CASE("cache round-trips tables exactly") {
    TempDir dir;
    counting::CountTable table;
    table.kind = counting::TableKind::closed;
    table.k = 2;
    table.provenance = counting::Provenance::brute_force;
    table.entries[{20, 4}] = 26524;
    // a value far beyond 64 bits must survive the round trip
    table.entries[{200, 1}] = pow_count(3, 150);

    io::cache_store(table, dir.path);
    const auto loaded = io::cache_load(counting::TableKind::closed, 2, dir.path);
    REQUIRE(loaded.has_value());
    CHECK(loaded->entries == table.entries);
    CHECK(loaded->k == 2);
    CHECK(loaded->provenance == counting::Provenance::brute_force);
}

TEST_CASE("cache misses and corruption fall back to recomputation") {
    TempDir dir;
    CHECK_FALSE(io::cache_load(counting::TableKind::closed, 2, dir.path).has_value());

    const auto path = io::cache_path(dir.path, counting::TableKind::closed, 2);
    fs::create_directories(dir.path);

    write_file(path, "{ not json");
    CHECK_FALSE(io::cache_load(counting::TableKind::closed, 2, dir.path).has_value());

    // tampered count string
    write_file(path,
               R"({"kind":"closed","k":2,"provenance":"brute_force",)"
               R"("entries":[{"n":20,"t":4,"count":"12x"}]})");
    CHECK_FALSE(io::cache_load(counting::TableKind::closed, 2, dir.path).has_value());

    // wrong kind in the file
    write_file(path,
               R"({"kind":"privileged","k":2,"provenance":"brute_force","entries":[]})");
    CHECK_FALSE(io::cache_load(counting::TableKind::closed, 2, dir.path).has_value());

    // missing field
    write_file(path, R"({"kind":"closed","entries":[]})");
    CHECK_FALSE(io::cache_load(counting::TableKind::closed, 2, dir.path).has_value());
}

TEST_CASE("b-file parsing") {
    TempDir dir;
    const auto good = dir.path / "good.txt";
    write_file(good, "# comment line\n0 1\n1 2\n2 2\n\n3 4 # trailing comment\n");
    const auto file = io::parse_bfile(good);
    CHECK(file.offset == 0);
    REQUIRE(file.terms.size() == 4);
    CHECK(file.terms[3].first == 3);
    CHECK(file.terms[3].second == 4);

    const auto bad_token = dir.path / "bad1.txt";
    write_file(bad_token, "0 1\nabc\n");
    CHECK_THROWS_AS(io::parse_bfile(bad_token), io::BFileParseError);

    const auto bad_value = dir.path / "bad2.txt";
    write_file(bad_value, "0 12x\n");
    CHECK_THROWS_AS(io::parse_bfile(bad_value), io::BFileParseError);

    const auto gap = dir.path / "bad3.txt";
    write_file(gap, "0 1\n2 2\n");
    CHECK_THROWS_AS(io::parse_bfile(gap), io::BFileParseError);

    const auto junk = dir.path / "bad4.txt";
    write_file(junk, "0 1 extra\n");
    CHECK_THROWS_AS(io::parse_bfile(junk), io::BFileParseError);

    CHECK_THROWS_AS(io::parse_bfile(dir.path / "missing.txt"), io::BFileParseError);

    // values past 64 bits parse exactly
    const auto big = dir.path / "big.txt";
    write_file(big, "0 340282366920938463463374607431768211456\n");
    CHECK(io::parse_bfile(big).terms[0].second == pow_count(2, 128));
}

TEST_CASE("bundled snapshots agree with enumeration for small n") {
    const auto data_dir = fs::path(CWL_DATA_DIR);
    const auto closed = io::parse_bfile(data_dir / "b226452.txt");
    const auto priv = io::parse_bfile(data_dir / "b231208.txt");
    REQUIRE(closed.terms.size() == 26);
    REQUIRE(priv.terms.size() == 26);
    for (int n = 0; n <= 13; ++n) {
        CHECK(closed.terms[static_cast<std::size_t>(n)].second ==
              counting::count_closed(2, n));
        CHECK(priv.terms[static_cast<std::size_t>(n)].second ==
              counting::count_privileged(2, n));
    }
}
