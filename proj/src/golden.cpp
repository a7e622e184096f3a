#include "cwl/golden.hpp"

#include <stdexcept>

namespace cwl::io {

namespace {

// C_2(n,t), rows n = 10..20, columns t = 1..10, as published.
//
// Known erratum, kept verbatim: the published (n=11, t=7) value is 13.
// Exact enumeration gives 12, which is also forced by the row identity
// (the n=11 row must sum to C_2(11) = 364) and by parity: complementing
// 0 <-> 1 is a fixed-point-free involution on closed words, so every
// C_2(n,t) is even. The diff gate reports this cell as a mismatch.
constexpr unsigned kClosed[11][10] = {
    {2, 30, 70, 50, 30, 12, 6, 2, 2, 0},
    {2, 42, 118, 96, 54, 30, 13, 6, 2, 2},
    {2, 60, 200, 182, 114, 54, 30, 12, 6, 2},
    {2, 88, 338, 346, 214, 126, 54, 30, 12, 6},
    {2, 132, 570, 640, 432, 232, 126, 54, 30, 12},
    {2, 202, 962, 1192, 828, 474, 240, 126, 54, 30},
    {2, 314, 1626, 2220, 1612, 908, 492, 240, 126, 54},
    {2, 494, 2754, 4128, 3112, 1822, 956, 504, 240, 126},
    {2, 784, 4676, 7670, 6024, 3596, 1934, 982, 504, 240},
    {2, 1252, 7960, 14264, 11636, 7084, 3828, 1992, 990, 504},
    {2, 2008, 13588, 26524, 22512, 13928, 7632, 3946, 2026, 990},
};

// P_2(n,t), same window, as published.
constexpr unsigned kPrivileged[11][10] = {
    {2, 16, 22, 8, 6, 2, 2, 0, 2, 0},
    {2, 26, 38, 16, 10, 6, 4, 2, 2, 2},
    {2, 42, 68, 30, 18, 4, 6, 2, 2, 0},
    {2, 68, 122, 58, 38, 14, 10, 6, 4, 2},
    {2, 110, 218, 108, 76, 20, 14, 8, 6, 2},
    {2, 178, 390, 204, 148, 46, 24, 18, 14, 6},
    {2, 288, 698, 384, 288, 86, 48, 16, 18, 8},
    {2, 466, 1250, 724, 556, 178, 92, 36, 32, 26},
    {2, 754, 2240, 1364, 1076, 344, 190, 64, 36, 28},
    {2, 1220, 4016, 2572, 2092, 688, 388, 136, 70, 56},
    {2, 1974, 7204, 4850, 4068, 1342, 772, 268, 138, 52},
};

}  // namespace

bool golden_covers(int n, int t) {
    return n >= kGoldenNLo && n <= kGoldenNHi && t >= kGoldenTLo && t <= kGoldenTHi;
}

Count golden_value(counting::TableKind kind, int n, int t) {
    if (!golden_covers(n, t)) throw std::out_of_range("outside the golden window");
    const auto row = static_cast<std::size_t>(n - kGoldenNLo);
    const auto col = static_cast<std::size_t>(t - kGoldenTLo);
    switch (kind) {
        case counting::TableKind::closed: return kClosed[row][col];
        case counting::TableKind::privileged: return kPrivileged[row][col];
        default: throw std::invalid_argument("no golden data for this table kind");
    }
}

std::vector<GoldenMismatch> diff_golden(counting::TableKind kind,
                                        const counting::CountTable& table,
                                        int n_lo, int n_hi, int t_lo, int t_hi) {
    std::vector<GoldenMismatch> mismatches;
    for (int n = std::max(n_lo, kGoldenNLo); n <= std::min(n_hi, kGoldenNHi); ++n) {
        for (int t = std::max(t_lo, kGoldenTLo); t <= std::min(t_hi, kGoldenTHi); ++t) {
            const Count expected = golden_value(kind, n, t);
            const Count actual = table.cell(n, t);
            if (expected != actual) mismatches.push_back({n, t, expected, actual});
        }
    }
    return mismatches;
}

}  // namespace cwl::io
