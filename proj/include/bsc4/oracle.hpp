#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "bsc4/bigint.hpp"
#include "bsc4/profile.hpp"
#include "bsc4/spectrum.hpp"

namespace bsc4 {

inline constexpr long kOracleMaxN = 24;

inline void oracle_guard(long n) {
    if (n > kOracleMaxN)
        throw std::invalid_argument("oracle: n = " + std::to_string(n) +
                                    " exceeds brute-force limit " + std::to_string(kOracleMaxN));
}

inline long ml_distance(const Codebook& book, const std::vector<uint8_t>& y) {
    book.validate();
    if (static_cast<long>(y.size()) != book.n())
        throw std::invalid_argument("ml_distance: output length mismatch");
    long best = -1;
    for (const auto& row : book.rows) {
        long d = hamming_distance(row, y);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

namespace detail {

// Column j of an n-column word maps to bit n-1-j, so enumerating masks
// 0..2^n-1 walks outputs in binary-string order.
inline std::vector<uint32_t> row_masks(const Codebook& book) {
    std::vector<uint32_t> masks;
    masks.reserve(book.rows.size());
    long n = book.n();
    for (const auto& row : book.rows) {
        uint32_t m = 0;
        for (long j = 0; j < n; ++j)
            if (row[static_cast<size_t>(j)]) m |= uint32_t{1} << (n - 1 - j);
        masks.push_back(m);
    }
    return masks;
}

}  // namespace detail

inline DistanceSpectrum spectrum_bruteforce(const Codebook& book) {
    book.validate();
    if (book.rows.size() < 2 || book.rows.size() > 32)
        throw std::invalid_argument("spectrum_bruteforce: 2..32 rows supported");
    oracle_guard(book.n());
    const long n = book.n();
    const auto masks = detail::row_masks(book);
    std::vector<long> alpha(static_cast<size_t>(n) + 1, 0);
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t y = 0; y < total; ++y) {
        int best = std::numeric_limits<int>::max();
        for (uint32_t m : masks)
            best = std::min(best, std::popcount(static_cast<uint32_t>(y) ^ m));
        ++alpha[static_cast<size_t>(best)];
    }
    DistanceSpectrum spec;
    spec.n = n;
    spec.alpha.assign(alpha.begin(), alpha.end());
    return spec;
}

inline BigRat lambda_bruteforce(const Codebook& book, const RationalProb& eps) {
    return lambda_of(spectrum_bruteforce(book), eps, static_cast<long>(book.rows.size()));
}

enum class PartitionLabel { Y1 = 1, Y2 = 2, Y3 = 3, Y4 = 4, Y5 = 5 };

// Single-column replacement scenario: the code's first column has type s and
// is compared against type s_prime (one flipped position, t = 1).
struct OneColumnScenario {
    int s;
    int s_prime;

    // Rows where the s and s_prime column bits agree.
    std::array<bool, 4> agree_rows() const {
        if (s < 0 || s > 15 || s_prime < 0 || s_prime > 15)
            throw std::invalid_argument("scenario: types must be 0..15");
        if (s_prime == s || s_prime == 15 - s)
            throw std::invalid_argument("scenario: replacement must differ in some rows but not all");
        std::array<bool, 4> agree{};
        for (int row = 1; row <= 4; ++row)
            agree[static_cast<size_t>(row - 1)] = type_bit(s, row) == type_bit(s_prime, row);
        return agree;
    }
};

// Two-position scenario: first columns (<s>,<7>) with both bits of one
// codeword flipped (t = 2), turning them into two non-<7> columns.
struct TwoBitScenario {
    int source;  // 1, 2, or 4

    int flipped_row() const {  // 0-indexed codeword whose first two bits flip
        switch (source) {
            case 1: return 2;
            case 2: return 3;
            case 4: return 3;
            default: throw std::invalid_argument("two-bit scenario: source must be 1, 2 or 4");
        }
    }
};

struct GroupDistances {
    long dO = 0;
    long dP = 0;
    long dOprime = 0;
    long dPprime = 0;
};

namespace detail {

struct ScenarioView {
    std::array<bool, 4> in_O{};  // rows outside O form P
    int t = 1;                   // number of flipped leading positions
};

inline void check_first_columns(const Codebook& book, std::initializer_list<int> types) {
    if (book.rows.size() != 4)
        throw std::invalid_argument("partition: 4-row codebook required");
    if (book.n() < static_cast<long>(types.size()))
        throw std::invalid_argument("partition: codebook shorter than scenario columns");
    long j = 0;
    for (int t : types) {
        for (int row = 1; row <= 4; ++row)
            if (book.rows[static_cast<size_t>(row - 1)][static_cast<size_t>(j)] != type_bit(t, row))
                throw std::invalid_argument("partition: codebook's leading columns do not match scenario");
        ++j;
    }
}

inline ScenarioView view_of(const Codebook& book, const OneColumnScenario& sc) {
    ScenarioView v;
    v.in_O = sc.agree_rows();
    v.t = 1;
    check_first_columns(book, {sc.s});
    return v;
}

inline ScenarioView view_of(const Codebook& book, const TwoBitScenario& sc) {
    ScenarioView v;
    int flipped = sc.flipped_row();
    for (int i = 0; i < 4; ++i) v.in_O[static_cast<size_t>(i)] = i != flipped;
    v.t = 2;
    check_first_columns(book, {sc.source, 7});
    return v;
}

template <typename DistPlain, typename DistFlipped>
inline GroupDistances group_distances(const ScenarioView& v, DistPlain&& d_plain,
                                      DistFlipped&& d_flipped) {
    const long inf = std::numeric_limits<long>::max();
    GroupDistances g{inf, inf, inf, inf};
    for (int i = 0; i < 4; ++i) {
        if (v.in_O[static_cast<size_t>(i)]) {
            g.dO = std::min(g.dO, d_plain(i));
            g.dOprime = std::min(g.dOprime, d_flipped(i));
        } else {
            g.dP = std::min(g.dP, d_plain(i));
            g.dPprime = std::min(g.dPprime, d_flipped(i));
        }
    }
    return g;
}

inline PartitionLabel one_column_label(const GroupDistances& g) {
    const long dO = g.dO, dP = g.dP, dOp = g.dOprime, dPp = g.dPprime;
    if ((dO <= dP && dP < dPp) || (dO <= dPp && dPp <= dP && dOp <= dPp))
        return PartitionLabel::Y1;
    if ((dP <= dPp && dP < dO) || (dPp < dP && dP <= dO && dP <= dOp))
        return PartitionLabel::Y2;
    if (dPp == dOp && dOp < dP && dP == dO) return PartitionLabel::Y3;
    if (dP == dPp && dPp == dO && dO < dOp) return PartitionLabel::Y4;
    if (dPp == dO && dO < dOp && dOp == dP) return PartitionLabel::Y5;
    throw std::logic_error("one-column partition: unclassified output");
}

inline PartitionLabel two_bit_label(bool y_bits_equal, const GroupDistances& g) {
    const long dO = g.dO, dP = g.dP, dOp = g.dOprime, dPp = g.dPprime;
    if (y_bits_equal) return PartitionLabel::Y1;
    if (dO <= std::min(dP, dPp)) return PartitionLabel::Y2;
    if (dP <= std::min(dO, dOp)) return PartitionLabel::Y3;
    if (dPp < std::min(dO, dOp) && std::min(dO, dOp) < dP) return PartitionLabel::Y4;
    if (dOp <= std::min(dP, dPp) && std::min(dP, dPp) < dO && dOp < dP)
        return PartitionLabel::Y5;
    throw std::logic_error("two-bit partition: unclassified output");
}

}  // namespace detail

// Codebook realizing `rest` with the scenario's column(s) prepended.
inline Codebook scenario_codebook(const CodeProfile& rest, const OneColumnScenario& sc) {
    sc.agree_rows();
    Codebook base = materialize(rest);
    for (int row = 1; row <= 4; ++row)
        base.rows[static_cast<size_t>(row - 1)].insert(
            base.rows[static_cast<size_t>(row - 1)].begin(),
            static_cast<uint8_t>(type_bit(sc.s, row)));
    return base;
}

inline Codebook scenario_codebook(const CodeProfile& rest, const TwoBitScenario& sc) {
    sc.flipped_row();
    Codebook base = materialize(rest);
    for (int row = 1; row <= 4; ++row) {
        auto& r = base.rows[static_cast<size_t>(row - 1)];
        r.insert(r.begin(), static_cast<uint8_t>(type_bit(7, row)));
        r.insert(r.begin(), static_cast<uint8_t>(type_bit(sc.source, row)));
    }
    return base;
}

// The compared code C': same book with the scenario's replacement applied.
inline Codebook scenario_modified(const Codebook& book, const OneColumnScenario& sc) {
    detail::check_first_columns(book, {sc.s});
    Codebook out = book;
    for (int row = 1; row <= 4; ++row)
        out.rows[static_cast<size_t>(row - 1)][0] = static_cast<uint8_t>(type_bit(sc.s_prime, row));
    return out;
}

inline Codebook scenario_modified(const Codebook& book, const TwoBitScenario& sc) {
    detail::check_first_columns(book, {sc.source, 7});
    Codebook out = book;
    int r = sc.flipped_row();
    out.rows[static_cast<size_t>(r)][0] ^= 1;
    out.rows[static_cast<size_t>(r)][1] ^= 1;
    return out;
}

template <typename Scenario>
inline GroupDistances group_distances(const Codebook& book, const Scenario& sc,
                                      const std::vector<uint8_t>& y) {
    const auto v = detail::view_of(book, sc);
    if (static_cast<long>(y.size()) != book.n())
        throw std::invalid_argument("partition: output length mismatch");
    std::vector<uint8_t> fy = y;
    for (int j = 0; j < v.t; ++j) fy[static_cast<size_t>(j)] ^= 1;
    auto plain = [&](int i) { return hamming_distance(book.rows[static_cast<size_t>(i)], y); };
    auto flipped = [&](int i) { return hamming_distance(book.rows[static_cast<size_t>(i)], fy); };
    return detail::group_distances(v, plain, flipped);
}

inline PartitionLabel classify_partition(const Codebook& book, const OneColumnScenario& sc,
                                         const std::vector<uint8_t>& y) {
    return detail::one_column_label(group_distances(book, sc, y));
}

inline PartitionLabel classify_partition(const Codebook& book, const TwoBitScenario& sc,
                                         const std::vector<uint8_t>& y) {
    GroupDistances g = group_distances(book, sc, y);
    return detail::two_bit_label(y[0] == y[1], g);
}

// Per-class spectra of a scenario, brute-forced over all outputs.
//   by_dC[k][d]      = #{y in Y_{k+1} : d_C(y) = d}
//   by_dCprime[k][d] = #{y in Y_{k+1} : d_{C'}(m(y)) = d}, where m flips the
//                      leading t bits exactly for the classes the proofs map
//                      (one-column: Y2,Y4,Y5; two-bit: Y3,Y4) and is the
//                      identity otherwise, so the k-th vector is the class
//                      spectrum of the C'-side partition cell.
struct ScenarioSpectra {
    long n = 0;
    std::array<std::vector<BigInt>, 5> by_dC;
    std::array<std::vector<BigInt>, 5> by_dCprime;
};

namespace detail {

template <typename Scenario>
inline ScenarioSpectra scenario_spectra_impl(const Codebook& book, const Scenario& sc,
                                             const std::array<bool, 5>& mapped) {
    oracle_guard(book.n());
    const auto v = view_of(book, sc);
    const long n = book.n();
    const auto masks = row_masks(book);
    const uint32_t flip_mask = ((uint32_t{1} << v.t) - 1) << (n - v.t);
    ScenarioSpectra out;
    out.n = n;
    std::array<std::vector<long>, 5> byC, byC2;
    for (int k = 0; k < 5; ++k) {
        byC[static_cast<size_t>(k)].assign(static_cast<size_t>(n) + 1, 0);
        byC2[static_cast<size_t>(k)].assign(static_cast<size_t>(n) + 1, 0);
    }
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t yw = 0; yw < total; ++yw) {
        const uint32_t y = static_cast<uint32_t>(yw);
        const uint32_t fy = y ^ flip_mask;
        auto plain = [&](int i) {
            return static_cast<long>(std::popcount(y ^ masks[static_cast<size_t>(i)]));
        };
        auto flipped = [&](int i) {
            return static_cast<long>(std::popcount(fy ^ masks[static_cast<size_t>(i)]));
        };
        GroupDistances g = group_distances(v, plain, flipped);
        PartitionLabel label;
        if constexpr (std::is_same_v<Scenario, TwoBitScenario>) {
            bool eq = ((y >> (n - 1)) & 1) == ((y >> (n - 2)) & 1);
            label = two_bit_label(eq, g);
        } else {
            label = one_column_label(g);
        }
        const int k = static_cast<int>(label) - 1;
        const long dC = std::min(g.dO, g.dP);
        // d_{C'}(y) = min(dO, dP'); d_{C'}(f(y)) = min(dO', dP).
        const long dC2 = mapped[static_cast<size_t>(k)] ? std::min(g.dOprime, g.dP)
                                                        : std::min(g.dO, g.dPprime);
        ++byC[static_cast<size_t>(k)][static_cast<size_t>(dC)];
        ++byC2[static_cast<size_t>(k)][static_cast<size_t>(dC2)];
    }
    for (int k = 0; k < 5; ++k) {
        out.by_dC[static_cast<size_t>(k)].assign(byC[static_cast<size_t>(k)].begin(),
                                                 byC[static_cast<size_t>(k)].end());
        out.by_dCprime[static_cast<size_t>(k)].assign(byC2[static_cast<size_t>(k)].begin(),
                                                      byC2[static_cast<size_t>(k)].end());
    }
    return out;
}

}  // namespace detail

inline ScenarioSpectra scenario_spectra(const Codebook& book, const OneColumnScenario& sc) {
    return detail::scenario_spectra_impl(book, sc, {false, true, false, true, true});
}

inline ScenarioSpectra scenario_spectra(const Codebook& book, const TwoBitScenario& sc) {
    return detail::scenario_spectra_impl(book, sc, {false, false, true, true, false});
}

}  // namespace bsc4
