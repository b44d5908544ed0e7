#pragma once

#include <array>
#include <vector>

#include "bsc4/bigint.hpp"
#include "bsc4/profile.hpp"
#include "bsc4/spectrum.hpp"

namespace bsc4 {

// w[i] = number of 1s an output y places on the type-i columns.
using WeightTuple = std::array<long, 16>;

// The four codeword distances (d_1..d_4) of any output realizing the tuple:
// type-i columns contribute w_i to d_j when codeword j has bit 0 there and
// counts[i] - w_i when it has bit 1.
inline std::array<long, 4> codeword_distances(const CodeProfile& profile,
                                              const WeightTuple& w) {
    std::array<long, 4> d{0, 0, 0, 0};
    for (int i = 0; i < 16; ++i) {
        if (w[static_cast<size_t>(i)] < 0 || w[static_cast<size_t>(i)] > profile[i])
            throw std::invalid_argument("codeword_distances: weight out of bounds");
        for (int row = 1; row <= 4; ++row)
            d[static_cast<size_t>(row - 1)] +=
                type_bit(i, row) ? profile[i] - w[static_cast<size_t>(i)]
                                 : w[static_cast<size_t>(i)];
    }
    return d;
}

// alpha vector by enumerating weight tuples (counts[i]+1 choices per present
// type) instead of 2^n outputs; each tuple stands for prod_i C(counts[i],w_i)
// outputs sharing the same four distances.
inline DistanceSpectrum spectrum_analytic(const CodeProfile& profile) {
    profile.validate();
    const long n = profile.n();
    std::vector<int> types;
    long max_count = 0;
    for (int i = 0; i < 16; ++i)
        if (profile[i] > 0) {
            types.push_back(i);
            max_count = std::max(max_count, profile[i]);
        }
    const BinomialTable table(max_count);
    DistanceSpectrum spec;
    spec.n = n;
    spec.alpha.assign(static_cast<size_t>(n) + 1, BigInt(0));

    std::array<long, 4> d{0, 0, 0, 0};
    auto rec = [&](auto&& self, size_t k, const BigInt& mult) -> void {
        if (k == types.size()) {
            long dmin = std::min(std::min(d[0], d[1]), std::min(d[2], d[3]));
            spec.alpha[static_cast<size_t>(dmin)] += mult;
            return;
        }
        const int type = types[k];
        const long cnt = profile[type];
        for (long wi = 0; wi <= cnt; ++wi) {
            for (int row = 1; row <= 4; ++row)
                d[static_cast<size_t>(row - 1)] += type_bit(type, row) ? cnt - wi : wi;
            self(self, k + 1, mult * table.at(cnt, wi));
            for (int row = 1; row <= 4; ++row)
                d[static_cast<size_t>(row - 1)] -= type_bit(type, row) ? cnt - wi : wi;
        }
    };
    rec(rec, 0, BigInt(1));
    return spec;
}

inline BigRat lambda_analytic(const CodeProfile& profile, const RationalProb& eps) {
    return lambda_of(spectrum_analytic(profile), eps);
}

inline Ordering compare_at_eps(const CodeProfile& a, const CodeProfile& b,
                               const RationalProb& eps) {
    if (a.n() != b.n())
        throw std::invalid_argument("compare_at_eps: block lengths differ");
    return compare_rats(lambda_analytic(a, eps), lambda_analytic(b, eps));
}

}  // namespace bsc4
