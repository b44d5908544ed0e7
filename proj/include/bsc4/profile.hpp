#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsc4 {

// Bit j (rows numbered 1..4, row 1 = most significant) of column type i.
inline int type_bit(int type, int row) {
    if (type < 0 || type > 15 || row < 1 || row > 4)
        throw std::invalid_argument("type_bit: type in 0..15, row in 1..4");
    return (type >> (4 - row)) & 1;
}

// Complement fold: types 8..15 are column-flips of 7..0 and decode identically.
inline int fold_type(int type) {
    if (type < 0 || type > 15) throw std::invalid_argument("fold_type: type in 0..15");
    return type > 7 ? 15 - type : type;
}

// Row permutation acting on a column type: row j of the image takes the bit
// of row perm[j]. perm is 0-indexed over rows 1..4. Result is NOT folded.
inline int permuted_type(int type, const std::array<int, 4>& perm) {
    int out = 0;
    for (int row = 1; row <= 4; ++row)
        out = (out << 1) | type_bit(type, perm[static_cast<size_t>(row - 1)] + 1);
    return out;
}

// An (n,2) code as column-type multiplicities; column positions are
// immaterial to decoding performance.
struct CodeProfile {
    std::array<long, 16> counts{};

    long n() const { return std::accumulate(counts.begin(), counts.end(), 0L); }

    long& operator[](int type) { return counts[static_cast<size_t>(type)]; }
    long operator[](int type) const { return counts[static_cast<size_t>(type)]; }

    void validate() const {
        for (long c : counts)
            if (c < 0) throw std::invalid_argument("CodeProfile: negative count");
        if (n() < 1) throw std::invalid_argument("CodeProfile: empty code (n must be >= 1)");
    }

    // "type:count" pairs, e.g. "1:3,3:2,5:5,6:7"; omitted types mean zero.
    static CodeProfile parse(const std::string& text) {
        CodeProfile p;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("profile: expected type:count, got '" + item + "'");
            int type;
            long count;
            try {
                size_t used = 0;
                type = std::stoi(item.substr(0, colon), &used);
                if (used != colon) throw std::invalid_argument("");
                std::string rest = item.substr(colon + 1);
                count = std::stol(rest, &used);
                if (used != rest.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("profile: malformed pair '" + item + "'");
            }
            if (type < 0 || type > 15)
                throw std::invalid_argument("profile: type must be 0..15");
            if (count < 0) throw std::invalid_argument("profile: negative count");
            p[type] += count;
        }
        p.validate();
        return p;
    }

    std::string to_string() const {
        std::string out;
        for (int t = 0; t < 16; ++t) {
            if (counts[static_cast<size_t>(t)] == 0) continue;
            if (!out.empty()) out += ',';
            out += std::to_string(t) + ':' + std::to_string(counts[static_cast<size_t>(t)]);
        }
        return out.empty() ? "0:0" : out;
    }

    friend bool operator==(const CodeProfile&, const CodeProfile&) = default;
    friend auto operator<=>(const CodeProfile& a, const CodeProfile& b) {
        return a.counts <=> b.counts;
    }
};

// Explicit 4-row codebook; rows are the codewords c_1..c_4.
struct Codebook {
    std::vector<std::vector<uint8_t>> rows;

    long n() const { return rows.empty() ? 0 : static_cast<long>(rows[0].size()); }

    void validate() const {
        if (rows.empty()) throw std::invalid_argument("Codebook: no rows");
        for (const auto& r : rows)
            if (r.size() != rows[0].size())
                throw std::invalid_argument("Codebook: rows of unequal length");
    }
};

inline long hamming_distance(const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    long d = 0;
    for (size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

// 4-row codebook realizing the profile, columns in ascending type order.
inline Codebook materialize(const CodeProfile& profile) {
    profile.validate();
    Codebook book;
    book.rows.assign(4, {});
    for (auto& r : book.rows) r.reserve(static_cast<size_t>(profile.n()));
    for (int t = 0; t < 16; ++t)
        for (long k = 0; k < profile[t]; ++k)
            for (int row = 1; row <= 4; ++row)
                book.rows[static_cast<size_t>(row - 1)].push_back(static_cast<uint8_t>(type_bit(t, row)));
    return book;
}

inline CodeProfile profile_of(const Codebook& book) {
    book.validate();
    if (book.rows.size() != 4)
        throw std::invalid_argument("profile_of: exactly 4 rows required");
    CodeProfile p;
    for (long j = 0; j < book.n(); ++j) {
        int t = 0;
        for (int row = 0; row < 4; ++row)
            t = (t << 1) | book.rows[static_cast<size_t>(row)][static_cast<size_t>(j)];
        p[t] += 1;
    }
    return p;
}

// w(c_s xor c_t) for rows 1 <= s,t <= 4, from counts alone.
inline long xor_weight(const CodeProfile& profile, int s, int t) {
    if (s < 1 || s > 4 || t < 1 || t > 4 || s == t)
        throw std::invalid_argument("xor_weight: rows must be distinct, in 1..4");
    long w = 0;
    for (int i = 0; i < 16; ++i)
        if (type_bit(i, s) != type_bit(i, t)) w += profile[i];
    return w;
}

namespace detail {

inline const std::array<std::array<int, 4>, 24>& all_row_perms() {
    static const auto perms = [] {
        std::array<std::array<int, 4>, 24> out{};
        std::array<int, 4> p{0, 1, 2, 3};
        size_t k = 0;
        do out[k++] = p;
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

inline CodeProfile apply_row_perm(const CodeProfile& p, const std::array<int, 4>& perm) {
    CodeProfile out;
    for (int t = 0; t < 16; ++t)
        if (p[t]) out[fold_type(permuted_type(t, perm))] += p[t];
    return out;
}

}  // namespace detail

// Equivalent profile in canonical form: complements folded (15->0, i>7 ->
// 15-i); when the nonzero support sits inside {1,3,5,6}, rows permuted so
// the (|3|,|5|,|6|) counts ascend; otherwise the lexicographically least
// folded count vector over the 24 row permutations. Type-0 columns are kept
// (they affect n), merely reported as removable by callers.
inline CodeProfile canonicalize(const CodeProfile& profile) {
    profile.validate();
    CodeProfile folded;
    for (int t = 0; t < 16; ++t) folded[fold_type(t)] += profile[t];

    bool support_1356 = true;
    for (int t : {2, 4, 7})
        if (folded[t] > 0) support_1356 = false;
    if (support_1356) {
        std::array<long, 3> v{folded[3], folded[5], folded[6]};
        std::sort(v.begin(), v.end());
        CodeProfile out;
        out[0] = folded[0];
        out[1] = folded[1];
        out[3] = v[0];
        out[5] = v[1];
        out[6] = v[2];
        return out;
    }
    CodeProfile best = folded;
    for (const auto& perm : detail::all_row_perms()) {
        CodeProfile cand = detail::apply_row_perm(folded, perm);
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace bsc4
