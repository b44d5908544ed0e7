#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace bsc4 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(a, b) with the out-of-range convention C(a, b) = 0 for b < 0 or b > a.
// Exact for any nonnegative a (arbitrary precision).
inline BigInt binomial(long a, long b) {
    if (a < 0) throw std::invalid_argument("binomial: negative upper index");
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long k = 1; k <= b; ++k) {
        r *= a - b + k;
        r /= k;  // exact: r is C(a-b+k, k) after this step
    }
    return r;
}

// Immutable Pascal-triangle table for hot loops; rows 0..max_a.
class BinomialTable {
  public:
    explicit BinomialTable(long max_a) : max_a_(max_a) {
        if (max_a < 0) throw std::invalid_argument("BinomialTable: negative size");
        rows_.resize(static_cast<size_t>(max_a) + 1);
        for (long a = 0; a <= max_a; ++a) {
            auto& row = rows_[static_cast<size_t>(a)];
            row.resize(static_cast<size_t>(a) + 1);
            row[0] = 1;
            row[static_cast<size_t>(a)] = 1;
            for (long b = 1; b < a; ++b)
                row[static_cast<size_t>(b)] = rows_[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] +
                                              rows_[static_cast<size_t>(a - 1)][static_cast<size_t>(b)];
        }
    }

    const BigInt& at(long a, long b) const {
        if (a < 0 || a > max_a_) throw std::out_of_range("BinomialTable::at: row out of range");
        if (b < 0 || b > a) return zero_;
        return rows_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    long max_a() const { return max_a_; }

  private:
    long max_a_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_{0};
};

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const BigRat& v) { return v.sign(); }

}  // namespace bsc4
