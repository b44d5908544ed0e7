#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsc4/bigint.hpp"

namespace bsc4 {

// Channel crossover probability as an exact reduced fraction in (0, 1/2).
struct RationalProb {
    BigInt num;
    BigInt den;

    RationalProb(BigInt numerator, BigInt denominator)
        : num(std::move(numerator)), den(std::move(denominator)) {
        if (den <= 0) throw std::invalid_argument("eps: denominator must be positive");
        if (num <= 0 || 2 * num >= den)
            throw std::invalid_argument("eps: must satisfy 0 < eps < 1/2");
        BigInt g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
    }

    // "p/q" text form.
    static RationalProb parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("eps: expected p/q, got '" + text + "'");
        try {
            return RationalProb(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("eps: malformed fraction '" + text + "'");
        }
    }

    BigRat value() const { return BigRat(num, den); }
    std::string to_string() const { return num.str() + "/" + den.str(); }

    friend bool operator==(const RationalProb&, const RationalProb&) = default;
};

// alpha[d] = number of outputs y whose minimum distance to the code is d.
struct DistanceSpectrum {
    long n = 0;
    std::vector<BigInt> alpha;  // size n+1

    void validate(int rows_log2 = 0) const {
        if (static_cast<long>(alpha.size()) != n + 1)
            throw std::logic_error("DistanceSpectrum: alpha size must be n+1");
        (void)rows_log2;
    }

    BigInt total() const {
        return std::accumulate(alpha.begin(), alpha.end(), BigInt(0));
    }

    friend bool operator==(const DistanceSpectrum&, const DistanceSpectrum&) = default;
};

// Correct-decoding probability (1/4) sum_d alpha_d (1-eps)^(n-d) eps^d,
// evaluated exactly: sum_d alpha_d (q-p)^(n-d) p^d / (4 q^n).
inline BigRat lambda_of(const DistanceSpectrum& spec, const RationalProb& eps,
                        long codebook_size = 4) {
    spec.validate();
    if (codebook_size < 1) throw std::invalid_argument("lambda_of: codebook size");
    const BigInt p = eps.num;
    const BigInt qp = eps.den - eps.num;  // q - p
    // powers qp^(n-d) p^d accumulated by one running product each way
    std::vector<BigInt> pow_p(static_cast<size_t>(spec.n) + 1);
    std::vector<BigInt> pow_qp(static_cast<size_t>(spec.n) + 1);
    pow_p[0] = 1;
    pow_qp[0] = 1;
    for (long d = 1; d <= spec.n; ++d) {
        pow_p[static_cast<size_t>(d)] = pow_p[static_cast<size_t>(d - 1)] * p;
        pow_qp[static_cast<size_t>(d)] = pow_qp[static_cast<size_t>(d - 1)] * qp;
    }
    BigInt numer = 0;
    for (long d = 0; d <= spec.n; ++d)
        numer += spec.alpha[static_cast<size_t>(d)] * pow_qp[static_cast<size_t>(spec.n - d)] *
                 pow_p[static_cast<size_t>(d)];
    BigInt denom = codebook_size;
    for (long d = 0; d < spec.n; ++d) denom *= eps.den;
    return BigRat(numer, denom);
}

enum class Ordering { less, equal, greater };

inline Ordering compare_rats(const BigRat& a, const BigRat& b) {
    if (a < b) return Ordering::less;
    if (a > b) return Ordering::greater;
    return Ordering::equal;
}

inline std::string ordering_name(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        default: return "greater";
    }
}

// Truncated decimal expansion with the given number of fractional digits
// (round toward zero); explicitly an approximation of the exact rational.
inline std::string decimal_string(const BigRat& value, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: digits >= 0");
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale / den;
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = sign + whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

}  // namespace bsc4
