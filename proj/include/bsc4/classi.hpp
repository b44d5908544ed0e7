#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsc4/bigint.hpp"
#include "bsc4/profile.hpp"
#include "bsc4/spectrum.hpp"

namespace bsc4 {

// Code with support {1,3,5,6}, odd n1 and n3,n5,n6 of equal parity. The
// analyzed replacement turns one type-1 column into type 3; replacements by
// type 5 or 6 are reached by first permuting rows (module reductions).
struct ClassIProfile {
    long n1 = 0;
    long n3 = 0;
    long n5 = 0;
    long n6 = 0;

    long n() const { return n1 + n3 + n5 + n6; }

    void validate() const {
        if (n1 < 1 || n1 % 2 == 0)
            throw std::invalid_argument("class-I: n1 must be positive and odd");
        if (n3 < 0 || n5 < 0 || n6 < 0)
            throw std::invalid_argument("class-I: negative count");
        if (((n3 ^ n5) & 1) != 0 || ((n3 ^ n6) & 1) != 0)
            throw std::invalid_argument("class-I: n3, n5, n6 must share parity");
    }

    CodeProfile to_profile() const {
        validate();
        CodeProfile p;
        p[1] = n1;
        p[3] = n3;
        p[5] = n5;
        p[6] = n6;
        return p;
    }

    std::string to_string() const {
        return "(" + std::to_string(n1) + "," + std::to_string(n3) + "," +
               std::to_string(n5) + "," + std::to_string(n6) + ")";
    }

    friend bool operator==(const ClassIProfile&, const ClassIProfile&) = default;
};

inline bool is_class_i(const CodeProfile& profile) {
    for (int t = 0; t < 16; ++t)
        if (t != 1 && t != 3 && t != 5 && t != 6 && profile[t] != 0) return false;
    return profile[1] >= 1 && profile[1] % 2 == 1 &&
           ((profile[3] ^ profile[5]) & 1) == 0 && ((profile[3] ^ profile[6]) & 1) == 0;
}

inline ClassIProfile as_class_i(const CodeProfile& profile) {
    if (!is_class_i(profile))
        throw std::invalid_argument("profile is not Class-I (support {1,3,5,6}, odd n1, equal parities)");
    return ClassIProfile{profile[1], profile[3], profile[5], profile[6]};
}

// Output described by its first-position bit y1 and the per-type weights
// (w1 counts ones across all type-1 columns, the first column included).
struct ClassITuple {
    int y1 = 0;
    long w1 = 0;
    long w3 = 0;
    long w5 = 0;
    long w6 = 0;
};

namespace detail {

inline std::array<long, 4> class_i_distances(const ClassIProfile& p, const ClassITuple& t) {
    p.validate();
    if (t.y1 != 0 && t.y1 != 1)
        throw std::invalid_argument("class-I tuple: y1 must be 0 or 1");
    if (t.w1 < 0 || t.w1 > p.n1 || t.w3 < 0 || t.w3 > p.n3 || t.w5 < 0 || t.w5 > p.n5 ||
        t.w6 < 0 || t.w6 > p.n6)
        throw std::invalid_argument("class-I tuple: weight out of bounds");
    if (t.y1 == 1 && t.w1 < 1)
        throw std::invalid_argument("class-I tuple: y1=1 needs w1 >= 1");
    if (t.y1 == 0 && t.w1 > p.n1 - 1)
        throw std::invalid_argument("class-I tuple: y1=0 needs w1 <= n1-1");
    return {
        t.w1 + t.w3 + t.w5 + t.w6,
        t.w1 + t.w3 + (p.n5 - t.w5) + (p.n6 - t.w6),
        t.w1 + (p.n3 - t.w3) + t.w5 + (p.n6 - t.w6),
        (p.n1 - t.w1) + (p.n3 - t.w3) + (p.n5 - t.w5) + t.w6,
    };
}

}  // namespace detail

// Y3 = {y1 = 1, d4 >= d1^d2 = d3} under the type-1 -> type-3 replacement.
inline bool y3_membership(const ClassIProfile& p, const ClassITuple& t) {
    auto d = detail::class_i_distances(p, t);
    long d12 = std::min(d[0], d[1]);
    return t.y1 == 1 && d12 == d[2] && d[3] >= d12;
}

// Y5 = {y1 = 1, d1^d2 >= d4+2 = d3+1}.
inline bool y5_membership(const ClassIProfile& p, const ClassITuple& t) {
    auto d = detail::class_i_distances(p, t);
    return t.y1 == 1 && d[2] == d[3] + 1 && std::min(d[0], d[1]) >= d[3] + 2;
}

// alpha3[i] = #{y in Y3 : d_C(y) = i}, alpha5[i] = #{y in Y5 : d_C(y) = i},
// computed by closed-form binomial sums (no 2^n enumeration).
struct ClassISpectra {
    ClassIProfile profile;
    std::vector<BigInt> alpha3;
    std::vector<BigInt> alpha5;
};

// Equality constraints eliminate w3 (or w5) and tie i to the remaining free
// weights, so each sum is a triple loop; all half-integer thresholds are
// compared in doubled form (n1 odd makes some of them genuinely fractional).
inline ClassISpectra class_i_spectra(const ClassIProfile& p) {
    p.validate();
    const long n = p.n();
    ClassISpectra out;
    out.profile = p;
    out.alpha3.assign(static_cast<size_t>(n) + 1, BigInt(0));
    out.alpha5.assign(static_cast<size_t>(n) + 1, BigInt(0));
    const BinomialTable table(std::max({p.n1, p.n3, p.n5, p.n6}));
    auto product = [&](long w1, long w3, long w5, long w6) {
        return table.at(p.n1 - 1, w1 - 1) * table.at(p.n3, w3) * table.at(p.n5, w5) *
               table.at(p.n6, w6);
    };

    // Y3, low-weight half: 2(w5+w6) < n5+n6, with w3 determined by
    // w3+w6 = (n3+n6)/2 and i = w1+w5+(n3+n6)/2.
    for (long w1 = 1; w1 <= p.n1; ++w1)
        for (long w5 = 0; w5 <= p.n5; ++w5)
            for (long w6 = 0; w6 <= p.n6; ++w6) {
                if (2 * (w5 + w6) >= p.n5 + p.n6) continue;
                if (2 * (w1 + w5 - w6) > p.n1 + p.n5 - p.n6) continue;
                const long w3 = (p.n3 + p.n6) / 2 - w6;
                if (w3 < 0 || w3 > p.n3) continue;
                const long i = w1 + w5 + (p.n3 + p.n6) / 2;
                out.alpha3[static_cast<size_t>(i)] += product(w1, w3, w5, w6);
            }

    // Y3, high-weight half: 2(w5+w6) >= n5+n6, with w3-w5 = (n3-n5)/2 and
    // i = w1 + (n6-w6) + (n3+n5)/2.
    for (long w1 = 1; w1 <= p.n1; ++w1)
        for (long w5 = 0; w5 <= p.n5; ++w5)
            for (long w6 = 0; w6 <= p.n6; ++w6) {
                if (2 * (w5 + w6) < p.n5 + p.n6) continue;
                if (2 * (w1 + w5 - w6) > p.n1 + p.n5 - p.n6) continue;
                const long w3 = w5 + (p.n3 - p.n5) / 2;
                if (w3 < 0 || w3 > p.n3) continue;
                const long i = w1 + (p.n6 - w6) + (p.n3 + p.n5) / 2;
                out.alpha3[static_cast<size_t>(i)] += product(w1, w3, w5, w6);
            }

    // Y5: w5 determined by 2(w1+w5-w6) = n1+n5-n6+1, i by 2w3 = n+n3-1-2i.
    for (long w3 = 0; w3 <= p.n3; ++w3) {
        const long i = (n + p.n3 - 1) / 2 - w3;
        for (long w1 = 1; w1 <= p.n1; ++w1)
            for (long w6 = 0; w6 <= p.n6; ++w6) {
                const long twice_w5 = p.n1 + p.n5 - p.n6 + 1 - 2 * w1 + 2 * w6;
                if (twice_w5 < 0 || twice_w5 % 2 != 0) continue;
                const long w5 = twice_w5 / 2;
                if (w5 > p.n5) continue;
                if (2 * (w3 + w6) < p.n3 + p.n6 + 2) continue;
                if (2 * (w3 - w5) < p.n3 - p.n5 + 2) continue;
                out.alpha5[static_cast<size_t>(i)] += product(w1, w3, w5, w6);
            }
    }
    return out;
}

inline BigInt alpha3(const ClassIProfile& p, long i) {
    if (i < 0 || i > p.n()) throw std::invalid_argument("alpha3: i out of range");
    return class_i_spectra(p).alpha3[static_cast<size_t>(i)];
}

inline BigInt alpha5(const ClassIProfile& p, long i) {
    if (i < 0 || i > p.n()) throw std::invalid_argument("alpha5: i out of range");
    return class_i_spectra(p).alpha5[static_cast<size_t>(i)];
}

// Partial-sum dominance test: the replacement never loses at any eps iff
// Psi_d = sum_{i<=d} alpha3[i] - sum_{i<d} alpha5[i] >= 0 for all d.
enum class CertificateKind { universal, eps_dependent, refuted };

struct DominanceCertificate {
    CertificateKind kind = CertificateKind::universal;
    ClassIProfile profile;
    std::vector<BigInt> margins;       // Psi_d for d = 1..n (universal/refuted)
    std::vector<BigInt> coefficients;  // c_d = alpha3[d]-alpha5[d-1] (eps-dependent)
    long failing_d = 0;                // first d with Psi_d < 0 (refuted)
};

inline DominanceCertificate dominance_check(const ClassIProfile& p) {
    const ClassISpectra s = class_i_spectra(p);
    const long n = p.n();
    DominanceCertificate cert;
    cert.profile = p;
    cert.margins.reserve(static_cast<size_t>(n));
    BigInt psi = 0;
    long first_fail = 0;
    for (long d = 1; d <= n; ++d) {
        psi += s.alpha3[static_cast<size_t>(d)] - s.alpha5[static_cast<size_t>(d - 1)];
        cert.margins.push_back(psi);
        if (psi < 0 && first_fail == 0) first_fail = d;
    }
    if (first_fail == 0) {
        cert.kind = CertificateKind::universal;
    } else {
        cert.kind = CertificateKind::refuted;
        cert.failing_d = first_fail;
    }
    return cert;
}

// Coefficients c_d = alpha3[d] - alpha5[d-1], d = 1..n, of the comparison
// polynomial in t = eps/(1-eps): the replacement helps at eps iff
// sum_d c_d t^(d-1) >= 0.
inline std::vector<BigInt> theorem1_polynomial(const ClassIProfile& p) {
    const ClassISpectra s = class_i_spectra(p);
    const long n = p.n();
    std::vector<BigInt> c;
    c.reserve(static_cast<size_t>(n));
    for (long d = 1; d <= n; ++d)
        c.push_back(s.alpha3[static_cast<size_t>(d)] - s.alpha5[static_cast<size_t>(d - 1)]);
    return c;
}

// Exact sign of sum_d c_d t^(d-1) at t = p/(q-p): scale by (q-p)^(n-1) to an
// integer sum_d c_d p^(d-1) (q-p)^(n-d).
inline int theorem1_sign(const std::vector<BigInt>& coeffs, const RationalProb& eps) {
    const long n = static_cast<long>(coeffs.size());
    const BigInt p = eps.num;
    const BigInt qp = eps.den - eps.num;
    BigInt pw_p = 1;
    std::vector<BigInt> pw_qp(static_cast<size_t>(n));
    if (n > 0) {
        pw_qp[static_cast<size_t>(n - 1)] = 1;
        for (long d = n - 2; d >= 0; --d)
            pw_qp[static_cast<size_t>(d)] = pw_qp[static_cast<size_t>(d + 1)] * qp;
    }
    BigInt sum = 0;
    for (long d = 1; d <= n; ++d) {
        sum += coeffs[static_cast<size_t>(d - 1)] * pw_p * pw_qp[static_cast<size_t>(d - 1)];
        pw_p *= p;
    }
    return sign_of(sum);
}

// ---- Binomial-domination regions used by the |1|=1 argument (distance
// threshold common to both regions cancels, so they depend on (n3,n6) only).

inline void check_region_params(long n3, long n6) {
    if (n3 < 0 || n6 < 0 || n3 > n6 || ((n3 ^ n6) & 1) != 0)
        throw std::invalid_argument("region: need 0 <= n3 <= n6 of equal parity");
}

inline bool in_w5_region(long n3, long n6, long w3, long w6) {
    check_region_params(n3, n6);
    return 2 * (w3 + w6) >= n3 + n6 + 2 && 2 * (w3 - w6) >= n3 - n6 + 2 && w3 >= 0 &&
           w3 <= n3 && w6 >= 0 && w6 <= n6;
}

inline bool in_w3prime_region(long n3, long n6, long w3, long w6) {
    check_region_params(n3, n6);
    return 2 * (w3 + w6) >= n3 + n6 && 2 * (w3 - w6) >= n3 - n6 + 1 && 2 * w3 >= n3 - n6 &&
           2 * w3 <= n3 + n6 && 2 * w6 >= n6 - n3 && 2 * w6 <= n3 + n6;
}

// C(n3,w3) C(n6,w6) <= C(n3, (n3-n6)/2 + w6) C(n6, (n6-n3)/2 + w3) on the
// whole w5 region; returns true iff it holds at every point.
inline bool binomial_domination_holds(long n3, long n6) {
    check_region_params(n3, n6);
    const BinomialTable table(n6);
    for (long w3 = 0; w3 <= n3; ++w3)
        for (long w6 = 0; w6 <= n6; ++w6) {
            if (!in_w5_region(n3, n6, w3, w6)) continue;
            const BigInt lhs = table.at(n3, w3) * table.at(n6, w6);
            const BigInt rhs =
                table.at(n3, (n3 - n6) / 2 + w6) * table.at(n6, (n6 - n3) / 2 + w3);
            if (lhs > rhs) return false;
        }
    return true;
}

inline bool w5_subset_w3prime(long n3, long n6) {
    check_region_params(n3, n6);
    for (long w3 = 0; w3 <= n3; ++w3)
        for (long w6 = 0; w6 <= n6; ++w6)
            if (in_w5_region(n3, n6, w3, w6) && !in_w3prime_region(n3, n6, w3, w6))
                return false;
    return true;
}

}  // namespace bsc4
