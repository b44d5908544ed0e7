#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bsc4/analytic.hpp"
#include "bsc4/classi.hpp"
#include "bsc4/profile.hpp"
#include "bsc4/spectrum.hpp"

namespace bsc4 {

// Sweep lattice for certifying linear optimality at block length n: all
// (n1,n3,n5,n6) with n1 odd >= 3, 2 <= n3 <= n5 <= n6 of equal parity and
// total exactly n, in lexicographic order. Profiles with n1 = 1 or
// min count <= 1 are covered by standalone replacement arguments and are
// asserted separately rather than swept.
inline std::vector<ClassIProfile> algorithm1_lattice(long n) {
    std::vector<ClassIProfile> lattice;
    for (long n1 = 3; n1 <= n; n1 += 2)
        for (long n3 = 2; n3 <= (n - n1) / 3; ++n3)
            for (long n5 = n3; n5 <= (n - n1 - n3) / 2; n5 += 2) {
                const long n6 = n - n1 - n3 - n5;
                if (((n6 ^ n5) & 1) != 0) continue;
                lattice.push_back(ClassIProfile{n1, n3, n5, n6});
            }
    return lattice;
}

enum class Verdict { linear_optimal, counterexample_found, inconclusive };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::linear_optimal: return "linear-optimal";
        case Verdict::counterexample_found: return "counterexample-found";
        default: return "inconclusive";
    }
}

struct Counterexample {
    ClassIProfile profile;
    long failing_d = 0;
    std::vector<BigInt> margins;
};

struct OptimalityReport {
    long n = 0;
    Verdict verdict = Verdict::inconclusive;
    long profiles_checked = 0;
    std::optional<Counterexample> counterexample;
    std::vector<Counterexample> all_counterexamples;  // --full scans only
    bool full_scan = false;
};

namespace detail {

// Profiles excluded from the sweep because a replacement argument already
// covers them; their dominance certificates are still required to be
// universal, so check them before trusting the sweep's verdict.
inline void assert_excluded_cases(long n) {
    auto check = [](const ClassIProfile& p) {
        if (dominance_check(p).kind != CertificateKind::universal)
            throw std::logic_error("verifier: excluded profile " + p.to_string() +
                                   " lacks a universal certificate");
    };
    // n1 = 1, any sorted (n3,n5,n6); the type-3 slot is the minimum count
    for (long n3 = 0; 3 * n3 <= n - 1; ++n3)
        for (long n5 = n3; n3 + 2 * n5 <= n - 1; n5 += 2) {
            const long n6 = n - 1 - n3 - n5;
            if (n6 < n5 || ((n6 ^ n5) & 1) != 0) continue;
            check(ClassIProfile{1, n3, n5, n6});
        }
    // n1 >= 3 odd with minimum count 0 or 1
    for (long n1 = 3; n1 <= n; n1 += 2)
        for (long n3 = 0; n3 <= 1; ++n3)
            for (long n5 = n3; n1 + n3 + 2 * n5 <= n; n5 += 2) {
                const long n6 = n - n1 - n3 - n5;
                if (n6 < n5 || ((n6 ^ n5) & 1) != 0) continue;
                check(ClassIProfile{n1, n3, n5, n6});
            }
}

}  // namespace detail

// Certify that no swept profile admits a universally better replacement gap:
// every lattice profile must pass the partial-sum dominance test. Workers
// share the lattice round-robin by index; results are independent of the
// worker count (the reported counterexample is the lexicographic minimum).
inline OptimalityReport verify_linear_optimal(long n, int workers = 1, bool full_scan = false) {
    if (n < 1) throw std::invalid_argument("verify_linear_optimal: n >= 1");
    if (workers < 1) throw std::invalid_argument("verify_linear_optimal: workers >= 1");
    detail::assert_excluded_cases(n);

    const std::vector<ClassIProfile> lattice = algorithm1_lattice(n);
    OptimalityReport report;
    report.n = n;
    report.full_scan = full_scan;

    struct Failure {
        size_t index;
        DominanceCertificate cert;
    };
    std::vector<std::vector<Failure>> found(static_cast<size_t>(workers));
    auto sweep = [&](int w) {
        for (size_t i = static_cast<size_t>(w); i < lattice.size();
             i += static_cast<size_t>(workers)) {
            DominanceCertificate cert = dominance_check(lattice[i]);
            if (cert.kind != CertificateKind::universal) {
                found[static_cast<size_t>(w)].push_back({i, std::move(cert)});
                if (!full_scan) return;
            }
        }
    };
    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
        for (auto& t : pool) t.join();
    }

    std::vector<Failure> failures;
    for (auto& per_worker : found)
        for (auto& f : per_worker) failures.push_back(std::move(f));
    std::sort(failures.begin(), failures.end(),
              [](const Failure& a, const Failure& b) { return a.index < b.index; });

    if (failures.empty()) {
        report.verdict = Verdict::linear_optimal;
        report.profiles_checked = static_cast<long>(lattice.size());
        return report;
    }
    report.verdict = Verdict::counterexample_found;
    const Failure& first = failures.front();
    report.counterexample =
        Counterexample{first.cert.profile, first.cert.failing_d, first.cert.margins};
    report.profiles_checked =
        full_scan ? static_cast<long>(lattice.size()) : static_cast<long>(first.index) + 1;
    if (full_scan)
        for (const auto& f : failures)
            report.all_counterexamples.push_back(
                Counterexample{f.cert.profile, f.cert.failing_d, f.cert.margins});
    return report;
}

// ---- searches over whole code families ----

struct EpsRanking {
    RationalProb eps;
    BigRat lambda_max;
    std::vector<CodeProfile> maximizers;  // canonical, ascending
};

struct ExhaustiveResult {
    long n = 0;
    std::vector<EpsRanking> per_eps;
};

namespace detail {

inline void enumerate_compositions(long n, int num_slots,
                                   const std::function<void(const std::vector<long>&)>& emit) {
    std::vector<long> parts(static_cast<size_t>(num_slots), 0);
    auto rec = [&](auto&& self, int slot, long left) -> void {
        if (slot == num_slots - 1) {
            parts[static_cast<size_t>(slot)] = left;
            emit(parts);
            return;
        }
        for (long c = 0; c <= left; ++c) {
            parts[static_cast<size_t>(slot)] = c;
            self(self, slot + 1, left - c);
        }
    };
    rec(rec, 0, n);
}

}  // namespace detail

// Exact maximizers over every inequivalent profile on column types 1..7
// (all-zero columns are paddings of shorter codes and are not searched).
inline ExhaustiveResult exhaustive_optimal(long n, const std::vector<RationalProb>& eps_list) {
    if (n < 1) throw std::invalid_argument("exhaustive_optimal: n >= 1");
    if (n > 12)
        throw std::invalid_argument("exhaustive_optimal: n = " + std::to_string(n) +
                                    " exceeds search limit 12");
    if (eps_list.empty()) throw std::invalid_argument("exhaustive_optimal: need at least one eps");

    std::set<CodeProfile> canon;
    detail::enumerate_compositions(n, 7, [&](const std::vector<long>& parts) {
        CodeProfile p;
        for (int t = 1; t <= 7; ++t) p[t] = parts[static_cast<size_t>(t - 1)];
        canon.insert(canonicalize(p));
    });

    ExhaustiveResult result;
    result.n = n;
    std::vector<std::pair<CodeProfile, DistanceSpectrum>> spectra;
    spectra.reserve(canon.size());
    for (const auto& p : canon) spectra.emplace_back(p, spectrum_analytic(p));

    for (const auto& eps : eps_list) {
        EpsRanking rank{eps, BigRat(0), {}};
        for (const auto& [p, spec] : spectra) {
            BigRat lam = lambda_of(spec, eps);
            if (rank.maximizers.empty() || lam > rank.lambda_max) {
                rank.lambda_max = lam;
                rank.maximizers.assign(1, p);
            } else if (lam == rank.lambda_max) {
                rank.maximizers.push_back(p);
            }
        }
        if (n <= 8) {
            bool has_linear = std::any_of(
                rank.maximizers.begin(), rank.maximizers.end(), [](const CodeProfile& p) {
                    return p[1] == 0 && p[2] == 0 && p[4] == 0 && p[7] == 0;
                });
            if (!has_linear)
                throw std::logic_error("exhaustive_optimal: no linear maximizer at n = " +
                                       std::to_string(n));
        }
        result.per_eps.push_back(std::move(rank));
    }
    return result;
}

struct LinearCodeResult {
    long n = 0;
    std::vector<std::array<long, 3>> best;  // sorted (n3,n5,n6) triples, ascending
    std::vector<RationalProb> eps_list;
    std::vector<BigRat> lambda;  // per eps, equal across all tied triples
    DistanceSpectrum alpha;      // of the first best triple
};

// Best linear profile(s): intersection of the per-eps argmax sets over all
// compositions n3+n5+n6 = n (triples reported sorted ascending).
inline LinearCodeResult best_linear(long n, const std::vector<RationalProb>& eps_list) {
    if (n < 1) throw std::invalid_argument("best_linear: n >= 1");
    if (eps_list.empty()) throw std::invalid_argument("best_linear: need at least one eps");

    std::vector<std::array<long, 3>> triples;
    std::vector<DistanceSpectrum> spectra;
    for (long n3 = 0; n3 <= n; ++n3)
        for (long n5 = n3; n5 <= n - n3; ++n5) {
            const long n6 = n - n3 - n5;
            if (n6 < n5) continue;
            CodeProfile p;
            p[3] = n3;
            p[5] = n5;
            p[6] = n6;
            triples.push_back({n3, n5, n6});
            spectra.push_back(spectrum_analytic(p));
        }

    std::vector<bool> best_flag(triples.size(), true);
    for (const auto& eps : eps_list) {
        BigRat mx(0);
        std::vector<BigRat> lams(triples.size());
        for (size_t i = 0; i < triples.size(); ++i) {
            lams[i] = lambda_of(spectra[i], eps);
            if (i == 0 || lams[i] > mx) mx = lams[i];
        }
        for (size_t i = 0; i < triples.size(); ++i)
            if (lams[i] != mx) best_flag[i] = false;
    }

    LinearCodeResult result;
    result.n = n;
    result.eps_list = eps_list;
    size_t first = triples.size();
    for (size_t i = 0; i < triples.size(); ++i)
        if (best_flag[i]) {
            result.best.push_back(triples[i]);
            if (first == triples.size()) first = i;
        }
    if (result.best.empty())
        throw std::logic_error("best_linear: argmax sets at the requested eps have empty intersection");
    result.alpha = spectra[first];
    for (const auto& eps : eps_list) result.lambda.push_back(lambda_of(result.alpha, eps));
    return result;
}

}  // namespace bsc4
