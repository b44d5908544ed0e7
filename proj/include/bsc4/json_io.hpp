#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bsc4/classi.hpp"
#include "bsc4/profile.hpp"
#include "bsc4/reductions.hpp"
#include "bsc4/spectrum.hpp"
#include "bsc4/verifier.hpp"

namespace bsc4 {

// Field order is fixed (insertion-ordered maps) so reports diff cleanly and
// repeated runs are byte-identical. Exact integers/rationals are serialized
// as decimal / "p/q" strings, never as floats.
using json = nlohmann::ordered_json;

inline json to_json(const DistanceSpectrum& spec) {
    json alpha = json::array();
    for (const auto& a : spec.alpha) alpha.push_back(a.str());
    return json{{"n", spec.n}, {"alpha", alpha}};
}

inline json to_json(const CodeProfile& profile) {
    json counts = json::object();
    for (int t = 0; t < 16; ++t)
        if (profile[t] != 0) counts[std::to_string(t)] = profile[t];
    return json{{"n", profile.n()}, {"counts", counts}};
}

inline json to_json(const ClassIProfile& p) {
    return json{{"n1", p.n1}, {"n3", p.n3}, {"n5", p.n5}, {"n6", p.n6}};
}

inline std::string kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::universal: return "universal";
        case CertificateKind::eps_dependent: return "eps-dependent";
        default: return "refuted";
    }
}

inline json to_json(const DominanceCertificate& cert) {
    json j;
    j["kind"] = kind_name(cert.kind);
    j["profile"] = to_json(cert.profile);
    j["replacement_type"] = 3;
    json margins = json::array();
    for (const auto& m : cert.margins) margins.push_back(m.str());
    j["margins"] = margins;
    if (cert.kind == CertificateKind::refuted) j["failing_d"] = cert.failing_d;
    if (cert.kind == CertificateKind::eps_dependent) {
        json coeffs = json::array();
        for (const auto& c : cert.coefficients) coeffs.push_back(c.str());
        j["coefficients"] = coeffs;
    }
    return j;
}

inline json to_json(const ReductionStep& step) {
    return json{{"rule", rule_name(step.rule)},
                {"before", to_json(step.before)},
                {"after", to_json(step.after)},
                {"universal", step.universal},
                {"note", step.note}};
}

inline json to_json(const Counterexample& ce) {
    json margins = json::array();
    for (const auto& m : ce.margins) margins.push_back(m.str());
    return json{{"profile", to_json(ce.profile)},
                {"failing_d", ce.failing_d},
                {"margins", margins}};
}

inline json to_json(const OptimalityReport& report) {
    json j;
    j["verdict"] = verdict_name(report.verdict);
    j["profiles_checked"] = report.profiles_checked;
    j["n"] = report.n;
    j["counterexample"] =
        report.counterexample ? to_json(*report.counterexample) : json(nullptr);
    if (report.full_scan) {
        json all = json::array();
        for (const auto& ce : report.all_counterexamples) all.push_back(to_json(ce));
        j["all_counterexamples"] = all;
    }
    return j;
}

inline std::string rat_string(const BigRat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline json to_json(const ExhaustiveResult& result) {
    json per_eps = json::array();
    for (const auto& rank : result.per_eps) {
        json maximizers = json::array();
        for (const auto& p : rank.maximizers) maximizers.push_back(p.to_string());
        per_eps.push_back(json{{"eps", rank.eps.to_string()},
                               {"lambda_max", rat_string(rank.lambda_max)},
                               {"maximizers", maximizers}});
    }
    return json{{"n", result.n}, {"per_eps", per_eps}};
}

inline json to_json(const LinearCodeResult& result) {
    json best = json::array();
    for (const auto& t : result.best) best.push_back(json::array({t[0], t[1], t[2]}));
    json lambdas = json::array();
    for (size_t i = 0; i < result.eps_list.size(); ++i)
        lambdas.push_back(json{{"eps", result.eps_list[i].to_string()},
                               {"lambda", rat_string(result.lambda[i])}});
    return json{{"n", result.n},
                {"best", best},
                {"lambda", lambdas},
                {"alpha", to_json(result.alpha)}};
}

}  // namespace bsc4
