// bsc4: exact maximum-likelihood decoding analysis for four-codeword binary
// codes on binary symmetric channels.
//
// Subcommands map 1:1 onto the library modules: spectrum, lambda and compare
// evaluate codes exactly; classify, reduce and class1 expose the reduction
// and certification machinery; verify-linear, search and best-linear run the
// optimality sweeps.  All probabilities print as exact fractions unless a
// --decimal rendering is requested (always labeled approximate).
//
// Exit codes: 0 success, 1 input error, 2 reduction rule not applicable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsc4/bsc4.hpp"

namespace {

using bsc4::BigInt;
using bsc4::BigRat;
using bsc4::json;

enum class Format { json, csv, text };

struct CommonOptions {
    std::vector<std::string> profiles;
    std::string codebook_file;
    std::vector<std::string> eps_texts;
    std::string engine = "auto";
    std::string format = "text";
    long n = 0;
    int workers = 0;
    bool full = false;
    int decimal = 0;
};

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw std::invalid_argument("format must be json, csv or text");
}

int default_workers() {
    if (const char* env = std::getenv("BSC4_WORKERS")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end && *end == '\0' && value >= 1 && value <= 1024) return static_cast<int>(value);
    }
    return 1;
}

int effective_workers(const CommonOptions& opt) {
    return opt.workers >= 1 ? opt.workers : default_workers();
}

std::vector<bsc4::RationalProb> parse_eps_list(const CommonOptions& opt, bool required) {
    std::vector<bsc4::RationalProb> list;
    list.reserve(opt.eps_texts.size());
    for (const auto& text : opt.eps_texts) list.push_back(bsc4::RationalProb::parse(text));
    if (required && list.empty())
        throw std::invalid_argument("at least one --eps p/q is required");
    return list;
}

bsc4::Codebook read_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open codebook file '" + path + "'");
    bsc4::Codebook book;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<uint8_t> row;
        row.reserve(line.size());
        for (char c : line) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("codebook rows must use characters 0/1 only");
            row.push_back(static_cast<uint8_t>(c - '0'));
        }
        book.rows.push_back(std::move(row));
    }
    book.validate();
    return book;
}

// Code input for subcommands that accept either a profile string or a
// codebook file; four-row codebooks convert to their column-type profile.
struct CodeInput {
    std::optional<bsc4::CodeProfile> profile;
    std::optional<bsc4::Codebook> book;

    long n() const { return profile ? profile->n() : book->n(); }

    const bsc4::CodeProfile& require_profile() {
        if (!profile) profile = bsc4::profile_of(*book);
        return *profile;
    }

    const bsc4::Codebook& require_book() {
        if (!book) book = bsc4::materialize(*profile);
        return *book;
    }
};

CodeInput load_code(const CommonOptions& opt) {
    if (opt.profiles.size() + (opt.codebook_file.empty() ? 0 : 1) != 1)
        throw std::invalid_argument("provide exactly one of --profile or --codebook-file");
    CodeInput input;
    if (!opt.profiles.empty()) {
        input.profile = bsc4::CodeProfile::parse(opt.profiles.front());
        input.profile->validate();
    } else {
        input.book = read_codebook_file(opt.codebook_file);
    }
    return input;
}

// Engine selection: "oracle" forces brute force (n <= 24), "analytic" the
// closed-form evaluator, "auto" uses the analytic engine but cross-checks it
// against the oracle whenever n <= 16, failing loudly on any disagreement.
bsc4::DistanceSpectrum spectrum_of(CodeInput& input, const std::string& engine) {
    if (engine == "oracle") {
        return bsc4::spectrum_bruteforce(input.require_book());
    }
    if (engine == "analytic") {
        return bsc4::spectrum_analytic(input.require_profile());
    }
    if (engine != "auto") throw std::invalid_argument("engine must be oracle, analytic or auto");
    if (input.book && input.book->rows.size() != 4) return bsc4::spectrum_bruteforce(*input.book);
    bsc4::DistanceSpectrum spec = bsc4::spectrum_analytic(input.require_profile());
    if (input.n() <= 16) {
        bsc4::DistanceSpectrum check = bsc4::spectrum_bruteforce(input.require_book());
        if (!(spec == check))
            throw std::logic_error("engine disagreement: analytic and oracle spectra differ");
    }
    return spec;
}

std::string approx_note(const BigRat& value, int digits) {
    return bsc4::decimal_string(value, digits) + " (approximate)";
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// --- spectrum ---------------------------------------------------------------

int run_spectrum(CommonOptions& opt) {
    CodeInput input = load_code(opt);
    bsc4::DistanceSpectrum spec = spectrum_of(input, opt.engine);
    Format format = parse_format(opt.format);
    if (format == Format::csv) {
        std::cout << "d,alpha_d\n";
        for (long d = 0; d <= spec.n; ++d)
            std::cout << d << "," << spec.alpha[static_cast<size_t>(d)].str() << "\n";
    } else if (format == Format::json) {
        emit(bsc4::to_json(spec));
    } else {
        std::cout << "n = " << spec.n << "\n";
        std::cout << "alpha =";
        for (const auto& a : spec.alpha) std::cout << " " << a.str();
        std::cout << "\n";
    }
    return 0;
}

// --- lambda -----------------------------------------------------------------

int run_lambda(CommonOptions& opt) {
    CodeInput input = load_code(opt);
    auto eps_list = parse_eps_list(opt, true);
    bsc4::DistanceSpectrum spec = spectrum_of(input, opt.engine);
    long rows = input.book ? static_cast<long>(input.book->rows.size()) : 4;
    Format format = parse_format(opt.format);
    std::vector<BigRat> values;
    values.reserve(eps_list.size());
    for (const auto& eps : eps_list) values.push_back(bsc4::lambda_of(spec, eps, rows));
    if (format == Format::csv) {
        std::cout << "eps,lambda\n";
        for (size_t i = 0; i < eps_list.size(); ++i)
            std::cout << eps_list[i].to_string() << "," << bsc4::rat_string(values[i]) << "\n";
    } else if (format == Format::json) {
        json doc;
        doc["n"] = spec.n;
        json rows_json = json::array();
        for (size_t i = 0; i < eps_list.size(); ++i) {
            json row;
            row["eps"] = eps_list[i].to_string();
            row["lambda"] = bsc4::rat_string(values[i]);
            if (opt.decimal > 0) row["approx"] = bsc4::decimal_string(values[i], opt.decimal);
            rows_json.push_back(std::move(row));
        }
        doc["values"] = std::move(rows_json);
        emit(doc);
    } else {
        for (size_t i = 0; i < eps_list.size(); ++i) {
            std::cout << "eps = " << eps_list[i].to_string()
                      << ": lambda = " << bsc4::rat_string(values[i]);
            if (opt.decimal > 0) std::cout << " ~ " << approx_note(values[i], opt.decimal);
            std::cout << "\n";
        }
    }
    return 0;
}

// --- compare ----------------------------------------------------------------

// When the first profile is Class-I and the second is exactly the first with
// one type-1 column upgraded to type 3 (the replacement the dominance
// certificate covers), attach that certificate to the report.
std::optional<bsc4::DominanceCertificate> dominance_if_applicable(const bsc4::CodeProfile& a,
                                                                  const bsc4::CodeProfile& b) {
    if (!bsc4::is_class_i(a)) return std::nullopt;
    bsc4::CodeProfile replaced = a;
    replaced.counts[1] -= 1;
    replaced.counts[3] += 1;
    if (bsc4::canonicalize(replaced) != bsc4::canonicalize(b)) return std::nullopt;
    return bsc4::dominance_check(bsc4::as_class_i(a));
}

int run_compare(CommonOptions& opt) {
    if (opt.profiles.size() != 2)
        throw std::invalid_argument("compare needs exactly two --profile inputs");
    bsc4::CodeProfile a = bsc4::CodeProfile::parse(opt.profiles[0]);
    bsc4::CodeProfile b = bsc4::CodeProfile::parse(opt.profiles[1]);
    a.validate();
    b.validate();
    auto eps_list = parse_eps_list(opt, true);
    bsc4::DistanceSpectrum spec_a = bsc4::spectrum_analytic(a);
    bsc4::DistanceSpectrum spec_b = bsc4::spectrum_analytic(b);
    if (opt.engine == "oracle" || (opt.engine == "auto" && a.n() <= 16)) {
        if (!(spec_a == bsc4::spectrum_bruteforce(bsc4::materialize(a))) ||
            !(spec_b == bsc4::spectrum_bruteforce(bsc4::materialize(b))))
            throw std::logic_error("engine disagreement: analytic and oracle spectra differ");
    }
    auto dominance = dominance_if_applicable(a, b);
    Format format = parse_format(opt.format);
    std::vector<bsc4::Ordering> orderings;
    std::vector<BigRat> la, lb;
    for (const auto& eps : eps_list) {
        la.push_back(bsc4::lambda_of(spec_a, eps));
        lb.push_back(bsc4::lambda_of(spec_b, eps));
        orderings.push_back(bsc4::compare_rats(la.back(), lb.back()));
    }
    if (format == Format::csv) {
        std::cout << "eps,ordering,lambda_a,lambda_b\n";
        for (size_t i = 0; i < eps_list.size(); ++i)
            std::cout << eps_list[i].to_string() << "," << bsc4::ordering_name(orderings[i])
                      << "," << bsc4::rat_string(la[i]) << "," << bsc4::rat_string(lb[i]) << "\n";
    } else if (format == Format::json) {
        json doc;
        doc["n"] = a.n();
        doc["profile_a"] = bsc4::to_json(a);
        doc["profile_b"] = bsc4::to_json(b);
        json rows = json::array();
        for (size_t i = 0; i < eps_list.size(); ++i) {
            json row;
            row["eps"] = eps_list[i].to_string();
            row["ordering"] = bsc4::ordering_name(orderings[i]);
            row["lambda_a"] = bsc4::rat_string(la[i]);
            row["lambda_b"] = bsc4::rat_string(lb[i]);
            if (opt.decimal > 0) {
                row["lambda_a_approx"] = bsc4::decimal_string(la[i], opt.decimal);
                row["lambda_b_approx"] = bsc4::decimal_string(lb[i], opt.decimal);
            }
            rows.push_back(std::move(row));
        }
        doc["results"] = std::move(rows);
        doc["dominance"] = dominance ? bsc4::to_json(*dominance) : json(nullptr);
        emit(doc);
    } else {
        for (size_t i = 0; i < eps_list.size(); ++i) {
            const char* rel = orderings[i] == bsc4::Ordering::less    ? "<"
                              : orderings[i] == bsc4::Ordering::equal ? "="
                                                                      : ">";
            std::cout << "eps = " << eps_list[i].to_string() << ": lambda_a " << rel
                      << " lambda_b  (" << bsc4::rat_string(la[i]) << " vs "
                      << bsc4::rat_string(lb[i]) << ")\n";
        }
        if (dominance) {
            std::cout << "dominance certificate (" << a.to_string() << " -> " << b.to_string()
                      << "): " << bsc4::kind_name(dominance->kind) << "\n";
        }
    }
    return 0;
}

// --- classify ---------------------------------------------------------------

int run_classify(CommonOptions& opt) {
    CodeInput input = load_code(opt);
    const bsc4::CodeProfile& profile = input.require_profile();
    bsc4::CodeProfile canonical = bsc4::canonicalize(profile);
    bool linear = bsc4::is_linear(canonical);
    bool class_i = bsc4::is_class_i(canonical);
    Format format = parse_format(opt.format);
    if (format == Format::json) {
        json doc;
        doc["profile"] = bsc4::to_json(profile);
        doc["canonical"] = bsc4::to_json(canonical);
        doc["linear"] = linear;
        doc["class_i"] = class_i;
        doc["class_i_profile"] =
            class_i ? bsc4::to_json(bsc4::as_class_i(canonical)) : json(nullptr);
        emit(doc);
    } else if (format == Format::csv) {
        throw std::invalid_argument("classify has no csv rendering; use json or text");
    } else {
        std::cout << "profile   = " << profile.to_string() << "\n";
        std::cout << "canonical = " << canonical.to_string() << "\n";
        std::cout << "linear    = " << (linear ? "yes" : "no") << "\n";
        std::cout << "class-I   = " << (class_i ? bsc4::as_class_i(canonical).to_string() : "no")
                  << "\n";
    }
    return 0;
}

// --- reduce -----------------------------------------------------------------

// With --rule, apply that single replacement step (exit 2 if it does not
// apply to the given profile); otherwise run the full reduction pipeline.
bsc4::ReductionOutcome apply_single_rule(const bsc4::CodeProfile& profile,
                                         const std::string& rule, int source, int target) {
    bsc4::ReductionStep step = [&] {
        if (rule == "even-replace") return bsc4::even_replace(profile, source, target);
        if (rule == "two-bit-flip") return bsc4::two_bit_flip(profile, source);
        if (rule == "symmetry") {
            bsc4::SymmetryMapResult mapped = bsc4::symmetry_map(profile, target);
            return bsc4::ReductionStep{bsc4::ReductionRule::symmetry, profile, mapped.after,
                                       true, bsc4::detail::perm_note(mapped.row_perm)};
        }
        throw std::invalid_argument(
            "--rule must be even-replace, two-bit-flip or symmetry");
    }();
    bsc4::ReductionOutcome outcome;
    outcome.final_profile = step.after;
    outcome.steps = {step};
    outcome.linear = bsc4::is_linear(step.after);
    outcome.class_i = bsc4::is_class_i(step.after);
    return outcome;
}

int run_reduce(CommonOptions& opt, const std::string& rule, int source, int target) {
    CodeInput input = load_code(opt);
    bsc4::ReductionOutcome outcome =
        rule.empty() ? bsc4::reduce_to_linear_or_classI(input.require_profile())
                     : apply_single_rule(input.require_profile(), rule, source, target);
    Format format = parse_format(opt.format);
    if (format == Format::json) {
        json doc;
        doc["input"] = bsc4::to_json(input.require_profile());
        doc["final"] = bsc4::to_json(outcome.final_profile);
        doc["linear"] = outcome.linear;
        doc["class_i"] = outcome.class_i;
        json steps = json::array();
        for (const auto& step : outcome.steps) steps.push_back(bsc4::to_json(step));
        doc["steps"] = std::move(steps);
        emit(doc);
    } else if (format == Format::csv) {
        throw std::invalid_argument("reduce has no csv rendering; use json or text");
    } else {
        int i = 0;
        for (const auto& step : outcome.steps) {
            std::cout << "step " << ++i << ": " << bsc4::rule_name(step.rule) << "  "
                      << step.before.to_string() << " -> " << step.after.to_string()
                      << (step.universal ? "  [every eps]" : "  [eps-dependent]");
            if (!step.note.empty()) std::cout << "  (" << step.note << ")";
            std::cout << "\n";
        }
        std::cout << "final: " << outcome.final_profile.to_string()
                  << (outcome.linear ? "  (linear)" : "")
                  << (outcome.class_i ? "  (class I)" : "") << "\n";
    }
    return 0;
}

// --- class1 -----------------------------------------------------------------

int run_class1(CommonOptions& opt, const std::string& check) {
    CodeInput input = load_code(opt);
    const bsc4::CodeProfile& profile = input.require_profile();
    if (!bsc4::is_class_i(profile))
        throw std::invalid_argument("class1 requires a Class-I profile (odd |1|, matching "
                                    "parities of |3|,|5|,|6|, no other column types)");
    bsc4::ClassIProfile p = bsc4::as_class_i(profile);
    Format format = parse_format(opt.format);
    if (check == "dominance") {
        bsc4::DominanceCertificate cert = bsc4::dominance_check(p);
        if (format == Format::json) {
            emit(bsc4::to_json(cert));
        } else if (format == Format::csv) {
            std::cout << "d,margin\n";
            for (size_t d = 0; d < cert.margins.size(); ++d)
                std::cout << (d + 1) << "," << cert.margins[d].str() << "\n";
        } else {
            std::cout << "profile = " << p.to_string() << "\n";
            std::cout << "certificate = " << bsc4::kind_name(cert.kind) << "\n";
            std::cout << "margins =";
            for (const auto& m : cert.margins) std::cout << " " << m.str();
            std::cout << "\n";
            if (cert.kind == bsc4::CertificateKind::refuted)
                std::cout << "first failing d = " << cert.failing_d << "\n";
        }
        return 0;
    }
    if (check == "theorem1") {
        auto coeffs = bsc4::theorem1_polynomial(p);
        auto eps_list = parse_eps_list(opt, false);
        if (format == Format::json) {
            json doc;
            doc["profile"] = bsc4::to_json(p);
            json cs = json::array();
            for (const auto& c : coeffs) cs.push_back(c.str());
            doc["coefficients"] = std::move(cs);
            json signs = json::array();
            for (const auto& eps : eps_list) {
                json row;
                row["eps"] = eps.to_string();
                row["sign"] = bsc4::theorem1_sign(coeffs, eps);
                signs.push_back(std::move(row));
            }
            doc["signs"] = std::move(signs);
            emit(doc);
        } else if (format == Format::csv) {
            std::cout << "d,coefficient\n";
            for (size_t d = 0; d < coeffs.size(); ++d)
                std::cout << (d + 1) << "," << coeffs[d].str() << "\n";
        } else {
            std::cout << "profile = " << p.to_string() << "\n";
            std::cout << "coefficients =";
            for (const auto& c : coeffs) std::cout << " " << c.str();
            std::cout << "\n";
            for (const auto& eps : eps_list)
                std::cout << "eps = " << eps.to_string()
                          << ": sign = " << bsc4::theorem1_sign(coeffs, eps) << "\n";
        }
        return 0;
    }
    if (check != "spectra")
        throw std::invalid_argument("class1 --check must be spectra, dominance or theorem1");
    bsc4::ClassISpectra spectra = bsc4::class_i_spectra(p);
    if (format == Format::json) {
        json doc;
        doc["profile"] = bsc4::to_json(p);
        json a3 = json::array(), a5 = json::array();
        for (const auto& v : spectra.alpha3) a3.push_back(v.str());
        for (const auto& v : spectra.alpha5) a5.push_back(v.str());
        doc["alpha3"] = std::move(a3);
        doc["alpha5"] = std::move(a5);
        emit(doc);
    } else if (format == Format::csv) {
        std::cout << "d,alpha3_d,alpha5_d\n";
        for (size_t d = 0; d < spectra.alpha3.size(); ++d)
            std::cout << d << "," << spectra.alpha3[d].str() << "," << spectra.alpha5[d].str()
                      << "\n";
    } else {
        std::cout << "profile = " << p.to_string() << "\n";
        std::cout << "alpha3 =";
        for (const auto& v : spectra.alpha3) std::cout << " " << v.str();
        std::cout << "\nalpha5 =";
        for (const auto& v : spectra.alpha5) std::cout << " " << v.str();
        std::cout << "\n";
    }
    return 0;
}

// --- verify-linear ----------------------------------------------------------

int run_verify_linear(CommonOptions& opt) {
    if (opt.n < 1) throw std::invalid_argument("verify-linear requires --n >= 1");
    bsc4::OptimalityReport report =
        bsc4::verify_linear_optimal(opt.n, effective_workers(opt), opt.full);
    Format format = parse_format(opt.format);
    if (format == Format::json) {
        emit(bsc4::to_json(report));
    } else if (format == Format::csv) {
        throw std::invalid_argument("verify-linear has no csv rendering; use json or text");
    } else {
        std::cout << "n = " << report.n << "\n";
        std::cout << "verdict = " << bsc4::verdict_name(report.verdict) << "\n";
        std::cout << "profiles checked = " << report.profiles_checked << "\n";
        if (report.counterexample)
            std::cout << "counterexample = " << report.counterexample->profile.to_string()
                      << " (first failing d = " << report.counterexample->failing_d << ")\n";
        if (report.full_scan)
            std::cout << "counterexamples total = " << report.all_counterexamples.size() << "\n";
    }
    return 0;
}

// --- search -----------------------------------------------------------------

int run_search(CommonOptions& opt) {
    if (opt.n < 1) throw std::invalid_argument("search requires --n >= 1");
    auto eps_list = parse_eps_list(opt, true);
    bsc4::ExhaustiveResult result = bsc4::exhaustive_optimal(opt.n, eps_list);
    Format format = parse_format(opt.format);
    if (format == Format::json) {
        emit(bsc4::to_json(result));
    } else if (format == Format::csv) {
        std::cout << "eps,lambda_max,maximizers\n";
        for (const auto& ranking : result.per_eps) {
            std::cout << ranking.eps.to_string() << "," << bsc4::rat_string(ranking.lambda_max)
                      << ",";
            for (size_t i = 0; i < ranking.maximizers.size(); ++i)
                std::cout << (i ? ";" : "") << ranking.maximizers[i].to_string();
            std::cout << "\n";
        }
    } else {
        std::cout << "n = " << result.n << "\n";
        for (const auto& ranking : result.per_eps) {
            std::cout << "eps = " << ranking.eps.to_string()
                      << ": lambda_max = " << bsc4::rat_string(ranking.lambda_max);
            if (opt.decimal > 0)
                std::cout << " ~ " << approx_note(ranking.lambda_max, opt.decimal);
            std::cout << "\n";
            for (const auto& m : ranking.maximizers)
                std::cout << "  maximizer: " << m.to_string() << "\n";
        }
    }
    return 0;
}

// --- best-linear ------------------------------------------------------------

int run_best_linear(CommonOptions& opt) {
    if (opt.n < 1) throw std::invalid_argument("best-linear requires --n >= 1");
    auto eps_list = parse_eps_list(opt, true);
    bsc4::LinearCodeResult result = bsc4::best_linear(opt.n, eps_list);
    Format format = parse_format(opt.format);
    if (format == Format::json) {
        emit(bsc4::to_json(result));
    } else if (format == Format::csv) {
        std::cout << "n3,n5,n6\n";
        for (const auto& t : result.best) std::cout << t[0] << "," << t[1] << "," << t[2] << "\n";
    } else {
        std::cout << "n = " << result.n << "\n";
        for (const auto& t : result.best)
            std::cout << "best: (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
        for (size_t i = 0; i < result.eps_list.size(); ++i) {
            std::cout << "eps = " << result.eps_list[i].to_string()
                      << ": lambda = " << bsc4::rat_string(result.lambda[i]);
            if (opt.decimal > 0) std::cout << " ~ " << approx_note(result.lambda[i], opt.decimal);
            std::cout << "\n";
        }
    }
    return 0;
}

void add_common_options(CLI::App* cmd, CommonOptions& opt, bool code_input, bool eps,
                        bool engine, bool takes_n, bool workers_full) {
    if (code_input) {
        cmd->add_option("--profile", opt.profiles,
                        "Column-type profile, e.g. 1:3,3:2,5:5,6:7 (types 0-15)");
        cmd->add_option("--codebook-file", opt.codebook_file,
                        "File with one codeword per line, characters 0/1");
    }
    if (eps) cmd->add_option("--eps", opt.eps_texts, "Crossover probability p/q (repeatable)");
    if (engine)
        cmd->add_option("--engine", opt.engine, "oracle, analytic or auto (default auto)");
    if (takes_n) cmd->add_option("--n", opt.n, "Code length");
    cmd->add_option("--format", opt.format, "json, csv or text (default text)");
    cmd->add_option("--decimal", opt.decimal,
                    "Also print k-digit decimal renderings, labeled approximate");
    if (workers_full) {
        cmd->add_option("--workers", opt.workers,
                        "Worker thread count (default: BSC4_WORKERS or 1)");
        cmd->add_flag("--full", opt.full, "Scan the whole lattice instead of stopping early");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ML-decoding analysis of four-codeword binary codes on the BSC"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string class1_check = "spectra";
    std::string reduce_rule;
    int reduce_source = 0;
    int reduce_target = 0;

    CLI::App* spectrum = app.add_subcommand("spectrum", "Distance spectrum of a code");
    add_common_options(spectrum, opt, true, false, true, false, false);
    CLI::App* lambda = app.add_subcommand("lambda", "Exact correct-decoding probability");
    add_common_options(lambda, opt, true, true, true, false, false);
    CLI::App* compare = app.add_subcommand("compare", "Compare two codes at given eps values");
    add_common_options(compare, opt, true, true, true, false, false);
    CLI::App* classify = app.add_subcommand("classify", "Canonical form and class membership");
    add_common_options(classify, opt, true, false, false, false, false);
    CLI::App* reduce =
        app.add_subcommand("reduce", "Reduce to a linear or Class-I code, with step audit");
    add_common_options(reduce, opt, true, false, false, false, false);
    reduce->add_option("--rule", reduce_rule,
                       "Apply one step only: even-replace, two-bit-flip or symmetry");
    reduce->add_option("--source", reduce_source, "Row s for even-replace/two-bit-flip");
    reduce->add_option("--target", reduce_target,
                       "Row t for even-replace; column type for symmetry");
    CLI::App* class1 = app.add_subcommand("class1", "Class-I spectra and certificates");
    add_common_options(class1, opt, true, true, false, false, false);
    class1->add_option("--check", class1_check, "spectra (default), dominance or theorem1");
    CLI::App* verify =
        app.add_subcommand("verify-linear", "Certify optimality of linear codes at length n");
    add_common_options(verify, opt, false, false, false, true, true);
    CLI::App* search = app.add_subcommand("search", "Exhaustive optimum over all codes (n <= 12)");
    add_common_options(search, opt, false, true, false, true, false);
    CLI::App* best = app.add_subcommand("best-linear", "Best linear profile(s) at length n");
    add_common_options(best, opt, false, true, false, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (lambda->parsed()) return run_lambda(opt);
        if (compare->parsed()) return run_compare(opt);
        if (classify->parsed()) return run_classify(opt);
        if (reduce->parsed()) return run_reduce(opt, reduce_rule, reduce_source, reduce_target);
        if (class1->parsed()) return run_class1(opt, class1_check);
        if (verify->parsed()) return run_verify_linear(opt);
        if (search->parsed()) return run_search(opt);
        if (best->parsed()) return run_best_linear(opt);
        std::cerr << "error: no subcommand given\n";
        return 1;
    } catch (const bsc4::RuleNotApplicable& e) {
        std::cerr << "rule not applicable: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
