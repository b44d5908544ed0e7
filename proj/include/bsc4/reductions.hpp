#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsc4/classi.hpp"
#include "bsc4/profile.hpp"

namespace bsc4 {

// A transformation's precondition is unmet (CLI exit code 2).
struct RuleNotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ReductionRule { even_replace, two_bit_flip, class_i_11, class_i_min01, symmetry };

inline std::string rule_name(ReductionRule r) {
    switch (r) {
        case ReductionRule::even_replace: return "even-replace";
        case ReductionRule::two_bit_flip: return "two-bit-flip";
        case ReductionRule::class_i_11: return "classI-|1|=1";
        case ReductionRule::class_i_min01: return "classI-min01";
        default: return "symmetry";
    }
}

struct ReductionStep {
    ReductionRule rule;
    CodeProfile before;
    CodeProfile after;
    bool universal = true;  // lambda never decreases, at every eps
    std::string note;
};

// Replace one column of type 2^(4-s) by 2^(4-s)+2^(4-t) (folded), valid
// whenever rows s and t differ in an even number of positions.
inline ReductionStep even_replace(const CodeProfile& profile, int s, int t) {
    profile.validate();
    if (s < 1 || s > 4 || t < 1 || t > 4 || s == t)
        throw std::invalid_argument("even_replace: rows s != t in 1..4");
    const int source = 1 << (4 - s);
    const int replacement = fold_type((1 << (4 - s)) + (1 << (4 - t)));
    if (profile[source] == 0)
        throw RuleNotApplicable("even_replace: no column of type " + std::to_string(source));
    if (xor_weight(profile, s, t) % 2 != 0)
        throw RuleNotApplicable("even_replace: w(c" + std::to_string(s) + "+c" +
                                std::to_string(t) + ") is odd");
    ReductionStep step;
    step.rule = ReductionRule::even_replace;
    step.before = profile;
    step.after = profile;
    step.after[source] -= 1;
    step.after[replacement] += 1;
    step.note = "s=" + std::to_string(s) + ",t=" + std::to_string(t) + ": type " +
                std::to_string(source) + " -> type " + std::to_string(replacement);
    return step;
}

// Pair one column of type s in {1,2,4} with one of type 7 and flip two bits
// of a single codeword, producing two columns outside {s,7}.
inline ReductionStep two_bit_flip(const CodeProfile& profile, int s) {
    profile.validate();
    int a, b;
    switch (s) {
        case 1: a = 3; b = 5; break;
        case 2: a = 3; b = 6; break;
        case 4: a = 5; b = 6; break;
        default: throw std::invalid_argument("two_bit_flip: source type must be 1, 2 or 4");
    }
    if (profile[s] == 0 || profile[7] == 0)
        throw RuleNotApplicable("two_bit_flip: needs one column each of types " +
                                std::to_string(s) + " and 7");
    ReductionStep step;
    step.rule = ReductionRule::two_bit_flip;
    step.before = profile;
    step.after = profile;
    step.after[s] -= 1;
    step.after[7] -= 1;
    step.after[a] += 1;
    step.after[b] += 1;
    step.note = "types (" + std::to_string(s) + ",7) -> (" + std::to_string(a) + "," +
                std::to_string(b) + ")";
    return step;
}

struct SymmetryMapResult {
    CodeProfile after;
    std::array<int, 4> row_perm;  // image row j takes bits of row row_perm[j] (0-indexed)
};

namespace detail {

inline CodeProfile fold_row_perm(const CodeProfile& p, const std::array<int, 4>& perm) {
    CodeProfile out;
    for (int t = 0; t < 16; ++t)
        if (p[t]) out[fold_type(permuted_type(t, perm))] += p[t];
    return out;
}

inline std::string perm_note(const std::array<int, 4>& perm) {
    std::string s = "rows (";
    for (int j = 0; j < 4; ++j) s += std::to_string(perm[static_cast<size_t>(j)] + 1);
    return s + ")";
}

}  // namespace detail

// Row interchange bringing the requested type of {3,5,6} into the type-3
// slot; types 0 and 1 are fixed, the map is its own inverse.
inline SymmetryMapResult symmetry_map(const CodeProfile& profile, int target) {
    profile.validate();
    for (int t : {2, 4, 7})
        if (profile[t] != 0)
            throw std::invalid_argument("symmetry_map: support must lie in {0,1,3,5,6}");
    std::array<int, 4> perm{0, 1, 2, 3};
    switch (target) {
        case 3: break;                        // identity
        case 5: std::swap(perm[1], perm[2]); break;  // swaps types 3 and 5
        case 6: std::swap(perm[0], perm[2]); break;  // swaps types 3 and 6
        default: throw std::invalid_argument("symmetry_map: target must be 3, 5 or 6");
    }
    return SymmetryMapResult{detail::fold_row_perm(profile, perm), perm};
}

inline bool is_linear(const CodeProfile& profile) {
    for (int t : {1, 2, 4, 7})
        if (profile[t] != 0) return false;
    for (int t = 8; t < 16; ++t)
        if (profile[t] != 0) return false;
    return true;
}

struct ReductionOutcome {
    CodeProfile final_profile;
    std::vector<ReductionStep> steps;
    bool linear = false;
    bool class_i = false;
};

namespace detail {

inline void push_symmetry(std::vector<ReductionStep>& steps, const CodeProfile& before,
                          const CodeProfile& after, const std::string& note) {
    if (before == after) return;
    steps.push_back({ReductionRule::symmetry, before, after, true, note});
}

// Applicable even_replace choice: smallest resulting type-1 count first,
// then lexicographically smallest (s,t).
inline std::optional<ReductionStep> best_even_replace(const CodeProfile& p) {
    std::optional<ReductionStep> best;
    long best_n1 = 0;
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) {
            if (s == t) continue;
            const int source = 1 << (4 - s);
            if (p[source] == 0 || xor_weight(p, s, t) % 2 != 0) continue;
            ReductionStep step = even_replace(p, s, t);
            const long n1 = step.after[1];
            if (!best || n1 < best_n1) {
                best = step;
                best_n1 = n1;
            }
        }
    return best;
}

}  // namespace detail

// Drive any profile to a linear or Class-I representative through
// lambda-non-decreasing steps; Class-I endpoints always have n1 >= 3 and
// min(n3,n5,n6) >= 2 (smaller cases reduce further).
inline ReductionOutcome reduce_to_linear_or_classI(const CodeProfile& input) {
    input.validate();
    ReductionOutcome out;
    CodeProfile cur = canonicalize(input);
    detail::push_symmetry(out.steps, input, cur, "canonical form");
    const long max_steps = 2 * input.n() + 4;

    while (static_cast<long>(out.steps.size()) <= max_steps) {
        if (is_linear(cur)) {
            CodeProfile canon = canonicalize(cur);
            detail::push_symmetry(out.steps, cur, canon, "canonical form");
            out.final_profile = canon;
            out.linear = true;
            return out;
        }
        if (cur[7] > 0) {
            bool flipped = false;
            for (int s : {1, 2, 4})
                if (cur[s] > 0) {
                    ReductionStep step = two_bit_flip(cur, s);
                    cur = step.after;
                    out.steps.push_back(std::move(step));
                    flipped = true;
                    break;
                }
            if (flipped) continue;
            // no types 1,2,4 left: flip the type-7 columns and swap rows 1,4,
            // turning them into type-1 columns (and exchanging types 3 and 5)
            std::array<int, 4> perm{3, 1, 2, 0};
            CodeProfile next = detail::fold_row_perm(cur, perm);
            detail::push_symmetry(out.steps, cur, next,
                                  detail::perm_note(perm) + ", type 7 -> type 1");
            cur = next;
            continue;
        }
        const int positives = (cur[1] > 0) + (cur[2] > 0) + (cur[4] > 0);
        if (positives >= 2) {
            auto step = detail::best_even_replace(cur);
            if (!step)
                throw std::logic_error("reduce: no even pair among rows, impossible by parity");
            cur = step->after;
            out.steps.push_back(std::move(*step));
            continue;
        }
        if (cur[2] > 0 || cur[4] > 0) {
            // lone type-2 or type-4 columns become type 1 by a row swap
            std::array<int, 4> perm{0, 1, 2, 3};
            if (cur[2] > 0)
                std::swap(perm[2], perm[3]);
            else
                std::swap(perm[1], perm[3]);
            CodeProfile next = detail::fold_row_perm(cur, perm);
            detail::push_symmetry(out.steps, cur, next,
                                  detail::perm_note(perm) + ", lone type -> type 1");
            cur = next;
            continue;
        }
        // support within {0,1,3,5,6} with cur[1] > 0; all-zero columns are
        // inert (lambda is invariant under appending one), so Class-I logic
        // looks only at the other counts
        CodeProfile rest = cur;
        rest[0] = 0;
        if (is_class_i(rest)) {
            const long mn = std::min({cur[3], cur[5], cur[6]});
            if (cur[1] == 1 || mn <= 1) {
                int argmin = cur[3] == mn ? 3 : (cur[5] == mn ? 5 : 6);
                ReductionStep step;
                step.rule = cur[1] == 1 ? ReductionRule::class_i_11 : ReductionRule::class_i_min01;
                step.before = cur;
                step.after = cur;
                step.after[1] -= 1;
                step.after[argmin] += 1;
                step.note = "type 1 -> type " + std::to_string(argmin);
                cur = step.after;
                out.steps.push_back(std::move(step));
                continue;
            }
            CodeProfile canon = canonicalize(cur);
            detail::push_symmetry(out.steps, cur, canon, "canonical form");
            out.final_profile = canon;
            out.class_i = true;
            return out;
        }
        // not Class-I: one of the three row-pair weights against row 4 is
        // even, so a type-1 column can be replaced
        auto step = detail::best_even_replace(cur);
        if (!step)
            throw std::logic_error("reduce: no even replacement for a non-Class-I profile");
        cur = step->after;
        out.steps.push_back(std::move(*step));
    }
    throw std::logic_error("reduce: step budget exceeded");
}

}  // namespace bsc4
