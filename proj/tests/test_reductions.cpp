// Replacement rules and the reduction pipeline: every step must keep the
// correct-decoding probability from dropping, and every profile must land on
// a linear or irreducible Class-I endpoint within the step budget.

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <vector>

#include "bsc4/bsc4.hpp"

using namespace bsc4;

namespace {

const std::vector<RationalProb>& test_eps() {
    static const std::vector<RationalProb> eps = {RationalProb::parse("1/10"),
                                                  RationalProb::parse("1/4"),
                                                  RationalProb::parse("2/5")};
    return eps;
}

void for_each_composition(long n, const std::vector<int>& support,
                          const std::function<void(const CodeProfile&)>& fn) {
    CodeProfile p;
    std::function<void(size_t, long)> rec = [&](size_t k, long left) {
        if (k + 1 == support.size()) {
            p.counts[static_cast<size_t>(support[k])] = left;
            if (p.n() == n) fn(p);
            p.counts[static_cast<size_t>(support[k])] = 0;
            return;
        }
        for (long c = 0; c <= left; ++c) {
            p.counts[static_cast<size_t>(support[k])] = c;
            rec(k + 1, left - c);
        }
        p.counts[static_cast<size_t>(support[k])] = 0;
    };
    rec(0, n);
}

}  // namespace

TEST_CASE("even-distance replacement swaps one single-one column for a two-one column") {
    CodeProfile p = CodeProfile::parse("1:1,2:1,4:1,7:3");
    ReductionStep step = even_replace(p, 2, 3);
    CHECK(step.rule == ReductionRule::even_replace);
    CHECK(step.after == CodeProfile::parse("1:1,2:1,6:1,7:3"));
    CHECK(step.universal);
    CHECK(even_replace(p, 3, 2).after == CodeProfile::parse("1:1,4:1,6:1,7:3"));

    CHECK_THROWS_AS(even_replace(CodeProfile::parse("3:2"), 1, 2), RuleNotApplicable);
    CHECK_THROWS_AS(even_replace(CodeProfile::parse("2:1,3:1"), 3, 4), RuleNotApplicable);
    CHECK_THROWS_AS(even_replace(p, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(even_replace(p, 0, 1), std::invalid_argument);
}

TEST_CASE("two-position flips trade a (single-one, all-ones) column pair") {
    ReductionStep step = two_bit_flip(CodeProfile::parse("1:1,7:1"), 1);
    CHECK(step.rule == ReductionRule::two_bit_flip);
    CHECK(step.after == CodeProfile::parse("3:1,5:1"));

    CodeProfile twice = CodeProfile::parse("2:2,7:2");
    ReductionStep first = two_bit_flip(twice, 2);
    CHECK(first.after == CodeProfile::parse("2:1,3:1,6:1,7:1"));
    ReductionStep second = two_bit_flip(first.after, 2);
    CHECK(second.after == CodeProfile::parse("3:2,6:2"));

    CHECK(two_bit_flip(CodeProfile::parse("4:1,7:1"), 4).after == CodeProfile::parse("5:1,6:1"));

    CHECK_THROWS_AS(two_bit_flip(CodeProfile::parse("1:1,3:1"), 1), RuleNotApplicable);
    CHECK_THROWS_AS(two_bit_flip(CodeProfile::parse("2:1,7:1"), 1), RuleNotApplicable);
    CHECK_THROWS_AS(two_bit_flip(CodeProfile::parse("3:1,7:1"), 3), std::invalid_argument);
}

TEST_CASE("replacement rules preserve lambda monotonicity exactly") {
    for (const char* text : {"1:1,2:1,4:1,7:3", "1:2,2:2", "2:1,4:1,3:2", "1:1,7:1",
                             "2:2,7:2", "4:3,7:2,5:1"}) {
        CodeProfile p = CodeProfile::parse(text);
        for (int s = 1; s <= 4; ++s) {
            for (int t = 1; t <= 4; ++t) {
                if (s == t) continue;
                if (p.counts[static_cast<size_t>(1 << (4 - s))] < 1) continue;
                if (xor_weight(p, s, t) % 2 != 0) continue;
                ReductionStep step = even_replace(p, s, t);
                for (const auto& eps : test_eps())
                    CHECK(lambda_analytic(step.after, eps) >= lambda_analytic(p, eps));
            }
        }
        for (int s : {1, 2, 4}) {
            if (p.counts[static_cast<size_t>(s)] < 1 || p.counts[7] < 1) continue;
            ReductionStep step = two_bit_flip(p, s);
            for (const auto& eps : test_eps())
                CHECK(lambda_analytic(step.after, eps) >= lambda_analytic(p, eps));
        }
    }
}

TEST_CASE("row-interchange symmetry renames column types without touching spectra") {
    CodeProfile p = CodeProfile::parse("1:1,3:2,5:3,6:4");
    SymmetryMapResult to5 = symmetry_map(p, 5);
    CHECK(to5.after == CodeProfile::parse("1:1,3:3,5:2,6:4"));
    CHECK(symmetry_map(to5.after, 5).after == p);
    SymmetryMapResult to6 = symmetry_map(p, 6);
    CHECK(to6.after == CodeProfile::parse("1:1,3:4,5:3,6:2"));
    CHECK(symmetry_map(to6.after, 6).after == p);
    CHECK(symmetry_map(p, 3).after == p);

    for (int target : {3, 5, 6})
        CHECK(spectrum_analytic(symmetry_map(p, target).after) == spectrum_analytic(p));

    CHECK_THROWS_AS(symmetry_map(CodeProfile::parse("2:1,3:1"), 5), std::invalid_argument);
    CHECK_THROWS_AS(symmetry_map(p, 4), std::invalid_argument);
}

TEST_CASE("linearity looks only at the folded support") {
    CHECK(is_linear(CodeProfile::parse("3:2,5:2,6:2")));
    CHECK(is_linear(CodeProfile::parse("0:1,3:1,5:1,6:1")));
    CHECK_FALSE(is_linear(CodeProfile::parse("1:1,3:1,5:1,6:1")));
    CHECK_FALSE(is_linear(CodeProfile::parse("3:1,7:1")));
    CHECK_FALSE(is_linear(CodeProfile::parse("9:1,3:1")));
}

TEST_CASE("rule names are stable identifiers") {
    CHECK(rule_name(ReductionRule::even_replace) == "even-replace");
    CHECK(rule_name(ReductionRule::two_bit_flip) == "two-bit-flip");
    CHECK(rule_name(ReductionRule::class_i_11) == "classI-|1|=1");
    CHECK(rule_name(ReductionRule::class_i_min01) == "classI-min01");
    CHECK(rule_name(ReductionRule::symmetry) == "symmetry");
}

TEST_CASE("the pipeline leaves canonical linear profiles untouched") {
    ReductionOutcome out = reduce_to_linear_or_classI(CodeProfile::parse("3:2,5:2,6:2"));
    CHECK(out.steps.empty());
    CHECK(out.linear);
    CHECK_FALSE(out.class_i);
    CHECK(out.final_profile == CodeProfile::parse("3:2,5:2,6:2"));
}

TEST_CASE("the pipeline stops at irreducible Class-I profiles") {
    ReductionOutcome out = reduce_to_linear_or_classI(CodeProfile::parse("1:3,3:2,5:2,6:2"));
    CHECK(out.steps.empty());
    CHECK(out.class_i);
    CHECK(out.final_profile == CodeProfile::parse("1:3,3:2,5:2,6:2"));
}

TEST_CASE("worked pipeline traces") {
    // Two even replacements drive out the single-one columns.
    ReductionOutcome a = reduce_to_linear_or_classI(CodeProfile::parse("1:2,3:1,5:1,6:1"));
    CHECK(a.linear);
    CHECK(a.final_profile == CodeProfile::parse("3:1,5:2,6:2"));
    REQUIRE(a.steps.size() == 2);
    CHECK(a.steps[0].rule == ReductionRule::even_replace);
    CHECK(a.steps[1].rule == ReductionRule::even_replace);

    // A lone type-1 column in a Class-I profile goes to the scarcest type.
    ReductionOutcome b = reduce_to_linear_or_classI(CodeProfile::parse("1:1,3:2,5:2,6:4"));
    CHECK(b.linear);
    CHECK(b.final_profile == CodeProfile::parse("3:2,5:3,6:4"));
    bool has_11 = false;
    for (const auto& step : b.steps) has_11 |= step.rule == ReductionRule::class_i_11;
    CHECK(has_11);

    // A Class-I profile with a scarce type first converts one type-1 column.
    ReductionOutcome c = reduce_to_linear_or_classI(CodeProfile::parse("1:3,3:1,5:1,6:1"));
    CHECK(c.linear);
    CHECK(c.final_profile == CodeProfile::parse("3:1,5:2,6:3"));
    bool has_min01 = false;
    for (const auto& step : c.steps) has_min01 |= step.rule == ReductionRule::class_i_min01;
    CHECK(has_min01);

    // All-ones columns with no single-one partner flip rows 1 and 4 first.
    ReductionOutcome d = reduce_to_linear_or_classI(CodeProfile::parse("7:2,3:1"));
    CHECK(d.linear);
    CHECK(d.final_profile == CodeProfile::parse("5:1,6:2"));
}

TEST_CASE("every short profile reduces within budget and never loses lambda") {
    const std::vector<int> support{1, 2, 3, 4, 5, 6, 7};
    const RationalProb eps = RationalProb::parse("1/10");
    // Class-I endpoints need n >= 9 (n1 >= 3 and three counts >= 2), so this
    // range exercises both endpoint kinds.
    for (long n = 1; n <= 9; ++n) {
        for_each_composition(n, support, [&](const CodeProfile& p) {
            ReductionOutcome out = reduce_to_linear_or_classI(p);
            INFO("profile " << p.to_string());
            CHECK((out.linear || out.class_i));
            CHECK(static_cast<long>(out.steps.size()) <= 2 * n + 4);
            // Steps chain and never decrease lambda.
            const CodeProfile* prev = &p;
            for (const auto& step : out.steps) {
                CHECK(step.before == *prev);
                CHECK(lambda_analytic(step.after, eps) >= lambda_analytic(step.before, eps));
                prev = &step.after;
            }
            CHECK(*prev == out.final_profile);
            CHECK(lambda_analytic(out.final_profile, eps) >= lambda_analytic(p, eps));
            // Class-I endpoints are exactly the irreducible ones.
            if (out.class_i) {
                ClassIProfile q = as_class_i(out.final_profile);
                CHECK(q.n1 >= 3);
                CHECK(std::min({q.n3, q.n5, q.n6}) >= 2);
            } else {
                CHECK(is_linear(out.final_profile));
            }
        });
    }
}
