#include <gtest/gtest.h>

#include <random>

#include "dbc/assemble.hpp"
#include "dbc/seq1d.hpp"
#include "oracles.hpp"

using namespace dbc;

namespace {

Word word(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(c - '0'));
    return w;
}

std::string text(const Word& w) { return tuple_to_string(w); }

std::size_t naive_overlap(const std::string& a, const std::string& b) {
    for (std::size_t k = std::min(a.size(), b.size()); k > 0; --k)
        if (a.compare(a.size() - k, k, b, 0, k) == 0) return k;
    return 0;
}

}  // namespace

TEST(Overlap, MatchesNaive) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        const auto a = oracle::random_word(rng, 2, 1 + rng() % 12);
        const auto b = oracle::random_word(rng, 2, 1 + rng() % 12);
        EXPECT_EQ(detail::overlap(word(a), word(b)), naive_overlap(a, b)) << a << ' ' << b;
    }
}

TEST(GreedyMerge, SmallExample) {
    const auto r = greedy_merge({word("0011"), word("1100"), word("0110")});
    // Best overlaps of length 2: 0011+1100 -> 001100 (lexicographically smallest of the ties).
    EXPECT_EQ(text(r.merged).size(), r.trace.input_total - r.trace.total_overlap());
    EXPECT_EQ(r.trace.steps.size(), 2u);
    for (const auto* s : {"0011", "1100", "0110"}) EXPECT_NE(text(r.merged).find(s), std::string::npos);
}

// Property: the merged string contains every input, and its length is the
// input total minus the recorded overlaps.
TEST(GreedyMerge, LengthAccountingIsExact) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Word> in;
        std::vector<std::string> raw;
        const std::size_t count = 1 + rng() % 8;
        for (std::size_t i = 0; i < count; ++i) {
            raw.push_back(oracle::random_word(rng, 2, 1 + rng() % 10));
            in.push_back(word(raw.back()));
        }
        const auto r = greedy_merge(in);
        const std::string merged = text(r.merged);
        EXPECT_EQ(r.trace.final_length, merged.size());
        EXPECT_EQ(merged.size(), r.trace.input_total - r.trace.total_overlap());
        for (const auto& s : raw) EXPECT_NE(merged.find(s), std::string::npos);
    }
}

TEST(GreedyMerge, DropsDuplicatesAndIsDeterministic) {
    const std::vector<Word> in{word("101"), word("101"), word("010")};
    const auto a = greedy_merge(in);
    const auto b = greedy_merge(in);
    EXPECT_EQ(a.merged, b.merged);
    EXPECT_EQ(a.trace.input_count, 2u);
    EXPECT_THROW(greedy_merge({}), std::invalid_argument);
}

TEST(Linearize, AppendsWrapAround) {
    EXPECT_EQ(text(linearize(CyclicSequence::from_string("10100011"), 5)), "101000111010");
}

TEST(Assemble, HammingClassesBecomeOneCoveringSequence) {
    const auto profile = cyclic_code_classes(Gf2Polynomial::parse("10011"), 15);
    const auto a = dbcsc_to_dbcs(class_sequences(profile, 1), 15, 1);
    EXPECT_TRUE(a.report.verified);
    EXPECT_EQ(a.trace.input_total, 4064u);
    EXPECT_LE(a.sequence.period(), 4064u);
    EXPECT_GE(a.sequence.period(), 2048u);
    EXPECT_EQ(a.sequence.period(), 3533u);  // frozen greedy result
}

TEST(Assemble, FailureCarriesReport) {
    try {
        assemble_strings({word("0000"), word("1111")}, 2, 4, 0);
        FAIL() << "expected a verification failure";
    } catch (const VerificationFailure& e) {
        EXPECT_FALSE(e.report().verified);
        EXPECT_FALSE(e.report().witnesses.empty());
    }
}
