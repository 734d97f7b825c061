#include <gtest/gtest.h>

#include <random>

#include "dbc/verify.hpp"
#include "oracles.hpp"

using namespace dbc;

namespace {

std::vector<std::string> as_strings(const std::vector<Count>& codes, unsigned q, unsigned length) {
    const TupleIndex idx(q, length);
    std::vector<std::string> out;
    for (Count c : codes) out.push_back(tuple_to_string(idx.decode(c)));
    return out;
}

}  // namespace

// Property: the BFS verifier agrees with the brute-force distance oracle on
// random codeword sets (q <= 3, length <= 10), including radius, uncovered
// count and the lowest uncovered witness.
TEST(CoverageProperty, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(2024);
    int cases = 0;
    for (; cases < 1000; ++cases) {
        const unsigned q = 2 + rng() % 2;
        const unsigned max_len = q == 2 ? 10 : 6;
        const unsigned length = 1 + rng() % max_len;
        const Count space = TupleIndex(q, length).size();
        const std::size_t count = 1 + rng() % std::min<Count>(space, 24);
        std::vector<Count> codes(count);
        for (auto& c : codes) c = rng() % space;
        const unsigned claimed = rng() % (length + 1);
        const unsigned threads = 1 + (cases % 3 == 0);

        VerifyOptions opt;
        opt.threads = threads;
        const auto rep = coverage_report(codes, q, length, claimed, opt);
        const auto expect = oracle::coverage(as_strings(codes, q, length), q, length, claimed);
        ASSERT_EQ(rep.achieved_radius, expect.radius) << "case " << cases;
        ASSERT_EQ(rep.uncovered_count, expect.uncovered) << "case " << cases;
        ASSERT_EQ(rep.verified, expect.uncovered == 0);
        ASSERT_EQ(rep.total(), space);
        ASSERT_EQ(rep.distinct_codewords, distinct_count(codes));
        if (expect.uncovered > 0) {
            ASSERT_FALSE(rep.witnesses.empty());
            EXPECT_EQ(tuple_to_string(rep.witnesses.front()), expect.first_uncovered);
        }
        EXPECT_EQ(covering_radius(codes, q, length, opt), expect.radius);
    }
    EXPECT_GE(cases, 1000);
}

TEST(CoverageProperty, ThreadedBfsMatchesSequential) {
    std::mt19937_64 rng(5);
    std::vector<Count> codes(40);
    for (auto& c : codes) c = rng() % (Count{1} << 18);
    VerifyOptions one, four;
    four.threads = 4;
    const auto a = coverage_report(codes, 2, 18, 3, one);
    const auto b = coverage_report(codes, 2, 18, 3, four);
    EXPECT_EQ(a.covered_per_level, b.covered_per_level);
    EXPECT_EQ(a.achieved_radius, b.achieved_radius);
    EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST(Verify, SeedSequenceAndOffByOneRadius) {
    const auto s = CyclicSequence::from_string("10100011");
    const auto ok = check_dbcs(s, 5, 1);
    EXPECT_TRUE(ok.verified);
    EXPECT_EQ(ok.achieved_radius, 1u);
    EXPECT_EQ(ok.distinct_codewords, 8u);
    const auto bad = check_dbcs(s, 5, 0);
    EXPECT_FALSE(bad.verified);
    EXPECT_EQ(bad.uncovered_count, 24u);
    EXPECT_EQ(bad.witnesses.size(), 10u);
    EXPECT_NE(bad.describe().find("verified=false Rstar=1 uncovered=24"), std::string::npos);
}

TEST(Verify, WitnessLimitIsHonoured) {
    VerifyOptions opt;
    opt.max_witnesses = 3;
    const auto rep = check_dbcs(CyclicSequence::from_string("01"), 6, 1, opt);
    EXPECT_EQ(rep.witnesses.size(), 3u);
}

TEST(Verify, BudgetIsEnforced) {
    VerifyOptions opt;
    opt.budget = 1000;
    EXPECT_THROW(check_dbcs(CyclicSequence::from_string("01"), 10, 1, opt), BudgetExceeded);
    try {
        check_dbcs(CyclicSequence::from_string("01"), 10, 1, opt);
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), 1024u);
        EXPECT_NE(std::string(e.what()).find("DBC_BUDGET"), std::string::npos);
    }
}

TEST(Verify, ArrayAndCodeChecks) {
    const PeriodicArray a(2, 2, 3, {0, 0, 1, 0, 1, 1});
    const auto rep = check_dbca(a, 2, 2, 1);
    const auto expect = oracle::coverage(oracle::array_windows({"001", "011"}, 2, 2), 2, 4, 1);
    EXPECT_EQ(rep.verified, expect.uncovered == 0);
    EXPECT_EQ(rep.achieved_radius, expect.radius);

    SequenceCode code({CyclicSequence::from_string("0"), CyclicSequence::from_string("1")}, 3, 1);
    const auto c = check_dbcsc(code, 3, 1);
    EXPECT_TRUE(c.verified);  // 000 and 111 cover every 3-tuple within radius 1
    EXPECT_FALSE(check_dbcsc(code, 4, 1).verified);
}

TEST(Verify, EmptyCodewordSetIsRejected) {
    EXPECT_THROW(coverage_report(std::vector<Count>{}, 2, 3, 1), std::invalid_argument);
}
