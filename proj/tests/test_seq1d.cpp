#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "dbc/seq1d.hpp"
#include "dbc/verify.hpp"
#include "oracles.hpp"

using namespace dbc;

TEST(SeedCatalog, EverySeedVerifiesWithExactRadius) {
    for (const auto& e : seed_catalog()) {
        const auto s = known_seed(e.n, e.radius, e.variant);
        const auto expect = oracle::coverage(oracle::cyclic_windows(s.to_string(), e.n), 2, e.n, e.radius);
        EXPECT_EQ(expect.uncovered, 0u) << s.to_string();
        EXPECT_EQ(expect.radius, e.radius) << s.to_string();
        const auto rep = check_dbcs(s, e.n, e.radius);
        EXPECT_TRUE(rep.verified);
        EXPECT_EQ(rep.achieved_radius, e.radius);
    }
    EXPECT_THROW(known_seed(9, 1), std::invalid_argument);
}

TEST(DeBruijn, WindowsAreAllDistinct) {
    for (unsigned q = 2; q <= 4; ++q)
        for (unsigned n = 1; n <= (q == 2 ? 10u : 5u); ++n) {
            const auto s = debruijn(q, n);
            const auto w = oracle::cyclic_windows(s.to_string(), n);
            EXPECT_EQ(std::set<std::string>(w.begin(), w.end()).size(), w.size());
            EXPECT_EQ(s.period(), TupleIndex(q, n).size());
        }
    EXPECT_EQ(debruijn(2, 4).to_string(), "0000100110101111");
}

TEST(DeBruijn, PaddingPrependsZeros) {
    const auto s = debruijn_padded(4, 1);
    EXPECT_EQ(s.to_string(), "00000100110101111");
    EXPECT_TRUE(check_dbcs(s, 4, 0).verified);
}

TEST(Lfsr, PairIsComplementaryAndPeriodic) {
    const auto p = Gf2Polynomial::parse("x4+x+1");
    const auto pair = lfsr_pair(p, {0, 0, 0, 1});
    EXPECT_EQ(pair.a.period(), 15u);
    EXPECT_EQ(pair.b, pair.a.complemented());
    // a_k = a_{k-1} + a_{k-4} (mod 2) holds cyclically.
    for (std::size_t k = 0; k < 15; ++k) EXPECT_EQ(pair.a[k + 4], pair.a[k + 3] ^ pair.a[k]);
}

TEST(Lfsr, ErrorPaths) {
    EXPECT_THROW(lfsr_pair(Gf2Polynomial::parse("x4+1"), {0, 0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(lfsr_pair(Gf2Polynomial::parse("x4+x+1"), {0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(lfsr_pair(Gf2Polynomial::parse("x4+x+1"), {0, 1}), std::invalid_argument);
    try {
        lfsr_dbcsc(Gf2Polynomial::parse("x9+x4+1"), 2);
        FAIL() << "expected a coefficient error";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("c_4 = 1"), std::string::npos);
    }
    EXPECT_THROW(lfsr_dbcsc(Gf2Polynomial::parse("x9+x4+x3+x+1"), 0), std::invalid_argument);
}

TEST(Lfsr, FourSequenceCodeCovers) {
    const auto code = lfsr_dbcsc(Gf2Polynomial::parse("x9+x4+1"), 1);
    EXPECT_EQ(code.n, 12u);
    ASSERT_EQ(code.members.size(), 4u);
    EXPECT_EQ(code.members[0].period(), 511u);
    EXPECT_EQ(code.members[1], code.members[0].complemented());
    EXPECT_TRUE(check_dbcsc(code, 12, 1).verified);
    // Small case checked against the brute-force oracle: x^6+x^5+1, R=1 -> (9,1).
    const auto small = lfsr_dbcsc(Gf2Polynomial::parse("x6+x5+1"), 1);
    EXPECT_EQ(small.n, 9u);
    std::vector<std::string> words;
    for (const auto& s : small.members)
        for (const auto& w : oracle::cyclic_windows(s.to_string(), 9)) words.push_back(w);
    EXPECT_EQ(oracle::coverage(words, 2, 9, 1).uncovered, 0u);
}

TEST(CyclicCode, HammingProfileMatchesOracle) {
    const auto profile = cyclic_code_classes(Gf2Polynomial::parse("10011"), 15);
    const std::map<unsigned, std::size_t> frozen{{1, 2}, {3, 2}, {5, 6}, {15, 134}};
    EXPECT_EQ(profile.class_counts, frozen);
    EXPECT_EQ(oracle::necklace_profile(0b10011, 15), frozen);
    EXPECT_EQ(profile.codeword_count, 2048u);
    std::size_t total = 0;
    for (const auto& c : profile.classes) total += c.size;
    EXPECT_EQ(total, 2048u);
    const auto strings = class_strings(profile);
    std::size_t len = 0;
    for (const auto& s : strings) len += s.size();
    EXPECT_EQ(len, 4064u);
    EXPECT_TRUE(check_dbcsc(class_sequences(profile, 1), 15, 1).verified);
}

TEST(CyclicCode, RejectsNonDivisor) {
    EXPECT_THROW(cyclic_code_classes(Gf2Polynomial::parse("10011"), 14), std::invalid_argument);
}

TEST(SelfDual, SixtyFourSequencesCoverAtRadiusOne) {
    const Tuple x{0, 0, 0, 1, 1, 0, 1, 1};
    const Tuple y{0, 0, 0, 1, 1, 0, 1, 0};
    const auto code = self_dual_dbcsc(x, y);
    EXPECT_EQ(code.members.size(), 64u);
    for (const auto& s : code.members) EXPECT_EQ(s.period(), 64u);
    const auto rep = check_dbcsc(code, 16, 1);
    EXPECT_TRUE(rep.verified);
    EXPECT_EQ(rep.distinct_codewords, 4096u);
}

TEST(SelfDual, SeedValidation) {
    EXPECT_THROW(self_dual_dbcsc({0, 1}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(self_dual_dbcsc({0, 1}, {0, 1}), std::invalid_argument);
    EXPECT_THROW(self_dual_dbcsc({0, 1}, {0, 0, 1}), std::invalid_argument);
}

TEST(Interleave, PairsEveryWindowAndVerifies) {
    const auto s = known_seed(5, 1);
    const auto t = debruijn_padded(4, 1);
    const auto il = interleave(s, t, 5, 4, 1, 0);
    EXPECT_EQ(il.n, 9u);
    EXPECT_EQ(il.radius, 1u);
    EXPECT_EQ(il.pairings, 8u * 17u);
    EXPECT_EQ(il.sequence.period(), 2u * 8u * 17u);
    for (std::size_t i = 0; i < il.pairings; ++i) {
        EXPECT_EQ(il.sequence[2 * i], s[i]);
        EXPECT_EQ(il.sequence[2 * i + 1], t[i]);
    }
    EXPECT_TRUE(check_dbcs(il.sequence, 9, 1).verified);
}

TEST(Interleave, RandomPairsMatchOracle) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t k1 = 1 + rng() % 7, k2 = 1 + rng() % 7;
        if (std::gcd(k1, k2) != 1) continue;
        const auto a = oracle::random_word(rng, 2, k1);
        const auto b = oracle::random_word(rng, 2, k2);
        const auto il = interleave(CyclicSequence::from_string(a), CyclicSequence::from_string(b), 3, 3, 0, 0);
        std::string expect;
        for (std::size_t i = 0; i < k1 * k2; ++i) {
            expect += a[i % k1];
            expect += b[i % k2];
        }
        // The result is the minimal period of the alternating stream.
        const std::string got = il.sequence.to_string();
        EXPECT_EQ(expect.size() % got.size(), 0u);
        std::string rebuilt;
        while (rebuilt.size() < expect.size()) rebuilt += got;
        EXPECT_EQ(rebuilt, expect);
    }
}

TEST(Interleave, Preconditions) {
    const auto s = known_seed(6, 1);
    EXPECT_THROW(interleave(s, known_seed(6, 1), 6, 6, 1, 1), std::invalid_argument);  // gcd 12
    EXPECT_THROW(interleave(known_seed(5, 1), debruijn_padded(2, 1), 5, 2, 1, 0), std::invalid_argument);
}
