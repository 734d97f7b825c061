#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dbc/arr2d.hpp"
#include "dbc/seq1d.hpp"
#include "oracles.hpp"

using namespace dbc;

TEST(FoldPlan, Arithmetic) {
    const auto a = FoldPlan::make(204, 3, 4);
    EXPECT_EQ(a.rows, 51u);
    EXPECT_EQ(a.cols, 7u);
    EXPECT_EQ(a.pad, 0u);
    const auto b = FoldPlan::make(22, 2, 4);  // 22 = 5*4 + 2
    EXPECT_EQ(b.pad, 2u);
    EXPECT_EQ(b.rows, 6u + 2u - 1u);
    EXPECT_EQ(b.cols, 7u);
}

// Property: for n | k the m x n window at (j, 0) flattens to the mn-substring
// of s starting at position jn+1, for every j, and the dimensions follow the plan.
TEST(FoldProperty, WindowIdentityBookkeeping) {
    std::mt19937_64 rng(8);
    int cases = 0;
    while (cases < 120) {
        const unsigned m = 1 + rng() % 3, n = 1 + rng() % 4;
        const std::size_t k = n * (1 + rng() % 10);
        const auto text = oracle::random_word(rng, 2, k);
        const auto s = CyclicSequence::from_string(text);
        const auto plan = FoldPlan::make(k, m, n);
        PeriodicArray a(2, plan.rows, plan.cols);
        for (std::size_t j = 0; j < plan.rows; ++j)
            for (std::size_t c = 0; c < plan.cols; ++c) a.set(j, c, detail::fold_cell(s, 0, j, c, n));
        ASSERT_EQ(a.rows(), k / n);
        ASSERT_EQ(a.cols(), 2u * n - 1);
        const std::string ext = text + text + text + text + text;
        for (std::size_t j = 0; j + m <= plan.rows; ++j) {
            std::string w;
            for (unsigned r = 0; r < m; ++r)
                for (unsigned c = 0; c < n; ++c) w += static_cast<char>('0' + a.at(j + r, c));
            EXPECT_EQ(w, ext.substr(j * n + 1, std::size_t{m} * n));
        }
        ++cases;
    }
}

TEST(Fold, SeedSequenceIntoArray) {
    const auto f = fold(known_seed(8, 1), 8, 1, 2, 4);
    EXPECT_EQ(f.array.rows(), 8u);
    EXPECT_EQ(f.array.cols(), 7u);
    EXPECT_TRUE(f.report.verified);
}

TEST(Fold, NonDividingLengthReadsCyclically) {
    const auto f = fold(known_seed(7, 1), 7, 1, 1, 7);  // 22 = 3*7 + 1
    EXPECT_EQ(f.plan.pad, 6u);
    EXPECT_EQ(f.array.rows(), 4u);
    EXPECT_TRUE(f.report.verified);
}

TEST(Fold, WindowMismatchIsRejected) {
    EXPECT_THROW(fold(known_seed(8, 1), 8, 1, 3, 3), std::invalid_argument);
}

TEST(TileFold, DegenerateTilingAgreesWithFold) {
    const auto s = known_seed(8, 1);
    const auto f = fold(s, 8, 1, 2, 4);
    const auto t = tile_fold(s, 8, 1, 2, 4, 1, 1);
    EXPECT_EQ(t.segment_length, 32u);
    EXPECT_EQ(t.block_rows, 8u + 1u);
    for (std::size_t i = 0; i < f.array.rows(); ++i)
        for (std::size_t j = 0; j < f.array.cols(); ++j) EXPECT_EQ(t.array.at(i, j), f.array.at(i, j));
    EXPECT_TRUE(t.report.verified);
}

TEST(TileFold, TwoByTwoTilingVerifiesAndRespectsRedundancyBound) {
    const auto s = known_seed(8, 1);
    const auto t = tile_fold(s, 8, 1, 2, 4, 2, 2);
    EXPECT_EQ(t.segment_length, 8u);
    EXPECT_EQ(t.block_rows, 2u + 2u - 1u);
    EXPECT_EQ(t.array.rows(), 2 * t.block_rows);
    EXPECT_EQ(t.array.cols(), 2 * t.block_cols);
    const double bound = t.block_rows * 3.0 + (t.block_rows - 8.0 / 4) * 4;
    EXPECT_LE(static_cast<double>(t.redundancy_bound), bound);
    EXPECT_TRUE(t.report.verified);
}

TEST(Shift, RowsAreTriangularShifts) {
    const auto s = known_seed(6, 1);
    const auto a = shift_construct(s, 6, 1);
    EXPECT_EQ(a.array.rows(), 13u);
    EXPECT_EQ(a.array.cols(), 12u);
    EXPECT_TRUE(a.report.verified);
    EXPECT_EQ(a.report.claimed_radius, 2u);
    for (std::size_t i = 0; i < 12; ++i) {
        EXPECT_EQ(triangular_shift(i + 1) - triangular_shift(i), i + 1);
        for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(a.array.at(i, j), s[j + i * (i + 1) / 2]);
    }
    for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(a.array.at(12, j), a.array.at(11, j));
}

TEST(Shift, OddLengthGivesSquareArray) {
    const auto s = debruijn_padded(3, 1);  // length 9
    const auto a = shift_construct(s, 3, 0);
    EXPECT_EQ(a.array.rows(), 9u);
    EXPECT_EQ(a.array.cols(), 9u);
    EXPECT_TRUE(a.report.verified);
}

TEST(RandomPatch, ColumnFormula) {
    const double v = 7.0;
    EXPECT_EQ(random_patch_columns(2, 3, 1, 2, 6),
              static_cast<std::size_t>(std::ceil(64.0 / v * std::log(6 * v) / 6)));
}

TEST(RandomPatch, VerifiesAndIsReproducible) {
    std::size_t patched = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = random_patch(2, 3, 1, 2, 2, seed);
        const auto b = random_patch(2, 3, 1, 2, 2, seed);
        EXPECT_EQ(a.array, b.array);
        EXPECT_TRUE(a.report.verified);
        EXPECT_EQ(a.array.rows(), 2u);
        if (a.initial_uncovered > 0) {
            ++patched;
            EXPECT_GT(a.array.cols(), a.initial_cols);
        } else {
            EXPECT_EQ(a.array.cols(), a.initial_cols);
        }
    }
    EXPECT_GT(patched, 0u);  // the patch path is exercised
}

TEST(RandomPatch, AreaWithinSanityBand) {
    // (q^{mn}/V) ln(mn V) for (2,3,1): 64/7 * ln 42; allow four times that.
    const double reference = 64.0 / 7.0 * std::log(42.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = random_patch(2, 3, 1, 2, 6, seed);
        EXPECT_TRUE(p.report.verified);
        EXPECT_LE(static_cast<double>(p.array.area()), 4 * reference);
    }
}

TEST(RandomPatch, Preconditions) {
    EXPECT_THROW(random_patch(3, 2, 1, 2, 2, 1), std::invalid_argument);
    VerifyOptions opt;
    opt.budget = 10;
    EXPECT_THROW(random_patch(2, 2, 1, 2, 4, 1, opt), BudgetExceeded);
}

TEST(Search, TinyExhaustiveCases) {
    const auto a = exhaustive_search(2, 2, 1, 2, 2, 3);
    EXPECT_EQ(a.status, SearchStatus::found);
    EXPECT_TRUE(a.exhaustive);
    EXPECT_EQ(oracle::coverage(oracle::array_windows({tuple_to_string(a.array->row(0)),
                                                      tuple_to_string(a.array->row(1))},
                                                     2, 2),
                               2, 4, 1)
                  .uncovered,
              0u);
    EXPECT_EQ(exhaustive_search(2, 2, 2, 2, 2, 2).status, SearchStatus::found);
    const auto none = exhaustive_search(2, 2, 1, 2, 2, 2);
    EXPECT_EQ(none.status, SearchStatus::none);
    EXPECT_EQ(none.examined, 16u);
}

TEST(Search, NoneAgreesWithBruteForceOracle) {
    // Brute force over all 2x2 binary arrays for (2,2,1): no array covers.
    for (unsigned v = 0; v < 16; ++v) {
        const std::string r0{static_cast<char>('0' + (v >> 3 & 1)), static_cast<char>('0' + (v >> 2 & 1))};
        const std::string r1{static_cast<char>('0' + (v >> 1 & 1)), static_cast<char>('0' + (v & 1))};
        EXPECT_GT(oracle::coverage(oracle::array_windows({r0, r1}, 2, 2), 2, 4, 1).uncovered, 0u);
    }
}

TEST(Search, LocalSearchFindsAndIsSeeded) {
    SearchOptions s;
    s.seed = 5;
    const auto a = exhaustive_search(3, 3, 2, 2, 5, 6, s);
    EXPECT_FALSE(a.exhaustive);
    ASSERT_EQ(a.status, SearchStatus::found);
    const auto b = exhaustive_search(3, 3, 2, 2, 5, 6, s);
    EXPECT_EQ(*a.array, *b.array);
}

TEST(Search, ExhaustedBudgetIsUnknown) {
    SearchOptions s;
    s.trials = 10;
    EXPECT_EQ(exhaustive_search(2, 6, 2, 2, 3, 30, s).status, SearchStatus::unknown);
}
