#include <gtest/gtest.h>

#include <sstream>

#include "dbc/refs.hpp"
#include "dbc/tables.hpp"

using namespace dbc;

TEST(Refs, ResolveAllKinds) {
    const auto s = resolve_sequence("seed:6,1,1");
    EXPECT_EQ(s.sequence.period(), 17u);
    EXPECT_EQ(s.n, 6u);
    const auto d = resolve_sequence("debruijn:5+3");
    EXPECT_EQ(d.sequence.period(), 35u);
    EXPECT_EQ(d.radius, 0u);
    EXPECT_THROW(resolve_sequence("seed:5"), std::invalid_argument);
    EXPECT_THROW(resolve_sequence("seed:5,x"), std::invalid_argument);
    EXPECT_THROW(resolve_sequence("nope:1"), std::invalid_argument);
    EXPECT_THROW(resolve_sequence("file:/nonexistent/x.dbcs"), std::runtime_error);
}

TEST(Tables, Table1RowsVerifyOrNameTheirBlocker) {
    const auto rows = table1_rows();
    EXPECT_EQ(rows.size(), 24u + 8u);
    for (const auto& r : rows) {
        if (r.achieved_value.rfind("unreproduced(", 0) == 0)
            EXPECT_FALSE(r.verified);
        else
            EXPECT_TRUE(r.verified) << r.params << ' ' << r.achieved_value;
    }
    std::ostringstream out;
    write_tsv(out, rows);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "params\tpaper_value\tachieved_value\tverified\tseconds");
}

TEST(Tables, InterleaveRecipeBuilds) {
    const auto il = build_interleave(find_interleave_recipe(12, 2));
    EXPECT_EQ(il.n, 12u);
    EXPECT_EQ(il.radius, 2u);
    EXPECT_EQ(il.pairings, 204u);
    EXPECT_THROW(build_interleave(find_interleave_recipe(20, 1)), std::invalid_argument);
    EXPECT_THROW(find_interleave_recipe(30, 1), std::invalid_argument);
}
