#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "commands.hpp"

using syt::cli::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
    const json& result() const
    {
        parsed = doc();
        return parsed["result"];
    }
    mutable json parsed;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = syt::cli::run(args, out, err);
    return {code, out.str(), err.str(), {}};
}

} // namespace

TEST(Cli, DocumentEnvelope)
{
    const Outcome o = run({"count", "2,2,1"});
    ASSERT_EQ(o.code, 0);
    const json d = o.doc();
    EXPECT_EQ(d["schema_version"], "1");
    EXPECT_EQ(d["command"], "count");
    EXPECT_EQ(d["inputs"]["shape"], json::array({2, 2, 1}));
    EXPECT_TRUE(d["warnings"].is_array());
    EXPECT_TRUE(o.err.empty());
}

TEST(Cli, Count)
{
    EXPECT_EQ(run({"count", "2,2,1"}).result()["yf"], "5");
    const Outcome o = run({"count", "4,3,2"});
    EXPECT_EQ(o.result()["yf"], "168");
    EXPECT_EQ(o.result()["hook"], "168");
    EXPECT_EQ(o.result()["agree"], true);
    EXPECT_EQ(run({"count", "1"}).result()["yf"], "1");
    EXPECT_EQ(run({"count", "2,3"}).code, 2);
    EXPECT_EQ(run({"count", "abc"}).code, 2);
}

TEST(Cli, Enumerate)
{
    const Outcome o = run({"enumerate", "2,2,1"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.result()["tableaux"], json::parse(R"([[[1,2],[3,4],[5]],[[1,2],[3,5],[4]],[[1,3],[2,4],[5]],
                                                      [[1,3],[2,5],[4]],[[1,4],[2,5],[3]]])"));
    EXPECT_EQ(run({"enumerate", "1,1"}).result()["tableaux"], json::parse("[[[1],[2]]]"));
    const Outcome limited = run({"enumerate", "3,2", "--limit", "2"});
    EXPECT_EQ(limited.result()["returned"], 2);
    EXPECT_EQ(limited.result()["total"], "5");
    EXPECT_EQ(limited.result()["tableaux"], json::parse("[[[1,2,3],[4,5]],[[1,2,4],[3,5]]]"));
}

TEST(Cli, EnumerateCap)
{
    const Outcome big = run({"enumerate", "10,10"});
    EXPECT_EQ(big.code, 3);
    EXPECT_EQ(big.doc()["error"]["type"], "shape_too_large");
    EXPECT_FALSE(big.err.empty());
    EXPECT_EQ(run({"enumerate", "10,10", "--limit", "1", "--max-cells", "20"}).code, 0);

    ::setenv("SYT_MAX_CELLS", "4", 1);
    EXPECT_EQ(run({"enumerate", "3,2"}).code, 3);
    ::setenv("SYT_MAX_CELLS", "20", 1);
    EXPECT_EQ(run({"enumerate", "10,10", "--limit", "1"}).code, 0);
    ::unsetenv("SYT_MAX_CELLS");
}

TEST(Cli, Sample)
{
    const Outcome a = run({"sample", "4,3,2", "--count", "1", "--seed", "7"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.result()["tableaux"].size(), 1u);
    const auto rows = a.result()["tableaux"][0].get<std::vector<std::vector<int>>>();
    syt::Tableau t{{4, 3, 2}, rows};
    EXPECT_TRUE(syt::is_standard(t));
    EXPECT_EQ(run({"sample", "4,3,2", "--count", "1", "--seed", "7"}).out, a.out);
    EXPECT_EQ(run({"sample", "1", "--count", "3", "--seed", "0"}).result()["tableaux"], json::parse("[[[1]],[[1]],[[1]]]"));
    EXPECT_EQ(run({"sample", "4,3,2", "--count", "0"}).code, 2);
    EXPECT_EQ(run({"sample", "4,3,2", "--count", "-1"}).code, 2);
}

TEST(Cli, Occupancy)
{
    const Outcome pgf = run({"occ", "2,2,1", "--cell", "2,1", "--pgf"});
    EXPECT_EQ(pgf.result()["distribution"], json::parse(R"({"2": "3/5", "3": "2/5"})"));
    EXPECT_EQ(pgf.result()["range"], json::array({2, 3}));
    EXPECT_EQ(run({"occ", "5,5,5", "--cell", "1,3", "--r", "7"}).result()["probability"], "5/143");
    EXPECT_EQ(run({"occ", "3", "--cell", "1,2", "--r", "2"}).result()["probability"], "1");
    EXPECT_EQ(run({"occ", "2,2,1", "--cell", "3,2", "--r", "2"}).code, 2);
    EXPECT_EQ(run({"occ", "2,2,1", "--cell", "2,1"}).code, 2);
    EXPECT_EQ(run({"occ", "2,2,1", "--cell", "2,1", "--pgf", "--csv"}).out, "value,probability\n2,3/5\n3,2/5\n");
}

TEST(Cli, SortingProbabilities)
{
    const Outcome sp = run({"sortprob", "2,2,1", "--c1", "1,2", "--c2", "2,1"});
    EXPECT_EQ(sp.result()["sort_prob"], "1/5");
    EXPECT_DOUBLE_EQ(sp.result()["sort_prob_float"].get<double>(), 0.2);
    EXPECT_EQ(run({"sortprob", "2,2", "--c1", "1,1", "--c2", "2,2"}).result()["sort_prob"], "-1");
    EXPECT_EQ(run({"sortprob", "2,2", "--c1", "1,1", "--c2", "1,1"}).code, 2);

    const Outcome m = run({"minsp", "10,4,3"});
    EXPECT_EQ(m.result()["minimum"], "1/273");
    EXPECT_EQ(m.result()["champions"], json::parse("[[[1,5],[3,1]]]"));
    const Outcome row = run({"minsp", "3"});
    EXPECT_EQ(row.result()["minimum"], "1");
    EXPECT_EQ(row.doc()["warnings"].size(), 1u);
}

TEST(Cli, Fit)
{
    const Outcome a = run({"fit", "--rows", "2", "--target", "sortprob", "--j", "3", "--c2", "2,1"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.result()["rational_function"], "3/(2*n - 1)");
    EXPECT_EQ(a.result()["limit"], "0");
    EXPECT_EQ(a.result()["series"]["coefficients"], json::parse(R"(["3/2", "3/4", "3/8"])"));

    const Outcome b = run({"fit", "--rows", "3", "--target", "occ", "--cell", "1,3", "--r", "7"});
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(b.result()["numerator"], "5*n^4 + 20*n^3 + 25*n^2 + 10*n");
    EXPECT_EQ(b.result()["denominator"], "729*n^4 - 2916*n^3 + 3969*n^2 - 2106*n + 360");
    EXPECT_EQ(b.result()["limit"], "5/729");
    EXPECT_TRUE(b.doc()["warnings"].empty());

    EXPECT_EQ(run({"fit", "--rows", "1", "--target", "occ", "--cell", "1,2", "--r", "2"}).result()["rational_function"],
              "1");
    EXPECT_EQ(run({"fit", "--rows", "2", "--target", "bogus"}).code, 2);
    EXPECT_EQ(run({"fit", "--rows", "3", "--target", "occ", "--cell", "1,3", "--r", "7", "--max-deg", "2"}).code, 4);
}

TEST(Cli, FindZeroLimitCompare)
{
    EXPECT_EQ(run({"findzero", "--rows", "2", "--max", "6"}).result()["pairs"],
              json::parse("[[[1,3],[2,1]],[[1,5],[2,2]]]"));

    const Outcome l = run({"limitdist", "--rows", "3", "--j", "2"});
    EXPECT_EQ(l.result()["distribution"], json::parse(R"({"2": "2/3", "3": "8/27", "4": "1/27"})"));
    EXPECT_EQ(l.result()["moments"]["mean"], "64/27");
    EXPECT_EQ(l.result()["moments"]["scaled_moments_float"].size(), 4u);
    EXPECT_EQ(run({"limitdist", "--rows", "3", "--j", "2", "--direct"}).result(), l.result());
    EXPECT_EQ(run({"limitdist", "--rows", "2", "--j", "2", "--csv"}).out, "value,probability\n2,3/4\n3,1/4\n");

    const Outcome c = run({"compare", "4,4,4", "--cell", "2,2", "--samples", "10000", "--seed", "1"});
    ASSERT_EQ(c.code, 0);
    EXPECT_LT(c.result()["tv_distance_float"].get<double>(), 0.03);
    EXPECT_EQ(run({"compare", "4,4,4", "--cell", "2,2", "--samples", "10000", "--seed", "1", "--workers", "4"}).result(),
              c.result());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    const Outcome o = run({"sortprob", "2,2,1", "--c1", "1,2"});
    EXPECT_EQ(o.code, 2);
    EXPECT_EQ(o.doc()["error"]["type"], "usage");
}
