#include <doctest.h>

#include "chord/enumerate.hpp"
#include "chord/oracles.hpp"
#include "chord/patterns.hpp"
#include "chord/structure.hpp"

using namespace chord;

namespace {
std::vector<long> seq(mpz_class (*f)(int), int lo, int hi) {
    std::vector<long> v;
    for (int n = lo; n <= hi; ++n) v.push_back(f(n).get_si());
    return v;
}
}  // namespace

TEST_CASE("closed forms") {
    CHECK(seq(double_factorial, 0, 6) == std::vector<long>{1, 1, 3, 15, 105, 945, 10395});
    CHECK(seq(stein, 1, 8) == std::vector<long>{1, 1, 4, 27, 248, 2830, 38232, 593859});
    CHECK(seq(catalan, 0, 6) == std::vector<long>{1, 1, 2, 5, 14, 42, 132});
    CHECK(seq(tutte, 0, 6) == std::vector<long>{1, 1, 3, 13, 68, 399, 2530});
    CHECK(seq(schroeder, 0, 5) == std::vector<long>{1, 2, 6, 22, 90, 394});
    CHECK(seq(baxter, 0, 6) == std::vector<long>{1, 1, 2, 6, 22, 92, 422});
    CHECK(seq(semi_baxter, 0, 6) == std::vector<long>{1, 1, 2, 6, 23, 104, 530});
    CHECK(seq(stanley, 0, 5) == std::vector<long>{1, 1, 3, 14, 84, 594});
    CHECK(corollary_count(4, 3) == 5);
    CHECK(brown(1, 0) == 2);
    CHECK_THROWS_AS(corollary_count(3, 1), OracleError);
}

TEST_CASE("oracle dispatch") {
    CHECK(oracle("catalan", {5}) == 42);
    CHECK_THROWS(oracle("no-such-oracle", {1}));
    CHECK(!oracle_names().empty());
}

TEST_CASE("count tables are independent of job count") {
    auto cls = PatternClass::parse("top-cycle-free");
    auto a = count_class(6, cls, Variant::Connected, {Statistic::T1, Statistic::Crossings}, 1);
    auto b = count_class(6, cls, Variant::Connected, {Statistic::T1, Statistic::Crossings}, 3);
    CHECK(a.to_csv() == b.to_csv());
    CHECK(a.total() == 399);
}

TEST_CASE("brute-force table for connected size 3 by t1") {
    auto t = count_class(3, PatternClass::parse("all"), Variant::Connected, {Statistic::T1});
    CHECK(t.to_csv() == "n,t1,count\n3,2,1\n3,3,3\n");
}
