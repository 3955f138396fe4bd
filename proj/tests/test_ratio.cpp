#include "doctest.h"

#include "poc/ratio.hpp"

using poc::Ratio;

TEST_CASE("ratios are kept in lowest terms")
{
    CHECK(Ratio(6, 4).to_string() == "3/2");
    CHECK(Ratio(3).to_string() == "3/1");
    CHECK(Ratio(0, 5).to_string() == "0/1");
    CHECK(Ratio(4, 3) == Ratio(8, 6));
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
    CHECK(Ratio(2) - Ratio(1, 4) == Ratio(7, 4));
    CHECK(Ratio(2, 3) * Ratio(9, 4) == Ratio(3, 2));
    CHECK(Ratio(1, 2) / Ratio(1, 4) == Ratio(2));
    CHECK(Ratio(4, 3) < Ratio(3, 2));
    CHECK(Ratio(5, 3) > Ratio(3, 2));
    CHECK(Ratio(3, 2) <= Ratio(6, 4));
    CHECK(Ratio(1, 3).approximate() == doctest::Approx(0.33333));
}

TEST_CASE("large values stay exact")
{
    poc::BigInt big = 1;
    for (int i = 0; i < 40; ++i)
        big *= 1000;
    Ratio a(big + 1, big);
    Ratio b(big + 2, big + 1);
    CHECK(a > b);
    CHECK(a - b == Ratio(poc::BigInt(1), big * (big + 1)));
}

TEST_CASE("parse and errors")
{
    CHECK(Ratio::parse("3/2") == Ratio(3, 2));
    CHECK(Ratio::parse("4") == Ratio(4));
    CHECK(Ratio::parse("10/4") == Ratio(5, 2));
    CHECK_THROWS(Ratio::parse("3/0"));
    CHECK_THROWS(Ratio::parse("x/2"));
    CHECK_THROWS(Ratio::parse("-1/2"));
    CHECK_THROWS(Ratio::parse(""));
    CHECK_THROWS_AS(Ratio(1, 0), std::domain_error);
    CHECK_THROWS_AS(Ratio(1, 2) - Ratio(1), std::domain_error);
}
