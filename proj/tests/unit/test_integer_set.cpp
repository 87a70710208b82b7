#include "chilab/errors.hpp"
#include "chilab/integer_set.hpp"
#include "doctest.h"

using chilab::IntegerSet;

TEST_CASE("parse and print") {
    CHECK(IntegerSet::parse("empty").empty());
    CHECK(IntegerSet::parse("3..7").str() == "3..7");
    CHECK(IntegerSet::parse("5").str() == "5");
    CHECK(IntegerSet::parse("10..").str() == "10..");
    CHECK(IntegerSet::parse("..-2").str() == "..-2");
    CHECK(IntegerSet::parse("1..3, 4..6,10").str() == "1..6,10");
    CHECK_THROWS_AS(IntegerSet::parse("7..3"), chilab::DomainError);
    CHECK_THROWS_AS(IntegerSet::parse("abc"), chilab::DomainError);
}

TEST_CASE("set algebra") {
    const auto a = IntegerSet::parse("0..10");
    const auto b = IntegerSet::parse("5..20");
    CHECK(a.unite(b) == IntegerSet::parse("0..20"));
    CHECK(a.intersect(b) == IntegerSet::parse("5..10"));
    CHECK(a.subtract(b) == IntegerSet::parse("0..4"));
    CHECK(a.complement().complement() == a);
    CHECK(a.complement().contains(-1));
    CHECK_FALSE(a.complement().contains(3));
    CHECK(a.shifted(-3) == IntegerSet::parse("-3..7"));
    CHECK(IntegerSet::at_least(5).shifted(-2) == IntegerSet::at_least(3));
    CHECK_FALSE(IntegerSet::at_least(5).bounded_above());
}
