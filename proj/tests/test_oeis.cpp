#include <doctest.h>

#include "spectable/oeis.hpp"

using namespace spectable;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const std::string kFixture = std::string(SPECTABLE_TEST_DATA) + "/stripped_fixture";

}  // namespace

TEST_CASE("stripped parsing") {
    const auto two = parse_stripped("# header\nA000027 ,1,2,3,4,\nA000045 ,0,1,1,2,3,5,\n");
    REQUIRE(two.records.size() == 2);
    CHECK(two.records[1].id == "A000045");
    CHECK(two.records[1].terms.size() == 6);
    CHECK(two.warnings.empty());
    const auto big = parse_stripped("A000001 ,123456789012345678901234567890,-5,\n");
    CHECK(big.records[0].terms[0] == Integer("123456789012345678901234567890"));
    CHECK(big.records[0].terms[1] == -5);
}

TEST_CASE("empty and malformed files") {
    const auto empty = load_stripped(std::string(SPECTABLE_TEST_DATA) + "/empty_stripped");
    CHECK(empty.records.empty());
    CHECK(empty.warnings.size() == 1);
    try {
        load_stripped(std::string(SPECTABLE_TEST_DATA) + "/malformed_stripped");
        FAIL("expected a parse error");
    } catch (const OeisError& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_stripped("A000001 1,2\n"), OeisError);
    CHECK_THROWS_AS(parse_stripped("A000001 ,1,x,\n"), OeisError);
    CHECK_THROWS_AS(parse_stripped("A000001 ,1,\nA000001 ,2,\n"), OeisError);
    CHECK_THROWS_AS(load_stripped("/nonexistent/stripped"), OeisError);
}

TEST_CASE("matching against the fixture") {
    const auto index = load_stripped(kFixture);
    const auto m = match_sequence(index, ints({1, 2, 3, 4, 5, 6, 7, 8}));
    REQUIRE(m.size() == 2);
    CHECK(m[0].id == "A000027");
    CHECK(m[0].offset == 0);
    CHECK(m[1].id == "A001477");
    CHECK(m[1].offset == 1);
    CHECK(match_sequence(index, ints({1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0}))[0].id == "A999901");
    CHECK(match_sequence(index, ints({9, 9, 9, 9, 9, 9, 9, 8})).empty());
    CHECK_THROWS_AS(match_sequence(index, ints({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(match_sequence(index, ints({1, 1, 1, 1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("records shorter than the query still match with enough overlap") {
    const auto index = parse_stripped("A000010 ,5,1,2,3,4,5,6,7,8,\n");
    const auto m = match_sequence(index, ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    REQUIRE(m.size() == 1);
    CHECK(m[0].offset == 1);
    CHECK(m[0].overlap == 8);
    CHECK(match_sequence(index, ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 9).empty());
}

TEST_CASE("every match is literally present") {
    const auto index = load_stripped(kFixture);
    const auto terms = ints({0, 1, 0, 1, 0, 1, 0, 1, 0});
    for (const auto& m : match_sequence(index, terms)) {
        const auto& rec = *std::find_if(index.records.begin(), index.records.end(),
                                        [&](const SequenceRecord& r) { return r.id == m.id; });
        for (size_t k = 0; k < m.overlap; ++k) CHECK(rec.terms[m.offset + k] == terms[k]);
    }
}
