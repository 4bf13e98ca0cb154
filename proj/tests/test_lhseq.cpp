#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "lh/lh_sequence.hpp"
#include "lh/poly_io.hpp"

using lh::LaurentPoly;
using lh::LectureHallSequence;
using lh::Monomial;

namespace {

LaurentPoly fixture(int i) {
    const std::string path =
        std::string(LH_FIXTURES_DIR) + "/ell_" + std::to_string(i) + ".txt";
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    return lh::parsePoly(line);
}

}  // namespace

TEST_CASE("target monomial") {
    CHECK(LectureHallSequence::targetMonomial(1) == Monomial({1}));
    CHECK(LectureHallSequence::targetMonomial(3) == Monomial({3, 2, 1}));
    CHECK(LectureHallSequence::targetMonomial(4) == Monomial({4, 3, 2, 1}));
    CHECK_THROWS_AS(LectureHallSequence::targetMonomial(0), lh::InvalidIndex);
}

TEST_CASE("first entries") {
    LectureHallSequence seq;
    CHECK(seq.at(1) == lh::parsePoly("y1"));
    CHECK(seq.at(2) == lh::parsePoly("y1^2*y2"));
    CHECK(seq.at(4) ==
          lh::parsePoly("y1^2*y2^3") * lh::parsePoly("y1 + y3") * lh::parsePoly("y1 + y3") +
              lh::parsePoly("y1^2*y2^2*y3^2*y4"));
}

TEST_CASE("golden fixtures") {
    LectureHallSequence seq;
    for (int i = 1; i <= 8; ++i) {
        CAPTURE(i);
        CHECK(seq.at(i) == fixture(i));
    }
}

TEST_CASE("index reports") {
    LectureHallSequence seq;
    const auto r1 = seq.checkIndex(1);
    CHECK(r1.allOk());
    CHECK(r1.observed == lh::BiDegree{1, 0});

    const auto r3 = seq.checkIndex(3);
    CHECK(r3.allOk());
    CHECK(r3.observed == lh::BiDegree{3, 2});

    for (int i = 2; i <= 10; ++i) {
        CAPTURE(i);
        CHECK(seq.checkIndex(i).allOk());
    }
}

TEST_CASE("defining-equation residuals vanish") {
    LectureHallSequence seq;
    for (int i = 1; i <= 10; ++i) {
        CAPTURE(i);
        CHECK(seq.checkIndex(i).residualZero);
    }
}

TEST_CASE("linear coefficient is a signed staircase monomial") {
    LectureHallSequence seq;
    seq.at(10);
    for (int i = 3; i <= 10; ++i) {
        CAPTURE(i);
        const LaurentPoly& a = seq.linearCoefficient(i);
        REQUIRE(a.termCount() == 1);
        const auto [c, m] = a.leadingTerm();
        CHECK((c == 1 || c == -1));
        CHECK(m == LectureHallSequence::targetMonomial(i - 2));
    }
}

TEST_CASE("term counts are frozen and strictly increasing") {
    // Recorded at first build; every entry so far has 2^(i-2) terms.
    const std::size_t expected[] = {1, 1, 2, 4, 8, 16, 32, 64, 128, 256};
    LectureHallSequence seq;
    std::size_t prev = 0;
    for (int i = 1; i <= 10; ++i) {
        CAPTURE(i);
        const std::size_t count = seq.at(i).termCount();
        CHECK(count == expected[i - 1]);
        if (i >= 3) CHECK(count > prev);
        prev = count;
    }
}

TEST_CASE("invalid index") {
    LectureHallSequence seq;
    CHECK_THROWS_AS(seq.at(0), lh::InvalidIndex);
    CHECK_THROWS_AS(seq.linearCoefficient(1), lh::InvalidIndex);
}
