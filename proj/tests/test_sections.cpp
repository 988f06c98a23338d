#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "chern/sections.hpp"
#include "chern/words.hpp"

using namespace chern;

namespace {

CyclicWord word(const std::string& compact) {
    std::vector<Letter> out;
    for (char c : compact)
        out.emplace_back(std::string(1, c));
    return CyclicWord(std::move(out));
}

CyclicAlphabet3 alphabet(const std::string& three) {
    return CyclicAlphabet3(Letter(std::string(1, three[0])), Letter(std::string(1, three[1])),
                           Letter(std::string(1, three[2])));
}

constexpr ArcChoice CW = ArcChoice::Clockwise;
constexpr ArcChoice CCW = ArcChoice::Counterclockwise;

} // namespace

TEST_CASE("winding of the eight arc choices, slots in order a, c, b") {
    // three slots on a 3-slot circle: a at 0, c at 1, b at 2
    const FiberCircle circle{3};
    const auto winding = [&](ArcChoice ab, ArcChoice bc, ArcChoice ca) {
        return winding_index(TriangleSection{0, 2, 1, {ab, bc, ca}}, circle);
    };
    CHECK(winding(CW, CW, CW) == -1);
    CHECK(winding(CW, CW, CCW) == 0);
    CHECK(winding(CW, CCW, CCW) == 1);
    CHECK(winding(CW, CCW, CW) == 0);
    CHECK(winding(CCW, CCW, CCW) == 2);
    CHECK(winding(CCW, CCW, CW) == 1);
    CHECK(winding(CCW, CW, CCW) == 1);
    CHECK(winding(CCW, CW, CW) == 0);
}

TEST_CASE("averages depend only on the cyclic order of the slots") {
    const FiberCircle m3{3};
    CHECK(average_index(0, 2, 1, m3) == Rational(1, 2));  // order a, c, b
    CHECK(average_index(0, 1, 2, m3) == Rational(-1, 2)); // order a, b, c
    const FiberCircle m10{10};
    CHECK(average_index(0, 7, 4, m10) == Rational(1, 2));
    CHECK(average_index(0, 4, 7, m10) == Rational(-1, 2));
    CHECK(average_index(5, 2, 9, m10) == Rational(1, 2)); // a=5, c=9, b=2
}

TEST_CASE("degenerate sections are rejected") {
    const FiberCircle circle{6};
    CHECK_THROWS_AS(winding_index(TriangleSection{1, 1, 3, {CW, CW, CW}}, circle),
                    DegenerateTripleError);
    CHECK_THROWS_AS(winding_index(TriangleSection{0, 1, 2, {CW, CW, CW}}, FiberCircle{2}),
                    std::invalid_argument);
}

TEST_CASE("section averaging reproduces the triangle-count curvature") {
    const char* cases[] = {"abc", "abcabc", "bcabbccacb", "aabbcc", "acbacb", "aabcbc"};
    for (const char* w : cases)
        CHECK(curv_by_sections(word(w), alphabet("abc")) == curv_triangles(word(w), alphabet("abc")));
    CHECK(curv_by_sections(word("bcabbccacb"), alphabet("abc")) == Rational(-1, 8));
    CHECK(curv_by_sections(word("ddbbccdbc"), alphabet("cbd")) == Rational(5, 18));
    CHECK(curv_by_sections(word("papaspaspsa"), alphabet("aps")) == Rational(1, 24));
}

TEST_CASE("section averaging needs all three letters") {
    CHECK_THROWS_AS(curv_by_sections(word("abab"), alphabet("abc")), MissingLetterError);
    CHECK_THROWS_AS(curv_by_sections(word("abcx"), alphabet("abc")), ForeignLetterError);
}
