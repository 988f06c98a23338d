#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "chern/words.hpp"

using namespace chern;

namespace {

std::vector<Letter> letters_of(const std::string& compact) {
    std::vector<Letter> out;
    for (char c : compact)
        out.emplace_back(std::string(1, c));
    return out;
}

CyclicWord word(const std::string& compact) { return CyclicWord(letters_of(compact)); }

CyclicAlphabet3 alphabet(const std::string& three) {
    return CyclicAlphabet3(Letter(std::string(1, three[0])), Letter(std::string(1, three[1])),
                           Letter(std::string(1, three[2])));
}

} // namespace

TEST_CASE("cyclic words compare up to rotation") {
    CHECK(word("abcabc") == word("cabcab"));
    CHECK(word("abcabc") == word("bcabca"));
    CHECK_FALSE(word("abcabc") == word("acbacb"));
    CHECK_FALSE(word("abc") == word("abcabc"));
    CHECK(word("aaa") == word("aaa"));
}

TEST_CASE("canonical start is the least rotation") {
    CHECK(word("bcabbccacb").canonical_start() == 2); // abbccacbbc
    CHECK(word("ba").canonical_start() == 1);
    CHECK(word("aaa").canonical_start() == 0);
    CHECK(word("cabcab").canonical().str() == "abcabc");
    // repetitive content exercises the failure-function path
    CHECK(word("abaabaab").canonical().str() == "aabaabab");

    const CyclicWord w = word("bcabbccacb");
    const auto rot = w.rotated(2);
    CHECK(CyclicWord(rot).str() == "abbccacbbc");
    CHECK(w.rotated(12) == w.rotated(2)); // start taken mod length
}

TEST_CASE("rendering is compact for single characters only") {
    CHECK(word("abc").str() == "abc");
    const CyclicWord named({Letter("v1"), Letter("v2"), Letter("v1"), Letter("v2")});
    CHECK(named.str() == "v1 v2 v1 v2");
}

TEST_CASE("empty words are rejected") {
    CHECK_THROWS_AS(CyclicWord(std::vector<Letter>{}), EmptyWordError);
    CHECK_THROWS_AS(delete_letter(word("aaa"), Letter("a")), EmptyWordError);
}

TEST_CASE("deletion keeps the cyclic order of the rest") {
    CHECK(delete_letter(word("bcabbccacb"), Letter("a")).str() == "bcbbcccb");
    CHECK(delete_letter(word("bcabbccacb"), Letter("b")).str() == "caccac");
    CHECK(delete_letter(word("bcabbccacb"), Letter("c")).str() == "babbab");
    CHECK(delete_letter(word("abc"), Letter("x")) == word("abc"));
}

TEST_CASE("alphabets are distinct letters up to cyclic rotation") {
    CHECK_THROWS_AS(alphabet("aab"), std::invalid_argument);
    CHECK(alphabet("abc").same_cyclic_order(alphabet("bca")));
    CHECK(alphabet("abc").same_cyclic_order(alphabet("cab")));
    CHECK_FALSE(alphabet("abc").same_cyclic_order(alphabet("acb")));
    CHECK_FALSE(alphabet("abc").same_cyclic_order(alphabet("abd")));
    CHECK(alphabet("abc").reversed().same_cyclic_order(alphabet("acb")));
    CHECK(alphabet("abc").index_of(Letter("b")) == 1);
    CHECK_FALSE(alphabet("abc").index_of(Letter("z")).has_value());
}

TEST_CASE("letter counting rejects foreign letters") {
    const LetterCounts counts = count_letters(word("bcabbccacb"), alphabet("abc"));
    CHECK(counts.k0 == 2);
    CHECK(counts.k1 == 4);
    CHECK(counts.k2 == 4);
    CHECK(counts.total() == 10);
    CHECK_THROWS_AS(count_letters(word("abcd"), alphabet("abc")), ForeignLetterError);
}

TEST_CASE("ind on two-letter linear words") {
    const auto lin = [](const std::string& s) { return letters_of(s); };
    CHECK(ind(lin("xy"), Letter("x"), Letter("y")) == Rational(-1, 2));
    CHECK(ind(lin("yx"), Letter("x"), Letter("y")) == Rational(1, 2));
    CHECK(ind(lin("xyxy"), Letter("x"), Letter("y")) == Rational(-1, 4));
    // ind is not rotation invariant: the same cycle linearized elsewhere
    CHECK(ind(lin("yxyx"), Letter("x"), Letter("y")) == Rational(1, 4));
    CHECK_THROWS_AS(ind(lin("xx"), Letter("x"), Letter("y")), MissingLetterError);
    CHECK_THROWS_AS(ind(lin("xyz"), Letter("x"), Letter("y")), ForeignLetterError);
    CHECK_THROWS_AS(ind(lin("xy"), Letter("x"), Letter("x")), std::invalid_argument);
}

TEST_CASE("the three pair statistics of the reference word") {
    // deletions of bcabbccacb, in the linearization as written
    const CyclicWord w = word("bcabbccacb");
    const auto d0 = delete_letter(w, Letter("a")).linearization(); // bcbbcccb
    const auto d1 = delete_letter(w, Letter("b")).linearization(); // caccac
    const auto d2 = delete_letter(w, Letter("c")).linearization(); // babbab
    CHECK(ind(d0, Letter("b"), Letter("c")) == Rational(-1, 8));
    CHECK(ind(d1, Letter("a"), Letter("c")) == Rational(0));
    CHECK(ind(d2, Letter("a"), Letter("b")) == Rational(0));
}

TEST_CASE("curvature of the sample words") {
    CHECK(curv_mnev(word("bcabbccacb"), alphabet("abc")) == Rational(-1, 8));
    CHECK(curv_mnev(word("ddbbccdbc"), alphabet("cbd")) == Rational(5, 18));
    CHECK(curv_mnev(word("papaspaspsa"), alphabet("aps")) == Rational(1, 24));
    CHECK(curv_triangles(word("bcabbccacb"), alphabet("abc")) == Rational(-1, 8));
    CHECK(curv_triangles(word("ddbbccdbc"), alphabet("cbd")) == Rational(5, 18));
    CHECK(curv_triangles(word("papaspaspsa"), alphabet("aps")) == Rational(1, 24));
    CHECK(curv_triangles(word("abcabc"), alphabet("abc")) == Rational(-1, 4));
    CHECK(curv_triangles(word("abc"), alphabet("abc")) == Rational(-1, 2));
}

TEST_CASE("curvature does not depend on the linearization start") {
    const CyclicWord w = word("bcabbccacb");
    const CyclicAlphabet3 abc = alphabet("abc");
    for (std::size_t start = 0; start < w.length(); ++start) {
        CHECK(curv_mnev(w, abc, start) == Rational(-1, 8));
        CHECK(curv_triangles(CyclicWord(w.rotated(start)), abc) == Rational(-1, 8));
    }
}

TEST_CASE("curvature flips sign with the alphabet orientation") {
    CHECK(curv_triangles(word("bcabbccacb"), alphabet("acb")) == Rational(1, 8));
    CHECK(curv_mnev(word("ddbbccdbc"), alphabet("cdb")) == Rational(-5, 18));
}

TEST_CASE("triangle counts, fast against brute force") {
    struct Case {
        std::string w, abc;
        TriangleCount expected;
    };
    const Case cases[] = {
        {"bcabbccacb", "abc", {20, 12}},
        {"abcabc", "abc", {6, 2}},
        {"abc", "abc", {1, 0}},
        {"ddbbccdbc", "cbd", {6, 21}},
        {"papaspaspsa", "aps", {22, 26}},
    };
    for (const Case& c : cases) {
        const TriangleCount fast = count_triangles(word(c.w), alphabet(c.abc));
        CHECK(fast == c.expected);
        CHECK(fast == count_triangles_brute(word(c.w), alphabet(c.abc)));
        const LetterCounts counts = count_letters(word(c.w), alphabet(c.abc));
        CHECK(fast.total() == counts.k0 * counts.k1 * counts.k2);
    }
}

TEST_CASE("curvature requires all three letters") {
    CHECK_THROWS_AS(curv_triangles(word("abab"), alphabet("abc")), MissingLetterError);
    CHECK_THROWS_AS(curv_mnev(word("abab"), alphabet("abc")), MissingLetterError);
    CHECK_THROWS_AS(count_triangles(word("aa"), alphabet("abc")), MissingLetterError);
}

TEST_CASE("cyclic sign of integer triples") {
    CHECK(cyclic_sign(0, 1, 2) == 1);
    CHECK(cyclic_sign(1, 2, 0) == 1);
    CHECK(cyclic_sign(2, 0, 1) == 1);
    CHECK(cyclic_sign(2, 1, 0) == -1);
    CHECK(cyclic_sign(0, 2, 1) == -1);
    CHECK(cyclic_sign(1, 3, 5) == 1);
    CHECK(cyclic_sign(3, 1, 5) == -1);
}

TEST_CASE("reversal reverses the cycle") {
    CHECK(word("abc").reversed() == word("acb"));
    CHECK(word("bcabbccacb").reversed() == word("bcaccbbacb"));
}
