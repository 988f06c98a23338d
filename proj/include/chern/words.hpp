/**
 * Cyclic words over vertex alphabets and the three-letter curvature
 * invariant of simplicial circle bundles.
 *
 * The curvature of a cyclic word in a cyclically ordered three-letter
 * alphabet is computed three independent ways in this library:
 *
 *   curv_mnev       per-pair index statistics on a linearization,
 *                   Curv(w) = Ind(d0 w) - Ind(d1 w) + Ind(d2 w)
 *   curv_triangles  -(t+ - t-) / (2 (t+ + t-)) from oriented/disoriented
 *                   triangle counts (cyclically invariant by its form)
 *   curv_by_sections (sections.hpp) averaging winding numbers of
 *                   piecewise-arc sections over the simplex boundary
 *
 * All three agree on every word; the test suites assert it.
 */
#ifndef CHERN_WORDS_HPP
#define CHERN_WORDS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chern/errors.hpp"
#include "chern/rational.hpp"

namespace chern {

/// Vertex name used as a character of a word alphabet.
/// Letters compare by name; multi-character names are first-class.
class Letter {
public:
    explicit Letter(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    std::string name_;
};

/// Ordered triple of distinct letters considered up to cyclic rotation.
/// (a,b,c), (b,c,a) and (c,a,b) denote the same cyclic order; swapping
/// two letters denotes the opposite one.
class CyclicAlphabet3 {
public:
    CyclicAlphabet3(Letter l0, Letter l1, Letter l2);

    const Letter& letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::array<Letter, 3>& letters() const { return letters_; }

    /// Position of `l` in the triple, or nullopt for a foreign letter.
    std::optional<int> index_of(const Letter& l) const;

    bool contains(const Letter& l) const { return index_of(l).has_value(); }

    /// True when `other` uses the same letters in the same cyclic order.
    bool same_cyclic_order(const CyclicAlphabet3& other) const;

    /// The opposite cyclic order (last two letters swapped).
    CyclicAlphabet3 reversed() const;

private:
    std::array<Letter, 3> letters_;
};

/// Finite letter sequence considered up to rotation. One linearization is
/// stored as given; equality and hashing go through the lexicographically
/// minimal rotation, so two words compare equal iff they match as cycles.
class CyclicWord {
public:
    explicit CyclicWord(std::vector<Letter> letters);

    std::size_t length() const { return letters_.size(); }

    /// The stored linearization.
    const std::vector<Letter>& linearization() const { return letters_; }

    /// Linearization starting at slot `start` (taken mod length).
    std::vector<Letter> rotated(std::size_t start) const;

    /// Index of the lexicographically minimal rotation (Booth's algorithm).
    std::size_t canonical_start() const;

    /// The word re-linearized at its canonical rotation.
    CyclicWord canonical() const { return CyclicWord(rotated(canonical_start())); }

    CyclicWord reversed() const;

    std::int64_t count(const Letter& l) const;
    bool contains(const Letter& l) const { return count(l) > 0; }

    /// Cyclic equality: some rotation of one linearization equals the other.
    friend bool operator==(const CyclicWord& a, const CyclicWord& b);

    /// Total order on canonical forms (for use as a map key).
    friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

    /// Space-free rendering when all names are single characters,
    /// otherwise names joined by single spaces.
    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/// Occurrence counts of the three alphabet letters in a word.
struct LetterCounts {
    std::int64_t k0 = 0;
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;

    std::int64_t total() const;
};

/// Oriented / disoriented triangle counts of a word.
/// t_plus + t_minus = k0 * k1 * k2 always holds.
struct TriangleCount {
    std::int64_t t_plus = 0;
    std::int64_t t_minus = 0;

    std::int64_t total() const;

    friend bool operator==(const TriangleCount&, const TriangleCount&) = default;
};

/// Removes every occurrence of `l` from `w`, preserving the cyclic order
/// of the remaining letters. Deleting an absent letter is the identity.
/// Raises EmptyWordError when nothing remains.
CyclicWord delete_letter(const CyclicWord& w, const Letter& l);

/// Counts occurrences of the alphabet letters in `w`, rejecting foreign
/// letters. Raising on zero counts is left to the callers (curvature
/// needs all three letters, deletion chains do not).
LetterCounts count_letters(const CyclicWord& w, const CyclicAlphabet3& alphabet);

/// Signed pair statistic of a two-letter linear word:
///
///   Ind(w) = (#{(i,j) in A x B | i > j} - #{(i,j) in A x B | i < j}) / (2 k0 k1)
///
/// where A and B are the occurrence positions of `x` and `y`. The result
/// depends on the linearization, not only on the cyclic word; |Ind| <= 1/2.
/// Letters other than x, y raise ForeignLetterError; a missing x or y
/// raises MissingLetterError.
Rational ind(std::span<const Letter> linear_word, const Letter& x, const Letter& y);

/// Curvature via per-pair index statistics on one linearization:
/// Curv(w) = Ind(d0 w) - Ind(d1 w) + Ind(d2 w), where di deletes the i-th
/// alphabet letter and the remaining pair keeps the alphabet's order.
/// The value does not depend on linearization_start.
Rational curv_mnev(const CyclicWord& w, const CyclicAlphabet3& alphabet,
                   std::size_t linearization_start = 0);

/// Oriented/disoriented triangle counts in O(m) via prefix counting.
/// A triangle is a choice of one occurrence of each alphabet letter; it is
/// oriented when the cyclic order of the three positions around the word
/// agrees with the alphabet's cyclic order.
TriangleCount count_triangles(const CyclicWord& w, const CyclicAlphabet3& alphabet);

/// Reference implementation of count_triangles by enumerating all
/// k0*k1*k2 triples. O(k0*k1*k2); kept as the oracle for the fast path.
TriangleCount count_triangles_brute(const CyclicWord& w, const CyclicAlphabet3& alphabet);

/// Curvature from triangle counts: -(t+ - t-) / (2 (t+ + t-)).
Rational curv_triangles(const CyclicWord& w, const CyclicAlphabet3& alphabet);

/// Orientation of a triple of distinct integers on the line:
/// +1 when the cyclic order of (i, j, k) is positive (i<j<k up to
/// rotation), -1 otherwise. Computed as sign(k-j) - sign(k-i) + sign(j-i),
/// which collapses to +-1 for distinct arguments.
int cyclic_sign(std::int64_t i, std::int64_t j, std::int64_t k);

} // namespace chern

#endif // CHERN_WORDS_HPP
