/**
 * Shellings of simplicial complexes and the curvature cochain.
 *
 * A shelling assigns to every simplex a cyclic word over its vertices,
 * with each vertex appearing at least twice, compatibly under letter
 * deletion when passing to faces. Shellings encode simplicial circle
 * bundles over the complex; the curvature of the word of an oriented
 * 2-simplex defines a closed rational 2-cochain whose class is the first
 * Chern class of the bundle. Summing it over a consistently oriented
 * closed surface yields the integer Chern number.
 */
#ifndef CHERN_SHELLING_HPP
#define CHERN_SHELLING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chern/complex.hpp"
#include "chern/rational.hpp"
#include "chern/words.hpp"

namespace chern {

/// A simplicial complex together with a cyclic word per simplex.
class Shelling {
public:
    explicit Shelling(SimplicialComplex complex) : complex_(std::move(complex)) {}

    const SimplicialComplex& complex() const { return complex_; }

    /// Assigns the word of a simplex already present in the complex.
    void set_word(const VertexSet& simplex, CyclicWord word);

    /// Word of a simplex; raises UnknownSimplexError for a simplex outside
    /// the complex and InvalidShellingError when no word is assigned.
    const CyclicWord& word_of(const VertexSet& simplex) const;

    /// Word of a simplex, or nullptr when none is assigned.
    const CyclicWord* find_word(const VertexSet& simplex) const;

    const std::map<VertexSet, CyclicWord>& words() const { return words_; }

private:
    SimplicialComplex complex_;
    std::map<VertexSet, CyclicWord> words_;
};

/// One broken shelling rule; violations are data, not exceptions.
struct Violation {
    enum class Kind {
        MissingWord,          // a simplex has no word assigned
        ForeignLetter,        // a word uses a letter outside its simplex
        CountBelowTwo,        // some vertex occurs fewer than two times
        FaceIncompatibility,  // deletion does not reproduce the face word
    };

    Kind kind;
    VertexSet simplex;
    VertexSet face; // only for FaceIncompatibility
    std::string detail;

    std::string str() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    std::string str() const;
};

/// Checks every shelling rule on every simplex and every face pair.
ValidationReport validate_shelling(const Shelling& s);

/// Rational 2-cochain: a curvature value per 2-simplex, evaluated on any
/// orientation with the sign of the permutation relating it to the stored
/// one. Antisymmetric under orientation reversal by construction.
class CurvatureCochain {
public:
    struct Entry {
        OrientedSimplex simplex;
        Rational value;
    };

    void add(OrientedSimplex simplex, Rational value);

    /// Value on an oriented 2-simplex, sign-adjusted to its orientation.
    Rational value(const OrientedSimplex& simplex) const;

    const std::map<VertexSet, Entry>& entries() const { return entries_; }

private:
    std::map<VertexSet, Entry> entries_;
};

/// Curvature of every 2-simplex of a valid shelling. Orientations listed
/// in `orientations` are used as given; every other 2-simplex gets its
/// sorted vertex order. An invalid shelling raises InvalidShellingError.
CurvatureCochain curvature_cochain(const Shelling& s,
                                   const std::vector<OrientedSimplex>& orientations = {});

/// Alternating sum of face curvatures of an oriented 3-simplex, with the
/// i-th face carrying coefficient (-1)^i and the face words obtained by
/// deleting the omitted vertex's letter. Zero for every shelling.
Rational coboundary_on_3simplex(const Shelling& s, const OrientedSimplex& tau);

/// Sum of the curvature cochain over a consistently oriented closed
/// surface. Requires every edge in exactly two triangles, a pure
/// 2-dimensional complex, and orientations inducing opposite directions
/// on every shared edge; otherwise NotClosedOrientedSurfaceError. The
/// result is always an integer.
Rational chern_number(const Shelling& s, const std::vector<OrientedSimplex>& orientations);

/// Shelling of the trivial bundle over `base` with an r-letter fiber:
/// every simplex gets the word (v0 v1 ... vn)^r with its vertices sorted
/// by `vertex_order` (name order when empty). r < 2 raises
/// FiberTooShortError.
Shelling product_shelling(const SimplicialComplex& base, std::int64_t r,
                          const std::vector<Letter>& vertex_order = {});

/// Assembles a shelling from words on some simplices (typically the
/// maximal ones), deriving every missing face word by letter deletion
/// from the first given simplex containing it. Underivable words are
/// left missing for the validator to flag.
Shelling shelling_from_words(SimplicialComplex complex,
                             const std::map<VertexSet, CyclicWord>& given);

/// Shelling of the full simplex on `vertices` with `word` on top and all
/// face words derived by deletion.
Shelling single_simplex_shelling(const std::vector<Letter>& vertices, const CyclicWord& word);

/// Combinatorial description of a simplicial circle bundle: a simplicial
/// map from the total complex onto the base, with the preimage of every
/// base vertex cyclically ordered along the positive fiber direction.
/// The successor relation of each fiber_orders list (including the wrap
/// from last to first) is what orients the fiber.
struct FibrationDescription {
    SimplicialComplex total;
    SimplicialComplex base;
    std::map<Letter, Letter> projection;
    std::map<Letter, std::vector<Letter>> fiber_orders;
};

/// Reads the shelling off a simplicial fibration: over each base simplex
/// the next-dimension preimage simplices are chained into a cycle along
/// shared faces, oriented by the fiber order, and each contributes the
/// letter of the base vertex whose preimage it doubles. Inconsistent
/// data raises MalformedFibrationError.
Shelling extract_shelling(const FibrationDescription& f);

} // namespace chern

#endif // CHERN_SHELLING_HPP
