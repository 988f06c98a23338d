/**
 * Section-averaging model of curvature.
 *
 * The fiber over a 2-simplex is modelled as an oriented circle with one
 * slot per letter of the simplex's word. A section over the boundary of
 * the simplex picks one slot per vertex and connects consecutive picks by
 * a clockwise or counterclockwise arc; the winding of the resulting loop
 * is its index. Averaging the index over every slot choice and every arc
 * choice reproduces the curvature of the word exactly.
 */
#ifndef CHERN_SECTIONS_HPP
#define CHERN_SECTIONS_HPP

#include <array>
#include <cstdint>

#include "chern/rational.hpp"
#include "chern/words.hpp"

namespace chern {

/// Oriented circle with slots 0..m-1; counterclockwise (increasing slot,
/// wrapping) is the positive fiber direction.
struct FiberCircle {
    std::int64_t slots = 0;
};

/// One of the two arcs connecting consecutive section values.
enum class ArcChoice : std::uint8_t {
    Clockwise,
    Counterclockwise,
};

/// A loop over the boundary of a 2-simplex: one chosen slot per vertex
/// and an arc choice for each of the sides A->B, B->C, C->A.
struct TriangleSection {
    std::int64_t pos_a = 0;
    std::int64_t pos_b = 0;
    std::int64_t pos_c = 0;
    std::array<ArcChoice, 3> arcs{};
};

/// Rotation number of the loop A->B->C->A. Each counterclockwise arc from
/// p to q contributes ((q-p) mod m) taken in (0, m); a clockwise arc
/// contributes that minus m. The contributions sum to a multiple of m.
/// Coincident slots raise DegenerateTripleError.
std::int64_t winding_index(const TriangleSection& section, const FiberCircle& circle);

/// Mean of winding_index over the 8 arc choices for fixed slots. Equals
/// +1/2 when the slots lie in cyclic order A, C, B on the circle and -1/2
/// when they lie in order A, B, C.
Rational average_index(std::int64_t pos_a, std::int64_t pos_b, std::int64_t pos_c,
                       const FiberCircle& circle);

/// Curvature as the double average of winding indices over all
/// k0*k1*k2 slot choices and all 8 arc choices. Exact, O(k0*k1*k2);
/// intended as an independent oracle rather than a fast path.
Rational curv_by_sections(const CyclicWord& w, const CyclicAlphabet3& alphabet);

} // namespace chern

#endif // CHERN_SECTIONS_HPP
