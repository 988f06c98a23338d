#include "chern/sections.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace chern {

namespace {

std::int64_t arc_length(std::int64_t from, std::int64_t to, ArcChoice arc, std::int64_t m) {
    std::int64_t forward = (to - from) % m;
    if (forward < 0)
        forward += m;
    // endpoints are distinct, so forward lies strictly between 0 and m
    return arc == ArcChoice::Counterclockwise ? forward : forward - m;
}

} // namespace

std::int64_t winding_index(const TriangleSection& section, const FiberCircle& circle) {
    const std::int64_t m = circle.slots;
    if (m < 3)
        throw std::invalid_argument("fiber circle needs at least 3 slots for three marked points");
    if (section.pos_a == section.pos_b || section.pos_b == section.pos_c ||
        section.pos_a == section.pos_c)
        throw DegenerateTripleError("section slots must be pairwise distinct");
    const std::int64_t total = arc_length(section.pos_a, section.pos_b, section.arcs[0], m) +
                               arc_length(section.pos_b, section.pos_c, section.arcs[1], m) +
                               arc_length(section.pos_c, section.pos_a, section.arcs[2], m);
    assert(total % m == 0);
    return total / m;
}

Rational average_index(std::int64_t pos_a, std::int64_t pos_b, std::int64_t pos_c,
                       const FiberCircle& circle) {
    std::int64_t sum = 0;
    TriangleSection section{pos_a, pos_b, pos_c, {}};
    for (int mask = 0; mask < 8; ++mask) {
        for (int side = 0; side < 3; ++side)
            section.arcs[static_cast<std::size_t>(side)] =
                (mask >> side) & 1 ? ArcChoice::Counterclockwise : ArcChoice::Clockwise;
        sum += winding_index(section, circle);
    }
    return Rational(sum, 8);
}

Rational curv_by_sections(const CyclicWord& w, const CyclicAlphabet3& alphabet) {
    const LetterCounts counts = count_letters(w, alphabet);
    if (counts.k0 == 0 || counts.k1 == 0 || counts.k2 == 0)
        throw MissingLetterError("curvature needs all three alphabet letters present");

    // slots are the occurrence positions in the stored linearization; the
    // value only depends on their cyclic order, so the choice of
    // linearization does not matter
    std::vector<std::int64_t> occ[3];
    const auto& lin = w.linearization();
    for (std::size_t pos = 0; pos < lin.size(); ++pos)
        occ[static_cast<std::size_t>(*alphabet.index_of(lin[pos]))].push_back(
            static_cast<std::int64_t>(pos));

    const FiberCircle circle{static_cast<std::int64_t>(w.length())};
    Rational sum;
    for (const std::int64_t a : occ[0])
        for (const std::int64_t b : occ[1])
            for (const std::int64_t c : occ[2])
                sum += average_index(a, b, c, circle);
    const std::int64_t triangles =
        detail::checked_mul(detail::checked_mul(counts.k0, counts.k1), counts.k2);
    return sum / Rational(triangles);
}

} // namespace chern
