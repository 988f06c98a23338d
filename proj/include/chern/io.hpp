/**
 * JSON file formats for shellings, bare complexes and fibrations.
 *
 * Shelling files:
 *   {
 *     "vertices":  ["a", "b", ...],
 *     "simplices": [ { "simplex": ["a","b","c"], "word": ["a","b","c","a","b","c"] }, ... ]
 *   }
 * Only maximal simplices need to be listed; face words are derived by
 * letter deletion, and listed faces are cross-checked by the validator.
 * The vertex order of a "simplex" entry is its orientation for dim >= 2.
 * A "word" may also be one compact string when every vertex name is a
 * single character.
 *
 * Complex files use the same shape with "word" optional and ignored.
 *
 * Fibration files:
 *   {
 *     "total_vertices":  ["a0", "a1", ...],
 *     "total_simplices": [ ["a0","a1","b0"], ... ],
 *     "projection":      { "a0": "a", ... },
 *     "fiber_orders":    { "a": ["a0","a1"], ... }
 *   }
 *
 * Schema violations raise FormatError; semantic problems surface later
 * through the shelling/fibration operations.
 */
#ifndef CHERN_IO_HPP
#define CHERN_IO_HPP

#include <string>
#include <vector>

#include "chern/complex.hpp"
#include "chern/shelling.hpp"

namespace chern {

/// A shelling file's content: the assembled shelling plus the oriented
/// simplex tuples exactly as listed (file order), for orientation use.
struct ShellingFile {
    Shelling shelling;
    std::vector<OrientedSimplex> listed;

    /// The listed tuples of dimension 2, i.e. the file's triangle
    /// orientations, ready for curvature_cochain / chern_number.
    std::vector<OrientedSimplex> listed_triangles() const;
};

/// A complex file's content: the complex plus the listed tuples.
struct ComplexFile {
    SimplicialComplex complex;
    std::vector<OrientedSimplex> listed;
};

ShellingFile parse_shelling(const std::string& text);
ComplexFile parse_complex(const std::string& text);
FibrationDescription parse_fibration(const std::string& text);

ShellingFile read_shelling_file(const std::string& path);
ComplexFile read_complex_file(const std::string& path);
FibrationDescription read_fibration_file(const std::string& path);

/// Renders the maximal simplices of `s` with their words. Tuples listed
/// in `orientations` are written in that vertex order; all other records
/// use sorted order. One record per maximal simplex, deterministic.
std::string render_shelling(const Shelling& s,
                            const std::vector<OrientedSimplex>& orientations = {});

void write_shelling_file(const std::string& path, const Shelling& s,
                         const std::vector<OrientedSimplex>& orientations = {});

} // namespace chern

#endif // CHERN_IO_HPP
