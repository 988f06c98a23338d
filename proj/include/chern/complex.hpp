/**
 * Abstract simplicial complexes over named vertices, and oriented
 * simplices as ordered vertex tuples up to even permutation.
 */
#ifndef CHERN_COMPLEX_HPP
#define CHERN_COMPLEX_HPP

#include <set>
#include <vector>

#include "chern/words.hpp"

namespace chern {

/// Canonical simplex key: its vertices sorted ascending, no duplicates.
using VertexSet = std::vector<Letter>;

/// Sorts and deduplicates a vertex list into a canonical key.
VertexSet make_vertex_set(std::vector<Letter> vertices);

/// Finite abstract simplicial complex: a family of vertex sets closed
/// under taking faces. Every vertex of a listed simplex is itself a
/// 0-simplex of the complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Inserts a simplex together with all of its faces.
    void add_simplex(const std::vector<Letter>& vertices);

    bool contains(const VertexSet& simplex) const { return simplices_.count(simplex) > 0; }

    /// All simplices in canonical order (by dimension within the set order).
    const std::set<VertexSet>& simplices() const { return simplices_; }

    std::vector<VertexSet> simplices_of_dim(int dim) const;

    /// Simplices not contained in any strictly larger simplex.
    std::vector<VertexSet> maximal_simplices() const;

    std::vector<Letter> vertices() const;

    /// Largest simplex dimension, or -1 for the empty complex.
    int dim() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::set<VertexSet> simplices_;
};

/// Ordered vertex tuple; two tuples denote the same oriented simplex iff
/// they differ by an even permutation.
class OrientedSimplex {
public:
    explicit OrientedSimplex(std::vector<Letter> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }

    const std::vector<Letter>& vertices() const { return vertices_; }

    /// The underlying unoriented simplex.
    VertexSet support() const;

    /// +1 when this ordering is an even permutation of the sorted one.
    int parity_vs_sorted() const;

    /// Sign relating this orientation to `other` on the same support:
    /// +1 for equal orientations, -1 for opposite.
    int relative_sign(const OrientedSimplex& other) const;

    /// The i-th boundary face: the tuple with vertex i removed. The
    /// conventional coefficient (-1)^i is left to the caller.
    OrientedSimplex face(std::size_t i) const;

    /// Opposite orientation (first two vertices swapped).
    OrientedSimplex reversed() const;

    std::string str() const;

private:
    std::vector<Letter> vertices_;
};

} // namespace chern

#endif // CHERN_COMPLEX_HPP
