#include "chern/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

VertexSet make_vertex_set(std::vector<Letter> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

void SimplicialComplex::add_simplex(const std::vector<Letter>& vertices) {
    const VertexSet key = make_vertex_set(vertices);
    if (key.empty())
        throw std::invalid_argument("cannot add an empty simplex");
    if (key.size() != vertices.size())
        throw std::invalid_argument("simplex vertices must be distinct");
    if (simplices_.count(key))
        return;
    // enumerate the nonempty subsets; simplices stay small (dim <= 3)
    const std::size_t n = key.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        VertexSet face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i))
                face.push_back(key[i]);
        simplices_.insert(std::move(face));
    }
}

std::vector<VertexSet> SimplicialComplex::simplices_of_dim(int dim) const {
    std::vector<VertexSet> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1)
            out.push_back(s);
    return out;
}

std::vector<VertexSet> SimplicialComplex::maximal_simplices() const {
    std::vector<VertexSet> out;
    for (const auto& s : simplices_) {
        const bool dominated = std::any_of(simplices_.begin(), simplices_.end(), [&](const VertexSet& t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

std::vector<Letter> SimplicialComplex::vertices() const {
    std::vector<Letter> out;
    for (const auto& s : simplices_)
        if (s.size() == 1)
            out.push_back(s.front());
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& s : simplices_)
        d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

OrientedSimplex::OrientedSimplex(std::vector<Letter> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw std::invalid_argument("an oriented simplex needs at least one vertex");
    VertexSet sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("oriented simplex vertices must be distinct");
}

VertexSet OrientedSimplex::support() const {
    VertexSet sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

int OrientedSimplex::parity_vs_sorted() const {
    // selection-sort swap count; tuples have at most a handful of vertices
    std::vector<Letter> work = vertices_;
    int sign = 1;
    for (std::size_t i = 0; i + 1 < work.size(); ++i) {
        const auto min_it = std::min_element(work.begin() + static_cast<std::ptrdiff_t>(i), work.end());
        if (min_it != work.begin() + static_cast<std::ptrdiff_t>(i)) {
            std::iter_swap(work.begin() + static_cast<std::ptrdiff_t>(i), min_it);
            sign = -sign;
        }
    }
    return sign;
}

int OrientedSimplex::relative_sign(const OrientedSimplex& other) const {
    if (support() != other.support())
        throw std::invalid_argument("orientations compare only on a common support");
    return parity_vs_sorted() * other.parity_vs_sorted();
}

OrientedSimplex OrientedSimplex::face(std::size_t i) const {
    if (i >= vertices_.size())
        throw std::out_of_range("face index out of range");
    std::vector<Letter> rest;
    rest.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i)
            rest.push_back(vertices_[j]);
    return OrientedSimplex(std::move(rest));
}

OrientedSimplex OrientedSimplex::reversed() const {
    if (vertices_.size() < 2)
        throw std::invalid_argument("a point has no opposite orientation");
    std::vector<Letter> swapped = vertices_;
    std::swap(swapped[0], swapped[1]);
    return OrientedSimplex(std::move(swapped));
}

std::string OrientedSimplex::str() const {
    std::string out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += vertices_[i].name();
    }
    return out;
}

} // namespace chern
