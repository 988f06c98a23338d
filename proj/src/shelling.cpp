#include "chern/shelling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chern {

namespace {

std::string name_list(const VertexSet& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += vs[i].name();
    }
    return out + "}";
}

} // namespace

void Shelling::set_word(const VertexSet& simplex, CyclicWord word) {
    if (!complex_.contains(simplex))
        throw UnknownSimplexError("simplex " + name_list(simplex) + " is not in the complex");
    words_.insert_or_assign(simplex, std::move(word));
}

const CyclicWord& Shelling::word_of(const VertexSet& simplex) const {
    if (!complex_.contains(simplex))
        throw UnknownSimplexError("simplex " + name_list(simplex) + " is not in the complex");
    const auto it = words_.find(simplex);
    if (it == words_.end())
        throw InvalidShellingError("simplex " + name_list(simplex) + " has no word assigned");
    return it->second;
}

const CyclicWord* Shelling::find_word(const VertexSet& simplex) const {
    const auto it = words_.find(simplex);
    return it == words_.end() ? nullptr : &it->second;
}

std::string Violation::str() const {
    switch (kind) {
    case Kind::MissingWord:
        return "missing-word: simplex " + name_list(simplex);
    case Kind::ForeignLetter:
        return "foreign-letter: simplex " + name_list(simplex) + ": " + detail;
    case Kind::CountBelowTwo:
        return "count-below-two: simplex " + name_list(simplex) + ": " + detail;
    case Kind::FaceIncompatibility:
        return "face-incompatibility: simplex " + name_list(simplex) + " vs face " +
               name_list(face) + ": " + detail;
    }
    return "unknown violation";
}

std::string ValidationReport::str() const {
    if (pass())
        return "PASS";
    std::ostringstream os;
    os << "FAIL: " << violations.size() << " violation(s)";
    for (const auto& v : violations)
        os << "\n" << v.str();
    return os.str();
}

namespace {

// Proper nonempty subsets of a sorted vertex set, by bitmask.
std::vector<VertexSet> proper_faces(const VertexSet& simplex) {
    std::vector<VertexSet> out;
    const std::size_t n = simplex.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        VertexSet face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i))
                face.push_back(simplex[i]);
        out.push_back(std::move(face));
    }
    return out;
}

// Deletes from `word` every letter not in `keep`; empty results come back
// as nullopt.
std::optional<CyclicWord> restrict_word(const CyclicWord& word, const VertexSet& keep) {
    std::vector<Letter> kept;
    for (const Letter& l : word.linearization())
        if (std::binary_search(keep.begin(), keep.end(), l))
            kept.push_back(l);
    if (kept.empty())
        return std::nullopt;
    return CyclicWord(std::move(kept));
}

} // namespace

ValidationReport validate_shelling(const Shelling& s) {
    ValidationReport report;
    for (const VertexSet& simplex : s.complex().simplices()) {
        const CyclicWord* word = s.find_word(simplex);
        if (!word) {
            report.violations.push_back({Violation::Kind::MissingWord, simplex, {}, {}});
            continue;
        }
        bool foreign = false;
        for (const Letter& l : word->linearization()) {
            if (!std::binary_search(simplex.begin(), simplex.end(), l)) {
                report.violations.push_back(
                    {Violation::Kind::ForeignLetter, simplex, {},
                     "letter '" + l.name() + "' is not a vertex of the simplex"});
                foreign = true;
                break;
            }
        }
        if (foreign)
            continue;
        for (const Letter& v : simplex) {
            const std::int64_t c = word->count(v);
            if (c < 2)
                report.violations.push_back(
                    {Violation::Kind::CountBelowTwo, simplex, {},
                     "letter '" + v.name() + "' appears " + std::to_string(c) +
                         " time(s) in word " + word->str()});
        }
        // full-face compatibility: every proper face, not only codimension 1
        for (const VertexSet& face : proper_faces(simplex)) {
            const CyclicWord* face_word = s.find_word(face);
            if (!face_word)
                continue; // flagged as missing on its own visit
            const auto restricted = restrict_word(*word, face);
            if (!restricted) {
                report.violations.push_back(
                    {Violation::Kind::FaceIncompatibility, simplex, face,
                     "deleting down to the face empties the word"});
            } else if (!(*restricted == *face_word)) {
                report.violations.push_back(
                    {Violation::Kind::FaceIncompatibility, simplex, face,
                     "deletion gives " + restricted->str() + ", word is " + face_word->str()});
            }
        }
    }
    return report;
}

void CurvatureCochain::add(OrientedSimplex simplex, Rational value) {
    if (simplex.dim() != 2)
        throw std::invalid_argument("curvature cochain entries live on 2-simplices");
    VertexSet key = simplex.support();
    entries_.insert_or_assign(std::move(key), Entry{std::move(simplex), value});
}

Rational CurvatureCochain::value(const OrientedSimplex& simplex) const {
    const auto it = entries_.find(simplex.support());
    if (it == entries_.end())
        throw UnknownSimplexError("no cochain value on simplex {" + simplex.str() + "}");
    const int sign = simplex.relative_sign(it->second.simplex);
    return sign > 0 ? it->second.value : -it->second.value;
}

namespace {

void require_valid(const Shelling& s) {
    const ValidationReport report = validate_shelling(s);
    if (!report.pass())
        throw InvalidShellingError("shelling is invalid: " + report.violations.front().str());
}

CyclicAlphabet3 alphabet_of(const OrientedSimplex& simplex) {
    return CyclicAlphabet3(simplex.vertices()[0], simplex.vertices()[1], simplex.vertices()[2]);
}

} // namespace

CurvatureCochain curvature_cochain(const Shelling& s,
                                   const std::vector<OrientedSimplex>& orientations) {
    require_valid(s);
    std::map<VertexSet, OrientedSimplex> chosen;
    for (const OrientedSimplex& o : orientations) {
        if (o.dim() != 2)
            throw std::invalid_argument("orientation list must contain 2-simplices");
        VertexSet key = o.support();
        if (!s.complex().contains(key))
            throw UnknownSimplexError("oriented simplex {" + o.str() + "} is not in the complex");
        if (!chosen.emplace(std::move(key), o).second)
            throw std::invalid_argument("duplicate orientation for simplex {" + o.str() + "}");
    }
    CurvatureCochain cochain;
    for (const VertexSet& triangle : s.complex().simplices_of_dim(2)) {
        const auto it = chosen.find(triangle);
        const OrientedSimplex oriented = it != chosen.end() ? it->second : OrientedSimplex(triangle);
        cochain.add(oriented, curv_triangles(s.word_of(triangle), alphabet_of(oriented)));
    }
    return cochain;
}

Rational coboundary_on_3simplex(const Shelling& s, const OrientedSimplex& tau) {
    if (tau.dim() != 3)
        throw std::invalid_argument("coboundary is evaluated on oriented 3-simplices");
    if (!s.complex().contains(tau.support()))
        throw UnknownSimplexError("simplex {" + tau.str() + "} is not in the complex");
    require_valid(s);
    const CyclicWord& word = s.word_of(tau.support());
    Rational total;
    for (std::size_t i = 0; i < 4; ++i) {
        const OrientedSimplex face = tau.face(i);
        const CyclicWord face_word = delete_letter(word, tau.vertices()[i]);
        const Rational term = curv_triangles(face_word, alphabet_of(face));
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

namespace {

// Directed edge as induced on the boundary of an oriented triangle.
using DirectedEdge = std::pair<Letter, Letter>;

void check_closed_oriented_surface(const SimplicialComplex& complex,
                                   const std::map<VertexSet, OrientedSimplex>& orientation_of) {
    for (const VertexSet& maximal : complex.maximal_simplices())
        if (maximal.size() != 3)
            throw NotClosedOrientedSurfaceError("complex is not pure 2-dimensional: maximal simplex " +
                                                name_list(maximal));
    std::map<VertexSet, std::vector<DirectedEdge>> induced;
    for (const VertexSet& triangle : complex.simplices_of_dim(2)) {
        const auto it = orientation_of.find(triangle);
        if (it == orientation_of.end())
            throw NotClosedOrientedSurfaceError("no orientation given for triangle " +
                                                name_list(triangle));
        const auto& v = it->second.vertices();
        // boundary of [x,y,z] is the directed cycle x->y->z->x
        for (int i = 0; i < 3; ++i) {
            const Letter& from = v[static_cast<std::size_t>(i)];
            const Letter& to = v[static_cast<std::size_t>((i + 1) % 3)];
            induced[make_vertex_set({from, to})].push_back({from, to});
        }
    }
    for (const VertexSet& edge : complex.simplices_of_dim(1)) {
        const auto it = induced.find(edge);
        const std::size_t uses = it == induced.end() ? 0 : it->second.size();
        if (uses != 2)
            throw NotClosedOrientedSurfaceError("edge " + name_list(edge) + " lies in " +
                                                std::to_string(uses) + " triangle(s), expected 2");
        const DirectedEdge& a = it->second[0];
        const DirectedEdge& b = it->second[1];
        if (!(a.first == b.second && a.second == b.first))
            throw NotClosedOrientedSurfaceError(
                "edge " + name_list(edge) +
                " is induced with the same direction by both triangles; orientation inconsistent");
    }
}

} // namespace

Rational chern_number(const Shelling& s, const std::vector<OrientedSimplex>& orientations) {
    std::map<VertexSet, OrientedSimplex> orientation_of;
    for (const OrientedSimplex& o : orientations) {
        if (o.dim() != 2)
            throw std::invalid_argument("surface orientations must be 2-simplices");
        if (!s.complex().contains(o.support()))
            throw UnknownSimplexError("oriented simplex {" + o.str() + "} is not in the complex");
        if (!orientation_of.emplace(o.support(), o).second)
            throw std::invalid_argument("duplicate orientation for simplex {" + o.str() + "}");
    }
    check_closed_oriented_surface(s.complex(), orientation_of);
    const CurvatureCochain cochain = curvature_cochain(s, orientations);
    Rational total;
    for (const auto& [key, entry] : cochain.entries())
        total += entry.value;
    return total;
}

Shelling product_shelling(const SimplicialComplex& base, std::int64_t r,
                          const std::vector<Letter>& vertex_order) {
    if (r < 2)
        throw FiberTooShortError("product fiber needs at least 2 letters, got " +
                                 std::to_string(r));
    std::map<Letter, std::size_t> rank;
    if (!vertex_order.empty()) {
        const VertexSet expected = make_vertex_set(vertex_order);
        VertexSet actual;
        for (const Letter& v : base.vertices())
            actual.push_back(v);
        if (expected != actual || vertex_order.size() != expected.size())
            throw std::invalid_argument("vertex_order must be a permutation of the base vertices");
        for (std::size_t i = 0; i < vertex_order.size(); ++i)
            rank.emplace(vertex_order[i], i);
    }

    Shelling shelling(base);
    for (const VertexSet& simplex : base.simplices()) {
        std::vector<Letter> ordered = simplex; // already name-sorted
        if (!rank.empty())
            std::sort(ordered.begin(), ordered.end(), [&](const Letter& a, const Letter& b) {
                return rank.at(a) < rank.at(b);
            });
        std::vector<Letter> letters;
        letters.reserve(ordered.size() * static_cast<std::size_t>(r));
        for (std::int64_t i = 0; i < r; ++i)
            letters.insert(letters.end(), ordered.begin(), ordered.end());
        shelling.set_word(simplex, CyclicWord(std::move(letters)));
    }
    return shelling;
}

Shelling shelling_from_words(SimplicialComplex complex,
                             const std::map<VertexSet, CyclicWord>& given) {
    Shelling shelling(std::move(complex));
    for (const auto& [simplex, word] : given)
        shelling.set_word(simplex, word);
    for (const VertexSet& simplex : shelling.complex().simplices()) {
        if (shelling.find_word(simplex))
            continue;
        // derive from the first given simplex strictly containing this one
        for (const auto& [parent, word] : given) {
            if (parent.size() <= simplex.size() ||
                !std::includes(parent.begin(), parent.end(), simplex.begin(), simplex.end()))
                continue;
            if (auto derived = restrict_word(word, simplex)) {
                shelling.set_word(simplex, std::move(*derived));
                break;
            }
        }
    }
    return shelling;
}

Shelling single_simplex_shelling(const std::vector<Letter>& vertices, const CyclicWord& word) {
    SimplicialComplex complex;
    complex.add_simplex(vertices);
    std::map<VertexSet, CyclicWord> given;
    given.emplace(make_vertex_set(vertices), word);
    return shelling_from_words(std::move(complex), given);
}

// ---------------------------------------------------------------------------
// extract_shelling

namespace {

struct StackSimplex {
    VertexSet vertices;
    Letter doubled_letter;          // base vertex whose preimage is doubled
    std::pair<Letter, Letter> pair; // the two preimage vertices, sorted
};

// Successor in a cyclic list; nullopt when `x` is absent.
std::optional<Letter> cyclic_successor(const std::vector<Letter>& order, const Letter& x) {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == x)
            return order[(i + 1) % order.size()];
    return std::nullopt;
}

void check_fibration_data(const FibrationDescription& f) {
    for (const Letter& v : f.total.vertices()) {
        const auto it = f.projection.find(v);
        if (it == f.projection.end())
            throw MalformedFibrationError("total vertex '" + v.name() + "' has no projection");
        if (!f.base.contains({it->second}))
            throw MalformedFibrationError("projection image '" + it->second.name() +
                                          "' is not a base vertex");
    }
    for (const VertexSet& simplex : f.total.simplices()) {
        std::vector<Letter> image;
        std::map<Letter, int> multiplicity;
        for (const Letter& v : simplex) {
            image.push_back(f.projection.at(v));
            ++multiplicity[image.back()];
        }
        if (!f.base.contains(make_vertex_set(image)))
            throw MalformedFibrationError("projection is not simplicial: image of " +
                                          name_list(simplex) + " is not a base simplex");
        // fibers are 1-dimensional: a simplex meets each fiber in at most
        // an edge, and in at most one fiber in more than a point
        int doubled = 0;
        for (const auto& [base_vertex, count] : multiplicity) {
            if (count > 2)
                throw MalformedFibrationError("simplex " + name_list(simplex) + " has " +
                                              std::to_string(count) + " vertices over '" +
                                              base_vertex.name() + "'");
            if (count == 2)
                ++doubled;
        }
        if (doubled > 1)
            throw MalformedFibrationError("simplex " + name_list(simplex) +
                                          " doubles more than one base vertex");
    }
    for (const Letter& b : f.base.vertices()) {
        const auto it = f.fiber_orders.find(b);
        if (it == f.fiber_orders.end())
            throw MalformedFibrationError("base vertex '" + b.name() + "' has no fiber order");
        if (it->second.size() < 2)
            throw MalformedFibrationError("fiber over '" + b.name() + "' has fewer than 2 vertices");
        VertexSet preimage;
        for (const Letter& v : f.total.vertices())
            if (f.projection.at(v) == b)
                preimage.push_back(v);
        if (make_vertex_set(it->second) != preimage ||
            make_vertex_set(it->second).size() != it->second.size())
            throw MalformedFibrationError("fiber order over '" + b.name() +
                                          "' does not list the preimage vertices exactly once");
        // fiber edges must be exactly the total 1-simplices over the vertex
        std::set<VertexSet> fiber_edges;
        const auto& order = it->second;
        for (std::size_t i = 0; i < order.size(); ++i)
            fiber_edges.insert(make_vertex_set({order[i], order[(i + 1) % order.size()]}));
        std::set<VertexSet> total_edges;
        for (const VertexSet& e : f.total.simplices_of_dim(1))
            if (f.projection.at(e[0]) == b && f.projection.at(e[1]) == b)
                total_edges.insert(e);
        if (fiber_edges != total_edges)
            throw MalformedFibrationError("edges over base vertex '" + b.name() +
                                          "' do not form the circle given by its fiber order");
    }
}

CyclicWord extract_word_over(const FibrationDescription& f, const VertexSet& base_simplex) {
    const std::size_t n = base_simplex.size(); // = dim + 1
    // collect the (dim+1)-dimensional preimage simplices over this simplex
    std::vector<StackSimplex> stack;
    for (const VertexSet& candidate : f.total.simplices()) {
        if (candidate.size() != n + 1)
            continue;
        std::vector<Letter> image;
        for (const Letter& v : candidate)
            image.push_back(f.projection.at(v));
        if (make_vertex_set(image) != base_simplex)
            continue;
        // n+1 vertices onto n base vertices: exactly one base vertex is doubled
        std::map<Letter, std::vector<Letter>> by_image;
        for (const Letter& v : candidate)
            by_image[f.projection.at(v)].push_back(v);
        Letter doubled = candidate.front();
        std::pair<Letter, Letter> pair{candidate.front(), candidate.front()};
        for (const auto& [b, vs] : by_image)
            if (vs.size() == 2) {
                doubled = b;
                pair = {vs[0], vs[1]};
            }
        stack.push_back({candidate, doubled, pair});
    }
    if (stack.empty())
        throw MalformedFibrationError("no preimage simplices over base simplex " +
                                      name_list(base_simplex));

    // the two faces of a stack simplex that still project onto the base
    // simplex: drop one vertex of the doubled pair
    const auto onto_faces = [](const StackSimplex& s) {
        std::array<VertexSet, 2> faces;
        for (int which = 0; which < 2; ++which) {
            const Letter& drop = which == 0 ? s.pair.first : s.pair.second;
            VertexSet face;
            for (const Letter& v : s.vertices)
                if (v != drop)
                    face.push_back(v);
            faces[static_cast<std::size_t>(which)] = std::move(face);
        }
        return faces;
    };

    std::map<VertexSet, std::vector<std::size_t>> face_to_simplices;
    for (std::size_t i = 0; i < stack.size(); ++i)
        for (const VertexSet& face : onto_faces(stack[i]))
            face_to_simplices[face].push_back(i);
    for (const auto& [face, owners] : face_to_simplices)
        if (owners.size() != 2)
            throw MalformedFibrationError("section face " + name_list(face) + " is shared by " +
                                          std::to_string(owners.size()) +
                                          " preimage simplices, expected 2");

    // direction: walk so that crossing the reference simplex over the first
    // base vertex advances its doubled pair along the fiber order
    const Letter& v0 = base_simplex.front();
    const std::vector<Letter>& fiber = f.fiber_orders.at(v0);
    std::optional<std::size_t> start;
    for (std::size_t i = 0; i < stack.size(); ++i)
        if (stack[i].doubled_letter == v0 && (!start || stack[i].vertices < stack[*start].vertices))
            start = i;
    if (!start)
        throw MalformedFibrationError("no preimage simplex over " + name_list(base_simplex) +
                                      " doubles base vertex '" + v0.name() + "'");
    const StackSimplex& first = stack[*start];
    Letter from = first.pair.first;
    Letter to = first.pair.second;
    if (cyclic_successor(fiber, from) != to) {
        if (cyclic_successor(fiber, to) == from)
            std::swap(from, to);
        else
            throw MalformedFibrationError("doubled preimage pair {" + from.name() + " " +
                                          to.name() + "} is not a fiber edge over '" +
                                          v0.name() + "'");
    }

    // walk the cycle; entry face of the first crossing contains `from`
    std::vector<Letter> letters;
    std::vector<bool> visited(stack.size(), false);
    std::size_t current = *start;
    const auto first_faces = onto_faces(first);
    VertexSet entry_face =
        std::binary_search(first_faces[0].begin(), first_faces[0].end(), from) ? first_faces[0]
                                                                               : first_faces[1];
    for (std::size_t step = 0; step < stack.size(); ++step) {
        const StackSimplex& s = stack[current];
        if (visited[current])
            throw MalformedFibrationError("preimage simplices over " + name_list(base_simplex) +
                                          " do not chain into a single cycle");
        visited[current] = true;

        const auto faces = onto_faces(s);
        const VertexSet& exit_face = faces[0] == entry_face ? faces[1] : faces[0];

        // the crossing must advance the doubled vertex along its fiber,
        // except over a two-vertex fiber where both directions agree
        const Letter& enter_value = std::binary_search(exit_face.begin(), exit_face.end(),
                                                       s.pair.first)
                                        ? s.pair.second
                                        : s.pair.first;
        const Letter& exit_value = enter_value == s.pair.first ? s.pair.second : s.pair.first;
        const std::vector<Letter>& doubled_fiber = f.fiber_orders.at(s.doubled_letter);
        if (doubled_fiber.size() > 2 && cyclic_successor(doubled_fiber, enter_value) != exit_value)
            throw MalformedFibrationError("fiber orientations disagree over base simplex " +
                                          name_list(base_simplex) + " at vertex '" +
                                          s.doubled_letter.name() + "'");

        letters.push_back(s.doubled_letter);

        const auto& owners = face_to_simplices.at(exit_face);
        current = owners[0] == current ? owners[1] : owners[0];
        entry_face = exit_face;
    }
    if (current != *start)
        throw MalformedFibrationError("preimage simplices over " + name_list(base_simplex) +
                                      " do not close into a cycle");
    return CyclicWord(std::move(letters));
}

} // namespace

Shelling extract_shelling(const FibrationDescription& f) {
    check_fibration_data(f);
    Shelling shelling(f.base);
    for (const VertexSet& simplex : f.base.simplices()) {
        if (simplex.size() == 1) {
            // every fiber 1-simplex over the vertex contributes its letter
            const std::vector<Letter>& fiber = f.fiber_orders.at(simplex.front());
            std::vector<Letter> letters(fiber.size(), simplex.front());
            shelling.set_word(simplex, CyclicWord(std::move(letters)));
        } else {
            shelling.set_word(simplex, extract_word_over(f, simplex));
        }
    }
    const ValidationReport report = validate_shelling(shelling);
    if (!report.pass())
        throw MalformedFibrationError("extracted words do not form a shelling: " +
                                      report.violations.front().str());
    return shelling;
}

} // namespace chern
