#include "chern/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

CyclicAlphabet3::CyclicAlphabet3(Letter l0, Letter l1, Letter l2)
    : letters_{std::move(l0), std::move(l1), std::move(l2)} {
    if (letters_[0] == letters_[1] || letters_[0] == letters_[2] || letters_[1] == letters_[2])
        throw std::invalid_argument("alphabet letters must be pairwise distinct");
}

std::optional<int> CyclicAlphabet3::index_of(const Letter& l) const {
    for (int i = 0; i < 3; ++i)
        if (letters_[static_cast<std::size_t>(i)] == l)
            return i;
    return std::nullopt;
}

bool CyclicAlphabet3::same_cyclic_order(const CyclicAlphabet3& other) const {
    const auto pos = other.index_of(letters_[0]);
    if (!pos)
        return false;
    for (int i = 0; i < 3; ++i)
        if (other.letter((*pos + i) % 3) != letters_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

CyclicAlphabet3 CyclicAlphabet3::reversed() const {
    return CyclicAlphabet3(letters_[0], letters_[2], letters_[1]);
}

CyclicWord::CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty())
        throw EmptyWordError("a cyclic word must have at least one letter");
}

std::vector<Letter> CyclicWord::rotated(std::size_t start) const {
    const std::size_t m = letters_.size();
    start %= m;
    std::vector<Letter> out;
    out.reserve(m);
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(start), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

// Booth's least-rotation algorithm on the doubled sequence.
std::size_t CyclicWord::canonical_start() const {
    const std::size_t n = letters_.size();
    const auto at = [&](std::size_t i) -> const Letter& { return letters_[i % n]; };
    std::vector<std::ptrdiff_t> failure(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Letter& sj = at(j);
        std::ptrdiff_t i = failure[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1))
                k = j - static_cast<std::size_t>(i) - 1;
            i = failure[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (sj < at(k))
                k = j;
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    return k % n;
}

CyclicWord CyclicWord::reversed() const {
    return CyclicWord(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

std::int64_t CyclicWord::count(const Letter& l) const {
    return static_cast<std::int64_t>(std::count(letters_.begin(), letters_.end(), l));
}

bool operator==(const CyclicWord& a, const CyclicWord& b) {
    if (a.length() != b.length())
        return false;
    return a.rotated(a.canonical_start()) == b.rotated(b.canonical_start());
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
    const auto ca = a.rotated(a.canonical_start());
    const auto cb = b.rotated(b.canonical_start());
    return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string CyclicWord::str() const {
    const bool compact = std::all_of(letters_.begin(), letters_.end(),
                                     [](const Letter& l) { return l.name().size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!compact && i > 0)
            out += ' ';
        out += letters_[i].name();
    }
    return out;
}

std::int64_t LetterCounts::total() const {
    return checked_add(checked_add(k0, k1), k2);
}

std::int64_t TriangleCount::total() const {
    return checked_add(t_plus, t_minus);
}

CyclicWord delete_letter(const CyclicWord& w, const Letter& l) {
    std::vector<Letter> kept;
    kept.reserve(w.length());
    for (const Letter& c : w.linearization())
        if (c != l)
            kept.push_back(c);
    if (kept.empty())
        throw EmptyWordError("deleting letter '" + l.name() + "' empties the word");
    return CyclicWord(std::move(kept));
}

LetterCounts count_letters(const CyclicWord& w, const CyclicAlphabet3& alphabet) {
    LetterCounts counts;
    std::int64_t* slot[3] = {&counts.k0, &counts.k1, &counts.k2};
    for (const Letter& c : w.linearization()) {
        const auto i = alphabet.index_of(c);
        if (!i)
            throw ForeignLetterError("letter '" + c.name() + "' is not in the alphabet");
        ++*slot[static_cast<std::size_t>(*i)];
    }
    return counts;
}

Rational ind(std::span<const Letter> linear_word, const Letter& x, const Letter& y) {
    if (x == y)
        throw std::invalid_argument("ind needs two distinct letters");
    std::int64_t kx = 0, ky = 0;
    std::int64_t x_before_y = 0; // pairs (i,j) in A x B with i < j
    for (const Letter& c : linear_word) {
        if (c == x) {
            ++kx;
        } else if (c == y) {
            ++ky;
            x_before_y = checked_add(x_before_y, kx);
        } else {
            throw ForeignLetterError("letter '" + c.name() + "' is neither '" + x.name() +
                                     "' nor '" + y.name() + "'");
        }
    }
    if (kx == 0)
        throw MissingLetterError("letter '" + x.name() + "' does not occur");
    if (ky == 0)
        throw MissingLetterError("letter '" + y.name() + "' does not occur");
    const std::int64_t pairs = checked_mul(kx, ky);
    // #(i>j) - #(i<j) = pairs - 2 * #(i<j)
    const std::int64_t numerator = checked_sub(pairs, checked_mul(2, x_before_y));
    return Rational(numerator, checked_mul(2, pairs));
}

namespace {

void require_all_present(const LetterCounts& counts, const CyclicAlphabet3& alphabet) {
    const std::int64_t ks[3] = {counts.k0, counts.k1, counts.k2};
    for (int i = 0; i < 3; ++i)
        if (ks[i] == 0)
            throw MissingLetterError("letter '" + alphabet.letter(i).name() +
                                     "' does not occur in the word");
}

// Sum of sign(pos_y - pos_x) over occurrence pairs of three letters, all in
// one left-to-right pass with running counters.
struct PairSigns {
    std::int64_t p01 = 0; // sum over (l0, l1) pairs
    std::int64_t p02 = 0; // sum over (l0, l2) pairs
    std::int64_t p12 = 0; // sum over (l1, l2) pairs
};

PairSigns pairwise_sign_sums(std::span<const Letter> word, const CyclicAlphabet3& alphabet) {
    PairSigns p;
    std::int64_t seen[3] = {0, 0, 0};
    for (const Letter& c : word) {
        const int i = *alphabet.index_of(c);
        switch (i) {
        case 0:
            p.p01 = checked_sub(p.p01, seen[1]);
            p.p02 = checked_sub(p.p02, seen[2]);
            break;
        case 1:
            p.p01 = checked_add(p.p01, seen[0]);
            p.p12 = checked_sub(p.p12, seen[2]);
            break;
        default:
            p.p02 = checked_add(p.p02, seen[0]);
            p.p12 = checked_add(p.p12, seen[1]);
            break;
        }
        ++seen[i];
    }
    return p;
}

} // namespace

Rational curv_mnev(const CyclicWord& w, const CyclicAlphabet3& alphabet,
                   std::size_t linearization_start) {
    require_all_present(count_letters(w, alphabet), alphabet);
    // all three deletions must come from the same linearization; the three
    // Ind terms are rotation-sensitive even though their alternating sum
    // is not
    const std::vector<Letter> lin = w.rotated(linearization_start);
    const auto deleted = [&](int i) {
        std::vector<Letter> kept;
        kept.reserve(lin.size());
        for (const Letter& c : lin)
            if (c != alphabet.letter(i))
                kept.push_back(c);
        return kept;
    };
    const auto d0 = deleted(0);
    const auto d1 = deleted(1);
    const auto d2 = deleted(2);
    return ind(d0, alphabet.letter(1), alphabet.letter(2)) -
           ind(d1, alphabet.letter(0), alphabet.letter(2)) +
           ind(d2, alphabet.letter(0), alphabet.letter(1));
}

TriangleCount count_triangles(const CyclicWord& w, const CyclicAlphabet3& alphabet) {
    const LetterCounts counts = count_letters(w, alphabet);
    require_all_present(counts, alphabet);
    const PairSigns p = pairwise_sign_sums(w.linearization(), alphabet);
    // t+ - t- = k0 * P12 - k1 * P02 + k2 * P01
    const std::int64_t diff =
        checked_add(checked_sub(checked_mul(counts.k0, p.p12), checked_mul(counts.k1, p.p02)),
                    checked_mul(counts.k2, p.p01));
    const std::int64_t total = checked_mul(checked_mul(counts.k0, counts.k1), counts.k2);
    return TriangleCount{checked_add(total, diff) / 2, checked_sub(total, diff) / 2};
}

TriangleCount count_triangles_brute(const CyclicWord& w, const CyclicAlphabet3& alphabet) {
    const LetterCounts counts = count_letters(w, alphabet);
    require_all_present(counts, alphabet);
    std::vector<std::int64_t> occ[3];
    const auto& lin = w.linearization();
    for (std::size_t pos = 0; pos < lin.size(); ++pos)
        occ[static_cast<std::size_t>(*alphabet.index_of(lin[pos]))].push_back(
            static_cast<std::int64_t>(pos));
    TriangleCount tc;
    for (const std::int64_t i : occ[0])
        for (const std::int64_t j : occ[1])
            for (const std::int64_t k : occ[2])
                (cyclic_sign(i, j, k) > 0 ? tc.t_plus : tc.t_minus) += 1;
    return tc;
}

Rational curv_triangles(const CyclicWord& w, const CyclicAlphabet3& alphabet) {
    const TriangleCount tc = count_triangles(w, alphabet);
    return Rational(checked_sub(tc.t_minus, tc.t_plus), checked_mul(2, tc.total()));
}

int cyclic_sign(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i == j || i == k || j == k)
        throw DegenerateTripleError("cyclic_sign needs pairwise distinct indices");
    const auto sign = [](std::int64_t x) { return (x > 0) - (x < 0); };
    return sign(k - j) - sign(k - i) + sign(j - i);
}

} // namespace chern
