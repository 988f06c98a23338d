/**
 * Seeded random generation of shelling words for the property suites.
 *
 * Draws come from std::mt19937_64 reduced by modulus, not from
 * std::uniform_int_distribution, so a fixed seed produces the identical
 * word sequence on every platform and standard library.
 */
#ifndef CHERN_WORD_GEN_HPP
#define CHERN_WORD_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "chern/words.hpp"

namespace chern {

/// Deterministic stream of random cyclic words over a fixed alphabet in
/// which every alphabet letter appears at least `min_count` times
/// (rejection sampling).
class WordGenerator {
public:
    explicit WordGenerator(std::uint64_t seed) : rng_(seed) {}

    /// A word of length in [min_len, max_len] (uniform over lengths,
    /// letters i.i.d., resampled until the count rule holds). min_len is
    /// raised to letters.size() * min_count when too small to succeed.
    CyclicWord next(const std::vector<Letter>& letters, std::size_t min_len, std::size_t max_len,
                    std::int64_t min_count = 2);

private:
    std::uint64_t draw(std::uint64_t bound) { return rng_() % bound; }

    std::mt19937_64 rng_;
};

} // namespace chern

#endif // CHERN_WORD_GEN_HPP
