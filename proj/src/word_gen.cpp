#include "chern/word_gen.hpp"

#include <map>
#include <stdexcept>

namespace chern {

CyclicWord WordGenerator::next(const std::vector<Letter>& letters, std::size_t min_len,
                               std::size_t max_len, std::int64_t min_count) {
    if (letters.empty() || min_count < 1)
        throw std::invalid_argument("word generation needs letters and min_count >= 1");
    const std::size_t needed = letters.size() * static_cast<std::size_t>(min_count);
    min_len = std::max(min_len, needed);
    if (max_len < min_len)
        throw std::invalid_argument("max_len is too small for the letter count rule");

    for (;;) {
        const std::size_t len = min_len + static_cast<std::size_t>(draw(max_len - min_len + 1));
        std::vector<Letter> word;
        word.reserve(len);
        std::map<Letter, std::int64_t> counts;
        for (std::size_t i = 0; i < len; ++i) {
            const Letter& l = letters[static_cast<std::size_t>(draw(letters.size()))];
            word.push_back(l);
            ++counts[l];
        }
        bool ok = counts.size() == letters.size();
        for (const auto& [l, c] : counts)
            ok = ok && c >= min_count;
        if (ok)
            return CyclicWord(std::move(word));
    }
}

} // namespace chern
