#pragma once

#include <cstddef>
#include <vector>

#include "lyn/word.hpp"

namespace lyn {

// All distinct nonempty factors of a text up to a length cap, sorted
// lexicographically (and by length among equal prefixes, per compare_lex).
std::vector<LetterSeq> distinct_factors(LetterSpan text, std::size_t max_len);

// Factor set of a word with membership queries.
class FactorSet {
public:
    FactorSet(std::size_t max_len, std::vector<LetterSeq> factors);

    std::size_t max_len() const noexcept { return max_len_; }
    const std::vector<LetterSeq>& factors() const noexcept { return factors_; }
    bool contains(LetterSpan f) const;
    std::size_t count_of_length(std::size_t len) const;

    bool operator==(const FactorSet& other) const = default;

private:
    std::size_t max_len_;
    std::vector<LetterSeq> factors_;  // sorted, deduplicated
};

FactorSet factor_set(LetterSpan text, std::size_t max_len);
FactorSet factor_set(const Word& w, std::size_t max_len);

}  // namespace lyn
