#include "lyn/factors.hpp"

#include <algorithm>
#include <set>

namespace lyn {

std::vector<LetterSeq> distinct_factors(LetterSpan text, std::size_t max_len) {
    std::set<LetterSeq> seen;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const std::size_t cap = std::min(max_len, text.size() - i);
        for (std::size_t len = 1; len <= cap; ++len) {
            seen.emplace(text.begin() + static_cast<std::ptrdiff_t>(i),
                         text.begin() + static_cast<std::ptrdiff_t>(i + len));
        }
    }
    std::vector<LetterSeq> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const LetterSeq& a, const LetterSeq& b) {
        return compare_lex(a, b) == std::strong_ordering::less;
    });
    return out;
}

FactorSet::FactorSet(std::size_t max_len, std::vector<LetterSeq> factors)
    : max_len_(max_len), factors_(std::move(factors)) {}

bool FactorSet::contains(LetterSpan f) const {
    LetterSeq key(f.begin(), f.end());
    return std::binary_search(
        factors_.begin(), factors_.end(), key, [](const LetterSeq& a, const LetterSeq& b) {
            return compare_lex(a, b) == std::strong_ordering::less;
        });
}

std::size_t FactorSet::count_of_length(std::size_t len) const {
    return static_cast<std::size_t>(std::count_if(
        factors_.begin(), factors_.end(), [len](const LetterSeq& f) { return f.size() == len; }));
}

FactorSet factor_set(LetterSpan text, std::size_t max_len) {
    return FactorSet(max_len, distinct_factors(text, max_len));
}

FactorSet factor_set(const Word& w, std::size_t max_len) {
    return factor_set(w.span(), max_len);
}

}  // namespace lyn
