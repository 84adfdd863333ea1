#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace lyn {

// A letter is an index into an OrderedAlphabet. All comparisons in the
// library compare indices, so the declaration order of the alphabet is the
// lexicographic order.
using Letter = std::uint8_t;

class OrderedAlphabet {
public:
    static constexpr std::size_t kMaxSize = 36;

    // Throws std::invalid_argument on an empty, oversized, or repeating
    // symbol list.
    explicit OrderedAlphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(Letter index) const;
    std::optional<Letter> index_of(char symbol) const noexcept;
    const std::string& symbols() const noexcept { return symbols_; }

    bool operator==(const OrderedAlphabet& other) const noexcept {
        return symbols_ == other.symbols_;
    }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_;  // -1 when the char is not a symbol
};

using AlphabetRef = std::shared_ptr<const OrderedAlphabet>;

AlphabetRef make_alphabet(std::string_view symbols);

// a-z then 0-9, in that order.
const AlphabetRef& default_alphabet();

// First k symbols of the default alphabet (shared, cached).
AlphabetRef prefix_alphabet(std::size_t k);

// The two-letter alphabet "ab" (shared).
const AlphabetRef& binary_alphabet();

// True when both refs denote the same symbol sequence.
bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

}  // namespace lyn
