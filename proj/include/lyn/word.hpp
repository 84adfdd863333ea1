#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lyn/alphabet.hpp"

namespace lyn {

using LetterSeq = std::vector<Letter>;
using LetterSpan = std::span<const Letter>;

class WordParseError : public std::invalid_argument {
public:
    WordParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message), position_(position) {}

    // 0-based offset of the offending character.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Lexicographic comparison of two letter sequences (indices compare as
// integers; a proper prefix is smaller).
std::strong_ordering compare_lex(LetterSpan a, LetterSpan b) noexcept;

// An immutable word over a fixed ordered alphabet.
class Word {
public:
    Word() : alphabet_(default_alphabet()) {}
    Word(AlphabetRef alphabet, LetterSeq letters);

    // Throws WordParseError when a character is not an alphabet symbol.
    static Word parse(std::string_view text, AlphabetRef alphabet = default_alphabet());

    const AlphabetRef& alphabet() const noexcept { return alphabet_; }
    const LetterSeq& letters() const noexcept { return letters_; }
    LetterSpan span() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::string str() const;

    // Comparisons require identical alphabets; otherwise std::invalid_argument.
    bool operator==(const Word& other) const;
    std::strong_ordering operator<=>(const Word& other) const;

private:
    AlphabetRef alphabet_;
    LetterSeq letters_;
};

// w reversed.
Word reversal(const Word& w);

// w minus its last letter; throws std::invalid_argument when w is empty.
Word last_dropped(const Word& w);

// w minus its first and last letters; throws std::invalid_argument when
// |w| < 2.
Word interior(const Word& w);

bool is_palindrome(const Word& w);

struct StructuralViews {
    Word reversal;
    Word last_dropped;
    std::optional<Word> interior;  // absent when |w| < 2
    bool is_palindrome = false;
};

StructuralViews structural_views(const Word& w);

// Renames letters by first occurrence: the first distinct letter becomes 0,
// the second 1, and so on.
LetterSeq canonical_rename(LetterSpan w);
Word canonical_rename(const Word& w);

// Swaps the two letters of a word over a two-letter alphabet; throws
// std::invalid_argument on larger alphabets.
Word complement(const Word& w);
LetterSeq complement_binary(LetterSpan w);

std::size_t distinct_letter_count(LetterSpan w);

}  // namespace lyn
