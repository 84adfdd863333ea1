#include "lyn/word.hpp"

#include <algorithm>
#include <array>

namespace lyn {

std::strong_ordering compare_lex(LetterSpan a, LetterSpan b) noexcept {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return a.size() <=> b.size();
}

Word::Word(AlphabetRef alphabet, LetterSeq letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) {
        throw std::invalid_argument("word requires an alphabet");
    }
    for (Letter l : letters_) {
        if (l >= alphabet_->size()) {
            throw std::invalid_argument("letter index outside alphabet");
        }
    }
}

Word Word::parse(std::string_view text, AlphabetRef alphabet) {
    if (!alphabet) {
        throw std::invalid_argument("word requires an alphabet");
    }
    LetterSeq letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto idx = alphabet->index_of(text[i]);
        if (!idx) {
            throw WordParseError(
                "character '" + std::string(1, text[i]) + "' at position " +
                    std::to_string(i + 1) + " is not in alphabet \"" + alphabet->symbols() +
                    "\"",
                i);
        }
        letters.push_back(*idx);
    }
    return Word(std::move(alphabet), std::move(letters));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
        out.push_back(alphabet_->symbol(l));
    }
    return out;
}

namespace {
void require_same_alphabet(const Word& a, const Word& b) {
    if (!same_alphabet(a.alphabet(), b.alphabet())) {
        throw std::invalid_argument("cannot compare words over different alphabets");
    }
}
}  // namespace

bool Word::operator==(const Word& other) const {
    require_same_alphabet(*this, other);
    return letters_ == other.letters_;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    require_same_alphabet(*this, other);
    return compare_lex(letters_, other.letters_);
}

Word reversal(const Word& w) {
    LetterSeq rev(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet(), std::move(rev));
}

Word last_dropped(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("cannot drop the last letter of the empty word");
    }
    LetterSeq head(w.letters().begin(), w.letters().end() - 1);
    return Word(w.alphabet(), std::move(head));
}

Word interior(const Word& w) {
    if (w.size() < 2) {
        throw std::invalid_argument("interior requires a word of length at least 2");
    }
    LetterSeq mid(w.letters().begin() + 1, w.letters().end() - 1);
    return Word(w.alphabet(), std::move(mid));
}

bool is_palindrome(const Word& w) {
    const LetterSeq& s = w.letters();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

StructuralViews structural_views(const Word& w) {
    StructuralViews views{reversal(w), last_dropped(w), std::nullopt, is_palindrome(w)};
    if (w.size() >= 2) {
        views.interior = interior(w);
    }
    return views;
}

LetterSeq canonical_rename(LetterSpan w) {
    std::array<std::int16_t, 256> rename;
    rename.fill(-1);
    Letter next = 0;
    LetterSeq out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (rename[l] < 0) {
            rename[l] = static_cast<std::int16_t>(next++);
        }
        out.push_back(static_cast<Letter>(rename[l]));
    }
    return out;
}

// Canonical words all live over the default alphabet so that canonical
// forms of words from different alphabets stay mutually comparable.
Word canonical_rename(const Word& w) {
    return Word(default_alphabet(), canonical_rename(w.span()));
}

LetterSeq complement_binary(LetterSpan w) {
    LetterSeq out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (l > 1) {
            throw std::invalid_argument("complement requires letters 0 and 1 only");
        }
        out.push_back(static_cast<Letter>(1 - l));
    }
    return out;
}

Word complement(const Word& w) {
    if (w.alphabet()->size() != 2) {
        throw std::invalid_argument("complement requires a two-letter alphabet");
    }
    return Word(w.alphabet(), complement_binary(w.span()));
}

std::size_t distinct_letter_count(LetterSpan w) {
    std::array<bool, 256> seen{};
    std::size_t count = 0;
    for (Letter l : w) {
        if (!seen[l]) {
            seen[l] = true;
            ++count;
        }
    }
    return count;
}

}  // namespace lyn
