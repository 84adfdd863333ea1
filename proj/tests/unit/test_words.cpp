#include <string>

#include "doctest.h"
#include "lyn/alphabet.hpp"
#include "lyn/word.hpp"

using namespace lyn;

TEST_CASE("alphabets validate their symbols") {
    CHECK(make_alphabet("ab")->size() == 2);
    CHECK(make_alphabet("01")->symbol(0) == '0');
    CHECK_THROWS_AS(make_alphabet(""), std::invalid_argument);
    CHECK_THROWS_AS(make_alphabet("aa"), std::invalid_argument);
    const AlphabetRef d = default_alphabet();
    CHECK(d->size() == 36);
    CHECK(d->index_of('a') == Letter{0});
    CHECK(d->index_of('0') == Letter{26});
    CHECK_FALSE(d->index_of('!').has_value());
    CHECK(*binary_alphabet() == *make_alphabet("ab"));
    CHECK(prefix_alphabet(3)->symbols() == "abc");
}

TEST_CASE("word parsing reports the offending position") {
    const AlphabetRef ab = binary_alphabet();
    CHECK(Word::parse("abba", ab).str() == "abba");
    CHECK(Word::parse("", ab).empty());
    try {
        Word::parse("aacab", ab);
        FAIL("expected a parse error");
    } catch (const WordParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("lexicographic comparison is letter order") {
    const AlphabetRef ab = binary_alphabet();
    const auto w = [&](const char* s) { return Word::parse(s, ab); };
    CHECK(w("a") < w("aa"));
    CHECK(w("aab") < w("ab"));
    CHECK(w("ab") < w("b"));
    CHECK(w("ab") == w("ab"));
    CHECK_FALSE(w("ba") < w("b"));
}

TEST_CASE("structural views: reversal, interior, palindromes") {
    const AlphabetRef ab = binary_alphabet();
    const Word w = Word::parse("aabab", ab);
    CHECK(reversal(w).str() == "babaa");
    CHECK(last_dropped(w).str() == "aaba");
    CHECK(interior(w).str() == "aba");
    CHECK(is_palindrome(Word::parse("abaaba", ab)));
    CHECK_FALSE(is_palindrome(w));
    const StructuralViews v = structural_views(w);
    CHECK(v.reversal.str() == "babaa");
    CHECK(v.interior.has_value());
    CHECK(v.interior->str() == "aba");
    CHECK_FALSE(v.is_palindrome);
    CHECK_FALSE(structural_views(Word::parse("a", ab)).interior.has_value());
}

TEST_CASE("first-occurrence renaming gives canonical patterns") {
    const AlphabetRef abc = prefix_alphabet(3);
    const Word w = Word::parse("cacb", abc);
    CHECK(Word(default_alphabet(), canonical_rename(w.span())).str() == "abac");
    const Word already = Word::parse("abac", abc);
    CHECK(canonical_rename(already.span()) == already.letters());
}

TEST_CASE("binary complement swaps the two letters") {
    const AlphabetRef ab = binary_alphabet();
    CHECK(complement(Word::parse("aabab", ab)).str() == "bbaba");
    const AlphabetRef zo = make_alphabet("01");
    CHECK(complement(Word::parse("000101", zo)).str() == "111010");
    CHECK_THROWS_AS(complement(Word::parse("abc", prefix_alphabet(3))),
                    std::invalid_argument);
    CHECK(distinct_letter_count(Word::parse("aabab", ab).span()) == 2);
}
