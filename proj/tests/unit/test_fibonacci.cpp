#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "lyn/fibonacci.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/word.hpp"

using namespace lyn;

TEST_CASE("fibonacci numbers") {
    CHECK(fib_number(0) == 0);
    CHECK(fib_number(1) == 1);
    CHECK(fib_number(2) == 1);
    CHECK(fib_number(7) == 13);
    CHECK(fib_number(12) == 144);
    CHECK(fib_number(92) == 7540113804746346429ULL);
    CHECK_THROWS_AS(fib_number(93), std::invalid_argument);
    CHECK_THROWS_AS(fib_number(-1), std::invalid_argument);
}

TEST_CASE("fibonacci words follow the recurrence, not any display variant") {
    CHECK(fib_word(1).str() == "b");
    CHECK(fib_word(2).str() == "a");
    CHECK(fib_word(3).str() == "ab");
    CHECK(fib_word(4).str() == "aba");
    CHECK(fib_word(5).str() == "abaab");
    CHECK(fib_word(6).str() == "abaababa");
    CHECK(fib_word(7).str() == "abaababaabaab");
    CHECK(fib_word(5, FibVariant::ab()).str() == "babba");
    CHECK(fib_word(6, FibVariant::ab()).str() == "babbabab");
    for (int n = 3; n <= 12; ++n) {
        std::string expect = fib_word(n - 1).str() + fib_word(n - 2).str();
        CHECK(fib_word(n).str() == expect);
    }
    CHECK_THROWS_AS(fib_word(0), std::invalid_argument);
    CHECK_THROWS_AS(fib_word(33), std::invalid_argument);
}

TEST_CASE("palindromic prefixes drop the last two letters") {
    CHECK(central_p(3).empty());
    CHECK(central_p(4).str() == "a");
    CHECK(central_p(5).str() == "aba");
    CHECK(central_p(6).str() == "abaaba");
    CHECK(central_p(7).str() == "abaababaaba");
    for (int n = 3; n <= 12; ++n) {
        CHECK(is_palindrome(central_p(n)));
        CHECK(central_p(n).size() + 2 == fib_number(n));
    }
    CHECK_THROWS_AS(central_p(2), std::invalid_argument);
}

TEST_CASE("generated lyndon words and the conjugate identity") {
    CHECK(fib_lyndon(3, FibLyndonKind::plain).str() == "ab");
    CHECK(fib_lyndon(3, FibLyndonKind::complement).str() == "ab");
    CHECK(fib_lyndon(4, FibLyndonKind::plain).str() == "aab");
    CHECK(fib_lyndon(4, FibLyndonKind::complement).str() == "abb");
    CHECK(fib_lyndon(5, FibLyndonKind::plain).str() == "aabab");
    CHECK(fib_lyndon(5, FibLyndonKind::complement).str() == "ababb");
    CHECK(fib_lyndon(6, FibLyndonKind::plain).str() == "aabaabab");
    CHECK(fib_lyndon(6, FibLyndonKind::complement).str() == "ababbabb");
    CHECK(fib_lyndon(7, FibLyndonKind::plain).str() == "aabaababaabab");
    CHECK(fib_lyndon(7, FibLyndonKind::complement).str() == "ababbababbabb");
    for (int n = 3; n <= 12; ++n) {
        CHECK(is_lyndon(fib_lyndon(n, FibLyndonKind::plain).span()));
        CHECK(is_lyndon(fib_lyndon(n, FibLyndonKind::complement).span()));
        CHECK(fib_lyndon(n, FibLyndonKind::plain) ==
              lyndon_conjugate(fib_word(n, FibVariant::ba())));
        CHECK(fib_lyndon(n, FibLyndonKind::complement) ==
              lyndon_conjugate(fib_word(n, FibVariant::ab())));
    }
}

TEST_CASE("recognizer accepts exactly the generated pair per length") {
    CHECK(is_fib_lyndon(Word::parse("ab")) == std::optional<int>(3));
    CHECK(is_fib_lyndon(Word::parse("aab")) == std::optional<int>(4));
    CHECK(is_fib_lyndon(Word::parse("abb")) == std::optional<int>(4));
    CHECK(is_fib_lyndon(Word::parse("aabab")) == std::optional<int>(5));
    CHECK(is_fib_lyndon(Word::parse("ababb")) == std::optional<int>(5));
    CHECK(is_fib_lyndon(Word::parse("aabaababaabab")) == std::optional<int>(7));
    CHECK_FALSE(is_fib_lyndon(Word::parse("ba")).has_value());
    CHECK_FALSE(is_fib_lyndon(Word::parse("aabb")).has_value());     // wrong length
    CHECK_FALSE(is_fib_lyndon(Word::parse("aaabb")).has_value());    // right length
    CHECK_FALSE(is_fib_lyndon(Word::parse("abbab")).has_value());    // not lyndon
    CHECK_FALSE(is_fib_lyndon(Word::parse("abcabcab", prefix_alphabet(3))).has_value());
    // Order-isomorphic copies over other two-letter subsets count.
    CHECK(is_fib_lyndon(Word::parse("acacc", prefix_alphabet(3))) ==
          std::optional<int>(5));
}

TEST_CASE("length lookup") {
    CHECK(fib_index_of_length(2) == std::optional<int>(3));
    CHECK(fib_index_of_length(3) == std::optional<int>(4));
    CHECK(fib_index_of_length(5) == std::optional<int>(5));
    CHECK(fib_index_of_length(8) == std::optional<int>(6));
    CHECK(fib_index_of_length(13) == std::optional<int>(7));
    CHECK(fib_index_of_length(144) == std::optional<int>(12));
    CHECK_FALSE(fib_index_of_length(4).has_value());
    CHECK_FALSE(fib_index_of_length(100).has_value());
}

TEST_CASE("prefixes of the infinite word extend each other") {
    CHECK(fib_infinite_prefix(8).str() == "abaababa");
    CHECK(fib_infinite_prefix(13).str() == "abaababaabaab");
    const Word p20 = fib_infinite_prefix(20);
    const Word p8 = fib_infinite_prefix(8);
    CHECK(p20.str().substr(0, 8) == p8.str());
    CHECK(fib_infinite_prefix(0).empty());
    CHECK(fib_infinite_prefix(5, FibVariant::ab()).str() == "babba");
}

TEST_CASE("closed-form profile counts") {
    const std::vector<std::size_t> expect = {2, 3, 4, 4, 5, 5, 5, 6, 6, 6, 6, 6};
    for (std::size_t n = 1; n <= expect.size(); ++n) {
        CHECK(fib_profile_value(n) == expect[n - 1]);
    }
    CHECK(fib_profile_value(13) == 7);
    CHECK(fib_profile_value(144) == 12);
    CHECK(fib_profile_value(143) == 11);
}
