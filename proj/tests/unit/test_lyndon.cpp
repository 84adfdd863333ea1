#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lyn/lyndon.hpp"
#include "lyn/word.hpp"

using namespace lyn;

namespace {

Word w(const char* s) { return Word::parse(s, binary_alphabet()); }
Word w3(const char* s) { return Word::parse(s, prefix_alphabet(3)); }

// Minimum search over every alphabet size, without the pruning used by
// min_lyndon_profile.
std::pair<std::size_t, std::set<LetterSeq>> brute_min(std::size_t n) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::set<LetterSeq> achievers;
    for (std::size_t k = 1; k <= n; ++k) {
        visit_lyndon_upto(n, k, [&](LetterSpan cand) {
            if (cand.size() != n || distinct_letter_count(cand) != k) {
                return;
            }
            const std::size_t c = lyndon_factor_count(cand);
            if (c < best) {
                best = c;
                achievers.clear();
            }
            if (c == best) {
                achievers.insert(canonical_rename(cand));
            }
        });
    }
    return {best, achievers};
}

}  // namespace

TEST_CASE("lyndon recognition") {
    CHECK(is_lyndon(w("a")));
    CHECK(is_lyndon(w("ab")));
    CHECK(is_lyndon(w("aab")));
    CHECK(is_lyndon(w("aabab")));
    CHECK(is_lyndon(w3("abc")));
    CHECK(is_lyndon(w3("acb")));
    CHECK_FALSE(is_lyndon(w("ba")));
    CHECK_FALSE(is_lyndon(w("abab")));  // not primitive
    CHECK_FALSE(is_lyndon(w("aba")));   // suffix a is smaller
    CHECK_THROWS_AS(is_lyndon(w("").span()), std::invalid_argument);
}

TEST_CASE("the three recognition routes agree on mixed samples") {
    for (const char* s : {"a", "b", "ab", "ba", "aab", "aba", "abb", "abab", "aabab",
                          "ababb", "aabaabab", "babbab"}) {
        const Word word = w(s);
        const bool fast = is_lyndon(word.span());
        CHECK(fast == is_lyndon_by_suffixes(word.span()));
        CHECK(fast == is_lyndon_by_conjugacy(word.span()));
    }
}

TEST_CASE("least rotation and the lyndon conjugate") {
    CHECK(least_rotation_index(w("bab").span()) == 1);
    CHECK(least_rotation_index(w("abaab").span()) == 2);
    CHECK(least_rotation_index(w("abab").span()) == 0);
    CHECK(lyndon_conjugate(w("baab")).str() == "aabb");
    CHECK(lyndon_conjugate(w("abaab")).str() == "aabab");
    CHECK(lyndon_conjugate(w("ab")).str() == "ab");
    CHECK_THROWS_AS(lyndon_conjugate(w("abab")), std::domain_error);
}

TEST_CASE("standard bisection splits at the longest lyndon proper prefix") {
    const StandardBisection b = standard_bisection(w("aabab"));
    CHECK(b.lambda.str() == "aab");
    CHECK(b.mu.str() == "ab");
    const StandardBisection c = standard_bisection(w("ab"));
    CHECK(c.lambda.str() == "a");
    CHECK(c.mu.str() == "b");
    // aabaab is a square, so the longest Lyndon proper prefix is aab and
    // the split mirrors the Fibonacci recurrence.
    const StandardBisection d = standard_bisection(w("aabaabab"));
    CHECK(d.lambda.str() == "aab");
    CHECK(d.mu.str() == "aabab");
    CHECK_THROWS_AS(standard_bisection(w("a")), std::invalid_argument);
    CHECK_THROWS_AS(standard_bisection(w("ba")), std::invalid_argument);
}

TEST_CASE("distinct lyndon factors of known words") {
    const LyndonFactors f = distinct_lyndon_factors(w("aabab"));
    CHECK(f.count == 5);
    std::vector<std::string> strs;
    for (const Word& x : f.factors) {
        strs.push_back(x.str());
    }
    CHECK(strs == std::vector<std::string>{"a", "aab", "aabab", "ab", "b"});
    CHECK(lyndon_factor_count(Word::parse("000101", make_alphabet("01")).span()) == 7);
    CHECK(lyndon_factor_count(w("aabaabab").span()) == 6);
    CHECK(lyndon_factor_count(w3("acb").span()) == 5);
    CHECK(lyndon_factor_count(w3("abc").span()) == 6);
}

TEST_CASE("factorization into nonincreasing lyndon words") {
    const auto f = cfl_factorize(Word::parse("banana", make_alphabet("abn")));
    std::vector<std::string> strs;
    for (const Word& x : f.factors) {
        strs.push_back(x.str());
    }
    CHECK(strs == std::vector<std::string>{"b", "an", "an", "a"});
    const auto g = cfl_factorize(w("aaa"));
    CHECK(g.factors.size() == 3);
    const auto h = cfl_factorize(w("aabab"));
    CHECK(h.factors.size() == 1);
}

TEST_CASE("enumeration by length and alphabet size") {
    const auto words = enumerate_lyndon(4, 2);
    std::vector<std::string> strs;
    for (const Word& x : words) {
        strs.push_back(x.str());
    }
    CHECK(strs == std::vector<std::string>{"aaab", "aabb", "abbb"});
    CHECK(enumerate_lyndon(6, 2).size() == 9);
    CHECK(enumerate_lyndon(1, 3).size() == 3);
    CHECK(enumerate_lyndon(12, 2).size() == 335);
    // Lyndon words partition: sum over divisors of n of d * L_d(k) = k^n.
    std::size_t total = 0;
    for (std::size_t d : {1, 2, 3, 6}) {
        total += d * enumerate_lyndon(d, 2).size();
    }
    CHECK(total == 64);
}

TEST_CASE("minimum profile matches an unpruned search") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto [best, achievers] = brute_min(n);
        const MinProfileEntry entry = min_lyndon_profile(n);
        CHECK(entry.ell == best);
        REQUIRE(entry.extremal_words.size() == achievers.size());
        std::size_t i = 0;
        for (const LetterSeq& seq : achievers) {
            CHECK(entry.extremal_words[i].letters() == seq);
            ++i;
        }
    }
}

TEST_CASE("bisection chain bound halves to one") {
    CHECK(bisection_chain_bound(1) == 0);
    CHECK(bisection_chain_bound(2) == 1);
    CHECK(bisection_chain_bound(3) == 2);
    CHECK(bisection_chain_bound(6) == 3);
    CHECK(bisection_chain_bound(12) == 4);
    CHECK(bisection_chain_bound(13) == 4);
}

TEST_CASE("a-central-b recognition") {
    CHECK(is_sturmian_lyndon(w("ab")));
    CHECK(is_sturmian_lyndon(w("aab")));
    CHECK(is_sturmian_lyndon(w("aabab")));
    CHECK(is_sturmian_lyndon(w("aaaaab")));
    CHECK_FALSE(is_sturmian_lyndon(w("aabbab")));
    CHECK_FALSE(is_sturmian_lyndon(w3("abc")));
    CHECK_THROWS_AS(is_sturmian_lyndon(w("a")), std::invalid_argument);
}
