#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lyn/word.hpp"

namespace lyn {

// A word is Lyndon when it is strictly smaller than every nonempty proper
// suffix; equivalently, it is primitive and the strict minimum of its
// conjugacy class. Single letters are Lyndon; the empty word is rejected.
//
// is_lyndon runs the linear scan; the _by_suffixes and _by_conjugacy
// variants apply the two definitions directly and exist as independent
// cross-checks.
bool is_lyndon(LetterSpan w);
bool is_lyndon(const Word& w);
bool is_lyndon_by_suffixes(LetterSpan w);
bool is_lyndon_by_conjugacy(LetterSpan w);

// Start index of the lexicographically least rotation (Booth-style duel);
// for primitive words the index is unique. |w| >= 1 required.
std::size_t least_rotation_index(LetterSpan w);

// The unique Lyndon word conjugate to w; throws std::domain_error when w is
// not primitive (only primitive words have one).
LetterSeq lyndon_conjugate(LetterSpan w);
Word lyndon_conjugate(const Word& w);

// The split w = lambda . mu of a Lyndon word of length >= 2, where lambda is
// the longest proper prefix that is Lyndon. Then mu is Lyndon as well,
// lambda < w < mu, and w minus its last letter is a periodic extension of
// lambda; these consequences are verified on every call.
struct StandardBisection {
    Word lambda;
    Word mu;
};

StandardBisection standard_bisection(const Word& w);

// All distinct factors of w that are Lyndon words, sorted lexicographically.
// count is the size of that set.
struct LyndonFactors {
    std::vector<Word> factors;
    std::size_t count = 0;
};

LyndonFactors distinct_lyndon_factors(const Word& w);

// Just the count of distinct Lyndon factors (the hot path of the sweeps).
std::size_t lyndon_factor_count(LetterSpan w);

// The unique factorization of a nonempty word into a lexicographically
// nonincreasing sequence of Lyndon words.
struct CFLFactorization {
    std::vector<Word> factors;
};

CFLFactorization cfl_factorize(const Word& w);

// Left-to-right linear factorization scan. Emits each factor as
// emit(start, len) in order; the concatenation of the emitted spans is s.
template <typename Emit>
void duval_scan(LetterSpan s, Emit&& emit) {
    const std::size_t n = s.size();
    std::size_t k = 0;
    while (k < n) {
        std::size_t i = k;
        std::size_t j = k + 1;
        while (j < n && s[i] <= s[j]) {
            i = (s[i] < s[j]) ? k : i + 1;
            ++j;
        }
        const std::size_t p = j - i;
        while (k <= i) {
            emit(k, p);
            k += p;
        }
    }
}

// Generates every Lyndon word of length <= n over the letters 0..k-1 in
// lexicographic order, calling visit(span) for each.
template <typename Visitor>
void visit_lyndon_upto(std::size_t n, std::size_t k, Visitor&& visit) {
    if (n == 0 || k == 0) {
        return;
    }
    const Letter top = static_cast<Letter>(k - 1);
    LetterSeq w{0};
    visit(LetterSpan(w));
    while (true) {
        const std::size_t root = w.size();
        while (w.size() < n) {
            w.push_back(w[w.size() % root]);
        }
        while (!w.empty() && w.back() == top) {
            w.pop_back();
        }
        if (w.empty()) {
            return;
        }
        ++w.back();
        visit(LetterSpan(w));
    }
}

// All Lyndon words of length exactly n over the first k letters of the
// default alphabet, in lexicographic order. canonical_only keeps one word
// per renaming class (those equal to their canonical form).
std::vector<Word> enumerate_lyndon(std::size_t n, std::size_t k, bool canonical_only = false);

// Minimum of the distinct-Lyndon-factor count over all Lyndon words of
// length n over every alphabet, with the full list of minimizers in
// canonical form (sorted).
struct MinProfileEntry {
    std::size_t n = 0;
    std::size_t ell = 0;
    std::vector<Word> extremal_words;
};

MinProfileEntry min_lyndon_profile(std::size_t n);

// Lower bound used to prune alphabet sizes in min_lyndon_profile: a Lyndon
// word of length n over exactly k letters has at least k + bisection_chain(n)
// distinct Lyndon factors (the k letters, plus the chain w, w', w'', ... of
// nested bisection halves of length >= 2, whose lengths at least halve).
std::size_t bisection_chain_bound(std::size_t n);

// True when w is a(z)b over exactly two letters a < b with z central.
// Such words are exactly the Lyndon factors of Sturmian words. |w| >= 2
// required.
bool is_sturmian_lyndon(const Word& w);

}  // namespace lyn
