#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lyn/factors.hpp"
#include "lyn/fibonacci.hpp"
#include "lyn/word.hpp"

namespace lyn {

// A substitution sending every letter of an alphabet to a nonempty word
// over the same alphabet.
class MorphismSpec {
public:
    MorphismSpec(AlphabetRef alphabet, std::vector<LetterSeq> images);

    // Rule syntax: "a->aab;b->aaab". Every alphabet letter needs a rule.
    static MorphismSpec parse(std::string_view rules, AlphabetRef alphabet);

    const AlphabetRef& alphabet() const { return alphabet_; }
    const LetterSeq& image(Letter l) const;
    std::size_t min_image_length() const;
    std::size_t max_image_length() const;
    // image(seed) starts with seed and is longer than one letter, so the
    // iterates of seed converge to a fixed point.
    bool prolongable_on(Letter seed) const;
    LetterSeq apply(LetterSpan w) const;
    MorphismSpec composed_with_self() const;
    std::string describe() const;

private:
    AlphabetRef alphabet_;
    std::vector<LetterSeq> images_;
};

// A finitely described infinite word: u^w, head.u^w, the fixed point of a
// substitution, the image of the infinite Fibonacci word under a
// substitution, or the infinite Fibonacci word itself.
class InfiniteSource {
public:
    enum class Kind { periodic, ultimately_periodic, morphic, morphic_image, fibonacci };

    static InfiniteSource periodic(Word u);                            // u primitive, nonempty
    static InfiniteSource ultimately_periodic(Word head, Word u);      // u primitive; head may be empty
    static InfiniteSource morphic(MorphismSpec m, Letter seed);        // fixed point from seed
    static InfiniteSource morphic_image(MorphismSpec m, FibVariant base);
    static InfiniteSource fibonacci(FibVariant v);

    // Grammar: "periodic:ab" | "ultper:head=aab,u=ab"
    //        | "morphic:a->aab;b->aaab;seed=a"
    //        | "morphic:a->aab;b->aaab;base=fib:ba"  (image of the Fibonacci word)
    //        | "fib:ba" | "fib:ab"
    static InfiniteSource parse(std::string_view text, AlphabetRef alphabet = binary_alphabet());

    Kind kind() const;
    const AlphabetRef& alphabet() const;
    // True when factor analysis of this source is exact by construction
    // (periodic, ultimately periodic, Fibonacci).
    bool exact_analysis() const;
    Word prefix(std::size_t length) const;
    std::string describe() const;

    // Kind-specific accessors; throw std::logic_error on a kind mismatch.
    const Word& periodic_part() const;          // periodic / ultimately periodic
    const Word& head() const;                   // ultimately periodic
    const MorphismSpec& morphism() const;       // morphic / morphic_image
    Letter seed() const;                        // morphic
    FibVariant variant() const;                 // fibonacci / morphic_image

private:
    struct PeriodicData { Word u; };
    struct UltPerData { Word head; Word u; };
    struct MorphicData { MorphismSpec m; Letter seed_letter; };
    struct MorphicImageData { MorphismSpec m; FibVariant base; };
    struct FibData { FibVariant v; };

    explicit InfiniteSource(std::variant<PeriodicData, UltPerData, MorphicData,
                                         MorphicImageData, FibData> data);

    std::variant<PeriodicData, UltPerData, MorphicData, MorphicImageData, FibData> data_;
};

// Counts and witnesses of the distinct Lyndon factors of an infinite word,
// by factor length.
struct LyndonProfile {
    enum class Exactness { exact, lower_bound };

    std::size_t n_max = 0;
    // cumulative[i] = number of distinct Lyndon factors of length <= i + 1.
    std::vector<std::size_t> cumulative;
    // witnesses[i] = the distinct Lyndon factors of length i + 1, sorted.
    std::vector<std::vector<Word>> witnesses;
    Exactness exactness = Exactness::exact;
    // Prefix letters examined (0 when the profile is closed-form).
    std::size_t prefix_used = 0;
};

// Exact for periodic, ultimately periodic and Fibonacci sources; an
// observed lower bound from a prefix of `prefix_budget` letters for the
// morphic kinds. Requires 1 <= n_max <= prefix_budget.
LyndonProfile lyndon_profile(const InfiniteSource& s, std::size_t n_max,
                             std::size_t prefix_budget = 4096);

// Per-length comparison of a source's Lyndon profile against the
// Fibonacci word's profile.
struct ProfileComparison {
    enum class Verdict {
        nonnegative,                    // every margin >= 0 on the range checked
        ultimately_periodic_certified,  // a deficit, and the profile is exact
        inconclusive                    // a deficit on an observed lower bound
    };

    LyndonProfile profile;
    // margins[i] = (Lyndon factors of length <= i+1) - (Fibonacci value).
    std::vector<long long> margins;
    Verdict verdict;
};

ProfileComparison compare_profile_to_fib(const InfiniteSource& s, std::size_t n_max,
                                         std::size_t prefix_budget = 4096);

// Factorization of an infinite word into nonincreasing Lyndon factors,
// reported as the finalized factors plus the length of the examined tail
// that is not yet decided.
struct StreamFactorization {
    std::vector<Word> finalized;
    std::size_t pending_len = 0;
    std::size_t consumed = 0;
};

// Finalizes only factors that are correct for the infinite word: factors
// committed by a strict letter drop during the scan, plus the closed-form
// tail for declared (ultimately) periodic sources. Stops after
// `max_factors` factors or `letter_budget` letters, whichever comes first.
StreamFactorization stream_cfl(const InfiniteSource& s, std::size_t max_factors,
                               std::size_t letter_budget = 65536);

// The underlying scan over a concrete prefix: finalizes exactly the factors
// that are stable under every extension of the prefix.
StreamFactorization stream_cfl_scan(LetterSpan prefix, std::size_t max_factors,
                                    const AlphabetRef& alphabet);

// Factors of an infinite word up to a length bound.
struct SourceFactors {
    FactorSet factors;
    bool exact = false;
    std::size_t window_used = 0;
};

// Exact for periodic, ultimately periodic and Fibonacci sources; an
// observed subset from a `prefix_budget`-letter prefix for morphic kinds.
SourceFactors factor_set_of_source(const InfiniteSource& s, std::size_t max_len,
                                   std::size_t prefix_budget = 4096);

// A finite window W of an infinite word x together with a bound B such
// that the factors of W of length <= B are exactly the factors of x of
// length <= B. Obtained by iterating the defining substitution until the
// per-length counts of distinct factors stop changing; one stable step
// propagates to the whole limit because a factor of the next iterate is
// covered by the image of a short factor of the current one.
struct CertifiedWindow {
    Word window;
    std::size_t max_len = 0;   // certified bound B
    std::size_t iterations = 0;
};

// Fixed point of m at `seed`. Requires some power of m to expand every
// letter (min image length >= 2); m is squared as needed to reach one.
CertifiedWindow certified_fixed_point_window(const MorphismSpec& m, Letter seed,
                                             std::size_t max_len);

// Image h(x) of the fixed point x of m at `seed`; h need only be
// nonerasing. The base window is certified at bound max_len / min|h| + 2,
// which covers every short factor of the image.
CertifiedWindow certified_image_window(const MorphismSpec& h, const MorphismSpec& m,
                                       Letter seed, std::size_t max_len);

CertifiedWindow certified_fib_window(FibVariant v, std::size_t max_len);

// Dispatch: algebraic windows for periodic kinds, substitution certificates
// for Fibonacci and the morphic kinds.
CertifiedWindow certified_source_window(const InfiniteSource& s, std::size_t max_len);

}  // namespace lyn
