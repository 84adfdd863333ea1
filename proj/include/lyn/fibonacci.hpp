#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lyn/word.hpp"

namespace lyn {

// Largest index whose Fibonacci number fits in 64 bits.
inline constexpr int kMaxFibNumberIndex = 92;
// Cap on generated Fibonacci words: |f_32| = 2178309 letters.
inline constexpr int kMaxFibWordIndex = 32;

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
std::uint64_t fib_number(int n);

// Seed letters of the Fibonacci recursion f_1, f_2 (distinct letters of the
// two-letter alphabet); f_n = f_{n-1} f_{n-2}. The ba variant produces words
// starting "abaab..."; the ab variant their letter-for-letter complements.
struct FibVariant {
    Letter f1;
    Letter f2;

    static FibVariant ba() { return {1, 0}; }
    static FibVariant ab() { return {0, 1}; }
    static FibVariant from_name(std::string_view name);  // "ba" | "ab"
    std::string name() const;

    bool operator==(const FibVariant&) const = default;
};

// f_n over "ab"; |f_n| = F_n. Requires 1 <= n <= kMaxFibWordIndex.
Word fib_word(int n, FibVariant v = FibVariant::ba());

// f_n minus its last two letters; the palindromic word with coprime periods
// F_{n-2} and F_{n-1}. Requires n >= 3 (the result for n = 3 is empty).
Word central_p(int n, FibVariant v = FibVariant::ba());

enum class FibLyndonKind { plain, complement };

// a . p_n . b (plain) or a . complement(p_n) . b (complement), over "ab";
// the Lyndon conjugates of the two variants of f_n. Requires n >= 3.
Word fib_lyndon(int n, FibLyndonKind kind);

// When w is one of the two Fibonacci Lyndon word patterns (up to renaming
// its two letters), the index n with |w| = F_n; otherwise nullopt. Decided
// by the period test on a.p_w and p_w.b and cross-checked against the
// generated patterns; the two routes disagreeing is an internal error.
std::optional<int> is_fib_lyndon(const Word& w);

// The n >= 3 with F_n == len, when len is a Fibonacci number >= 2.
std::optional<int> fib_index_of_length(std::size_t len);

// Length-`length` prefix of the infinite Fibonacci word of the variant.
Word fib_infinite_prefix(std::size_t length, FibVariant v = FibVariant::ba());

// Number of Lyndon factors of the infinite Fibonacci word of length <= n:
// the unique k >= 2 with F_k <= n < F_{k+1}. Requires n >= 1.
std::size_t fib_profile_value(std::size_t n);

}  // namespace lyn
