#include "lyn/fibonacci.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "lyn/lyndon.hpp"
#include "lyn/periods.hpp"

namespace lyn {

namespace {

// Order-preserving compression: the i-th smallest letter used by w maps to
// letter i. Unlike the first-occurrence renaming this keeps lexicographic
// structure, so it identifies exactly the order-isomorphic copies.
LetterSeq order_rename(LetterSpan w) {
    std::array<bool, OrderedAlphabet::kMaxSize> present{};
    for (Letter l : w) {
        present[l] = true;
    }
    std::array<Letter, OrderedAlphabet::kMaxSize> rank{};
    Letter next = 0;
    for (std::size_t l = 0; l < present.size(); ++l) {
        if (present[l]) {
            rank[l] = next++;
        }
    }
    LetterSeq out;
    out.reserve(w.size());
    for (Letter l : w) {
        out.push_back(rank[l]);
    }
    return out;
}

}  // namespace

std::uint64_t fib_number(int n) {
    if (n < 0 || n > kMaxFibNumberIndex) {
        throw std::invalid_argument("fib_number requires 0 <= n <= 92");
    }
    std::uint64_t a = 0;  // F_0
    std::uint64_t b = 1;  // F_1
    for (int i = 0; i < n; ++i) {
        const std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

FibVariant FibVariant::from_name(std::string_view name) {
    if (name == "ba") {
        return ba();
    }
    if (name == "ab") {
        return ab();
    }
    throw std::invalid_argument("unknown Fibonacci variant; expected \"ba\" or \"ab\"");
}

std::string FibVariant::name() const {
    return *this == ba() ? "ba" : "ab";
}

namespace {

LetterSeq fib_letters(int n, FibVariant v) {
    if (n < 1 || n > kMaxFibWordIndex) {
        throw std::invalid_argument("fib_word requires 1 <= n <= 32");
    }
    LetterSeq prev{v.f1};  // f_1
    if (n == 1) {
        return prev;
    }
    LetterSeq cur{v.f2};  // f_2
    for (int i = 3; i <= n; ++i) {
        LetterSeq next;
        next.reserve(cur.size() + prev.size());
        next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Word fib_word(int n, FibVariant v) {
    return Word(binary_alphabet(), fib_letters(n, v));
}

Word central_p(int n, FibVariant v) {
    if (n < 3) {
        throw std::invalid_argument("central_p requires n >= 3");
    }
    LetterSeq letters = fib_letters(n, v);
    letters.resize(letters.size() - 2);
    return Word(binary_alphabet(), std::move(letters));
}

Word fib_lyndon(int n, FibLyndonKind kind) {
    if (n < 3) {
        throw std::invalid_argument("fib_lyndon requires n >= 3");
    }
    LetterSeq p = central_p(n, FibVariant::ba()).letters();
    if (kind == FibLyndonKind::complement) {
        p = complement_binary(p);
    }
    LetterSeq letters;
    letters.reserve(p.size() + 2);
    letters.push_back(0);
    letters.insert(letters.end(), p.begin(), p.end());
    letters.push_back(1);
    return Word(binary_alphabet(), std::move(letters));
}

std::optional<int> fib_index_of_length(std::size_t len) {
    for (int n = 3; n <= kMaxFibNumberIndex; ++n) {
        const std::uint64_t f = fib_number(n);
        if (f == len) {
            return n;
        }
        if (f > len) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<int> is_fib_lyndon(const Word& w) {
    if (w.size() < 2) {
        return std::nullopt;
    }
    const std::optional<int> index = fib_index_of_length(w.size());

    // Period route: w = a . p . b with a < b, where a.p has period F_{n-1}
    // and p.b has period F_{n-2} (or the two periods swapped).
    bool period_route = false;
    if (index && distinct_letter_count(w.span()) <= 2 && is_lyndon(w.span())) {
        const Letter a = w[0];
        const Letter b = w[w.size() - 1];
        if (a < b) {
            const LetterSpan s = w.span();
            LetterSeq ap(s.begin(), s.end() - 1);              // a . p
            LetterSeq pb(s.begin() + 1, s.end());              // p . b
            const std::size_t f1 = static_cast<std::size_t>(fib_number(*index - 1));
            const std::size_t f2 = static_cast<std::size_t>(fib_number(*index - 2));
            period_route = (has_period(ap, f1) && has_period(pb, f2)) ||
                           (has_period(ap, f2) && has_period(pb, f1));
        }
    }

    // Pattern route: compare the order-preserving compression against both
    // generated patterns of the same length.
    bool pattern_route = false;
    if (index) {
        const LetterSeq packed = order_rename(w.span());
        pattern_route = packed == fib_lyndon(*index, FibLyndonKind::plain).letters() ||
                        packed == fib_lyndon(*index, FibLyndonKind::complement).letters();
    }

    if (period_route != pattern_route) {
        throw std::logic_error("is_fib_lyndon: period and pattern routes disagree");
    }
    return period_route ? index : std::nullopt;
}

Word fib_infinite_prefix(std::size_t length, FibVariant v) {
    if (length == 0) {
        return Word(binary_alphabet(), {});
    }
    if (length > fib_number(kMaxFibWordIndex)) {
        throw std::invalid_argument("fib_infinite_prefix supports lengths up to 2178309");
    }
    // f_2, f_3, ... is a chain of prefixes of the infinite word.
    LetterSeq prev{v.f1};
    LetterSeq cur{v.f2};
    while (cur.size() < length) {
        LetterSeq next;
        next.reserve(cur.size() + prev.size());
        next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(length);
    return Word(binary_alphabet(), std::move(cur));
}

std::size_t fib_profile_value(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("fib_profile_value requires n >= 1");
    }
    std::size_t k = 2;
    while (k + 1 <= kMaxFibNumberIndex && fib_number(static_cast<int>(k + 1)) <= n) {
        ++k;
    }
    return k;
}

}  // namespace lyn
