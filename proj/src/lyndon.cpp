#include "lyn/lyndon.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "lyn/central.hpp"
#include "lyn/periods.hpp"

namespace lyn {

namespace {

void require_nonempty(LetterSpan w, const char* who) {
    if (w.empty()) {
        throw std::invalid_argument(std::string(who) + " requires a nonempty word");
    }
}

}  // namespace

bool is_lyndon(LetterSpan w) {
    require_nonempty(w, "is_lyndon");
    // One left-to-right pass comparing the word against itself at the
    // current candidate period; w is Lyndon iff no proper suffix ever
    // compares <= the word, which reduces to finishing with i == 0.
    std::size_t i = 0;
    for (std::size_t j = 1; j < w.size(); ++j) {
        if (w[i] > w[j]) {
            return false;
        }
        i = (w[i] < w[j]) ? 0 : i + 1;
    }
    return i == 0;
}

bool is_lyndon(const Word& w) { return is_lyndon(w.span()); }

bool is_lyndon_by_suffixes(LetterSpan w) {
    require_nonempty(w, "is_lyndon_by_suffixes");
    for (std::size_t s = 1; s < w.size(); ++s) {
        if (compare_lex(w.subspan(s), w) != std::strong_ordering::greater) {
            return false;
        }
    }
    return true;
}

bool is_lyndon_by_conjugacy(LetterSpan w) {
    require_nonempty(w, "is_lyndon_by_conjugacy");
    if (!is_primitive(w)) {
        return false;
    }
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        // Compare w with its rotation starting at r without materializing it.
        for (std::size_t t = 0; t < n; ++t) {
            const Letter a = w[t];
            const Letter b = w[(r + t) % n];
            if (a < b) {
                break;
            }
            if (a > b) {
                return false;
            }
            if (t + 1 == n) {
                return false;  // equal rotation; cannot happen for primitive w
            }
        }
    }
    return true;
}

std::size_t least_rotation_index(LetterSpan w) {
    require_nonempty(w, "least_rotation_index");
    const std::size_t n = w.size();
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t k = 0;
    while (i < n && j < n && k < n) {
        const Letter a = w[(i + k) % n];
        const Letter b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) {
            i = i + k + 1;
        } else {
            j = j + k + 1;
        }
        if (i == j) {
            ++j;
        }
        k = 0;
    }
    return std::min(i, j);
}

LetterSeq lyndon_conjugate(LetterSpan w) {
    require_nonempty(w, "lyndon_conjugate");
    if (!is_primitive(w)) {
        throw std::domain_error("lyndon_conjugate requires a primitive word");
    }
    const std::size_t r = least_rotation_index(w);
    LetterSeq out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (!is_lyndon(out)) {
        throw std::logic_error("lyndon_conjugate produced a non-Lyndon rotation");
    }
    return out;
}

Word lyndon_conjugate(const Word& w) {
    return Word(w.alphabet(), lyndon_conjugate(w.span()));
}

StandardBisection standard_bisection(const Word& w) {
    if (w.size() < 2 || !is_lyndon(w.span())) {
        throw std::invalid_argument(
            "standard_bisection requires a Lyndon word of length >= 2");
    }
    const LetterSpan s = w.span();
    std::size_t lambda_len = 0;
    for (std::size_t len = w.size() - 1; len >= 1; --len) {
        if (is_lyndon(s.first(len))) {
            lambda_len = len;
            break;
        }
    }
    if (lambda_len == 0) {
        throw std::logic_error("standard_bisection found no Lyndon proper prefix");
    }
    StandardBisection b{Word(w.alphabet(), LetterSeq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(lambda_len))),
                        Word(w.alphabet(), LetterSeq(s.begin() + static_cast<std::ptrdiff_t>(lambda_len), s.end()))};
    // Consequences of the construction; a failure here is an internal bug.
    if (!is_lyndon(b.mu.span())) {
        throw std::logic_error("standard_bisection: right part is not Lyndon");
    }
    if (compare_lex(b.lambda.span(), s) != std::strong_ordering::less ||
        compare_lex(s, b.mu.span()) != std::strong_ordering::less) {
        throw std::logic_error("standard_bisection: ordering lambda < w < mu failed");
    }
    if (!is_periodic_extension(s.first(s.size() - 1), b.lambda.span())) {
        throw std::logic_error(
            "standard_bisection: w minus its last letter does not extend lambda periodically");
    }
    return b;
}

LyndonFactors distinct_lyndon_factors(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("distinct_lyndon_factors requires a nonempty word");
    }
    const LetterSpan s = w.span();
    std::set<LetterSeq> seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t len = 1; i + len <= s.size(); ++len) {
            const LetterSpan f = s.subspan(i, len);
            if (is_lyndon(f)) {
                seen.emplace(f.begin(), f.end());
            }
        }
    }
    LyndonFactors out;
    out.count = seen.size();
    out.factors.reserve(seen.size());
    for (const LetterSeq& f : seen) {
        out.factors.emplace_back(w.alphabet(), f);
    }
    return out;
}

std::size_t lyndon_factor_count(LetterSpan w) {
    require_nonempty(w, "lyndon_factor_count");
    std::set<LetterSeq> seen;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
            const LetterSpan f = w.subspan(i, len);
            if (is_lyndon(f)) {
                seen.emplace(f.begin(), f.end());
            }
        }
    }
    return seen.size();
}

CFLFactorization cfl_factorize(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("cfl_factorize requires a nonempty word");
    }
    CFLFactorization out;
    duval_scan(w.span(), [&](std::size_t start, std::size_t len) {
        const LetterSpan f = w.span().subspan(start, len);
        out.factors.emplace_back(w.alphabet(), LetterSeq(f.begin(), f.end()));
    });
    // The factorization must be nonincreasing and multiply back to w;
    // violations are internal bugs.
    std::size_t total = 0;
    for (std::size_t t = 0; t < out.factors.size(); ++t) {
        total += out.factors[t].size();
        if (t > 0 && compare_lex(out.factors[t - 1].span(), out.factors[t].span()) ==
                         std::strong_ordering::less) {
            throw std::logic_error("cfl_factorize: factors increase");
        }
    }
    if (total != w.size()) {
        throw std::logic_error("cfl_factorize: factor lengths do not sum to |w|");
    }
    return out;
}

std::vector<Word> enumerate_lyndon(std::size_t n, std::size_t k, bool canonical_only) {
    if (n == 0) {
        throw std::invalid_argument("enumerate_lyndon requires n >= 1");
    }
    const AlphabetRef alpha = prefix_alphabet(k);  // validates k
    std::vector<Word> out;
    visit_lyndon_upto(n, k, [&](LetterSpan w) {
        if (w.size() != n) {
            return;
        }
        LetterSeq seq(w.begin(), w.end());
        if (canonical_only && canonical_rename(w) != seq) {
            return;
        }
        out.emplace_back(alpha, std::move(seq));
    });
    return out;
}

std::size_t bisection_chain_bound(std::size_t n) {
    std::size_t c = 0;
    while (n > 1) {
        n = (n + 1) / 2;
        ++c;
    }
    return c;
}

MinProfileEntry min_lyndon_profile(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("min_lyndon_profile requires n >= 1");
    }
    if (n == 1) {
        return MinProfileEntry{1, 1, {Word(default_alphabet(), LetterSeq{0})}};
    }
    const std::size_t chain = bisection_chain_bound(n);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::set<LetterSeq> achievers;  // canonical letter patterns
    const std::size_t k_cap = std::min<std::size_t>(n, OrderedAlphabet::kMaxSize);
    for (std::size_t k = 2; k <= k_cap; ++k) {
        // Every Lyndon word over exactly k letters has at least k + chain
        // distinct Lyndon factors (its letters plus a strictly shrinking
        // chain of bisection halves), so once that floor exceeds the best
        // count found, no larger alphabet can tie.
        if (best != std::numeric_limits<std::size_t>::max() && k + chain > best) {
            break;
        }
        visit_lyndon_upto(n, k, [&](LetterSpan w) {
            if (w.size() != n || distinct_letter_count(w) != k) {
                return;
            }
            const std::size_t count = lyndon_factor_count(w);
            if (count < best) {
                best = count;
                achievers.clear();
            }
            if (count == best) {
                achievers.insert(canonical_rename(w));
            }
        });
    }
    MinProfileEntry entry;
    entry.n = n;
    entry.ell = best;
    entry.extremal_words.reserve(achievers.size());
    for (const LetterSeq& seq : achievers) {
        entry.extremal_words.emplace_back(default_alphabet(), seq);
    }
    return entry;
}

bool is_sturmian_lyndon(const Word& w) {
    if (w.size() < 2) {
        throw std::invalid_argument("is_sturmian_lyndon requires |w| >= 2");
    }
    if (distinct_letter_count(w.span()) != 2) {
        return false;
    }
    Letter lo = w[0];
    Letter hi = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) {
        lo = std::min(lo, w[i]);
        hi = std::max(hi, w[i]);
    }
    if (w[0] != lo || w[w.size() - 1] != hi) {
        return false;
    }
    return is_central(interior(w));
}

}  // namespace lyn
