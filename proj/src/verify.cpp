#include "lyn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "lyn/central.hpp"
#include "lyn/factors.hpp"
#include "lyn/fibonacci.hpp"
#include "lyn/infinite.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/periods.hpp"

namespace lyn {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void finish(CheckReport& r, const Timer& t) {
    r.elapsed_seconds = t.seconds();
    if (!r.violations.empty()) {
        r.verdict = CheckReport::Verdict::fail;
    }
}

std::string seq_str(LetterSpan s, const AlphabetRef& alphabet) {
    std::string out;
    out.reserve(s.size());
    for (Letter l : s) {
        out += alphabet->symbol(l);
    }
    return out;
}

std::string size_list(const std::vector<std::size_t>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

// All binary words of the given length, as 0/1 letter sequences.
template <typename Fn>
void for_each_binary(std::size_t len, Fn&& fn) {
    LetterSeq w(len, 0);
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < len; ++i) {
            w[i] = static_cast<Letter>((mask >> i) & 1);
        }
        fn(LetterSpan(w));
    }
}

// Canonical Lyndon words over at most max_alphabet letters, grouped by
// length (index = length).
std::vector<std::vector<LetterSeq>> canonical_lyndon_by_length(std::size_t max_len,
                                                               std::size_t max_alphabet) {
    std::vector<std::vector<LetterSeq>> by_len(max_len + 1);
    visit_lyndon_upto(max_len, max_alphabet, [&](LetterSpan w) {
        LetterSeq seq(w.begin(), w.end());
        if (canonical_rename(w) == seq) {
            by_len[w.size()].push_back(std::move(seq));
        }
    });
    return by_len;
}

// Distinct Lyndon factors of `text` grouped by length 1..max_len; an
// independent window-side counterpart of the closed-form profiles.
std::vector<std::set<LetterSeq>> window_lyndon_by_length(LetterSpan text,
                                                         std::size_t max_len) {
    std::vector<std::set<LetterSeq>> out(max_len);
    for (std::size_t len = 1; len <= max_len && len <= text.size(); ++len) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i + len <= text.size(); ++i) {
            const LetterSpan f = text.subspan(i, len);
            const std::string_view sv(reinterpret_cast<const char*>(f.data()), f.size());
            if (!seen.insert(sv).second) {
                continue;
            }
            if (is_lyndon(f)) {
                out[len - 1].emplace(f.begin(), f.end());
            }
        }
    }
    return out;
}

struct SweepPart {
    std::vector<std::string> violations;
    std::size_t equality_cases = 0;
};

}  // namespace

unsigned effective_jobs(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::size_t ceil_log_phi(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ceil_log_phi requires n >= 1");
    }
    // phi^m = (L_m + F_m sqrt 5) / 2, so phi^m >= n iff L_m >= 2n or
    // 5 F_m^2 >= (2n - L_m)^2.
    const auto reaches = [n](std::uint64_t lucas, std::uint64_t fib) {
        const std::uint64_t target = 2 * static_cast<std::uint64_t>(n);
        if (lucas >= target) {
            return true;
        }
        const std::uint64_t d = target - lucas;
        return static_cast<unsigned __int128>(5) * fib * fib >=
               static_cast<unsigned __int128>(d) * d;
    };
    std::uint64_t lucas_prev = 2, lucas_cur = 1;  // L_0, L_1
    std::uint64_t fib_prev = 0, fib_cur = 1;      // F_0, F_1
    if (reaches(lucas_prev, fib_prev)) {
        return 0;
    }
    for (std::size_t m = 1; m <= 90; ++m) {
        if (reaches(lucas_cur, fib_cur)) {
            return m;
        }
        const std::uint64_t lucas_next = lucas_prev + lucas_cur;
        const std::uint64_t fib_next = fib_prev + fib_cur;
        lucas_prev = lucas_cur;
        lucas_cur = lucas_next;
        fib_prev = fib_cur;
        fib_cur = fib_next;
    }
    throw std::invalid_argument("ceil_log_phi: n out of supported range");
}

std::size_t ceil_log_phi_float(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ceil_log_phi_float requires n >= 1");
    }
    if (n == 1) {
        return 0;
    }
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    const long double x = static_cast<long double>(n);
    long long m = static_cast<long long>(std::ceil(std::log(x) / std::log(phi)));
    while (m > 0 && std::pow(phi, static_cast<long double>(m - 1)) >= x) {
        --m;
    }
    while (std::pow(phi, static_cast<long double>(m)) < x) {
        ++m;
    }
    return static_cast<std::size_t>(m);
}

namespace {

// Shared sweep machinery for the two global bounds. For every canonical
// Lyndon word of each length, `per_word` sees the word and its
// distinct-Lyndon-factor count and reports violations / equality hits.
template <typename PerWord>
SweepPart sweep_lengths(const std::vector<std::vector<LetterSeq>>& by_len,
                        std::size_t max_len, unsigned jobs, PerWord per_word) {
    SweepPart total;
    const unsigned workers = effective_jobs(jobs);
    for (std::size_t len = 2; len <= max_len; ++len) {
        const std::vector<LetterSeq>& words = by_len[len];
        if (words.empty()) {
            continue;
        }
        const std::size_t chunk =
            std::max<std::size_t>(128, (words.size() + workers - 1) / workers);
        std::vector<std::future<SweepPart>> parts;
        for (std::size_t begin = 0; begin < words.size(); begin += chunk) {
            const std::size_t end = std::min(words.size(), begin + chunk);
            parts.push_back(std::async(std::launch::async, [&, begin, end, len]() {
                SweepPart part;
                for (std::size_t idx = begin; idx < end; ++idx) {
                    per_word(words[idx], len, part);
                }
                return part;
            }));
        }
        for (auto& f : parts) {
            SweepPart part = f.get();
            total.equality_cases += part.equality_cases;
            for (std::string& v : part.violations) {
                total.violations.push_back(std::move(v));
            }
        }
    }
    return total;
}

}  // namespace

CheckReport check_main_theorem(std::size_t max_len, std::size_t max_alphabet,
                               unsigned jobs) {
    Timer t;
    CheckReport r;
    r.check_id = "theorem";
    r.scope = "canonical Lyndon words, 2 <= |w| <= " + std::to_string(max_len) +
              ", <= " + std::to_string(max_alphabet) + " letters";
    if (max_len < 2 || max_alphabet < 2 || max_alphabet > OrderedAlphabet::kMaxSize) {
        throw std::invalid_argument("check_main_theorem: bounds out of range");
    }
    const AlphabetRef alpha = prefix_alphabet(max_alphabet);
    const auto by_len = canonical_lyndon_by_length(max_len, max_alphabet);
    std::size_t words_checked = 0;
    for (std::size_t len = 2; len <= max_len; ++len) {
        words_checked += by_len[len].size();
    }

    const SweepPart part = sweep_lengths(
        by_len, max_len, jobs,
        [&](const LetterSeq& w, std::size_t len, SweepPart& out) {
            const std::size_t nstar = fib_profile_value(len);
            const bool fib_length = fib_number(static_cast<int>(nstar)) == len;
            const std::size_t count = lyndon_factor_count(w);
            const Word word(alpha, w);
            const std::optional<int> fib = is_fib_lyndon(word);
            if (count < nstar) {
                out.violations.push_back("count below the Fibonacci floor: " +
                                         word.str() + " has " + std::to_string(count) +
                                         " < " + std::to_string(nstar));
            }
            if (count == nstar) {
                ++out.equality_cases;
                if (!fib_length || !fib) {
                    out.violations.push_back("equality at a non-Fibonacci word: " +
                                             word.str() + " has exactly " +
                                             std::to_string(count));
                }
            }
            if (fib && count != nstar) {
                out.violations.push_back("Fibonacci Lyndon word misses equality: " +
                                         word.str() + " has " + std::to_string(count) +
                                         " != " + std::to_string(nstar));
            }
        });

    r.violations = part.violations;
    r.notes.push_back(std::to_string(words_checked) + " canonical Lyndon words checked");
    r.notes.push_back(std::to_string(part.equality_cases) +
                      " equality cases, all at Fibonacci Lyndon words");
    finish(r, t);
    return r;
}

CheckReport check_log_phi(std::size_t max_len, std::size_t max_alphabet, unsigned jobs) {
    Timer t;
    CheckReport r;
    r.check_id = "logphi";
    r.scope = "canonical Lyndon words, 2 <= |w| <= " + std::to_string(max_len) +
              ", <= " + std::to_string(max_alphabet) +
              " letters; ceiling routes on 1..1000000";
    if (max_len < 2 || max_alphabet < 2 || max_alphabet > OrderedAlphabet::kMaxSize) {
        throw std::invalid_argument("check_log_phi: bounds out of range");
    }
    for (std::size_t n = 1; n <= 1000000; ++n) {
        if (ceil_log_phi(n) != ceil_log_phi_float(n)) {
            r.violations.push_back("integer and float ceilings disagree at n = " +
                                   std::to_string(n));
        }
    }
    const AlphabetRef alpha = prefix_alphabet(max_alphabet);
    const auto by_len = canonical_lyndon_by_length(max_len, max_alphabet);

    const SweepPart part = sweep_lengths(
        by_len, max_len, jobs,
        [&](const LetterSeq& w, std::size_t len, SweepPart& out) {
            const std::size_t bound = ceil_log_phi(len) + 1;
            const std::size_t count = lyndon_factor_count(w);
            const Word word(alpha, w);
            if (count < bound) {
                out.violations.push_back("count below the logarithmic floor: " +
                                         word.str() + " has " + std::to_string(count) +
                                         " < " + std::to_string(bound));
            }
            if (count == bound) {
                ++out.equality_cases;
            }
            if (is_fib_lyndon(word) && count != bound) {
                out.violations.push_back("Fibonacci Lyndon word misses the logarithmic floor: " +
                                         word.str());
            }
        });

    r.violations.insert(r.violations.end(), part.violations.begin(), part.violations.end());
    r.notes.push_back(std::to_string(part.equality_cases) +
                      " words meet the logarithmic floor exactly");
    r.notes.push_back("integer and float ceilings agree on 1..1000000");
    finish(r, t);
    return r;
}

CheckReport check_ell_and_conjecture(std::size_t n_max) {
    Timer t;
    CheckReport r;
    r.check_id = "ell";
    r.scope = "minimum Lyndon-factor counts for 1 <= n <= " + std::to_string(n_max);
    r.verdict = CheckReport::Verdict::evidence;
    if (n_max == 0) {
        throw std::invalid_argument("check_ell_and_conjecture requires n_max >= 1");
    }

    const std::vector<std::pair<std::size_t, std::size_t>> frozen = {
        {1, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 5}, {6, 7}, {7, 6}, {8, 6}};
    const std::vector<std::string> minimizers6 = {"aaaaab", "aaabab", "aabbab",
                                                  "ababac", "ababbb", "abacac",
                                                  "abbbbb", "abcabb"};
    const std::vector<std::string> minimizers5 = {"aabab", "ababb"};

    for (std::size_t n = 1; n <= n_max; ++n) {
        const MinProfileEntry entry = min_lyndon_profile(n);
        for (const auto& [fn, fell] : frozen) {
            if (fn == n && entry.ell != fell) {
                r.violations.push_back("minimum count changed at n = " + std::to_string(n) +
                                       ": got " + std::to_string(entry.ell) +
                                       ", expected " + std::to_string(fell));
            }
        }
        std::vector<std::string> words;
        std::size_t ternary = 0;
        std::size_t sturmian = 0;
        std::vector<std::string> non_sturmian;
        for (const Word& w : entry.extremal_words) {
            words.push_back(w.str());
            if (distinct_letter_count(w.span()) == 3) {
                ++ternary;
            }
            if (n >= 2) {
                if (is_sturmian_lyndon(w)) {
                    ++sturmian;
                } else {
                    non_sturmian.push_back(w.str());
                }
            }
        }
        if (n == 5 && words != minimizers5) {
            r.violations.push_back("minimizers at n = 5 are not the two Fibonacci Lyndon words");
        }
        if (n == 6) {
            if (words != minimizers6) {
                std::string got;
                for (const std::string& w : words) {
                    got += w + " ";
                }
                r.violations.push_back("minimizer set at n = 6 changed: " + got);
            }
            if (ternary != 3) {
                r.violations.push_back("expected exactly 3 three-letter minimizers at n = 6, got " +
                                       std::to_string(ternary));
            }
        }
        std::string note = "n=" + std::to_string(n) + " min=" + std::to_string(entry.ell) +
                           " minimizers=" + std::to_string(words.size());
        if (n == 1) {
            note += " (single letter; the central-interior question starts at n = 2)";
        } else if (non_sturmian.empty()) {
            note += ", all of the a(central)b form";
        } else {
            note += ", " + std::to_string(non_sturmian.size()) +
                    " outside the a(central)b form:";
            for (const std::string& w : non_sturmian) {
                note += " " + w;
            }
        }
        r.notes.push_back(note);
    }
    r.notes.push_back("n = 6 is the only length here with minimizers outside the a(central)b form");
    finish(r, t);
    return r;
}

CheckReport check_fibonacci_suite(int k_max) {
    Timer t;
    CheckReport r;
    r.check_id = "fib";
    r.scope = "Fibonacci words up to index " + std::to_string(k_max) +
              ", certified factor windows to length F_" + std::to_string(k_max);
    if (k_max < 5 || k_max > 12) {
        throw std::invalid_argument("check_fibonacci_suite requires 5 <= k_max <= 12");
    }
    const std::size_t bound = static_cast<std::size_t>(fib_number(k_max));
    const AlphabetRef alpha = binary_alphabet();

    for (const FibVariant v : {FibVariant::ba(), FibVariant::ab()}) {
        const CertifiedWindow cw = certified_fib_window(v, bound);
        const auto sets = window_lyndon_by_length(cw.window.span(), bound);
        std::size_t running = 0;
        for (std::size_t n = 1; n <= bound; ++n) {
            running += sets[n - 1].size();
            if (running != fib_profile_value(n)) {
                r.violations.push_back("variant " + v.name() +
                                       ": window count at length " + std::to_string(n) +
                                       " is " + std::to_string(running) + ", closed form says " +
                                       std::to_string(fib_profile_value(n)));
            }
            std::set<LetterSeq> expected;
            if (n == 1) {
                expected.insert(LetterSeq{0});
                expected.insert(LetterSeq{1});
            } else if (const std::optional<int> k = fib_index_of_length(n)) {
                if (*k >= 3) {
                    expected.insert(lyndon_conjugate(fib_word(*k, v).span()));
                }
            }
            if (sets[n - 1] != expected) {
                r.violations.push_back("variant " + v.name() +
                                       ": Lyndon factors of length " + std::to_string(n) +
                                       " are not the expected conjugates");
            }
        }
        r.notes.push_back("variant " + v.name() + ": certified window of " +
                          std::to_string(cw.window.size()) + " letters after " +
                          std::to_string(cw.iterations) + " substitution steps");
    }

    // Generated Lyndon words, their recognizer, and the conjugate identity.
    for (int n = 3; n <= k_max; ++n) {
        for (const FibLyndonKind kind : {FibLyndonKind::plain, FibLyndonKind::complement}) {
            const Word w = fib_lyndon(n, kind);
            if (!is_lyndon(w.span())) {
                r.violations.push_back("fib_lyndon(" + std::to_string(n) + ") is not Lyndon");
            }
            if (distinct_lyndon_factors(w).count != static_cast<std::size_t>(n)) {
                r.violations.push_back("fib_lyndon(" + std::to_string(n) +
                                       ") does not have exactly n distinct Lyndon factors");
            }
            if (is_fib_lyndon(w) != std::optional<int>(n)) {
                r.violations.push_back("recognizer misses fib_lyndon(" + std::to_string(n) + ")");
            }
        }
        if (fib_lyndon(n, FibLyndonKind::plain) !=
            lyndon_conjugate(fib_word(n, FibVariant::ba()))) {
            r.violations.push_back("plain Lyndon word differs from the ba conjugate at n = " +
                                   std::to_string(n));
        }
        if (fib_lyndon(n, FibLyndonKind::complement) !=
            lyndon_conjugate(fib_word(n, FibVariant::ab()))) {
            r.violations.push_back("complement Lyndon word differs from the ab conjugate at n = " +
                                   std::to_string(n));
        }
    }

    // Within each variant the conjugates form a prefix-or-suffix chain.
    for (const FibVariant v : {FibVariant::ba(), FibVariant::ab()}) {
        std::vector<LetterSeq> chain;
        for (int k = 3; k <= k_max; ++k) {
            chain.push_back(lyndon_conjugate(fib_word(k, v).span()));
        }
        for (std::size_t a = 0; a < chain.size(); ++a) {
            for (std::size_t b = a + 1; b < chain.size(); ++b) {
                const LetterSeq& small = chain[a];
                const LetterSeq& big = chain[b];
                const bool is_prefix = std::equal(small.begin(), small.end(), big.begin());
                const bool is_suffix =
                    std::equal(small.rbegin(), small.rend(), big.rbegin());
                if (!is_prefix && !is_suffix) {
                    r.violations.push_back("conjugate of index " + std::to_string(a + 3) +
                                           " is neither prefix nor suffix of index " +
                                           std::to_string(b + 3) + " (variant " + v.name() +
                                           ")");
                }
            }
        }
    }

    // The conjugacy class of f_n is closed under reversal.
    for (const FibVariant v : {FibVariant::ba(), FibVariant::ab()}) {
        for (int n = 3; n <= k_max; ++n) {
            const LetterSeq f = fib_word(n, v).letters();
            std::set<LetterSeq> rotations;
            for (std::size_t s = 0; s < f.size(); ++s) {
                LetterSeq rot(f.begin() + static_cast<std::ptrdiff_t>(s), f.end());
                rot.insert(rot.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(s));
                rotations.insert(std::move(rot));
            }
            for (const LetterSeq& rot : rotations) {
                LetterSeq rev(rot.rbegin(), rot.rend());
                if (!rotations.contains(rev)) {
                    r.violations.push_back("reversal leaves the conjugacy class of f_" +
                                           std::to_string(n) + " (variant " + v.name() + ")");
                    break;
                }
            }
        }
    }

    // Palindromic prefixes: structure of f_n minus its last two letters.
    for (int n = 3; n <= k_max; ++n) {
        const Word p = central_p(n);
        if (p.size() + 2 != fib_number(n)) {
            r.violations.push_back("central prefix length is off at n = " + std::to_string(n));
        }
        if (!is_palindrome(p) || !is_central(p)) {
            r.violations.push_back("central prefix fails palindrome/central at n = " +
                                   std::to_string(n));
        }
        const std::size_t p1 = static_cast<std::size_t>(fib_number(n - 2));
        const std::size_t p2 = static_cast<std::size_t>(fib_number(n - 1));
        if (central_word(p1, p2).word != p) {
            r.violations.push_back("central_word(F_" + std::to_string(n - 2) + ", F_" +
                                   std::to_string(n - 1) + ") differs from the prefix at n = " +
                                   std::to_string(n));
        }
        if (n >= 5) {
            const PeriodSet ps = period_set(p);
            if (!ps.contains(p1) || !ps.contains(p2) || ps.smallest() == 1) {
                r.violations.push_back("central prefix periods are wrong at n = " +
                                       std::to_string(n));
            }
        }
    }
    (void)alpha;
    finish(r, t);
    return r;
}

CheckReport check_remarks() {
    Timer t;
    CheckReport r;
    r.check_id = "remarks";
    r.scope = "substitution image of the Fibonacci word; periodic pair with a shared profile";

    // The image of the Fibonacci word under a -> aab, b -> aaab has no
    // Lyndon factor of length 5, while the Fibonacci word has exactly one.
    const AlphabetRef alpha = binary_alphabet();
    const MorphismSpec g = MorphismSpec::parse("a->aab;b->aaab", alpha);
    const InfiniteSource image = InfiniteSource::morphic_image(g, FibVariant::ba());
    const CertifiedWindow cw_image = certified_source_window(image, 5);
    const auto image_sets = window_lyndon_by_length(cw_image.window.span(), 5);
    if (!image_sets[4].empty()) {
        r.violations.push_back("the substitution image has a Lyndon factor of length 5");
    }
    const CertifiedWindow cw_fib =
        certified_source_window(InfiniteSource::fibonacci(FibVariant::ba()), 5);
    const auto fib_sets = window_lyndon_by_length(cw_fib.window.span(), 5);
    const std::set<LetterSeq> expected5 = {Word::parse("aabab", alpha).letters()};
    if (fib_sets[4] != expected5) {
        r.violations.push_back("the Fibonacci word's length-5 Lyndon factors are not {aabab}");
    }

    const ProfileComparison cmp = compare_profile_to_fib(image, 5, 4096);
    const std::vector<long long> expected_margins = {0, 0, 0, 1, 0};
    if (cmp.margins != expected_margins) {
        std::string got;
        for (long long m : cmp.margins) {
            got += std::to_string(m) + " ";
        }
        r.violations.push_back("image margins against the Fibonacci profile changed: " + got);
    }
    if (cmp.verdict != ProfileComparison::Verdict::nonnegative) {
        r.violations.push_back("image margins are not reported nonnegative");
    }
    r.notes.push_back("image of the Fibonacci word under a->aab, b->aaab: margins " +
                      std::string("[0,0,0,1,0], no length-5 Lyndon factor (certified)"));

    // Two periodic words with identical Lyndon profiles but different
    // factor sets, also after complementing either one.
    const AlphabetRef alpha01 = make_alphabet("01");
    const Word ux = Word::parse("000001", alpha01);
    const Word uy = Word::parse("000101", alpha01);
    const InfiniteSource x = InfiniteSource::periodic(ux);
    const InfiniteSource y = InfiniteSource::periodic(uy);
    const LyndonProfile px = lyndon_profile(x, 12);
    const LyndonProfile py = lyndon_profile(y, 12);
    if (px.cumulative != py.cumulative) {
        r.violations.push_back("the periodic pair no longer shares its Lyndon profile: " +
                               size_list(px.cumulative) + " vs " + size_list(py.cumulative));
    }
    const std::vector<std::size_t> expected_profile = {2, 3, 4, 5, 6, 7, 7, 7};
    for (std::size_t n = 1; n <= 8; ++n) {
        if (px.cumulative[n - 1] != expected_profile[n - 1]) {
            r.violations.push_back("periodic profile changed at length " + std::to_string(n));
        }
    }
    const FactorSet fx = factor_set_of_source(x, 12).factors;
    const FactorSet fy = factor_set_of_source(y, 12).factors;
    if (fx == fy) {
        r.violations.push_back("the periodic pair's factor sets coincide");
    }
    const InfiniteSource cx = InfiniteSource::periodic(complement(ux));
    const InfiniteSource cy = InfiniteSource::periodic(complement(uy));
    if (factor_set_of_source(cx, 12).factors == fy ||
        fx == factor_set_of_source(cy, 12).factors) {
        r.violations.push_back("complementing one periodic word makes the factor sets equal");
    }
    r.notes.push_back("periodic pair 000001 / 000101: equal profiles to length 12, "
                      "distinct factor sets, also after complementing either word");
    finish(r, t);
    return r;
}

namespace {

// Brute-force search for every factorization into a nonincreasing
// sequence of Lyndon words (the oracle for uniqueness).
void all_nonincreasing_factorizations(LetterSpan s, std::size_t pos,
                                      std::optional<LetterSpan> prev,
                                      std::vector<std::pair<std::size_t, std::size_t>>& stack,
                                      std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out,
                                      std::size_t& steps) {
    if (++steps > 1000000) {
        throw std::logic_error("factorization oracle exceeded its step budget");
    }
    if (pos == s.size()) {
        out.push_back(stack);
        return;
    }
    for (std::size_t len = 1; pos + len <= s.size(); ++len) {
        const LetterSpan f = s.subspan(pos, len);
        if (!is_lyndon_by_suffixes(f)) {
            continue;
        }
        if (prev && compare_lex(*prev, f) == std::strong_ordering::less) {
            continue;
        }
        stack.emplace_back(pos, len);
        all_nonincreasing_factorizations(s, pos + len, f, stack, out, steps);
        stack.pop_back();
    }
}

}  // namespace

CheckReport check_lemma_suite(std::size_t max_len) {
    Timer t;
    CheckReport r;
    r.check_id = "lemmas";
    if (max_len < 8) {
        throw std::invalid_argument("check_lemma_suite requires max_len >= 8");
    }
    const std::size_t len_border = max_len;
    const std::size_t len_routes = std::min<std::size_t>(max_len, 14);
    const std::size_t len_concat = std::min<std::size_t>(max_len, 12);
    const std::size_t len_ext = std::min<std::size_t>(max_len, 12);
    const std::size_t len_bis = std::min<std::size_t>(max_len, 12);
    const std::size_t len_fw = max_len;
    const std::size_t len_cmr = std::min<std::size_t>(max_len, 12);
    const std::size_t central_sum = max_len + 8;
    const std::size_t len_cfl = std::min<std::size_t>(max_len, 10);
    const std::size_t len_rec = std::min<std::size_t>(max_len, 13);
    r.scope = "binary words to length " + std::to_string(len_border) +
              "; central periods to p+q = " + std::to_string(central_sum);
    const AlphabetRef alpha = binary_alphabet();

    // Unbordered <=> smallest period is the length, against a direct
    // border scan.
    for (std::size_t len = 1; len <= len_border; ++len) {
        for_each_binary(len, [&](LetterSpan w) {
            bool bordered = false;
            for (std::size_t b = 1; b < len && !bordered; ++b) {
                bordered = std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(b),
                                      w.end() - static_cast<std::ptrdiff_t>(b));
            }
            const bool unbordered_direct = !bordered;
            if (period_set(w).is_unbordered() != unbordered_direct) {
                r.violations.push_back("border scan disagrees with the period set: " +
                                       seq_str(w, alpha));
            }
        });
    }

    // The three Lyndon characterizations agree.
    for (std::size_t len = 1; len <= len_routes; ++len) {
        for_each_binary(len, [&](LetterSpan w) {
            const bool a = is_lyndon(w);
            if (a != is_lyndon_by_suffixes(w) || a != is_lyndon_by_conjugacy(w)) {
                r.violations.push_back("Lyndon characterizations disagree: " +
                                       seq_str(w, alpha));
            }
        });
    }
    visit_lyndon_upto(9, 3, [&](LetterSpan w) {
        if (!is_lyndon_by_suffixes(w) || !is_lyndon_by_conjugacy(w)) {
            r.violations.push_back("three-letter Lyndon word fails a characterization: " +
                                   seq_str(w, prefix_alphabet(3)));
        }
    });

    // Binary Lyndon words by length, reused below.
    std::vector<std::vector<LetterSeq>> lyndon_by_len(len_bis + 1);
    visit_lyndon_upto(std::max(len_concat, len_bis), 2, [&](LetterSpan w) {
        if (w.size() < lyndon_by_len.size()) {
            lyndon_by_len[w.size()].emplace_back(w.begin(), w.end());
        }
    });

    // u < v Lyndon implies uv Lyndon.
    for (std::size_t lu = 1; lu < len_concat; ++lu) {
        for (std::size_t lv = 1; lu + lv <= len_concat; ++lv) {
            for (const LetterSeq& u : lyndon_by_len[lu]) {
                for (const LetterSeq& v : lyndon_by_len[lv]) {
                    if (compare_lex(u, v) != std::strong_ordering::less) {
                        continue;
                    }
                    LetterSeq uv = u;
                    uv.insert(uv.end(), v.begin(), v.end());
                    if (!is_lyndon(uv)) {
                        r.violations.push_back("concatenation is not Lyndon: " +
                                               seq_str(u, alpha) + " . " + seq_str(v, alpha));
                    }
                }
            }
        }
    }

    // Raising the last letter of a periodic extension gives a Lyndon word.
    for (std::size_t lw = 1; lw <= std::min(len_ext, lyndon_by_len.size() - 1); ++lw) {
        for (const LetterSeq& w : lyndon_by_len[lw]) {
            for (std::size_t lz = 1; lz <= len_ext; ++lz) {
                LetterSeq z(lz);
                for (std::size_t i = 0; i < lz; ++i) {
                    z[i] = w[i % w.size()];
                }
                if (z.back() != 0) {
                    continue;
                }
                z.back() = 1;
                if (!is_lyndon(z)) {
                    r.violations.push_back("raised periodic extension is not Lyndon: base " +
                                           seq_str(w, alpha) + ", length " +
                                           std::to_string(lz));
                }
            }
        }
    }

    // Bisection: construction invariants plus the longest-prefix property
    // and the strict growth of the factor counts.
    const auto bisection_cases = [&](const Word& word) {
        const StandardBisection b = standard_bisection(word);  // self-checks inside
        LetterSeq glued = b.lambda.letters();
        glued.insert(glued.end(), b.mu.letters().begin(), b.mu.letters().end());
        if (glued != word.letters()) {
            r.violations.push_back("bisection does not recompose: " + word.str());
        }
        for (std::size_t len = b.lambda.size() + 1; len < word.size(); ++len) {
            if (is_lyndon_by_suffixes(word.span().first(len))) {
                r.violations.push_back("a longer proper Lyndon prefix exists: " + word.str());
            }
        }
        const std::size_t cw = lyndon_factor_count(word.span());
        if (cw < lyndon_factor_count(b.lambda.span()) + 1 ||
            cw < lyndon_factor_count(b.mu.span()) + 1) {
            r.violations.push_back("factor count does not grow across the bisection: " +
                                   word.str());
        }
    };
    for (std::size_t len = 2; len <= len_bis; ++len) {
        for (const LetterSeq& w : lyndon_by_len[len]) {
            bisection_cases(Word(alpha, w));
        }
    }
    visit_lyndon_upto(8, 3, [&](LetterSpan w) {
        if (w.size() >= 2) {
            bisection_cases(Word(prefix_alphabet(3), LetterSeq(w.begin(), w.end())));
        }
    });

    // Two periods p, q with p + q - gcd(p, q) <= |w| force the period
    // gcd(p, q).
    for (std::size_t len = 1; len <= len_fw; ++len) {
        for_each_binary(len, [&](LetterSpan w) {
            const PeriodSet ps = period_set(w);
            for (std::size_t a = 0; a < ps.periods().size(); ++a) {
                for (std::size_t b = a + 1; b < ps.periods().size(); ++b) {
                    const std::size_t p = ps.periods()[a];
                    const std::size_t q = ps.periods()[b];
                    const std::size_t g = std::gcd(p, q);
                    if (p + q - g <= len && !ps.contains(g)) {
                        r.violations.push_back("period interaction fails: " + seq_str(w, alpha) +
                                               " with periods " + std::to_string(p) + ", " +
                                               std::to_string(q));
                    }
                }
            }
        });
    }

    // With periods q < p, the prefix and suffix of length |w| - q carry
    // periods q and p - q.
    for (std::size_t len = 2; len <= len_cmr; ++len) {
        for_each_binary(len, [&](LetterSpan w) {
            const PeriodSet ps = period_set(w);
            for (std::size_t a = 0; a < ps.periods().size(); ++a) {
                for (std::size_t b = a + 1; b < ps.periods().size(); ++b) {
                    const std::size_t q = ps.periods()[a];
                    const std::size_t p = ps.periods()[b];
                    const std::size_t m = len - q;
                    if (m == 0) {
                        continue;
                    }
                    const LetterSpan pref = w.first(m);
                    const LetterSpan suf = w.subspan(len - m);
                    if (!has_period(pref, q) || !has_period(suf, q) ||
                        !has_period(pref, p - q) || !has_period(suf, p - q)) {
                        r.violations.push_back("inherited periods fail: " + seq_str(w, alpha) +
                                               " with periods " + std::to_string(q) + " < " +
                                               std::to_string(p));
                    }
                }
            }
        });
    }

    // Central words for every coprime pair.
    for (std::size_t p = 1; p <= central_sum / 2; ++p) {
        for (std::size_t q = p; p + q <= central_sum; ++q) {
            if (std::gcd(p, q) != 1 || (p == q && p != 1)) {
                continue;
            }
            const CentralWitness cz = central_word(p, q);
            const Word& z = cz.word;
            if (z.size() + 2 != p + q) {
                r.violations.push_back("central word has the wrong length: p=" +
                                       std::to_string(p) + " q=" + std::to_string(q));
            }
            if (!is_palindrome(z) || !is_central(z)) {
                r.violations.push_back("central word fails palindrome/centrality: p=" +
                                       std::to_string(p) + " q=" + std::to_string(q));
            }
            if (!z.empty() &&
                (!has_period(z.span(), p) || !has_period(z.span(), q))) {
                r.violations.push_back("central word misses a defining period: p=" +
                                       std::to_string(p) + " q=" + std::to_string(q));
            }
            LetterSeq azb;
            azb.push_back(0);
            azb.insert(azb.end(), z.letters().begin(), z.letters().end());
            azb.push_back(1);
            if (!is_lyndon(azb)) {
                r.violations.push_back("a(central)b is not Lyndon: p=" + std::to_string(p) +
                                       " q=" + std::to_string(q));
            }
        }
    }
    if (is_central(Word::parse("ab", alpha)) || !is_central(Word::parse("aba", alpha)) ||
        !is_central(Word::parse("", alpha)) || is_central(Word::parse("aab", alpha))) {
        r.violations.push_back("centrality spot checks changed");
    }

    // The nonincreasing Lyndon factorization is unique and matches the
    // linear scan.
    for (std::size_t len = 1; len <= len_cfl; ++len) {
        for_each_binary(len, [&](LetterSpan w) {
            std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all;
            std::vector<std::pair<std::size_t, std::size_t>> stack;
            std::size_t steps = 0;
            all_nonincreasing_factorizations(w, 0, std::nullopt, stack, all, steps);
            if (all.size() != 1) {
                r.violations.push_back("factorization is not unique: " + seq_str(w, alpha) +
                                       " has " + std::to_string(all.size()));
                return;
            }
            std::vector<std::pair<std::size_t, std::size_t>> scan;
            duval_scan(w, [&](std::size_t start, std::size_t flen) {
                scan.emplace_back(start, flen);
            });
            if (scan != all[0]) {
                r.violations.push_back("scan factorization differs from the oracle: " +
                                       seq_str(w, alpha));
            }
        });
    }

    // Recognizer soundness against the literal generated patterns.
    std::set<LetterSeq> fib_patterns;
    for (int n = 3; fib_number(n) <= len_rec; ++n) {
        fib_patterns.insert(fib_lyndon(n, FibLyndonKind::plain).letters());
        fib_patterns.insert(fib_lyndon(n, FibLyndonKind::complement).letters());
    }
    for (std::size_t len = 1; len <= len_rec; ++len) {
        for_each_binary(len, [&](LetterSpan w) {
            const Word word(alpha, LetterSeq(w.begin(), w.end()));
            const bool expected = fib_patterns.contains(word.letters());
            const std::optional<int> got = is_fib_lyndon(word);
            if (expected != got.has_value()) {
                r.violations.push_back("recognizer disagrees with the pattern list: " +
                                       word.str());
            }
            if (got && fib_number(*got) != word.size()) {
                r.violations.push_back("recognizer returns a wrong index: " + word.str());
            }
        });
    }

    r.notes.push_back("border, characterization, concatenation, extension, bisection, "
                      "period-interaction, inherited-period, central, factorization and "
                      "recognizer checks all exhaustive at their bounds");
    finish(r, t);
    return r;
}

std::vector<CheckReport> run_suite(const std::string& suite, std::size_t max_len_override,
                                   unsigned jobs) {
    const bool all = suite == "all";
    std::vector<CheckReport> out;
    bool known = all;
    const auto bound = [max_len_override](std::size_t def) {
        return max_len_override == 0 ? def : max_len_override;
    };
    if (all || suite == "theorem") {
        known = true;
        out.push_back(check_main_theorem(std::max<std::size_t>(bound(18), 2), 2, jobs));
        out.push_back(
            check_main_theorem(std::max<std::size_t>(std::min(bound(18), std::size_t{12}), 2),
                               3, jobs));
    }
    if (all || suite == "logphi") {
        known = true;
        out.push_back(check_log_phi(std::max<std::size_t>(bound(18), 2), 2, jobs));
        out.push_back(
            check_log_phi(std::max<std::size_t>(std::min(bound(18), std::size_t{12}), 2), 3,
                          jobs));
    }
    if (all || suite == "ell") {
        known = true;
        out.push_back(check_ell_and_conjecture(bound(12)));
    }
    if (all || suite == "fib") {
        known = true;
        const std::size_t k = bound(12);
        out.push_back(check_fibonacci_suite(static_cast<int>(std::clamp<std::size_t>(k, 5, 12))));
    }
    if (all || suite == "remarks") {
        known = true;
        out.push_back(check_remarks());
    }
    if (all || suite == "lemmas") {
        known = true;
        out.push_back(check_lemma_suite(std::max<std::size_t>(bound(16), 8)));
    }
    if (!known) {
        throw std::invalid_argument(
            "unknown suite; expected all, theorem, logphi, ell, fib, remarks or lemmas");
    }
    return out;
}

}  // namespace lyn
