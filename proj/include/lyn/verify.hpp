#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lyn/word.hpp"

namespace lyn {

// Result of one verification check. `violations` holds replayable
// counterexample descriptions; a check with none passes. `evidence` marks
// checks that gather support for an open statement rather than test a
// proved one: they never fail on the open statement itself.
struct CheckReport {
    enum class Verdict { pass, fail, evidence };

    std::string check_id;
    std::string scope;
    Verdict verdict = Verdict::pass;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;
};

// 0 requests one worker per hardware thread.
unsigned effective_jobs(unsigned requested);

// Smallest m >= 0 with phi^m >= n (phi the golden ratio), for n >= 1.
// Integer-only: phi^m = (L_m + F_m sqrt 5) / 2 with Lucas/Fibonacci pairs.
std::size_t ceil_log_phi(std::size_t n);
// The same value through long-double logarithms; a cross-check route.
std::size_t ceil_log_phi_float(std::size_t n);

// Sweeps every canonical Lyndon word with 2 <= |w| <= max_len over at most
// max_alphabet letters: the distinct-Lyndon-factor count is at least the
// largest n with F_n <= |w|, with equality exactly at the Fibonacci Lyndon
// words of Fibonacci length.
CheckReport check_main_theorem(std::size_t max_len, std::size_t max_alphabet,
                               unsigned jobs = 0);

// Same sweep: the count is at least ceil(log_phi |w|) + 1, with equality at
// every Fibonacci Lyndon word; also the two ceil_log_phi routes agree.
CheckReport check_log_phi(std::size_t max_len, std::size_t max_alphabet,
                          unsigned jobs = 0);

// Minimum Lyndon-factor counts over all Lyndon words of each length up to
// n_max, against frozen values, with the n = 5 and n = 6 minimizer sets;
// gathers evidence on which minimizers have central interiors.
CheckReport check_ell_and_conjecture(std::size_t n_max);

// Fibonacci-word suite: certified factor windows against the closed-form
// profile up to F_k_max letters, Lyndon conjugates as the witnesses, the
// generated Lyndon words and their recognizer, reversal-closure of
// conjugacy classes, and the palindromic prefix structure.
CheckReport check_fibonacci_suite(int k_max = 12);

// The two boundary phenomena: a substitution image of the Fibonacci word
// that loses a Lyndon length while keeping margins nonnegative, and a
// periodic pair sharing a profile with different factor sets.
CheckReport check_remarks();

// Exhaustive small-bound checks of the supporting lemmas: unbordered
// words, the three Lyndon characterizations, concatenation and extension,
// bisection, periodicity interaction, central words, factorization
// uniqueness, and recognizer soundness.
CheckReport check_lemma_suite(std::size_t max_len = 16);

// Runs a named suite: "all", "theorem", "logphi", "ell", "fib", "remarks"
// or "lemmas". max_len_override replaces each check's primary bound when
// nonzero.
std::vector<CheckReport> run_suite(const std::string& suite,
                                   std::size_t max_len_override = 0,
                                   unsigned jobs = 0);

}  // namespace lyn
