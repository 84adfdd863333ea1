#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lyn/alphabet.hpp"
#include "lyn/central.hpp"
#include "lyn/factors.hpp"
#include "lyn/fibonacci.hpp"
#include "lyn/infinite.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/periods.hpp"
#include "lyn/verify.hpp"
#include "lyn/word.hpp"

using json = nlohmann::ordered_json;

namespace {

json word_list(const std::vector<lyn::Word>& words) {
    json a = json::array();
    for (const lyn::Word& w : words) {
        a.push_back(w.str());
    }
    return a;
}

std::string joined(const std::vector<lyn::Word>& words, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += words[i].str();
    }
    return out;
}

std::string shown(const lyn::Word& w) {
    return w.empty() ? std::string("(empty)") : w.str();
}

struct AnalyzeOpts {
    std::string word;
    std::string alphabet = "ab";
    std::string format = "text";
};

int run_analyze(const AnalyzeOpts& o) {
    const lyn::AlphabetRef alpha = lyn::make_alphabet(o.alphabet);
    const lyn::Word w = lyn::Word::parse(o.word, alpha);
    if (w.empty()) {
        throw std::invalid_argument("analyze requires a nonempty word");
    }
    const bool lyndon = lyn::is_lyndon(w);
    const lyn::PeriodSet periods = lyn::period_set(w);
    const lyn::LyndonFactors factors = lyn::distinct_lyndon_factors(w);
    std::optional<lyn::StandardBisection> bis;
    if (lyndon && w.size() >= 2) {
        bis = lyn::standard_bisection(w);
    }
    if (o.format == "json") {
        json out;
        out["alphabet"] = alpha->symbols();
        out["word"] = w.str();
        out["is_lyndon"] = lyndon;
        out["periods"] = periods.periods();
        out["smallest_period"] = periods.smallest();
        out["is_unbordered"] = periods.is_unbordered();
        if (bis) {
            out["bisection"] = {{"lambda", bis->lambda.str()}, {"mu", bis->mu.str()}};
        } else {
            out["bisection"] = nullptr;
        }
        out["lyndon_factors"] = word_list(factors.factors);
        out["count"] = factors.count;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << w.str() << "  (alphabet " << alpha->symbols() << ")\n";
    std::cout << "lyndon: " << (lyndon ? "yes" : "no") << "\n";
    std::cout << "periods:";
    for (std::size_t p : periods.periods()) {
        std::cout << " " << p;
    }
    std::cout << "  (smallest " << periods.smallest() << ", "
              << (periods.is_unbordered() ? "unbordered" : "bordered") << ")\n";
    if (bis) {
        std::cout << "bisection: " << bis->lambda.str() << " . " << bis->mu.str() << "\n";
    }
    std::cout << "distinct lyndon factors (" << factors.count << "): "
              << joined(factors.factors, " ") << "\n";
    return 0;
}

struct CflOpts {
    std::string word;
    std::string alphabet = "ab";
    std::string format = "text";
};

int run_cfl(const CflOpts& o) {
    const lyn::AlphabetRef alpha = lyn::make_alphabet(o.alphabet);
    const lyn::Word w = lyn::Word::parse(o.word, alpha);
    const lyn::CFLFactorization f = lyn::cfl_factorize(w);
    if (o.format == "json") {
        json out;
        out["word"] = w.str();
        out["factors"] = word_list(f.factors);
        out["num_factors"] = f.factors.size();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << w.str() << " = " << joined(f.factors, " . ") << "\n";
    return 0;
}

struct EnumerateOpts {
    std::size_t n = 0;
    std::size_t alphabet_size = 2;
    bool canonical = false;
    bool count_only = false;
    std::string format = "text";
};

int run_enumerate(const EnumerateOpts& o) {
    if (std::pow(static_cast<double>(o.alphabet_size), static_cast<double>(o.n)) > 2e8) {
        throw std::invalid_argument("enumeration bound too large; shrink n or the alphabet");
    }
    const std::vector<lyn::Word> words =
        lyn::enumerate_lyndon(o.n, o.alphabet_size, o.canonical);
    if (o.format == "json") {
        json out;
        out["n"] = o.n;
        out["alphabet_size"] = o.alphabet_size;
        out["canonical"] = o.canonical;
        out["count"] = words.size();
        if (!o.count_only) {
            out["words"] = word_list(words);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (o.count_only) {
        std::cout << words.size() << "\n";
        return 0;
    }
    if (o.format == "csv") {
        std::cout << "word\n";
    }
    for (const lyn::Word& w : words) {
        std::cout << w.str() << "\n";
    }
    return 0;
}

struct EllOpts {
    std::size_t max_n = 0;
    std::string format = "text";
};

int run_ell(const EllOpts& o) {
    std::vector<lyn::MinProfileEntry> rows;
    for (std::size_t n = 1; n <= o.max_n; ++n) {
        rows.push_back(lyn::min_lyndon_profile(n));
    }
    if (o.format == "json") {
        json out = json::array();
        for (const lyn::MinProfileEntry& e : rows) {
            json row;
            row["n"] = e.n;
            row["ell"] = e.ell;
            row["num_extremal"] = e.extremal_words.size();
            row["extremal_words"] = word_list(e.extremal_words);
            out.push_back(row);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (o.format == "csv") {
        std::cout << "n,ell,num_extremal,extremal_words\n";
        for (const lyn::MinProfileEntry& e : rows) {
            std::cout << e.n << "," << e.ell << "," << e.extremal_words.size() << ","
                      << joined(e.extremal_words, ";") << "\n";
        }
        return 0;
    }
    for (const lyn::MinProfileEntry& e : rows) {
        std::cout << "n=" << e.n << "  min=" << e.ell << "  minimizers ("
                  << e.extremal_words.size() << "): " << joined(e.extremal_words, " ")
                  << "\n";
    }
    return 0;
}

struct FibOpts {
    int n = 0;
    std::string variant = "ba";
    std::string kind = "word";
    std::string format = "text";
};

int run_fib(const FibOpts& o) {
    const lyn::FibVariant v = lyn::FibVariant::from_name(o.variant);
    lyn::Word w = [&] {
        if (o.kind == "word") {
            return lyn::fib_word(o.n, v);
        }
        if (o.kind == "central") {
            return lyn::central_p(o.n, v);
        }
        if (o.kind == "lyndon-plain") {
            return lyn::fib_lyndon(o.n, lyn::FibLyndonKind::plain);
        }
        return lyn::fib_lyndon(o.n, lyn::FibLyndonKind::complement);
    }();
    if (o.format == "json") {
        json out;
        out["n"] = o.n;
        out["variant"] = o.variant;
        out["kind"] = o.kind;
        out["length"] = w.size();
        out["word"] = w.str();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << shown(w) << "\n";
    return 0;
}

struct CentralOpts {
    std::size_t p = 0;
    std::size_t q = 0;
    std::string format = "text";
};

int run_central(const CentralOpts& o) {
    const lyn::CentralWitness cw = lyn::central_word(o.p, o.q);
    if (o.format == "json") {
        json out;
        out["p"] = cw.p;
        out["q"] = cw.q;
        out["length"] = cw.word.size();
        out["word"] = cw.word.str();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << shown(cw.word) << "\n";
    return 0;
}

struct ProfileOpts {
    std::string source;
    std::string alphabet = "ab";
    std::size_t max_n = 0;
    std::size_t prefix_budget = 4096;
    std::string format = "text";
};

const char* exactness_name(lyn::LyndonProfile::Exactness e) {
    return e == lyn::LyndonProfile::Exactness::exact ? "exact" : "lower_bound";
}

int run_profile(const ProfileOpts& o) {
    const lyn::AlphabetRef alpha = lyn::make_alphabet(o.alphabet);
    const lyn::InfiniteSource s = lyn::InfiniteSource::parse(o.source, alpha);
    const lyn::LyndonProfile p = lyn::lyndon_profile(s, o.max_n, o.prefix_budget);
    if (o.format == "json") {
        json out;
        out["source"] = s.describe();
        out["alphabet"] = s.alphabet()->symbols();
        out["n_max"] = p.n_max;
        out["prefix_budget"] = o.prefix_budget;
        out["prefix_used"] = p.prefix_used;
        out["exactness"] = exactness_name(p.exactness);
        json rows = json::array();
        for (std::size_t n = 1; n <= p.n_max; ++n) {
            json row;
            row["n"] = n;
            row["count"] = p.cumulative[n - 1];
            row["new_factors"] = word_list(p.witnesses[n - 1]);
            rows.push_back(row);
        }
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (o.format == "csv") {
        std::cout << "n,count,new_factors\n";
        for (std::size_t n = 1; n <= p.n_max; ++n) {
            std::cout << n << "," << p.cumulative[n - 1] << ","
                      << joined(p.witnesses[n - 1], ";") << "\n";
        }
        return 0;
    }
    std::cout << "source: " << s.describe() << "\n";
    std::cout << "profile is " << exactness_name(p.exactness);
    if (p.prefix_used > 0) {
        std::cout << " (prefix of " << p.prefix_used << " letters)";
    }
    std::cout << "\n";
    for (std::size_t n = 1; n <= p.n_max; ++n) {
        std::cout << "n=" << n << "  count=" << p.cumulative[n - 1];
        if (!p.witnesses[n - 1].empty()) {
            std::cout << "  new: " << joined(p.witnesses[n - 1], " ");
        }
        std::cout << "\n";
    }
    return 0;
}

struct StreamOpts {
    std::string source;
    std::string alphabet = "ab";
    std::size_t max_factors = 10;
    std::size_t letter_budget = 65536;
    std::string format = "text";
};

int run_stream(const StreamOpts& o) {
    const lyn::AlphabetRef alpha = lyn::make_alphabet(o.alphabet);
    const lyn::InfiniteSource s = lyn::InfiniteSource::parse(o.source, alpha);
    const lyn::StreamFactorization f = lyn::stream_cfl(s, o.max_factors, o.letter_budget);
    if (o.format == "json") {
        json out;
        out["source"] = s.describe();
        out["max_factors"] = o.max_factors;
        out["letter_budget"] = o.letter_budget;
        out["finalized"] = word_list(f.finalized);
        out["num_finalized"] = f.finalized.size();
        out["pending_len"] = f.pending_len;
        out["consumed"] = f.consumed;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "source: " << s.describe() << "\n";
    std::cout << "finalized (" << f.finalized.size() << "): " << joined(f.finalized, " ")
              << "\n";
    std::cout << "pending: " << f.pending_len << " letters, consumed: " << f.consumed
              << "\n";
    return 0;
}

struct CompareOpts {
    std::string source;
    std::string alphabet = "ab";
    std::size_t max_n = 0;
    std::size_t prefix_budget = 4096;
    std::string format = "text";
};

const char* verdict_name(lyn::ProfileComparison::Verdict v) {
    switch (v) {
        case lyn::ProfileComparison::Verdict::nonnegative:
            return "nonnegative";
        case lyn::ProfileComparison::Verdict::ultimately_periodic_certified:
            return "ultimately_periodic_certified";
        default:
            return "inconclusive";
    }
}

int run_compare(const CompareOpts& o) {
    const lyn::AlphabetRef alpha = lyn::make_alphabet(o.alphabet);
    const lyn::InfiniteSource s = lyn::InfiniteSource::parse(o.source, alpha);
    const lyn::ProfileComparison c = lyn::compare_profile_to_fib(s, o.max_n, o.prefix_budget);
    if (o.format == "json") {
        json out;
        out["source"] = s.describe();
        out["n_max"] = c.profile.n_max;
        out["exactness"] = exactness_name(c.profile.exactness);
        out["verdict"] = verdict_name(c.verdict);
        json rows = json::array();
        for (std::size_t n = 1; n <= c.profile.n_max; ++n) {
            json row;
            row["n"] = n;
            row["count"] = c.profile.cumulative[n - 1];
            row["fib"] = lyn::fib_profile_value(n);
            row["margin"] = c.margins[n - 1];
            rows.push_back(row);
        }
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (o.format == "csv") {
        std::cout << "n,count,fib,margin\n";
        for (std::size_t n = 1; n <= c.profile.n_max; ++n) {
            std::cout << n << "," << c.profile.cumulative[n - 1] << ","
                      << lyn::fib_profile_value(n) << "," << c.margins[n - 1] << "\n";
        }
        return 0;
    }
    std::cout << "source: " << s.describe() << "\n";
    for (std::size_t n = 1; n <= c.profile.n_max; ++n) {
        std::cout << "n=" << n << "  count=" << c.profile.cumulative[n - 1]
                  << "  fib=" << lyn::fib_profile_value(n) << "  margin=" << c.margins[n - 1]
                  << "\n";
    }
    std::cout << "verdict: " << verdict_name(c.verdict) << "\n";
    return 0;
}

struct VerifyOpts {
    std::string suite = "all";
    std::size_t max_len = 0;
    unsigned jobs = 0;
    bool as_json = false;
    std::string format = "text";
};

const char* report_verdict_name(lyn::CheckReport::Verdict v) {
    switch (v) {
        case lyn::CheckReport::Verdict::pass:
            return "pass";
        case lyn::CheckReport::Verdict::fail:
            return "fail";
        default:
            return "evidence";
    }
}

int run_verify(const VerifyOpts& o) {
    const std::vector<lyn::CheckReport> reports =
        lyn::run_suite(o.suite, o.max_len, o.jobs);
    std::size_t fails = 0;
    for (const lyn::CheckReport& r : reports) {
        if (r.verdict == lyn::CheckReport::Verdict::fail) {
            ++fails;
        }
    }
    if (o.as_json || o.format == "json") {
        json out = json::array();
        for (const lyn::CheckReport& r : reports) {
            json row;
            row["check"] = r.check_id;
            row["scope"] = r.scope;
            row["verdict"] = report_verdict_name(r.verdict);
            row["violations"] = r.violations;
            row["notes"] = r.notes;
            row["elapsed_seconds"] = r.elapsed_seconds;
            out.push_back(row);
        }
        std::cout << out.dump(2) << "\n";
        return fails == 0 ? 0 : 1;
    }
    for (const lyn::CheckReport& r : reports) {
        std::cout << "[" << report_verdict_name(r.verdict) << "] " << r.check_id << " — "
                  << r.scope << "  (" << r.elapsed_seconds << "s)\n";
        for (const std::string& note : r.notes) {
            std::cout << "    " << note << "\n";
        }
        const std::size_t shown_count = std::min<std::size_t>(r.violations.size(), 25);
        for (std::size_t i = 0; i < shown_count; ++i) {
            std::cout << "    ! " << r.violations[i] << "\n";
        }
        if (r.violations.size() > shown_count) {
            std::cout << "    ! ... and " << (r.violations.size() - shown_count)
                      << " more\n";
        }
    }
    std::cout << reports.size() << " checks, " << fails << " failed\n";
    return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lyndon words: counting, factorization, Fibonacci structure and "
                 "verification sweeps"};
    app.require_subcommand(0, 1);

    const auto text_json = CLI::IsMember({"text", "json"});
    const auto text_json_csv = CLI::IsMember({"text", "json", "csv"});

    AnalyzeOpts analyze_opts;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Periods, Lyndon status, bisection and Lyndon factors of a word");
    analyze->add_option("word", analyze_opts.word, "the word to analyze")->required();
    analyze->add_option("--alphabet", analyze_opts.alphabet, "ordered alphabet symbols")
        ->capture_default_str();
    analyze->add_option("--format", analyze_opts.format, "text or json")
        ->check(text_json)
        ->capture_default_str();

    CflOpts cfl_opts;
    CLI::App* cfl = app.add_subcommand(
        "cfl", "Factorization into nonincreasing Lyndon factors");
    cfl->add_option("word", cfl_opts.word, "the word to factorize")->required();
    cfl->add_option("--alphabet", cfl_opts.alphabet, "ordered alphabet symbols")
        ->capture_default_str();
    cfl->add_option("--format", cfl_opts.format, "text or json")
        ->check(text_json)
        ->capture_default_str();

    EnumerateOpts enum_opts;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "All Lyndon words of a given length");
    enumerate->add_option("--n", enum_opts.n, "word length")->required();
    enumerate->add_option("--alphabet-size", enum_opts.alphabet_size, "number of letters")
        ->check(CLI::Range(std::size_t{1}, std::size_t{36}))
        ->capture_default_str();
    enumerate->add_flag("--canonical", enum_opts.canonical,
                        "keep one word per letter-renaming class");
    enumerate->add_flag("--count-only", enum_opts.count_only, "print only the count");
    enumerate->add_option("--format", enum_opts.format, "text, json or csv")
        ->check(text_json_csv)
        ->capture_default_str();

    EllOpts ell_opts;
    CLI::App* ell = app.add_subcommand(
        "ell", "Minimum distinct-Lyndon-factor count over Lyndon words of each length");
    ell->add_option("--max-n", ell_opts.max_n, "largest length to profile")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{13}));
    ell->add_option("--format", ell_opts.format, "text, json or csv")
        ->check(text_json_csv)
        ->capture_default_str();

    FibOpts fib_opts;
    CLI::App* fib = app.add_subcommand(
        "fib", "Fibonacci words, their palindromic prefixes and Lyndon conjugates");
    fib->add_option("--n", fib_opts.n, "index")->required();
    fib->add_option("--variant", fib_opts.variant, "ba (f1=b,f2=a) or ab (f1=a,f2=b)")
        ->check(CLI::IsMember({"ba", "ab"}))
        ->capture_default_str();
    fib->add_option("--kind", fib_opts.kind,
                    "word, central, lyndon-plain or lyndon-complement")
        ->check(CLI::IsMember({"word", "central", "lyndon-plain", "lyndon-complement"}))
        ->capture_default_str();
    fib->add_option("--format", fib_opts.format, "text or json")
        ->check(text_json)
        ->capture_default_str();

    CentralOpts central_opts;
    CLI::App* central = app.add_subcommand(
        "central", "The central word with two coprime periods");
    central->add_option("--p", central_opts.p, "first period")->required();
    central->add_option("--q", central_opts.q, "second period")->required();
    central->add_option("--format", central_opts.format, "text or json")
        ->check(text_json)
        ->capture_default_str();

    ProfileOpts profile_opts;
    CLI::App* profile = app.add_subcommand(
        "profile", "Distinct Lyndon factors of an infinite word, by length");
    profile->add_option("--source", profile_opts.source,
                        "periodic:WORD | ultper:head=H,u=U | morphic:RULES;seed=X | "
                        "morphic:RULES;base=fib:ba | fib:ba | fib:ab")
        ->required();
    profile->add_option("--alphabet", profile_opts.alphabet, "ordered alphabet symbols")
        ->capture_default_str();
    profile->add_option("--max-n", profile_opts.max_n, "largest factor length")->required();
    profile->add_option("--prefix-budget", profile_opts.prefix_budget,
                        "prefix letters examined for substitution sources")
        ->capture_default_str();
    profile->add_option("--format", profile_opts.format, "text, json or csv")
        ->check(text_json_csv)
        ->capture_default_str();

    StreamOpts stream_opts;
    CLI::App* stream = app.add_subcommand(
        "stream", "Finalized Lyndon factors of an infinite word's factorization");
    stream->add_option("--source", stream_opts.source, "same grammar as profile")
        ->required();
    stream->add_option("--alphabet", stream_opts.alphabet, "ordered alphabet symbols")
        ->capture_default_str();
    stream->add_option("--max-factors", stream_opts.max_factors, "stop after this many")
        ->capture_default_str();
    stream->add_option("--letter-budget", stream_opts.letter_budget,
                       "largest prefix the scan may examine")
        ->capture_default_str();
    stream->add_option("--format", stream_opts.format, "text or json")
        ->check(text_json)
        ->capture_default_str();

    CompareOpts compare_opts;
    CLI::App* compare = app.add_subcommand(
        "compare", "Margins of a source's Lyndon profile over the Fibonacci word's");
    compare->add_option("--source", compare_opts.source, "same grammar as profile")
        ->required();
    compare->add_option("--alphabet", compare_opts.alphabet, "ordered alphabet symbols")
        ->capture_default_str();
    compare->add_option("--max-n", compare_opts.max_n, "largest factor length")->required();
    compare->add_option("--prefix-budget", compare_opts.prefix_budget,
                        "prefix letters examined for substitution sources")
        ->capture_default_str();
    compare->add_option("--format", compare_opts.format, "text, json or csv")
        ->check(text_json_csv)
        ->capture_default_str();

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the verification suites (exit 1 on any failed check)");
    verify->add_option("--suite", verify_opts.suite,
                       "all, theorem, logphi, ell, fib, remarks or lemmas")
        ->check(CLI::IsMember({"all", "theorem", "logphi", "ell", "fib", "remarks",
                               "lemmas"}))
        ->capture_default_str();
    verify->add_option("--max-len", verify_opts.max_len,
                       "override the primary sweep bound (0 keeps defaults)")
        ->capture_default_str();
    verify->add_option("--jobs", verify_opts.jobs, "worker threads (0 = all cores)")
        ->envname("LYNWORDS_JOBS")
        ->capture_default_str();
    verify->add_flag("--json", verify_opts.as_json, "machine-readable report");
    verify->add_option("--format", verify_opts.format, "text or json")
        ->check(text_json)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            return run_analyze(analyze_opts);
        }
        if (cfl->parsed()) {
            return run_cfl(cfl_opts);
        }
        if (enumerate->parsed()) {
            return run_enumerate(enum_opts);
        }
        if (ell->parsed()) {
            return run_ell(ell_opts);
        }
        if (fib->parsed()) {
            return run_fib(fib_opts);
        }
        if (central->parsed()) {
            return run_central(central_opts);
        }
        if (profile->parsed()) {
            return run_profile(profile_opts);
        }
        if (stream->parsed()) {
            return run_stream(stream_opts);
        }
        if (compare->parsed()) {
            return run_compare(compare_opts);
        }
        if (verify->parsed()) {
            return run_verify(verify_opts);
        }
        std::cout << app.help();
        return 2;
    } catch (const lyn::WordParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
