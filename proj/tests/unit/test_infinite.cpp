#include <string>
#include <vector>

#include "doctest.h"
#include "lyn/factors.hpp"
#include "lyn/fibonacci.hpp"
#include "lyn/infinite.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/word.hpp"

using namespace lyn;

namespace {
std::vector<std::string> strs(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) {
        out.push_back(w.str());
    }
    return out;
}
}  // namespace

TEST_CASE("morphism parsing and application") {
    const MorphismSpec m = MorphismSpec::parse("a->ab;b->a", binary_alphabet());
    CHECK(m.image(0) == LetterSeq{0, 1});
    CHECK(m.image(1) == LetterSeq{0});
    CHECK(m.min_image_length() == 1);
    CHECK(m.max_image_length() == 2);
    CHECK(m.prolongable_on(0));
    CHECK_FALSE(m.prolongable_on(1));
    const Word w = Word::parse("aba", binary_alphabet());
    CHECK(Word(binary_alphabet(), m.apply(w.span())).str() == "abaab");
    const MorphismSpec mm = m.composed_with_self();
    CHECK(mm.image(0) == LetterSeq{0, 1, 0});
    CHECK_THROWS_AS(MorphismSpec::parse("a->ab", binary_alphabet()),
                    std::invalid_argument);
    CHECK_THROWS_AS(MorphismSpec::parse("a->;b->a", binary_alphabet()),
                    std::invalid_argument);
    CHECK_THROWS_AS(MorphismSpec::parse("a->ab;a->a;b->b", binary_alphabet()),
                    std::invalid_argument);
}

TEST_CASE("source parsing and prefixes") {
    const InfiniteSource p = InfiniteSource::parse("periodic:ab");
    CHECK(p.kind() == InfiniteSource::Kind::periodic);
    CHECK(p.prefix(5).str() == "ababa");
    CHECK(p.exact_analysis());

    const InfiniteSource u = InfiniteSource::parse("ultper:head=aab,u=ab");
    CHECK(u.kind() == InfiniteSource::Kind::ultimately_periodic);
    CHECK(u.prefix(7).str() == "aababab");

    const InfiniteSource f = InfiniteSource::parse("fib:ba");
    CHECK(f.prefix(8).str() == "abaababa");
    CHECK(f.exact_analysis());

    const InfiniteSource m = InfiniteSource::parse("morphic:a->ab;b->a;seed=a");
    CHECK(m.kind() == InfiniteSource::Kind::morphic);
    CHECK(m.prefix(8).str() == "abaababa");
    CHECK_FALSE(m.exact_analysis());

    const InfiniteSource g = InfiniteSource::parse("morphic:a->aab;b->aaab;seed=a");
    CHECK(g.prefix(8).str() == "aabaabaa");
    CHECK(g.prefix(16).str() == "aabaabaaabaabaab");

    const InfiniteSource gi = InfiniteSource::parse("morphic:a->aab;b->aaab;base=fib:ba");
    CHECK(gi.kind() == InfiniteSource::Kind::morphic_image);
    CHECK(gi.prefix(8).str() == "aabaaaba");
    CHECK(gi.prefix(16).str() == "aabaaabaabaabaaa");

    CHECK_THROWS_AS(InfiniteSource::parse("periodic:abab"), std::invalid_argument);
    CHECK_THROWS_AS(InfiniteSource::parse("nonsense:ab"), std::invalid_argument);
    CHECK_THROWS_AS(InfiniteSource::parse("fib:xy"), std::invalid_argument);
    CHECK_THROWS_AS(InfiniteSource::parse("morphic:a->b;b->a;seed=a"),
                    std::invalid_argument);  // not prolongable
}

TEST_CASE("profiles of periodic sources are exact") {
    const AlphabetRef zo = make_alphabet("01");
    const InfiniteSource x =
        InfiniteSource::periodic(Word::parse("000001", zo));
    const LyndonProfile px = lyndon_profile(x, 8);
    CHECK(px.exactness == LyndonProfile::Exactness::exact);
    CHECK(px.cumulative == std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 7, 7});

    const InfiniteSource y =
        InfiniteSource::periodic(Word::parse("000101", zo));
    const LyndonProfile py = lyndon_profile(y, 8);
    CHECK(py.cumulative == px.cumulative);

    const InfiniteSource ab = InfiniteSource::parse("periodic:ab");
    const LyndonProfile pab = lyndon_profile(ab, 4);
    CHECK(pab.cumulative == std::vector<std::size_t>{2, 3, 3, 3});
    CHECK(strs(pab.witnesses[1]) == std::vector<std::string>{"ab"});
}

TEST_CASE("fibonacci profile matches the closed form and the scan") {
    const InfiniteSource f = InfiniteSource::fibonacci(FibVariant::ba());
    const LyndonProfile p = lyndon_profile(f, 21);
    CHECK(p.exactness == LyndonProfile::Exactness::exact);
    for (std::size_t n = 1; n <= 21; ++n) {
        CHECK(p.cumulative[n - 1] == fib_profile_value(n));
    }
    CHECK(strs(p.witnesses[0]) == std::vector<std::string>{"a", "b"});
    CHECK(strs(p.witnesses[1]) == std::vector<std::string>{"ab"});
    CHECK(strs(p.witnesses[4]) == std::vector<std::string>{"aabab"});
    CHECK(strs(p.witnesses[12]) == std::vector<std::string>{"aabaababaabab"});
    CHECK(p.witnesses[3].empty());

    // The same profile observed on a long prefix through the morphic route.
    const InfiniteSource m = InfiniteSource::parse("morphic:a->ab;b->a;seed=a");
    const LyndonProfile q = lyndon_profile(m, 21, 4096);
    CHECK(q.exactness == LyndonProfile::Exactness::lower_bound);
    CHECK(q.cumulative == p.cumulative);
}

TEST_CASE("profile comparison margins") {
    const InfiniteSource g = InfiniteSource::parse("morphic:a->aab;b->aaab;base=fib:ba");
    const ProfileComparison c = compare_profile_to_fib(g, 5);
    CHECK(c.margins == std::vector<long long>{0, 0, 0, 1, 0});
    CHECK(c.verdict == ProfileComparison::Verdict::nonnegative);

    const ProfileComparison cf =
        compare_profile_to_fib(InfiniteSource::fibonacci(FibVariant::ba()), 13);
    for (long long margin : cf.margins) {
        CHECK(margin == 0);
    }

    const ProfileComparison cp =
        compare_profile_to_fib(InfiniteSource::parse("periodic:ab"), 5);
    CHECK(cp.verdict == ProfileComparison::Verdict::ultimately_periodic_certified);
}

TEST_CASE("streaming factorization of the fibonacci word") {
    const InfiniteSource f = InfiniteSource::fibonacci(FibVariant::ba());
    const StreamFactorization s = stream_cfl(f, 3);
    CHECK(strs(s.finalized) ==
          std::vector<std::string>{"ab", "aabab", "aabaababaabab"});
    const StreamFactorization s2 = stream_cfl(f, 100, 200);
    CHECK(s2.finalized.size() >= 4);
    CHECK(s2.consumed <= 200);
    CHECK(strs(s2.finalized)[3].substr(0, 2) == "aa");
}

TEST_CASE("streaming finalizes only drop-committed factors") {
    const AlphabetRef ab = binary_alphabet();
    // A prefix that is itself lyndon finalizes nothing: an extension could
    // absorb it into one factor.
    const StreamFactorization s1 =
        stream_cfl_scan(Word::parse("aba", ab).span(), 10, ab);
    CHECK(s1.finalized.empty());
    CHECK(s1.pending_len == 3);
    const StreamFactorization s2 =
        stream_cfl_scan(Word::parse("abaa", ab).span(), 10, ab);
    CHECK(strs(s2.finalized) == std::vector<std::string>{"ab"});
    CHECK(s2.pending_len == 2);
    const StreamFactorization s3 =
        stream_cfl_scan(Word::parse("ba", ab).span(), 10, ab);
    CHECK(strs(s3.finalized) == std::vector<std::string>{"b"});
}

TEST_CASE("streaming periodic sources uses the closed form") {
    const StreamFactorization s =
        stream_cfl(InfiniteSource::parse("periodic:ab"), 5);
    CHECK(strs(s.finalized) ==
          std::vector<std::string>{"ab", "ab", "ab", "ab", "ab"});
    CHECK(s.pending_len == 0);

    const StreamFactorization t =
        stream_cfl(InfiniteSource::parse("periodic:ba"), 4);
    CHECK(strs(t.finalized) == std::vector<std::string>{"b", "ab", "ab", "ab"});

    const StreamFactorization u =
        stream_cfl(InfiniteSource::parse("ultper:head=b,u=ab"), 3);
    CHECK(strs(u.finalized) == std::vector<std::string>{"b", "ab", "ab"});

    const StreamFactorization v =
        stream_cfl(InfiniteSource::parse("ultper:head=aba,u=ab"), 3);
    CHECK(strs(v.finalized) == std::vector<std::string>{"ab"});

    // aab(ab)^k is lyndon for every k, so nothing ever finalizes.
    const StreamFactorization z =
        stream_cfl(InfiniteSource::parse("ultper:head=aab,u=ab"), 3, 512);
    CHECK(z.finalized.empty());
    CHECK(z.pending_len > 0);
}

TEST_CASE("factor sets of sources") {
    const AlphabetRef zo = make_alphabet("01");
    const SourceFactors fx =
        factor_set_of_source(InfiniteSource::periodic(Word::parse("000001", zo)), 12);
    const SourceFactors fy =
        factor_set_of_source(InfiniteSource::periodic(Word::parse("000101", zo)), 12);
    CHECK(fx.exact);
    CHECK(fy.exact);
    CHECK_FALSE(fx.factors == fy.factors);
    CHECK(fx.factors.contains(Word::parse("00000", zo).span()));
    CHECK_FALSE(fy.factors.contains(Word::parse("00000", zo).span()));

    const SourceFactors ff =
        factor_set_of_source(InfiniteSource::fibonacci(FibVariant::ba()), 3);
    CHECK(ff.exact);
    CHECK(ff.factors.count_of_length(1) == 2);
    CHECK(ff.factors.count_of_length(2) == 3);
    CHECK(ff.factors.count_of_length(3) == 4);
    CHECK_FALSE(ff.factors.contains(Word::parse("bb", binary_alphabet()).span()));
}

TEST_CASE("certified windows for substitutions") {
    const MorphismSpec fib = MorphismSpec::parse("a->ab;b->a", binary_alphabet());
    const CertifiedWindow cw = certified_fixed_point_window(fib, 0, 8);
    CHECK(cw.max_len >= 8);
    CHECK(cw.window.str().substr(0, 8) == "abaababa");
    const FactorSet fs = factor_set(cw.window, 3);
    CHECK(fs.count_of_length(2) == 3);

    const CertifiedWindow cf = certified_fib_window(FibVariant::ba(), 8);
    CHECK(cf.window.size() >= 8);
    CHECK(factor_set(cf.window, 8) ==
          factor_set(fib_infinite_prefix(4096), 8));

    const MorphismSpec g = MorphismSpec::parse("a->aab;b->aaab", binary_alphabet());
    const CertifiedWindow ci = certified_image_window(g, fib, 0, 5);
    CHECK(ci.window.str().substr(0, 8) == "aabaaaba");
    // No length-5 lyndon factor in the image.
    bool found = false;
    const LetterSpan span = ci.window.span();
    for (std::size_t i = 0; i + 5 <= span.size(); ++i) {
        if (is_lyndon(span.subspan(i, 5))) {
            found = true;
        }
    }
    CHECK_FALSE(found);

    // The fixed point of the same substitution avoids them too: no bb, no
    // bab and no aaaa can occur, which rules out every candidate.
    const CertifiedWindow cg = certified_fixed_point_window(g, 0, 5);
    bool found_fp = false;
    for (std::size_t i = 0; i + 5 <= cg.window.size(); ++i) {
        if (is_lyndon(cg.window.span().subspan(i, 5))) {
            found_fp = true;
        }
    }
    CHECK_FALSE(found_fp);
    // A fixed point that does keep length-5 factors: the fibonacci word.
    CHECK(factor_set(cw.window, 5).contains(Word::parse("aabab", binary_alphabet()).span()));
}

TEST_CASE("kind accessors guard their kind") {
    const InfiniteSource p = InfiniteSource::parse("periodic:ab");
    CHECK(p.periodic_part().str() == "ab");
    CHECK_THROWS_AS(p.morphism(), std::logic_error);
    const InfiniteSource f = InfiniteSource::parse("fib:ab");
    CHECK(f.variant().name() == "ab");
    CHECK_THROWS_AS(f.head(), std::logic_error);
}
