#include "lyn/infinite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "lyn/lyndon.hpp"
#include "lyn/periods.hpp"

namespace lyn {

namespace {

std::string_view view_of(LetterSpan s) {
    return {reinterpret_cast<const char*>(s.data()), s.size()};
}

// Distinct factor counts of `text` for each length 1..max_len.
std::vector<std::size_t> factor_counts_by_length(LetterSpan text, std::size_t max_len) {
    std::vector<std::size_t> counts(max_len, 0);
    for (std::size_t len = 1; len <= max_len && len <= text.size(); ++len) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i + len <= text.size(); ++i) {
            seen.insert(view_of(text.subspan(i, len)));
        }
        counts[len - 1] = seen.size();
    }
    return counts;
}

// Distinct Lyndon factors of `text` grouped by length 1..max_len.
std::vector<std::set<LetterSeq>> lyndon_sets_by_length(LetterSpan text, std::size_t max_len) {
    std::vector<std::set<LetterSeq>> out(max_len);
    for (std::size_t len = 1; len <= max_len && len <= text.size(); ++len) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i + len <= text.size(); ++i) {
            const LetterSpan f = text.subspan(i, len);
            if (!seen.insert(view_of(f)).second) {
                continue;
            }
            if (is_lyndon(f)) {
                out[len - 1].emplace(f.begin(), f.end());
            }
        }
    }
    return out;
}

LyndonProfile profile_from_sets(std::vector<std::set<LetterSeq>> sets,
                                const AlphabetRef& alphabet, std::size_t n_max,
                                LyndonProfile::Exactness exactness,
                                std::size_t prefix_used) {
    LyndonProfile p;
    p.n_max = n_max;
    p.exactness = exactness;
    p.prefix_used = prefix_used;
    p.cumulative.reserve(n_max);
    p.witnesses.resize(n_max);
    std::size_t running = 0;
    for (std::size_t i = 0; i < n_max; ++i) {
        running += sets[i].size();
        p.cumulative.push_back(running);
        p.witnesses[i].reserve(sets[i].size());
        for (const LetterSeq& f : sets[i]) {
            p.witnesses[i].emplace_back(alphabet, f);
        }
    }
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// MorphismSpec

MorphismSpec::MorphismSpec(AlphabetRef alphabet, std::vector<LetterSeq> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (!alphabet_) {
        throw std::invalid_argument("MorphismSpec requires an alphabet");
    }
    if (images_.size() != alphabet_->size()) {
        throw std::invalid_argument("MorphismSpec needs one image per alphabet letter");
    }
    for (const LetterSeq& img : images_) {
        if (img.empty()) {
            throw std::invalid_argument("MorphismSpec images must be nonempty");
        }
        for (Letter l : img) {
            if (l >= alphabet_->size()) {
                throw std::invalid_argument("MorphismSpec image uses a letter outside the alphabet");
            }
        }
    }
}

MorphismSpec MorphismSpec::parse(std::string_view rules, AlphabetRef alphabet) {
    if (!alphabet) {
        throw std::invalid_argument("MorphismSpec::parse requires an alphabet");
    }
    std::vector<LetterSeq> images(alphabet->size());
    std::vector<bool> have(alphabet->size(), false);
    std::size_t pos = 0;
    while (pos <= rules.size()) {
        const std::size_t end = std::min(rules.find(';', pos), rules.size());
        const std::string_view rule = rules.substr(pos, end - pos);
        pos = end + 1;
        if (rule.empty()) {
            if (pos > rules.size()) {
                break;
            }
            throw std::invalid_argument("empty substitution rule");
        }
        const std::size_t arrow = rule.find("->");
        if (arrow == std::string_view::npos || arrow != 1) {
            throw std::invalid_argument("substitution rule must look like \"a->aab\": " +
                                        std::string(rule));
        }
        const std::optional<Letter> lhs = alphabet->index_of(rule[0]);
        if (!lhs) {
            throw std::invalid_argument(std::string("substitution rule for a letter outside the alphabet: ") +
                                        rule[0]);
        }
        if (have[*lhs]) {
            throw std::invalid_argument(std::string("duplicate substitution rule for letter ") + rule[0]);
        }
        const Word image = Word::parse(rule.substr(arrow + 2), alphabet);
        images[*lhs] = image.letters();
        have[*lhs] = true;
        if (end == rules.size()) {
            break;
        }
    }
    for (std::size_t l = 0; l < alphabet->size(); ++l) {
        if (!have[l]) {
            throw std::invalid_argument(std::string("missing substitution rule for letter ") +
                                        alphabet->symbol(static_cast<Letter>(l)));
        }
    }
    return MorphismSpec(std::move(alphabet), std::move(images));
}

const LetterSeq& MorphismSpec::image(Letter l) const {
    if (l >= images_.size()) {
        throw std::invalid_argument("MorphismSpec::image: letter outside the alphabet");
    }
    return images_[l];
}

std::size_t MorphismSpec::min_image_length() const {
    std::size_t m = images_[0].size();
    for (const LetterSeq& img : images_) {
        m = std::min(m, img.size());
    }
    return m;
}

std::size_t MorphismSpec::max_image_length() const {
    std::size_t m = 0;
    for (const LetterSeq& img : images_) {
        m = std::max(m, img.size());
    }
    return m;
}

bool MorphismSpec::prolongable_on(Letter seed) const {
    if (seed >= images_.size()) {
        return false;
    }
    const LetterSeq& img = images_[seed];
    return img.size() >= 2 && img[0] == seed;
}

LetterSeq MorphismSpec::apply(LetterSpan w) const {
    std::size_t total = 0;
    for (Letter l : w) {
        total += image(l).size();
    }
    LetterSeq out;
    out.reserve(total);
    for (Letter l : w) {
        const LetterSeq& img = images_[l];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

MorphismSpec MorphismSpec::composed_with_self() const {
    std::vector<LetterSeq> images;
    images.reserve(images_.size());
    for (const LetterSeq& img : images_) {
        images.push_back(apply(img));
    }
    return MorphismSpec(alphabet_, std::move(images));
}

std::string MorphismSpec::describe() const {
    std::string out;
    for (std::size_t l = 0; l < images_.size(); ++l) {
        if (l > 0) {
            out += ';';
        }
        out += alphabet_->symbol(static_cast<Letter>(l));
        out += "->";
        for (Letter x : images_[l]) {
            out += alphabet_->symbol(x);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// InfiniteSource

InfiniteSource::InfiniteSource(std::variant<PeriodicData, UltPerData, MorphicData,
                                            MorphicImageData, FibData> data)
    : data_(std::move(data)) {}

InfiniteSource InfiniteSource::periodic(Word u) {
    if (u.empty() || !is_primitive(u.span())) {
        throw std::invalid_argument("periodic source requires a nonempty primitive word");
    }
    return InfiniteSource(PeriodicData{std::move(u)});
}

InfiniteSource InfiniteSource::ultimately_periodic(Word head, Word u) {
    if (u.empty() || !is_primitive(u.span())) {
        throw std::invalid_argument("ultimately periodic source requires a nonempty primitive period word");
    }
    if (!same_alphabet(head.alphabet(), u.alphabet())) {
        throw std::invalid_argument("head and period must share an alphabet");
    }
    return InfiniteSource(UltPerData{std::move(head), std::move(u)});
}

InfiniteSource InfiniteSource::morphic(MorphismSpec m, Letter seed) {
    if (!m.prolongable_on(seed)) {
        throw std::invalid_argument(
            "morphic source requires the substitution to be prolongable on the seed "
            "(its image starts with the seed and is longer than one letter)");
    }
    return InfiniteSource(MorphicData{std::move(m), seed});
}

InfiniteSource InfiniteSource::morphic_image(MorphismSpec m, FibVariant base) {
    if (m.alphabet()->size() < 2) {
        throw std::invalid_argument("morphic image source requires at least two letters");
    }
    return InfiniteSource(MorphicImageData{std::move(m), base});
}

InfiniteSource InfiniteSource::fibonacci(FibVariant v) {
    return InfiniteSource(FibData{v});
}

InfiniteSource InfiniteSource::parse(std::string_view text, AlphabetRef alphabet) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument(
            "source must look like kind:spec (periodic:, ultper:, morphic:, fib:)");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (kind == "periodic") {
        return periodic(Word::parse(rest, alphabet));
    }
    if (kind == "ultper") {
        std::optional<std::string_view> head_text;
        std::optional<std::string_view> u_text;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t end = std::min(rest.find(',', pos), rest.size());
            const std::string_view part = rest.substr(pos, end - pos);
            pos = end + 1;
            if (part.starts_with("head=")) {
                head_text = part.substr(5);
            } else if (part.starts_with("u=")) {
                u_text = part.substr(2);
            } else {
                throw std::invalid_argument("ultper parts are head=... and u=...: " +
                                            std::string(part));
            }
            if (end == rest.size()) {
                break;
            }
        }
        if (!u_text) {
            throw std::invalid_argument("ultper requires u=...");
        }
        Word head = Word::parse(head_text.value_or(""), alphabet);
        Word u = Word::parse(*u_text, alphabet);
        return ultimately_periodic(std::move(head), std::move(u));
    }
    if (kind == "morphic") {
        std::string rules;
        std::optional<char> seed_symbol;
        std::optional<std::string_view> base_text;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t end = std::min(rest.find(';', pos), rest.size());
            const std::string_view part = rest.substr(pos, end - pos);
            pos = end + 1;
            if (part.starts_with("seed=")) {
                if (part.size() != 6) {
                    throw std::invalid_argument("seed= takes a single letter");
                }
                seed_symbol = part[5];
            } else if (part.starts_with("base=")) {
                base_text = part.substr(5);
            } else if (!part.empty()) {
                if (!rules.empty()) {
                    rules += ';';
                }
                rules += part;
            }
            if (end == rest.size()) {
                break;
            }
        }
        MorphismSpec m = MorphismSpec::parse(rules, alphabet);
        if (base_text) {
            if (seed_symbol) {
                throw std::invalid_argument("give either seed= or base=, not both");
            }
            if (!base_text->starts_with("fib:")) {
                throw std::invalid_argument("base= supports fib:ba and fib:ab");
            }
            return morphic_image(std::move(m), FibVariant::from_name(base_text->substr(4)));
        }
        Letter seed = 0;
        if (seed_symbol) {
            const std::optional<Letter> idx = alphabet->index_of(*seed_symbol);
            if (!idx) {
                throw std::invalid_argument("seed letter is outside the alphabet");
            }
            seed = *idx;
        }
        return morphic(std::move(m), seed);
    }
    if (kind == "fib") {
        return fibonacci(FibVariant::from_name(rest));
    }
    throw std::invalid_argument("unknown source kind: " + std::string(kind));
}

InfiniteSource::Kind InfiniteSource::kind() const {
    if (std::holds_alternative<PeriodicData>(data_)) return Kind::periodic;
    if (std::holds_alternative<UltPerData>(data_)) return Kind::ultimately_periodic;
    if (std::holds_alternative<MorphicData>(data_)) return Kind::morphic;
    if (std::holds_alternative<MorphicImageData>(data_)) return Kind::morphic_image;
    return Kind::fibonacci;
}

const AlphabetRef& InfiniteSource::alphabet() const {
    switch (kind()) {
        case Kind::periodic: return std::get<PeriodicData>(data_).u.alphabet();
        case Kind::ultimately_periodic: return std::get<UltPerData>(data_).u.alphabet();
        case Kind::morphic: return std::get<MorphicData>(data_).m.alphabet();
        case Kind::morphic_image: return std::get<MorphicImageData>(data_).m.alphabet();
        case Kind::fibonacci: return binary_alphabet();
    }
    throw std::logic_error("unreachable");
}

bool InfiniteSource::exact_analysis() const {
    const Kind k = kind();
    return k == Kind::periodic || k == Kind::ultimately_periodic || k == Kind::fibonacci;
}

Word InfiniteSource::prefix(std::size_t length) const {
    switch (kind()) {
        case Kind::periodic: {
            const Word& u = std::get<PeriodicData>(data_).u;
            LetterSeq out;
            out.reserve(length);
            for (std::size_t i = 0; i < length; ++i) {
                out.push_back(u[i % u.size()]);
            }
            return Word(u.alphabet(), std::move(out));
        }
        case Kind::ultimately_periodic: {
            const auto& d = std::get<UltPerData>(data_);
            LetterSeq out;
            out.reserve(length);
            for (std::size_t i = 0; i < length && i < d.head.size(); ++i) {
                out.push_back(d.head[i]);
            }
            for (std::size_t i = out.size(); i < length; ++i) {
                out.push_back(d.u[(i - d.head.size()) % d.u.size()]);
            }
            return Word(d.head.alphabet(), std::move(out));
        }
        case Kind::morphic: {
            const auto& d = std::get<MorphicData>(data_);
            LetterSeq w{d.seed_letter};
            std::size_t guard = 0;
            while (w.size() < length) {
                if (++guard > length + 2) {
                    throw std::logic_error("substitution iteration failed to grow");
                }
                w = d.m.apply(w);
            }
            w.resize(length);
            return Word(d.m.alphabet(), std::move(w));
        }
        case Kind::morphic_image: {
            const auto& d = std::get<MorphicImageData>(data_);
            if (length == 0) {
                return Word(d.m.alphabet(), {});
            }
            // |image(prefix of n letters)| >= n since images are nonempty.
            const Word base = fib_infinite_prefix(length, d.base);
            LetterSeq out = d.m.apply(base.span());
            out.resize(length);
            return Word(d.m.alphabet(), std::move(out));
        }
        case Kind::fibonacci:
            return fib_infinite_prefix(length, std::get<FibData>(data_).v);
    }
    throw std::logic_error("unreachable");
}

std::string InfiniteSource::describe() const {
    switch (kind()) {
        case Kind::periodic:
            return "periodic:" + std::get<PeriodicData>(data_).u.str();
        case Kind::ultimately_periodic: {
            const auto& d = std::get<UltPerData>(data_);
            return "ultper:head=" + d.head.str() + ",u=" + d.u.str();
        }
        case Kind::morphic: {
            const auto& d = std::get<MorphicData>(data_);
            return "morphic:" + d.m.describe() + ";seed=" +
                   std::string(1, d.m.alphabet()->symbol(d.seed_letter));
        }
        case Kind::morphic_image: {
            const auto& d = std::get<MorphicImageData>(data_);
            return "morphic:" + d.m.describe() + ";base=fib:" + d.base.name();
        }
        case Kind::fibonacci:
            return "fib:" + std::get<FibData>(data_).v.name();
    }
    throw std::logic_error("unreachable");
}

const Word& InfiniteSource::periodic_part() const {
    if (const auto* p = std::get_if<PeriodicData>(&data_)) {
        return p->u;
    }
    if (const auto* up = std::get_if<UltPerData>(&data_)) {
        return up->u;
    }
    throw std::logic_error("periodic_part: source is not (ultimately) periodic");
}

const Word& InfiniteSource::head() const {
    if (const auto* up = std::get_if<UltPerData>(&data_)) {
        return up->head;
    }
    throw std::logic_error("head: source is not ultimately periodic");
}

const MorphismSpec& InfiniteSource::morphism() const {
    if (const auto* m = std::get_if<MorphicData>(&data_)) {
        return m->m;
    }
    if (const auto* mi = std::get_if<MorphicImageData>(&data_)) {
        return mi->m;
    }
    throw std::logic_error("morphism: source is not morphic");
}

Letter InfiniteSource::seed() const {
    if (const auto* m = std::get_if<MorphicData>(&data_)) {
        return m->seed_letter;
    }
    throw std::logic_error("seed: source is not a substitution fixed point");
}

FibVariant InfiniteSource::variant() const {
    if (const auto* f = std::get_if<FibData>(&data_)) {
        return f->v;
    }
    if (const auto* mi = std::get_if<MorphicImageData>(&data_)) {
        return mi->base;
    }
    throw std::logic_error("variant: source has no Fibonacci base");
}

// ---------------------------------------------------------------------------
// Profiles

LyndonProfile lyndon_profile(const InfiniteSource& s, std::size_t n_max,
                             std::size_t prefix_budget) {
    if (n_max == 0) {
        throw std::invalid_argument("lyndon_profile requires n_max >= 1");
    }
    switch (s.kind()) {
        case InfiniteSource::Kind::periodic: {
            // Every factor of u^w of length <= n_max occurs in the first
            // |u| + n_max - 1 letters.
            const std::size_t window = s.periodic_part().size() + n_max - 1;
            const Word w = s.prefix(window);
            return profile_from_sets(lyndon_sets_by_length(w.span(), n_max), s.alphabet(),
                                     n_max, LyndonProfile::Exactness::exact, window);
        }
        case InfiniteSource::Kind::ultimately_periodic: {
            const std::size_t window =
                s.head().size() + s.periodic_part().size() + n_max - 1;
            const Word w = s.prefix(window);
            return profile_from_sets(lyndon_sets_by_length(w.span(), n_max), s.alphabet(),
                                     n_max, LyndonProfile::Exactness::exact, window);
        }
        case InfiniteSource::Kind::fibonacci: {
            // Closed form: the Lyndon factors are the two letters and, for
            // each k >= 3 with F_k <= n_max, the Lyndon conjugate of f_k.
            if (n_max > fib_number(kMaxFibWordIndex)) {
                throw std::invalid_argument("lyndon_profile: n_max exceeds the Fibonacci word cap");
            }
            const FibVariant v = s.variant();
            std::vector<std::set<LetterSeq>> sets(n_max);
            sets[0].insert(LetterSeq{0});
            sets[0].insert(LetterSeq{1});
            for (int k = 3; k <= kMaxFibWordIndex; ++k) {
                const std::uint64_t len = fib_number(k);
                if (len > n_max) {
                    break;
                }
                sets[static_cast<std::size_t>(len) - 1].insert(
                    lyndon_conjugate(fib_word(k, v).span()));
            }
            LyndonProfile p = profile_from_sets(std::move(sets), s.alphabet(), n_max,
                                                LyndonProfile::Exactness::exact, 0);
            for (std::size_t n = 1; n <= n_max; ++n) {
                if (p.cumulative[n - 1] != fib_profile_value(n)) {
                    throw std::logic_error("lyndon_profile: Fibonacci closed form mismatch");
                }
            }
            return p;
        }
        case InfiniteSource::Kind::morphic:
        case InfiniteSource::Kind::morphic_image: {
            if (prefix_budget < n_max) {
                throw std::invalid_argument(
                    "lyndon_profile: prefix_budget below n_max for a substitution source");
            }
            const Word w = s.prefix(prefix_budget);
            return profile_from_sets(lyndon_sets_by_length(w.span(), n_max), s.alphabet(),
                                     n_max, LyndonProfile::Exactness::lower_bound,
                                     prefix_budget);
        }
    }
    throw std::logic_error("unreachable");
}

ProfileComparison compare_profile_to_fib(const InfiniteSource& s, std::size_t n_max,
                                         std::size_t prefix_budget) {
    ProfileComparison out{lyndon_profile(s, n_max, prefix_budget), {}, {}};
    out.margins.reserve(n_max);
    bool deficit = false;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const long long margin = static_cast<long long>(out.profile.cumulative[n - 1]) -
                                 static_cast<long long>(fib_profile_value(n));
        out.margins.push_back(margin);
        deficit = deficit || margin < 0;
    }
    if (!deficit) {
        out.verdict = ProfileComparison::Verdict::nonnegative;
    } else if (out.profile.exactness == LyndonProfile::Exactness::exact) {
        out.verdict = ProfileComparison::Verdict::ultimately_periodic_certified;
    } else {
        out.verdict = ProfileComparison::Verdict::inconclusive;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Streaming factorization

StreamFactorization stream_cfl_scan(LetterSpan prefix, std::size_t max_factors,
                                    const AlphabetRef& alphabet) {
    StreamFactorization out;
    const std::size_t n = prefix.size();
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t k = 0;
    std::size_t examined = 0;
    while (k < n && spans.size() < max_factors) {
        std::size_t i = k;
        std::size_t j = k + 1;
        bool dropped = false;
        while (j < n) {
            examined = std::max(examined, j + 1);
            if (prefix[i] < prefix[j]) {
                i = k;
                ++j;
            } else if (prefix[i] == prefix[j]) {
                ++i;
                ++j;
            } else {
                dropped = true;
                break;
            }
        }
        if (!dropped) {
            // The tail never saw a strictly smaller letter: an extension of
            // the input could still merge it into one factor, so nothing
            // here is final.
            examined = n;
            break;
        }
        const std::size_t p = j - i;
        while (k <= i && spans.size() < max_factors) {
            spans.emplace_back(k, p);
            k += p;
        }
    }
    if (k >= n) {
        examined = n;
    }
    std::size_t total = 0;
    out.finalized.reserve(spans.size());
    for (const auto& [start, len] : spans) {
        const LetterSpan f = prefix.subspan(start, len);
        out.finalized.emplace_back(alphabet, LetterSeq(f.begin(), f.end()));
        total += len;
    }
    out.consumed = std::max(examined, total);
    out.pending_len = out.consumed - total;
    return out;
}

namespace {

// u^w = v . c^w where c is the Lyndon conjugate of u and v is the (possibly
// empty) prefix of u before the least rotation point. v is then a proper
// suffix of c, so every factor in its factorization exceeds c and
// CFL(v) followed by c, c, ... is the unique nonincreasing factorization.
struct RotationSplit {
    LetterSeq v;
    LetterSeq c;
};

RotationSplit rotation_split(const Word& u) {
    const std::size_t r = least_rotation_index(u.span());
    RotationSplit out;
    out.c = lyndon_conjugate(u.span());
    out.v.assign(u.letters().begin(), u.letters().begin() + static_cast<std::ptrdiff_t>(r));
    return out;
}

void emit_bounded(std::vector<Word>& sink, const AlphabetRef& alphabet, LetterSpan f,
                  std::size_t max_factors, std::size_t letter_budget, std::size_t& used) {
    if (sink.size() >= max_factors || used + f.size() > letter_budget) {
        return;
    }
    sink.emplace_back(alphabet, LetterSeq(f.begin(), f.end()));
    used += f.size();
}

}  // namespace

StreamFactorization stream_cfl(const InfiniteSource& s, std::size_t max_factors,
                               std::size_t letter_budget) {
    if (max_factors == 0 || letter_budget == 0) {
        throw std::invalid_argument("stream_cfl requires max_factors >= 1 and letter_budget >= 1");
    }
    const AlphabetRef& alpha = s.alphabet();
    switch (s.kind()) {
        case InfiniteSource::Kind::periodic: {
            const RotationSplit split = rotation_split(s.periodic_part());
            StreamFactorization out;
            std::size_t used = 0;
            bool blocked = false;
            duval_scan(split.v, [&](std::size_t start, std::size_t len) {
                const std::size_t before = out.finalized.size();
                emit_bounded(out.finalized, alpha, LetterSpan(split.v).subspan(start, len),
                             max_factors, letter_budget, used);
                blocked = blocked || out.finalized.size() == before;
            });
            while (!blocked && out.finalized.size() < max_factors &&
                   used + split.c.size() <= letter_budget) {
                emit_bounded(out.finalized, alpha, split.c, max_factors, letter_budget, used);
            }
            out.consumed = used;
            out.pending_len = 0;
            return out;
        }
        case InfiniteSource::Kind::ultimately_periodic: {
            const RotationSplit split = rotation_split(s.periodic_part());
            // head . u^w = P . c^w with P = head . v. If the factorization
            // of P followed by a few literal copies of c ends in a literal
            // c, everything before the trailing run of c's is final and the
            // tail is c forever.
            LetterSeq base = s.head().letters();
            base.insert(base.end(), split.v.begin(), split.v.end());
            for (std::size_t copies : {1u, 2u, 4u, 8u}) {
                LetterSeq cand = base;
                for (std::size_t t = 0; t < copies; ++t) {
                    cand.insert(cand.end(), split.c.begin(), split.c.end());
                }
                std::vector<std::pair<std::size_t, std::size_t>> spans;
                duval_scan(cand, [&](std::size_t start, std::size_t len) {
                    spans.emplace_back(start, len);
                });
                std::size_t trailing = spans.size();
                while (trailing > 0) {
                    const auto& [start, len] = spans[trailing - 1];
                    if (len != split.c.size() ||
                        !std::equal(split.c.begin(), split.c.end(), cand.begin() + static_cast<std::ptrdiff_t>(start))) {
                        break;
                    }
                    --trailing;
                }
                if (trailing == spans.size()) {
                    continue;  // no literal c at the end; try more copies
                }
                StreamFactorization out;
                std::size_t used = 0;
                bool blocked = false;
                for (std::size_t t = 0; t < trailing; ++t) {
                    const std::size_t before = out.finalized.size();
                    emit_bounded(out.finalized, alpha,
                                 LetterSpan(cand).subspan(spans[t].first, spans[t].second),
                                 max_factors, letter_budget, used);
                    blocked = blocked || out.finalized.size() == before;
                }
                while (!blocked && out.finalized.size() < max_factors &&
                       used + split.c.size() <= letter_budget) {
                    emit_bounded(out.finalized, alpha, split.c, max_factors, letter_budget,
                                 used);
                }
                out.consumed = used;
                out.pending_len = 0;
                return out;
            }
            // No certificate: fall back to the conservative scan.
            const Word w = s.prefix(letter_budget);
            return stream_cfl_scan(w.span(), max_factors, alpha);
        }
        case InfiniteSource::Kind::morphic:
        case InfiniteSource::Kind::morphic_image:
        case InfiniteSource::Kind::fibonacci: {
            const Word w = s.prefix(letter_budget);
            return stream_cfl_scan(w.span(), max_factors, alpha);
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Factor sets and certified windows

SourceFactors factor_set_of_source(const InfiniteSource& s, std::size_t max_len,
                                   std::size_t prefix_budget) {
    if (max_len == 0) {
        throw std::invalid_argument("factor_set_of_source requires max_len >= 1");
    }
    SourceFactors out{FactorSet(max_len, {}), false, 0};
    switch (s.kind()) {
        case InfiniteSource::Kind::periodic:
        case InfiniteSource::Kind::ultimately_periodic:
        case InfiniteSource::Kind::fibonacci: {
            const CertifiedWindow cw = certified_source_window(s, max_len);
            out.factors = factor_set(cw.window.span(), max_len);
            out.exact = true;
            out.window_used = cw.window.size();
            return out;
        }
        case InfiniteSource::Kind::morphic:
        case InfiniteSource::Kind::morphic_image: {
            if (prefix_budget < max_len) {
                throw std::invalid_argument(
                    "factor_set_of_source: prefix_budget below max_len for a substitution source");
            }
            const Word w = s.prefix(prefix_budget);
            out.factors = factor_set(w.span(), max_len);
            out.exact = false;
            out.window_used = prefix_budget;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

CertifiedWindow certified_fixed_point_window(const MorphismSpec& m, Letter seed,
                                             std::size_t max_len) {
    if (max_len == 0) {
        throw std::invalid_argument("certified_fixed_point_window requires max_len >= 1");
    }
    if (!m.prolongable_on(seed)) {
        throw std::invalid_argument("certified_fixed_point_window: substitution is not prolongable on the seed");
    }
    // Work at a bound of at least 4 so that a factor of tau(w) of length
    // <= B is covered by the image of a factor of w of length <= B
    // (length/2 + 2 <= B once every image has at least two letters).
    const std::size_t bound = std::max<std::size_t>(max_len, 4);
    MorphismSpec tau = m;
    int squarings = 0;
    while (tau.min_image_length() < 2) {
        if (++squarings > 12) {
            throw std::domain_error(
                "certified_fixed_point_window: no power of the substitution expands every letter");
        }
        tau = tau.composed_with_self();
    }
    LetterSeq w{seed};
    std::vector<std::size_t> prev = factor_counts_by_length(w, bound);
    for (std::size_t iter = 1; iter <= 64; ++iter) {
        LetterSeq next = tau.apply(w);
        if (next.size() <= w.size() ||
            !std::equal(w.begin(), w.end(), next.begin())) {
            throw std::logic_error("certified_fixed_point_window: iterate is not a growing prefix");
        }
        std::vector<std::size_t> counts = factor_counts_by_length(next, bound);
        if (w.size() >= bound && counts == prev) {
            // One stable step: the factor sets up to the bound have
            // converged to those of the fixed point.
            return CertifiedWindow{Word(m.alphabet(), std::move(next)), bound, iter};
        }
        w = std::move(next);
        prev = std::move(counts);
    }
    throw std::logic_error("certified_fixed_point_window: no stabilization within 64 iterations");
}

CertifiedWindow certified_image_window(const MorphismSpec& h, const MorphismSpec& m,
                                       Letter seed, std::size_t max_len) {
    if (max_len == 0) {
        throw std::invalid_argument("certified_image_window requires max_len >= 1");
    }
    if (h.alphabet()->size() < m.alphabet()->size()) {
        throw std::invalid_argument(
            "certified_image_window: the outer substitution must cover the base alphabet");
    }
    // A factor of h(x) of length <= max_len is covered by the image of a
    // factor of x of length <= max_len / min|h| + 2.
    const std::size_t base_bound = max_len / h.min_image_length() + 2;
    const CertifiedWindow base = certified_fixed_point_window(m, seed, base_bound);
    LetterSeq image = h.apply(base.window.span());
    return CertifiedWindow{Word(h.alphabet(), std::move(image)), max_len, base.iterations};
}

namespace {

MorphismSpec fib_morphism(FibVariant v) {
    if (v == FibVariant::ba()) {
        return MorphismSpec(binary_alphabet(), {LetterSeq{0, 1}, LetterSeq{0}});
    }
    return MorphismSpec(binary_alphabet(), {LetterSeq{1}, LetterSeq{1, 0}});
}

Letter fib_seed(FibVariant v) { return v == FibVariant::ba() ? 0 : 1; }

}  // namespace

CertifiedWindow certified_fib_window(FibVariant v, std::size_t max_len) {
    return certified_fixed_point_window(fib_morphism(v), fib_seed(v), max_len);
}

CertifiedWindow certified_source_window(const InfiniteSource& s, std::size_t max_len) {
    if (max_len == 0) {
        throw std::invalid_argument("certified_source_window requires max_len >= 1");
    }
    switch (s.kind()) {
        case InfiniteSource::Kind::periodic: {
            const std::size_t window = s.periodic_part().size() + max_len - 1;
            return CertifiedWindow{s.prefix(window), max_len, 0};
        }
        case InfiniteSource::Kind::ultimately_periodic: {
            const std::size_t window =
                s.head().size() + s.periodic_part().size() + max_len - 1;
            return CertifiedWindow{s.prefix(window), max_len, 0};
        }
        case InfiniteSource::Kind::fibonacci:
            return certified_fib_window(s.variant(), max_len);
        case InfiniteSource::Kind::morphic:
            return certified_fixed_point_window(s.morphism(), s.seed(), max_len);
        case InfiniteSource::Kind::morphic_image:
            return certified_image_window(s.morphism(), fib_morphism(s.variant()),
                                          fib_seed(s.variant()), max_len);
    }
    throw std::logic_error("unreachable");
}

}  // namespace lyn
