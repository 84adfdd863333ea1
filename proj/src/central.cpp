#include "lyn/central.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "lyn/periods.hpp"

namespace lyn {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        parent_[find(a)] = find(b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

CentralWitness central_word(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0 || std::gcd(p, q) != 1) {
        throw std::domain_error("central word requires coprime positive periods");
    }
    const std::size_t n = p + q - 2;
    UnionFind uf(n);
    for (std::size_t i = 0; i + p < n; ++i) {
        uf.unite(i, i + p);
    }
    for (std::size_t i = 0; i + q < n; ++i) {
        uf.unite(i, i + q);
    }
    // Coprimality leaves at most two classes; first occurrence fixes letters.
    std::vector<std::int16_t> letter_of_root(n, -1);
    Letter next = 0;
    LetterSeq letters;
    letters.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = uf.find(i);
        if (letter_of_root[root] < 0) {
            if (next >= 2) {
                throw std::logic_error("central construction produced more than two letter classes");
            }
            letter_of_root[root] = static_cast<std::int16_t>(next++);
        }
        letters.push_back(static_cast<Letter>(letter_of_root[root]));
    }
    return CentralWitness{p, q, Word(binary_alphabet(), std::move(letters))};
}

std::optional<CentralWitness> central_witness(const Word& w) {
    if (distinct_letter_count(w.span()) > 2) {
        return std::nullopt;
    }
    const std::size_t n = w.size();
    const PeriodSet periods = n == 0 ? PeriodSet(0, {}) : period_set(w);
    for (std::size_t p = 1; p <= n + 1; ++p) {
        const std::size_t q = n + 2 - p;
        if (std::gcd(p, q) != 1) {
            continue;
        }
        const bool p_ok = p >= n || (n > 0 && periods.contains(p));
        const bool q_ok = q >= n || (n > 0 && periods.contains(q));
        if (p_ok && q_ok) {
            return CentralWitness{p, q, w};
        }
    }
    return std::nullopt;
}

bool is_central(const Word& w) {
    return central_witness(w).has_value();
}

}  // namespace lyn
