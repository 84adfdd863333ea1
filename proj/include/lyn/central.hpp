#pragma once

#include <cstddef>
#include <optional>

#include "lyn/word.hpp"

namespace lyn {

struct CentralWitness {
    std::size_t p = 0;  // coprime periods with p + q == |word| + 2
    std::size_t q = 0;
    Word word;
};

// The central word of length p + q - 2 with coprime periods p and q, over
// "ab". Throws std::domain_error unless gcd(p, q) == 1. For p == q == 1 the
// result is the empty word.
CentralWitness central_word(std::size_t p, std::size_t q);

// A word is central when it has coprime periods p, q with p + q == |w| + 2.
// Every word of length < 2 over at most two letters qualifies (p = q = 1 or
// p = 1, q = |w| + 1). Returns the witness pair when central.
std::optional<CentralWitness> central_witness(const Word& w);
bool is_central(const Word& w);

}  // namespace lyn
