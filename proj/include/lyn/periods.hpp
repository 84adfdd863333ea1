#pragma once

#include <cstddef>
#include <vector>

#include "lyn/word.hpp"

namespace lyn {

// True when p is a period of w, i.e. w[i] == w[i+p] for all valid i.
// Any p >= |w| is (vacuously) a period; p == 0 is rejected.
bool has_period(LetterSpan w, std::size_t p);

// All periods of w in [1, |w|], sorted increasingly. |w| itself is always a
// period, so the set is nonempty for nonempty w.
class PeriodSet {
public:
    PeriodSet(std::size_t length, std::vector<std::size_t> periods);

    std::size_t word_length() const noexcept { return length_; }
    const std::vector<std::size_t>& periods() const noexcept { return periods_; }

    // Smallest period; equals |w| exactly when w is unbordered.
    std::size_t smallest() const;
    bool is_unbordered() const;

    // Membership, with every p >= |w| counting as a period.
    bool contains(std::size_t p) const;

private:
    std::size_t length_;
    std::vector<std::size_t> periods_;  // sorted, within [1, length]
};

PeriodSet period_set(LetterSpan w);
PeriodSet period_set(const Word& w);

// A nonempty word is primitive when it is not u^k for k >= 2; equivalently,
// no proper divisor of |w| is a period.
bool is_primitive(LetterSpan w);
bool is_primitive(const Word& w);

// True when z[i] == w[i mod |w|] for all i, i.e. z is a prefix of w^infinity.
bool is_periodic_extension(LetterSpan z, LetterSpan w);

}  // namespace lyn
