#include "lyn/periods.hpp"

#include <algorithm>
#include <stdexcept>

namespace lyn {

bool has_period(LetterSpan w, std::size_t p) {
    if (p == 0) {
        throw std::invalid_argument("period must be positive");
    }
    for (std::size_t i = p; i < w.size(); ++i) {
        if (w[i] != w[i - p]) {
            return false;
        }
    }
    return true;
}

PeriodSet::PeriodSet(std::size_t length, std::vector<std::size_t> periods)
    : length_(length), periods_(std::move(periods)) {}

std::size_t PeriodSet::smallest() const {
    if (periods_.empty()) {
        throw std::logic_error("the empty word has no periods");
    }
    return periods_.front();
}

bool PeriodSet::is_unbordered() const {
    return smallest() == length_;
}

bool PeriodSet::contains(std::size_t p) const {
    if (p >= length_) {
        return p > 0;
    }
    return std::binary_search(periods_.begin(), periods_.end(), p);
}

namespace {
// Failure function of w: border[i] = length of the longest proper border of
// w[0..i]. Periods of w are |w| - b over all borders b of w (including 0).
std::vector<std::size_t> border_table(LetterSpan w) {
    std::vector<std::size_t> border(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && w[i] != w[b]) {
            b = border[b - 1];
        }
        if (w[i] == w[b]) {
            ++b;
        }
        border[i] = b;
    }
    return border;
}
}  // namespace

PeriodSet period_set(LetterSpan w) {
    if (w.empty()) {
        throw std::invalid_argument("period_set requires a nonempty word");
    }
    // Walking the border chain from the full word yields the periods
    // |w| - b for every border length b, in increasing order.
    std::vector<std::size_t> periods;
    auto border = border_table(w);
    std::size_t b = w.size();
    while (b > 0) {
        b = border[b - 1];
        periods.push_back(w.size() - b);
    }
    return PeriodSet(w.size(), std::move(periods));
}

PeriodSet period_set(const Word& w) {
    return period_set(w.span());
}

bool is_primitive(LetterSpan w) {
    if (w.empty()) {
        throw std::invalid_argument("is_primitive requires a nonempty word");
    }
    for (std::size_t p = 1; p * 2 <= w.size(); ++p) {
        if (w.size() % p == 0 && has_period(w, p)) {
            return false;
        }
    }
    return true;
}

bool is_primitive(const Word& w) {
    return is_primitive(w.span());
}

bool is_periodic_extension(LetterSpan z, LetterSpan w) {
    if (w.empty() || z.empty()) {
        throw std::invalid_argument("is_periodic_extension requires nonempty words");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] != w[i % w.size()]) {
            return false;
        }
    }
    return true;
}

}  // namespace lyn
