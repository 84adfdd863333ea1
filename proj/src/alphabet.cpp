#include "lyn/alphabet.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lyn {

OrderedAlphabet::OrderedAlphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
        throw std::invalid_argument("alphabet must contain at least one symbol");
    }
    if (symbols_.size() > kMaxSize) {
        throw std::invalid_argument("alphabet may contain at most 36 symbols");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto c = static_cast<unsigned char>(symbols_[i]);
        if (index_[c] != -1) {
            throw std::invalid_argument("alphabet symbols must be distinct");
        }
        index_[c] = static_cast<std::int16_t>(i);
    }
}

char OrderedAlphabet::symbol(Letter index) const {
    if (index >= symbols_.size()) {
        throw std::out_of_range("letter index outside alphabet");
    }
    return symbols_[index];
}

std::optional<Letter> OrderedAlphabet::index_of(char symbol) const noexcept {
    auto c = static_cast<unsigned char>(symbol);
    if (index_[c] < 0) {
        return std::nullopt;
    }
    return static_cast<Letter>(index_[c]);
}

AlphabetRef make_alphabet(std::string_view symbols) {
    return std::make_shared<const OrderedAlphabet>(symbols);
}

namespace {
constexpr std::string_view kDefaultSymbols = "abcdefghijklmnopqrstuvwxyz0123456789";
}

const AlphabetRef& default_alphabet() {
    static const AlphabetRef instance = make_alphabet(kDefaultSymbols);
    return instance;
}

AlphabetRef prefix_alphabet(std::size_t k) {
    if (k == 0 || k > OrderedAlphabet::kMaxSize) {
        throw std::invalid_argument("prefix alphabet size must be in [1, 36]");
    }
    static std::mutex mutex;
    static std::vector<AlphabetRef> cache(OrderedAlphabet::kMaxSize + 1);
    std::lock_guard<std::mutex> lock(mutex);
    if (!cache[k]) {
        cache[k] = make_alphabet(kDefaultSymbols.substr(0, k));
    }
    return cache[k];
}

const AlphabetRef& binary_alphabet() {
    static const AlphabetRef instance = prefix_alphabet(2);
    return instance;
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

}  // namespace lyn
