#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace invwords {

/// A finite sequence of 1-based generator indices.
using Word = std::vector<int>;

/// Words ordered lexicographically; the canonical order for emitted sets.
using WordSet = std::set<Word>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : w) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline WordSet reversed(const WordSet& words) {
    WordSet out;
    for (const auto& w : words) out.insert(reversed(w));
    return out;
}

inline std::string to_string(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace invwords
