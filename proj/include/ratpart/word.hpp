#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ratpart {

/// Alphabet symbols are the integers 0..q-1 under their natural order.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// An input/output pair u/v.
struct WordPair {
    Word u;
    Word v;

    WordPair swapped() const { return {v, u}; }

    bool operator==(const WordPair&) const = default;
    /// Canonical order: radix on u, then radix on v.
    std::strong_ordering operator<=>(const WordPair& other) const;
};

/// Renders a word: "-" for the empty word, concatenated digits when every symbol
/// is below 10, dot-separated decimals otherwise.
std::string format_word(const Word& w);

/// Inverse of format_word. Throws ratpart::Error on malformed text.
Word parse_word(std::string_view text);

std::string format_pair(const WordPair& p);

/// Builds sym^count.
Word repeat(Symbol sym, std::size_t count);

Word concat(const Word& a, const Word& b);

struct WordPairHash {
    std::size_t operator()(const WordPair& p) const noexcept;
};

} // namespace ratpart
