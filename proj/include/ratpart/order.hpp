#pragma once

#include <compare>
#include <span>

#include "ratpart/word.hpp"

namespace ratpart {

enum class OrderKind { radix, lex };

/// Shortlex: shorter words first, equal lengths compared symbol by symbol.
std::strong_ordering radix_compare(std::span<const Symbol> u, std::span<const Symbol> v);

/// Dictionary order; a proper prefix precedes its extensions.
std::strong_ordering lex_compare(std::span<const Symbol> u, std::span<const Symbol> v);

inline bool radix_less(const Word& u, const Word& v) { return radix_compare(u, v) < 0; }
inline bool lex_less(const Word& u, const Word& v) { return lex_compare(u, v) < 0; }

std::strong_ordering compare_words(OrderKind kind, const Word& u, const Word& v);

const char* to_string(OrderKind kind);

} // namespace ratpart
