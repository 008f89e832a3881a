#include "ratpart/order.hpp"

#include <algorithm>

namespace ratpart {

std::strong_ordering lex_compare(std::span<const Symbol> u, std::span<const Symbol> v) {
    return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

std::strong_ordering radix_compare(std::span<const Symbol> u, std::span<const Symbol> v) {
    if (auto c = u.size() <=> v.size(); c != 0) return c;
    return lex_compare(u, v);
}

std::strong_ordering compare_words(OrderKind kind, const Word& u, const Word& v) {
    return kind == OrderKind::radix ? radix_compare(u, v) : lex_compare(u, v);
}

const char* to_string(OrderKind kind) { return kind == OrderKind::radix ? "radix" : "lex"; }

} // namespace ratpart
