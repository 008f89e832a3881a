#include "ratpart/word.hpp"

#include <algorithm>
#include <charconv>

#include "ratpart/error.hpp"
#include "ratpart/order.hpp"

namespace ratpart {

std::strong_ordering WordPair::operator<=>(const WordPair& other) const {
    if (auto c = radix_compare(u, other.u); c != 0) return c;
    return radix_compare(v, other.v);
}

std::string format_word(const Word& w) {
    if (w.empty()) return "-";
    const bool compact = std::all_of(w.begin(), w.end(), [](Symbol s) { return s < 10; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (compact) {
            out.push_back(static_cast<char>('0' + w[i]));
        } else {
            if (i > 0) out.push_back('.');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

Word parse_word(std::string_view text) {
    if (text == "-") return {};
    if (text.empty()) throw Error("empty word token");
    Word w;
    if (text.find('.') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw Error("bad symbol '" + std::string(1, c) + "'");
            w.push_back(static_cast<Symbol>(c - '0'));
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto dot = text.find('.', pos);
        if (dot == std::string_view::npos) dot = text.size();
        auto part = text.substr(pos, dot - pos);
        Symbol s = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), s);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw Error("bad symbol '" + std::string(part) + "'");
        w.push_back(s);
        pos = dot + 1;
    }
    return w;
}

std::string format_pair(const WordPair& p) { return format_word(p.u) + "/" + format_word(p.v); }

Word repeat(Symbol sym, std::size_t count) { return Word(count, sym); }

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::size_t WordPairHash::operator()(const WordPair& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(p.u.size());
    for (Symbol s : p.u) mix(s);
    mix(p.v.size() + 0x51ULL);
    for (Symbol s : p.v) mix(s);
    return h;
}

} // namespace ratpart
