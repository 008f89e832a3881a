#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "ratpart/oracle.hpp"
#include "ratpart/word.hpp"

namespace ratpart::testing {

/// "00", "0" -> 00/0; "-" is the empty word.
inline WordPair wp(const char* u, const char* v) { return {parse_word(u), parse_word(v)}; }

inline BoundedRelation relation(std::size_t cap, std::initializer_list<std::pair<const char*, const char*>> pairs) {
    BoundedRelation r(cap);
    for (const auto& [u, v] : pairs) r.insert(wp(u, v));
    return r;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string golden_path(const std::string& name) { return std::string(RATPART_GOLDEN_DIR) + "/" + name; }

} // namespace ratpart::testing
