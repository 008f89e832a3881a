#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ratpart/order.hpp"
#include "ratpart/transducer.hpp"

namespace ratpart {

/// The pairs of a relation whose two sides are both at most `cap` long.
class BoundedRelation {
public:
    explicit BoundedRelation(std::size_t cap) : cap_(cap) {}
    BoundedRelation(std::size_t cap, std::set<WordPair> pairs);

    std::size_t cap() const noexcept { return cap_; }
    const std::set<WordPair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    bool contains(const WordPair& p) const { return pairs_.contains(p); }

    /// Throws std::invalid_argument when a side exceeds the cap.
    void insert(WordPair p);

    BoundedRelation inverse() const;

    // Set algebra; all throw CapMismatch on differing caps.
    BoundedRelation unite(const BoundedRelation& other) const;
    BoundedRelation intersect(const BoundedRelation& other) const;
    BoundedRelation subtract(const BoundedRelation& other) const;

    bool operator==(const BoundedRelation&) const = default;

private:
    std::size_t cap_;
    std::set<WordPair> pairs_;
};

/// Every u/v in rel(t) with |u| <= cap and |v| <= cap.
BoundedRelation enumerate(const Transducer& t, std::size_t cap);

enum class Direction { greater, less };

BoundedRelation filter_order(const BoundedRelation& r, OrderKind kind, Direction direction);

struct RelationFlags {
    bool symmetric = false;
    bool irreflexive = false;
    bool asymmetric = false;
};

RelationFlags check_properties(const BoundedRelation& r);

struct PartitionViolation {
    enum class Kind {
        missing_from_parts,  // in r, in neither part
        not_in_relation,     // in a part, not in r
        in_both_parts,
        a_not_asymmetric,    // pair and its swap both in a
        b_not_asymmetric,
        b_not_inverse_of_a,  // pair of b whose swap is not in a, or vice versa
    };
    Kind kind;
    WordPair pair;
};

struct PartitionCheck {
    std::vector<PartitionViolation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

/// Checks that {a, b} is an asymmetric partition of r with b = a^-1. Throws CapMismatch.
PartitionCheck check_partition(const BoundedRelation& r, const BoundedRelation& a,
                               const BoundedRelation& b);

const char* to_string(PartitionViolation::Kind kind);

/// One "u<TAB>v" line per pair in canonical order.
std::string serialize_pairs(const BoundedRelation& r);

/// Reads the pair format; blank lines and '#' comments are ignored. The cap is
/// the longest side found unless `cap` is given. Throws ParseError.
BoundedRelation parse_pairs(std::string_view text, std::optional<std::size_t> cap = std::nullopt);

} // namespace ratpart
