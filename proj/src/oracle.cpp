#include "ratpart/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ratpart/error.hpp"

namespace ratpart {

namespace {

void require_same_cap(const BoundedRelation& a, const BoundedRelation& b) {
    if (a.cap() != b.cap()) throw CapMismatch(a.cap(), b.cap());
}

} // namespace

BoundedRelation::BoundedRelation(std::size_t cap, std::set<WordPair> pairs) : cap_(cap) {
    for (auto& p : pairs) insert(p);
}

void BoundedRelation::insert(WordPair p) {
    if (p.u.size() > cap_ || p.v.size() > cap_)
        throw std::invalid_argument("pair " + format_pair(p) + " exceeds cap " + std::to_string(cap_));
    pairs_.insert(std::move(p));
}

BoundedRelation BoundedRelation::inverse() const {
    BoundedRelation out(cap_);
    for (const auto& p : pairs_) out.pairs_.insert(p.swapped());
    return out;
}

BoundedRelation BoundedRelation::unite(const BoundedRelation& other) const {
    require_same_cap(*this, other);
    BoundedRelation out = *this;
    out.pairs_.insert(other.pairs_.begin(), other.pairs_.end());
    return out;
}

BoundedRelation BoundedRelation::intersect(const BoundedRelation& other) const {
    require_same_cap(*this, other);
    BoundedRelation out(cap_);
    std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                          std::inserter(out.pairs_, out.pairs_.end()));
    return out;
}

BoundedRelation BoundedRelation::subtract(const BoundedRelation& other) const {
    require_same_cap(*this, other);
    BoundedRelation out(cap_);
    std::set_difference(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                        std::inserter(out.pairs_, out.pairs_.end()));
    return out;
}

BoundedRelation enumerate(const Transducer& t, std::size_t cap) {
    // Label-indexed subset search: for every label prefix u/v within the cap, the set
    // of states some path with that label reaches. Non -/- edges strictly grow
    // |u| + |v|, so buckets by total length are processed in order; -/- edges are
    // closed over inside a bucket.
    using Frontier = std::unordered_map<WordPair, std::vector<StateId>, WordPairHash>;
    std::vector<Frontier> buckets(2 * cap + 1);
    buckets[0][WordPair{}] = t.initial_states();
    const bool has_epsilon = std::any_of(t.edges().begin(), t.edges().end(),
                                         [](const Edge& e) { return e.label.is_epsilon_pair(); });

    BoundedRelation out(cap);
    std::vector<bool> mark(t.num_states(), false);
    for (std::size_t total = 0; total < buckets.size(); ++total) {
        for (auto& [label, states] : buckets[total]) {
            std::sort(states.begin(), states.end());
            states.erase(std::unique(states.begin(), states.end()), states.end());
            if (has_epsilon) {
                for (StateId s : states) mark[s] = true;
                for (std::size_t i = 0; i < states.size(); ++i) {
                    for (const Edge& e : t.out_edges(states[i])) {
                        if (e.label.is_epsilon_pair() && !mark[e.target]) {
                            mark[e.target] = true;
                            states.push_back(e.target);
                        }
                    }
                }
                for (StateId s : states) mark[s] = false;
            }
            bool accepted = false;
            for (StateId s : states) {
                accepted = accepted || t.is_final(s);
                for (const Edge& e : t.out_edges(s)) {
                    if (e.label.is_epsilon_pair()) continue;
                    WordPair next = label;
                    if (e.label.input) next.u.push_back(*e.label.input);
                    if (e.label.output) next.v.push_back(*e.label.output);
                    if (next.u.size() > cap || next.v.size() > cap) continue;
                    const std::size_t grown = total + (e.label.input ? 1 : 0) + (e.label.output ? 1 : 0);
                    buckets[grown][std::move(next)].push_back(e.target);
                }
            }
            if (accepted) out.insert(label);
        }
        buckets[total] = Frontier{};
    }
    return out;
}

BoundedRelation filter_order(const BoundedRelation& r, OrderKind kind, Direction direction) {
    BoundedRelation out(r.cap());
    for (const auto& p : r.pairs()) {
        const auto c = compare_words(kind, p.u, p.v);
        if ((direction == Direction::greater && c > 0) || (direction == Direction::less && c < 0)) out.insert(p);
    }
    return out;
}

RelationFlags check_properties(const BoundedRelation& r) {
    RelationFlags flags{true, true, true};
    for (const auto& p : r.pairs()) {
        const bool swap_present = r.contains(p.swapped());
        if (!swap_present) flags.symmetric = false;
        if (p.u == p.v) flags.irreflexive = false;
        if (swap_present) flags.asymmetric = false;  // includes u == v
    }
    return flags;
}

PartitionCheck check_partition(const BoundedRelation& r, const BoundedRelation& a, const BoundedRelation& b) {
    require_same_cap(r, a);
    require_same_cap(r, b);
    using Kind = PartitionViolation::Kind;
    PartitionCheck check;
    auto report = [&](Kind kind, const WordPair& p) { check.violations.push_back({kind, p}); };

    for (const auto& p : r.pairs())
        if (!a.contains(p) && !b.contains(p)) report(Kind::missing_from_parts, p);
    for (const auto& part : {&a, &b})
        for (const auto& p : part->pairs())
            if (!r.contains(p)) report(Kind::not_in_relation, p);
    for (const auto& p : a.pairs())
        if (b.contains(p)) report(Kind::in_both_parts, p);
    for (const auto& p : a.pairs())
        if (a.contains(p.swapped())) report(Kind::a_not_asymmetric, p);
    for (const auto& p : b.pairs())
        if (b.contains(p.swapped())) report(Kind::b_not_asymmetric, p);
    for (const auto& p : b.pairs())
        if (!a.contains(p.swapped())) report(Kind::b_not_inverse_of_a, p);
    for (const auto& p : a.pairs())
        if (!b.contains(p.swapped())) report(Kind::b_not_inverse_of_a, p.swapped());
    return check;
}

const char* to_string(PartitionViolation::Kind kind) {
    using Kind = PartitionViolation::Kind;
    switch (kind) {
    case Kind::missing_from_parts: return "missing_from_parts";
    case Kind::not_in_relation: return "not_in_relation";
    case Kind::in_both_parts: return "in_both_parts";
    case Kind::a_not_asymmetric: return "a_not_asymmetric";
    case Kind::b_not_asymmetric: return "b_not_asymmetric";
    case Kind::b_not_inverse_of_a: return "b_not_inverse_of_a";
    }
    return "unknown";
}

std::string serialize_pairs(const BoundedRelation& r) {
    std::string out;
    for (const auto& p : r.pairs()) out += format_word(p.u) + "\t" + format_word(p.v) + "\n";
    return out;
}

BoundedRelation parse_pairs(std::string_view text, std::optional<std::size_t> cap) {
    std::vector<WordPair> pairs;
    std::size_t longest = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected '<u>\\t<v>'");
        try {
            WordPair p{parse_word(line.substr(0, tab)), parse_word(line.substr(tab + 1))};
            longest = std::max({longest, p.u.size(), p.v.size()});
            pairs.push_back(std::move(p));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    const std::size_t effective = cap.value_or(longest);
    if (longest > effective)
        throw ParseError(line_no, "pair longer than the cap " + std::to_string(effective));
    BoundedRelation out(effective);
    for (auto& p : pairs) out.insert(std::move(p));
    return out;
}

} // namespace ratpart
