#include "ratpart/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ratpart/discrepancy.hpp"
#include "ratpart/operations.hpp"

namespace ratpart {

namespace {

std::string copy_name(const Transducer& s, const CopiedState& c) {
    return s.name(c.base) + "^" + c.copy.tag();
}

/// Builds the C-copy over `states` (which fixes the state ids) with the given
/// destination rule and final-copy predicate.
template <typename Next, typename IsFinal>
CCopy assemble(const Transducer& s, std::vector<CopiedState> states, Next next, IsFinal is_final) {
    std::map<std::pair<CopyLabel, StateId>, StateId> id;
    for (StateId i = 0; i < states.size(); ++i) id.emplace(std::pair{states[i].copy, states[i].base}, i);

    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::vector<StateId> initial, final;
    for (StateId i = 0; i < states.size(); ++i) {
        const auto& [base, copy] = states[i];
        names.push_back(copy_name(s, states[i]));
        if (copy == CopyLabel::lam() && s.is_initial(base)) initial.push_back(i);
        if (s.is_final(base) && is_final(copy)) final.push_back(i);
        for (const Edge& e : s.out_edges(base)) {
            auto it = id.find({next(copy, e.label), e.target});
            if (it != id.end()) edges.push_back({i, e.label, it->second});
        }
    }
    Transducer machine(s.alphabet(), std::move(names), std::move(edges), std::move(initial), std::move(final));
    return {std::move(machine), std::move(states)};
}

std::vector<CopiedState> copy_major(const std::vector<CopyLabel>& copies, std::size_t n) {
    std::vector<CopiedState> states;
    states.reserve(copies.size() * n);
    for (const CopyLabel& c : copies)
        for (StateId p = 0; p < n; ++p) states.push_back({p, c});
    return states;
}

CopyLabel next_copy_alpha0(const CopyLabel& from, const Label& label) {
    if (from.kind != CopyLabel::Kind::lambda) return from;
    const Symbol s = *label.input, t = *label.output;
    if (s == t) return CopyLabel::lam();
    return s > t ? CopyLabel::accept() : CopyLabel::reject();
}

} // namespace

CCopy trim(const CCopy& c) {
    auto trimmed = trim_with_map(c.machine);
    std::vector<CopiedState> origin;
    origin.reserve(trimmed.kept.size());
    for (StateId old : trimmed.kept) origin.push_back(c.origin[old]);
    return {std::move(trimmed.machine), std::move(origin)};
}

bool is_c_copy_of(const CCopy& c, const Transducer& source) {
    const Transducer& m = c.machine;
    if (c.origin.size() != m.num_states() || m.alphabet() != source.alphabet()) return false;
    for (const auto& o : c.origin)
        if (o.base >= source.num_states()) return false;
    for (StateId s : m.initial_states())
        if (!source.is_initial(c.origin[s].base)) return false;
    for (StateId s : m.final_states())
        if (!source.is_final(c.origin[s].base)) return false;
    for (const Edge& e : m.edges()) {
        if (!source.has_edge({c.origin[e.source].base, e.label, c.origin[e.target].base})) return false;
    }
    return true;
}

Path corr_path(const CCopy& c, const Path& path) {
    if (!is_path_of(c.machine, path)) throw NotAPath("edge sequence is not a path of the C-copy");
    Path out;
    out.reserve(path.size());
    for (const Edge& e : path) out.push_back({c.origin[e.source].base, e.label, c.origin[e.target].base});
    return out;
}

CCopy build_alpha0(const Transducer& s) {
    if (!is_letter_to_letter(s)) throw NotLetterToLetter();
    const std::vector<CopyLabel> copies{CopyLabel::lam(), CopyLabel::accept(), CopyLabel::reject()};
    return assemble(s, copy_major(copies, s.num_states()), next_copy_alpha0,
                    [](const CopyLabel& c) { return c.kind == CopyLabel::Kind::a; });
}

CCopy build_alpha(const Transducer& s, unsigned k, AlphaOptions options) {
    if (has_epsilon_pairs(s)) throw HasEpsilonPair();
    const unsigned required = minimum_bound(s);
    if (required > k) throw BoundTooSmall(required, k);

    auto next = [k](const CopyLabel& c, const Label& l) { return next_copy(c, l, k); };
    auto is_final = [k](const CopyLabel& c) { return is_final_copy(c, k); };

    if (!options.reachable_only)
        return assemble(s, copy_major(copy_labels(s.alphabet().size, k), s.num_states()), next, is_final);

    std::map<std::pair<CopyLabel, StateId>, bool> seen;
    std::deque<std::pair<CopyLabel, StateId>> queue;
    for (StateId i : s.initial_states()) {
        if (seen.emplace(std::pair{CopyLabel::lam(), i}, true).second) queue.emplace_back(CopyLabel::lam(), i);
    }
    while (!queue.empty()) {
        auto [copy, base] = queue.front();
        queue.pop_front();
        for (const Edge& e : s.out_edges(base)) {
            std::pair key{next(copy, e.label), e.target};
            if (seen.emplace(key, true).second) queue.push_back(std::move(key));
        }
    }
    std::vector<CopiedState> states;
    for (const auto& [key, unused] : seen) states.push_back({key.second, key.first});
    return assemble(s, std::move(states), next, is_final);
}

} // namespace ratpart
