#include "ratpart/operations.hpp"

#include <algorithm>
#include <unordered_set>

#include "ratpart/error.hpp"

namespace ratpart {

namespace {

/// Names of `b` made distinct from `taken` (and from each other) with "_<n>" suffixes.
std::vector<std::string> disjoint_names(const std::vector<std::string>& taken,
                                        const std::vector<std::string>& b) {
    std::unordered_set<std::string> used(taken.begin(), taken.end());
    used.insert(b.begin(), b.end());
    std::unordered_set<std::string> in_a(taken.begin(), taken.end());
    std::vector<std::string> out;
    out.reserve(b.size());
    for (const auto& name : b) {
        if (!in_a.contains(name)) {
            out.push_back(name);
            continue;
        }
        for (unsigned n = 2;; ++n) {
            std::string candidate = name + "_" + std::to_string(n);
            if (!used.contains(candidate)) {
                used.insert(candidate);
                out.push_back(std::move(candidate));
                break;
            }
        }
    }
    return out;
}

struct Combined {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::size_t offset = 0;
};

Combined combine(const Transducer& a, const Transducer& b) {
    if (a.alphabet() != b.alphabet()) throw AlphabetMismatch(a.alphabet().size, b.alphabet().size);
    Combined c;
    c.offset = a.num_states();
    c.names = a.names();
    auto b_names = disjoint_names(a.names(), b.names());
    c.names.insert(c.names.end(), b_names.begin(), b_names.end());
    c.edges.assign(a.edges().begin(), a.edges().end());
    for (const Edge& e : b.edges()) c.edges.push_back({e.source + c.offset, e.label, e.target + c.offset});
    return c;
}

std::vector<bool> reach(std::size_t n, const std::vector<std::vector<StateId>>& adj,
                        const std::vector<StateId>& seeds) {
    std::vector<bool> seen(n, false);
    std::vector<StateId> stack;
    for (StateId s : seeds) {
        if (!seen[s]) {
            seen[s] = true;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (StateId t : adj[s]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

} // namespace

Transducer empty_relation(Alphabet alphabet) { return Transducer(alphabet, {"q0"}, {}, {0}, {}); }

Transducer epsilon_relation(Alphabet alphabet) { return Transducer(alphabet, {"q0"}, {}, {0}, {0}); }

Transducer inverse(const Transducer& t) {
    std::vector<Edge> edges;
    edges.reserve(t.num_edges());
    for (const Edge& e : t.edges()) edges.push_back({e.source, e.label.inverse(), e.target});
    return Transducer(t.alphabet(), t.names(), std::move(edges), t.initial_states(), t.final_states());
}

Transducer union_of(const Transducer& a, const Transducer& b) {
    Combined c = combine(a, b);
    std::vector<StateId> initial = a.initial_states();
    std::vector<StateId> final = a.final_states();
    for (StateId s : b.initial_states()) initial.push_back(s + c.offset);
    for (StateId s : b.final_states()) final.push_back(s + c.offset);
    return Transducer(a.alphabet(), std::move(c.names), std::move(c.edges), std::move(initial), std::move(final));
}

Transducer concat(const Transducer& a, const Transducer& b) {
    Combined c = combine(a, b);
    for (StateId f : a.final_states())
        for (StateId i : b.initial_states()) c.edges.push_back({f, Label::epsilon(), i + c.offset});
    std::vector<StateId> final;
    for (StateId s : b.final_states()) final.push_back(s + c.offset);
    return Transducer(a.alphabet(), std::move(c.names), std::move(c.edges), a.initial_states(), std::move(final));
}

TrimResult trim_with_map(const Transducer& t) {
    const std::size_t n = t.num_states();
    std::vector<std::vector<StateId>> fwd(n), bwd(n);
    for (const Edge& e : t.edges()) {
        fwd[e.source].push_back(e.target);
        bwd[e.target].push_back(e.source);
    }
    auto reachable = reach(n, fwd, t.initial_states());
    auto coreachable = reach(n, bwd, t.final_states());

    std::vector<StateId> kept;
    std::vector<StateId> new_id(n, n);
    for (StateId s = 0; s < n; ++s) {
        if (reachable[s] && coreachable[s]) {
            new_id[s] = kept.size();
            kept.push_back(s);
        }
    }
    const bool has_useful_initial = std::any_of(t.initial_states().begin(), t.initial_states().end(),
                                                [&](StateId s) { return new_id[s] != n; });
    if (!has_useful_initial) {
        const StateId first = t.initial_states().front();
        return {Transducer(t.alphabet(), {t.name(first)}, {}, {0}, {}), {first}};
    }

    std::vector<std::string> names;
    for (StateId s : kept) names.push_back(t.name(s));
    std::vector<Edge> edges;
    for (const Edge& e : t.edges()) {
        if (new_id[e.source] != n && new_id[e.target] != n)
            edges.push_back({new_id[e.source], e.label, new_id[e.target]});
    }
    std::vector<StateId> initial, final;
    for (StateId s : t.initial_states())
        if (new_id[s] != n) initial.push_back(new_id[s]);
    for (StateId s : t.final_states())
        if (new_id[s] != n) final.push_back(new_id[s]);
    return {Transducer(t.alphabet(), std::move(names), std::move(edges), std::move(initial), std::move(final)),
            std::move(kept)};
}

Transducer trim(const Transducer& t) { return trim_with_map(t).machine; }

bool has_epsilon_pairs(const Transducer& t) {
    return std::any_of(t.edges().begin(), t.edges().end(), [](const Edge& e) { return e.label.is_epsilon_pair(); });
}

bool is_letter_to_letter(const Transducer& t) {
    return std::all_of(t.edges().begin(), t.edges().end(), [](const Edge& e) { return e.label.is_letter_pair(); });
}

Transducer remove_epsilon_pairs(const Transducer& t) {
    if (!has_epsilon_pairs(t)) return t;
    const std::size_t n = t.num_states();
    std::vector<std::vector<StateId>> eps(n);
    for (const Edge& e : t.edges())
        if (e.label.is_epsilon_pair()) eps[e.source].push_back(e.target);

    std::vector<Edge> edges;
    std::vector<StateId> final;
    for (StateId p = 0; p < n; ++p) {
        auto closure = reach(n, eps, {p});
        bool is_final = false;
        for (StateId r = 0; r < n; ++r) {
            if (!closure[r]) continue;
            is_final = is_final || t.is_final(r);
            for (const Edge& e : t.out_edges(r))
                if (!e.label.is_epsilon_pair()) edges.push_back({p, e.label, e.target});
        }
        if (is_final) final.push_back(p);
    }
    return Transducer(t.alphabet(), t.names(), std::move(edges), t.initial_states(), std::move(final));
}

} // namespace ratpart
