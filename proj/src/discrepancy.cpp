#include "ratpart/discrepancy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace ratpart {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Breadth-first search from `sources`; pred[v] is the edge used to reach v.
struct Bfs {
    std::vector<bool> seen;
    std::vector<const Edge*> pred;

    Bfs(const Transducer& t, const std::vector<StateId>& sources) : seen(t.num_states(), false),
                                                                    pred(t.num_states(), nullptr) {
        std::deque<StateId> queue;
        for (StateId s : sources) {
            if (!seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            for (const Edge& e : t.out_edges(s)) {
                if (!seen[e.target]) {
                    seen[e.target] = true;
                    pred[e.target] = &e;
                    queue.push_back(e.target);
                }
            }
        }
    }

    Path path_to(StateId target) const {
        Path p;
        for (const Edge* e = pred[target]; e != nullptr; e = pred[e->source]) p.push_back(*e);
        std::reverse(p.begin(), p.end());
        return p;
    }
};

/// Strongly connected components (iterative Tarjan) of the states flagged in `active`.
std::vector<std::size_t> scc_ids(const Transducer& t, const std::vector<bool>& active, std::size_t& count) {
    const std::size_t n = t.num_states();
    std::vector<std::size_t> index(n, npos), low(n, 0), comp(n, npos);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::size_t next_index = 0;
    count = 0;

    struct Frame {
        StateId state;
        std::size_t edge;
    };
    for (StateId root = 0; root < n; ++root) {
        if (!active[root] || index[root] != npos) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            auto out = t.out_edges(f.state);
            if (f.edge < out.size()) {
                StateId w = out[f.edge++].target;
                if (!active[w]) continue;
                if (index[w] == npos) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.state] = std::min(low[f.state], index[w]);
                }
                continue;
            }
            const StateId v = f.state;
            call.pop_back();
            if (!call.empty()) low[call.back().state] = std::min(low[call.back().state], low[v]);
            if (low[v] == index[v]) {
                StateId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
        }
    }
    return comp;
}

/// A closed walk inside one component whose total discrepancy has sign `sign`
/// (+1 or -1), found as a negative cycle of the weights -sign*d by Bellman-Ford.
std::optional<Path> signed_cycle(const std::vector<StateId>& members, const std::vector<const Edge*>& internal,
                                 int sign, std::size_t num_states) {
    if (internal.empty()) return std::nullopt;
    std::vector<std::size_t> local(num_states, npos);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;

    const std::size_t m = members.size();
    std::vector<long> dist(m, 0);
    std::vector<const Edge*> pred(m, nullptr);
    std::size_t relaxed = npos;
    for (std::size_t pass = 0; pass < m; ++pass) {
        relaxed = npos;
        for (const Edge* e : internal) {
            const std::size_t u = local[e->source], v = local[e->target];
            const long w = -sign * e->label.discrepancy();
            if (dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                pred[v] = e;
                relaxed = v;
            }
        }
        if (relaxed == npos) return std::nullopt;
    }

    std::size_t y = relaxed;
    for (std::size_t i = 0; i < m; ++i) y = local[pred[y]->source];
    Path cycle;
    std::size_t cur = y;
    do {
        const Edge* e = pred[cur];
        cycle.push_back(*e);
        cur = local[e->source];
    } while (cur != y);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

} // namespace

Path ZeroAvoidanceWitness::as_computation() const {
    Path p = lead_in;
    for (const Path* part : {&first_cycle, &link, &second_cycle}) p.insert(p.end(), part->begin(), part->end());
    return p;
}

int pair_discrepancy(const WordPair& p) {
    return static_cast<int>(p.u.size()) - static_cast<int>(p.v.size());
}

DiscrepancyProfile path_profile(const Path& path) {
    DiscrepancyProfile profile;
    for (const Edge& e : path) {
        profile.d += e.label.discrepancy();
        profile.dmax = std::max(profile.dmax, static_cast<unsigned>(std::abs(profile.d)));
    }
    return profile;
}

DiscrepancyProfile path_profile(const Transducer& t, const Path& path) {
    if (!is_path_of(t, path)) throw NotAPath("edge sequence is not a path of the transducer");
    return path_profile(path);
}

ZeroAvoidanceReport is_zero_avoiding(const Transducer& t) {
    const std::size_t n = t.num_states();
    const Bfs from_initial(t, t.initial_states());

    std::size_t num_scc = 0;
    const auto comp = scc_ids(t, from_initial.seen, num_scc);
    std::vector<std::vector<StateId>> members(num_scc);
    std::vector<std::vector<const Edge*>> internal(num_scc);
    for (StateId s = 0; s < n; ++s)
        if (comp[s] != npos) members[comp[s]].push_back(s);
    for (const Edge& e : t.edges()) {
        if (comp[e.source] != npos && comp[e.source] == comp[e.target]) internal[comp[e.source]].push_back(&e);
    }

    std::vector<std::optional<Path>> positive(num_scc), negative(num_scc);
    for (std::size_t c = 0; c < num_scc; ++c) {
        positive[c] = signed_cycle(members[c], internal[c], +1, n);
        negative[c] = signed_cycle(members[c], internal[c], -1, n);
    }

    ZeroAvoidanceReport report;
    for (const auto& [first, second] : {std::pair{&positive, &negative}, std::pair{&negative, &positive}}) {
        for (std::size_t c1 = 0; c1 < num_scc; ++c1) {
            if (!(*first)[c1]) continue;
            const Path& cycle1 = *(*first)[c1];
            const StateId anchor1 = cycle1.front().source;
            const Bfs from_anchor(t, {anchor1});
            for (std::size_t c2 = 0; c2 < num_scc; ++c2) {
                if (!(*second)[c2]) continue;
                const Path& cycle2 = *(*second)[c2];
                const StateId anchor2 = cycle2.front().source;
                if (!from_anchor.seen[anchor2]) continue;
                report.zero_avoiding = false;
                report.witness = ZeroAvoidanceWitness{from_initial.path_to(anchor1), cycle1,
                                                      from_anchor.path_to(anchor2), cycle2};
                return report;
            }
        }
    }
    report.zero_avoiding = true;
    return report;
}

unsigned minimum_bound(const Transducer& t) {
    auto report = is_zero_avoiding(t);
    if (!report.zero_avoiding) throw NotZeroAvoiding(std::move(*report.witness));

    // Configurations (state, d, m): running discrepancy d with |d| < n and running
    // maximum m = max |d|. A zero-avoiding machine cannot bring a computation whose
    // |d| reached n back to 0, so those configurations are dropped.
    const long n = static_cast<long>(t.num_states());
    const long width = 2 * n - 1;
    auto key = [&](StateId s, long d, long m) {
        return (static_cast<std::size_t>(s) * width + static_cast<std::size_t>(d + n - 1)) * n +
               static_cast<std::size_t>(m);
    };
    std::vector<bool> seen(static_cast<std::size_t>(n * width * n), false);
    struct Config {
        StateId state;
        long d, m;
    };
    std::vector<Config> stack;
    for (StateId s : t.initial_states()) {
        if (!seen[key(s, 0, 0)]) {
            seen[key(s, 0, 0)] = true;
            stack.push_back({s, 0, 0});
        }
    }
    unsigned best = 0;
    while (!stack.empty()) {
        Config c = stack.back();
        stack.pop_back();
        if (c.d == 0) best = std::max(best, static_cast<unsigned>(c.m));
        for (const Edge& e : t.out_edges(c.state)) {
            const long d = c.d + e.label.discrepancy();
            if (std::abs(d) >= n) continue;
            const long m = std::max(c.m, std::abs(d));
            if (!seen[key(e.target, d, m)]) {
                seen[key(e.target, d, m)] = true;
                stack.push_back({e.target, d, m});
            }
        }
    }
    return best;
}

ZeroAvoidanceReport analyze_zero_avoidance(const Transducer& t) {
    auto report = is_zero_avoiding(t);
    if (report.zero_avoiding) report.min_bound = minimum_bound(t);
    return report;
}

} // namespace ratpart
