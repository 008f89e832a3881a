#include "ratpart/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ratpart/discrepancy.hpp"
#include "ratpart/operations.hpp"

namespace ratpart {

NotInputAltering::NotInputAltering(Word witness)
    : Error("transducer is not input-altering: " + format_word(witness) + "/" + format_word(witness) +
            " is realized"),
      witness_(std::move(witness)) {}

namespace {

/// `pending` is the part of the side that is ahead not yet matched by the other
/// side; `output_ahead` says which side that is. Empty pending means both sides agree.
struct LagConfig {
    StateId state = 0;
    bool output_ahead = false;
    Word pending;

    auto operator<=>(const LagConfig&) const = default;
};

/// Applies one label to a configuration; nullopt when the two sides disagree.
std::optional<LagConfig> advance(const LagConfig& c, const Edge& e) {
    LagConfig next{e.target, c.output_ahead, c.pending};
    // Append the ahead side's letter first, then match the other side's letter.
    const auto& ahead_letter = c.output_ahead ? e.label.output : e.label.input;
    const auto& behind_letter = c.output_ahead ? e.label.input : e.label.output;
    if (ahead_letter) next.pending.push_back(*ahead_letter);
    if (behind_letter) {
        if (next.pending.empty()) {
            next.output_ahead = !c.output_ahead;
            next.pending.push_back(*behind_letter);
        } else if (next.pending.front() == *behind_letter) {
            next.pending.erase(next.pending.begin());
        } else {
            return std::nullopt;
        }
    }
    if (next.pending.empty()) next.output_ahead = false;
    return next;
}

} // namespace

InputAlteringResult is_input_altering_bounded_lag(const Transducer& s, unsigned k) {
    if (has_epsilon_pairs(s)) throw HasEpsilonPair();

    struct Visit {
        std::size_t parent;
        std::optional<Symbol> input;
    };
    constexpr std::size_t root = static_cast<std::size_t>(-1);
    std::map<LagConfig, std::size_t> index;
    std::vector<LagConfig> configs;
    std::vector<Visit> visits;
    std::deque<std::size_t> queue;

    auto discover = [&](LagConfig c, Visit v) {
        if (index.contains(c)) return;
        index.emplace(c, configs.size());
        queue.push_back(configs.size());
        configs.push_back(std::move(c));
        visits.push_back(v);
    };
    for (StateId i : s.initial_states()) discover({i, false, {}}, {root, std::nullopt});

    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const LagConfig c = configs[id];
        if (c.pending.empty() && s.is_final(c.state)) {
            Word w;
            for (std::size_t at = id; at != root; at = visits[at].parent)
                if (visits[at].input) w.push_back(*visits[at].input);
            std::reverse(w.begin(), w.end());
            return {false, std::move(w)};
        }
        for (const Edge& e : s.out_edges(c.state)) {
            auto next = advance(c, e);
            if (!next || next->pending.size() > k) continue;
            discover(std::move(*next), {id, e.label.input});
        }
    }
    return {true, std::nullopt};
}

PartitionResult partition(const Transducer& s, PartitionOptions options) {
    const Transducer source = trim(remove_epsilon_pairs(s));

    if (is_letter_to_letter(source)) {
        auto altering = is_input_altering_bounded_lag(source, 0);
        if (!altering.input_altering) throw NotInputAltering(std::move(*altering.witness));
        return {trim(build_alpha0(source).machine), trim(inverse(build_alpha0(inverse(source)).machine)), 0, true};
    }

    auto report = is_zero_avoiding(source);
    if (!report.zero_avoiding) throw NotZeroAvoiding(std::move(*report.witness));
    const unsigned required = minimum_bound(source);
    const unsigned k = options.bound.value_or(required);
    if (k < required) throw BoundTooSmall(required, k);

    auto altering = is_input_altering_bounded_lag(source, k);
    if (!altering.input_altering) throw NotInputAltering(std::move(*altering.witness));

    const AlphaOptions lazy{.reachable_only = true};
    return {trim(build_alpha(source, k, lazy).machine), trim(inverse(build_alpha(inverse(source), k, lazy).machine)),
            k, false};
}

} // namespace ratpart
