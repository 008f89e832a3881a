#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratpart/word.hpp"

namespace ratpart {

using StateId = std::size_t;

/// The ordered alphabet {0, ..., size-1}.
struct Alphabet {
    unsigned size = 1;

    bool contains(Symbol s) const noexcept { return s < size; }
    bool operator==(const Alphabet&) const = default;
};

/// x/y where each side is one symbol or the empty word (nullopt).
struct Label {
    std::optional<Symbol> input;
    std::optional<Symbol> output;

    static Label pair(Symbol x, Symbol y) { return {x, y}; }
    static Label in_only(Symbol x) { return {x, std::nullopt}; }
    static Label out_only(Symbol y) { return {std::nullopt, y}; }
    static Label epsilon() { return {}; }

    bool is_epsilon_pair() const noexcept { return !input && !output; }
    bool is_letter_pair() const noexcept { return input && output; }

    /// Length discrepancy |x| - |y|, always in {-1, 0, 1}.
    int discrepancy() const noexcept { return (input ? 1 : 0) - (output ? 1 : 0); }

    Label inverse() const { return {output, input}; }

    bool operator==(const Label&) const = default;
    /// The empty side sorts before every symbol.
    std::strong_ordering operator<=>(const Label&) const = default;
};

struct Edge {
    StateId source = 0;
    Label label;
    StateId target = 0;

    bool operator==(const Edge&) const = default;
    /// Ordered by (source, target, input, output).
    std::strong_ordering operator<=>(const Edge& other) const;
};

/// Consecutive edges; the empty path is labelled -/-.
using Path = std::vector<Edge>;

WordPair path_label(const Path& path);

/// A finite transducer (Q, Sigma, E, I, F). Immutable once built: edges are
/// deduplicated and kept sorted by (source, target, input, output).
class Transducer {
public:
    Transducer(Alphabet alphabet, std::vector<std::string> state_names, std::vector<Edge> edges,
               std::vector<StateId> initial, std::vector<StateId> final);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return names_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    /// Edges leaving `s`, in canonical order.
    std::span<const Edge> out_edges(StateId s) const;

    const std::string& name(StateId s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<StateId> find_state(std::string_view name) const;

    bool is_initial(StateId s) const { return initial_flag_.at(s); }
    bool is_final(StateId s) const { return final_flag_.at(s); }
    const std::vector<StateId>& initial_states() const noexcept { return initial_; }
    const std::vector<StateId>& final_states() const noexcept { return final_; }

    bool has_edge(const Edge& e) const;

    /// Structural identity: same alphabet, names, edges, initial and final sets.
    bool operator==(const Transducer& other) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> edge_offsets_;
    std::vector<StateId> initial_;
    std::vector<StateId> final_;
    std::vector<bool> initial_flag_;
    std::vector<bool> final_flag_;
};

/// Incremental construction; `build()` validates.
class TransducerBuilder {
public:
    explicit TransducerBuilder(Alphabet alphabet) : alphabet_(alphabet) {}

    StateId add_state(std::string name, bool initial = false, bool final = false);
    StateId add_state(const char* name, bool initial = false, bool final = false) {
        return add_state(std::string(name), initial, final);
    }
    /// Adds a state with a generated name "q<id>".
    StateId add_state(bool initial = false, bool final = false);
    void set_initial(StateId s, bool value = true);
    void set_final(StateId s, bool value = true);
    TransducerBuilder& add_edge(StateId source, Label label, StateId target);

    std::size_t num_states() const noexcept { return names_.size(); }

    Transducer build() const;

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<bool> initial_;
    std::vector<bool> final_;
};

/// True iff every edge of `path` is an edge of `t` and the edges are consecutive.
bool is_path_of(const Transducer& t, const Path& path);

/// A path that is empty or starts at an initial state.
bool is_computation(const Transducer& t, const Path& path);

bool is_accepting_computation(const Transducer& t, const Path& path);

/// State sequence visited by a nonempty path ("q0 q1 q0").
std::string format_states(const Transducer& t, const Path& path);

} // namespace ratpart
