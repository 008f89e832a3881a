#include "ratpart/transducer.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "ratpart/error.hpp"

namespace ratpart {

std::strong_ordering Edge::operator<=>(const Edge& other) const {
    if (auto c = source <=> other.source; c != 0) return c;
    if (auto c = target <=> other.target; c != 0) return c;
    return label <=> other.label;
}

WordPair path_label(const Path& path) {
    WordPair p;
    for (const Edge& e : path) {
        if (e.label.input) p.u.push_back(*e.label.input);
        if (e.label.output) p.v.push_back(*e.label.output);
    }
    return p;
}

namespace {

void check_name(const std::string& name) {
    if (name.empty()) throw InvalidTransducer("empty state name");
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
            throw InvalidTransducer("state name '" + name + "' contains whitespace or '#'");
    }
}

std::vector<StateId> sorted_unique(std::vector<StateId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace

Transducer::Transducer(Alphabet alphabet, std::vector<std::string> state_names,
                       std::vector<Edge> edges, std::vector<StateId> initial,
                       std::vector<StateId> final)
    : alphabet_(alphabet), names_(std::move(state_names)), edges_(std::move(edges)),
      initial_(sorted_unique(std::move(initial))), final_(sorted_unique(std::move(final))) {
    if (alphabet_.size == 0) throw InvalidTransducer("alphabet must have at least one symbol");
    const std::size_t n = names_.size();

    std::unordered_set<std::string_view> seen;
    for (const auto& name : names_) {
        check_name(name);
        if (!seen.insert(name).second) throw InvalidTransducer("duplicate state name '" + name + "'");
    }

    if (initial_.empty()) throw EmptyInitialSet();
    for (StateId s : initial_)
        if (s >= n) throw InvalidTransducer("initial state id out of range");
    for (StateId s : final_)
        if (s >= n) throw InvalidTransducer("final state id out of range");

    for (const Edge& e : edges_) {
        if (e.source >= n || e.target >= n) throw InvalidTransducer("edge endpoint out of range");
        for (const auto& side : {e.label.input, e.label.output}) {
            if (side && !alphabet_.contains(*side))
                throw InvalidSymbol("symbol " + std::to_string(*side) + " is not in the alphabet of size " +
                                    std::to_string(alphabet_.size));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    edge_offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) ++edge_offsets_[e.source + 1];
    for (std::size_t i = 0; i < n; ++i) edge_offsets_[i + 1] += edge_offsets_[i];

    initial_flag_.assign(n, false);
    final_flag_.assign(n, false);
    for (StateId s : initial_) initial_flag_[s] = true;
    for (StateId s : final_) final_flag_[s] = true;
}

std::span<const Edge> Transducer::out_edges(StateId s) const {
    const std::size_t begin = edge_offsets_.at(s);
    const std::size_t end = edge_offsets_.at(s + 1);
    return std::span<const Edge>(edges_).subspan(begin, end - begin);
}

std::optional<StateId> Transducer::find_state(std::string_view name) const {
    for (StateId s = 0; s < names_.size(); ++s)
        if (names_[s] == name) return s;
    return std::nullopt;
}

bool Transducer::has_edge(const Edge& e) const {
    if (e.source >= num_states()) return false;
    auto out = out_edges(e.source);
    return std::binary_search(out.begin(), out.end(), e);
}

bool Transducer::operator==(const Transducer& other) const {
    return alphabet_ == other.alphabet_ && names_ == other.names_ && edges_ == other.edges_ &&
           initial_ == other.initial_ && final_ == other.final_;
}

StateId TransducerBuilder::add_state(std::string name, bool initial, bool final) {
    names_.push_back(std::move(name));
    initial_.push_back(initial);
    final_.push_back(final);
    return names_.size() - 1;
}

StateId TransducerBuilder::add_state(bool initial, bool final) {
    return add_state("q" + std::to_string(names_.size()), initial, final);
}

void TransducerBuilder::set_initial(StateId s, bool value) { initial_.at(s) = value; }
void TransducerBuilder::set_final(StateId s, bool value) { final_.at(s) = value; }

TransducerBuilder& TransducerBuilder::add_edge(StateId source, Label label, StateId target) {
    edges_.push_back({source, label, target});
    return *this;
}

Transducer TransducerBuilder::build() const {
    std::vector<StateId> initial, final;
    for (StateId s = 0; s < names_.size(); ++s) {
        if (initial_[s]) initial.push_back(s);
        if (final_[s]) final.push_back(s);
    }
    return Transducer(alphabet_, names_, edges_, std::move(initial), std::move(final));
}

bool is_path_of(const Transducer& t, const Path& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!t.has_edge(path[i])) return false;
        if (i > 0 && path[i - 1].target != path[i].source) return false;
    }
    return true;
}

bool is_computation(const Transducer& t, const Path& path) {
    if (!is_path_of(t, path)) return false;
    return path.empty() || t.is_initial(path.front().source);
}

bool is_accepting_computation(const Transducer& t, const Path& path) {
    if (!is_computation(t, path)) return false;
    if (path.empty()) {
        return std::any_of(t.initial_states().begin(), t.initial_states().end(),
                           [&](StateId s) { return t.is_final(s); });
    }
    return t.is_final(path.back().target);
}

std::string format_states(const Transducer& t, const Path& path) {
    if (path.empty()) return "";
    std::string out = t.name(path.front().source);
    for (const Edge& e : path) out += " " + t.name(e.target);
    return out;
}

} // namespace ratpart
