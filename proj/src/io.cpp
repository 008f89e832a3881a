#include "ratpart/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "ratpart/error.hpp"

namespace ratpart {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool parse_unsigned(std::string_view token, unsigned& value) {
    if (token.empty() || (token.size() > 1 && token[0] == '0')) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::optional<Symbol> parse_side(std::string_view token, const Alphabet& alphabet, std::size_t line) {
    if (token == "-") return std::nullopt;
    unsigned value = 0;
    if (!parse_unsigned(token, value))
        throw ParseError(line, "label side '" + std::string(token) +
                                   "' must be one decimal symbol or '-'");
    if (!alphabet.contains(value))
        throw InvalidSymbol("line " + std::to_string(line) + ": symbol " + std::string(token) +
                            " is not in the alphabet of size " + std::to_string(alphabet.size));
    return value;
}

struct PendingArc {
    std::size_t line;
    std::string source, target;
    Label label;
};

} // namespace

Transducer parse(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<std::string> names;
    std::unordered_map<std::string, StateId> ids;
    std::vector<StateId> initial, final;
    std::vector<PendingArc> arcs;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const auto keyword = tokens[0];

        if (!alphabet) {
            unsigned q = 0;
            if (keyword != "alphabet" || tokens.size() != 2 || !parse_unsigned(tokens[1], q) || q == 0)
                throw ParseError(line_no, "expected 'alphabet <q>' with q >= 1");
            alphabet = Alphabet{q};
            continue;
        }

        if (keyword == "state") {
            if (tokens.size() < 2) throw ParseError(line_no, "state line needs a name");
            std::string name(tokens[1]);
            if (ids.contains(name)) throw ParseError(line_no, "state '" + name + "' declared twice");
            const StateId id = names.size();
            bool is_initial = false, is_final = false;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                if (tokens[i] == "initial" && !is_initial) {
                    is_initial = true;
                } else if (tokens[i] == "final" && !is_final) {
                    is_final = true;
                } else {
                    throw ParseError(line_no, "unexpected state attribute '" + std::string(tokens[i]) + "'");
                }
            }
            if (is_initial) initial.push_back(id);
            if (is_final) final.push_back(id);
            ids.emplace(name, id);
            names.push_back(std::move(name));
        } else if (keyword == "arc") {
            if (tokens.size() != 5) throw ParseError(line_no, "expected 'arc <src> <dst> <x> <y>'");
            Label label{parse_side(tokens[3], *alphabet, line_no), parse_side(tokens[4], *alphabet, line_no)};
            arcs.push_back({line_no, std::string(tokens[1]), std::string(tokens[2]), label});
        } else if (keyword == "alphabet") {
            throw ParseError(line_no, "alphabet declared twice");
        } else {
            throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
        }
    }
    if (!alphabet) throw ParseError(line_no, "missing 'alphabet' line");

    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const auto& arc : arcs) {
        auto src = ids.find(arc.source);
        auto dst = ids.find(arc.target);
        if (src == ids.end()) throw ParseError(arc.line, "undeclared state '" + arc.source + "'");
        if (dst == ids.end()) throw ParseError(arc.line, "undeclared state '" + arc.target + "'");
        edges.push_back({src->second, arc.label, dst->second});
    }
    if (initial.empty()) throw EmptyInitialSet();
    try {
        return Transducer(*alphabet, std::move(names), std::move(edges), std::move(initial), std::move(final));
    } catch (const InvalidTransducer& e) {
        throw ParseError(line_no, e.what());
    }
}

std::string format_label(const Label& label, std::string_view epsilon) {
    auto side = [&](const std::optional<Symbol>& s) {
        return s ? std::to_string(*s) : std::string(epsilon);
    };
    return side(label.input) + "/" + side(label.output);
}

std::string serialize(const Transducer& t) {
    std::ostringstream out;
    out << "alphabet " << t.alphabet().size << '\n';
    for (StateId s = 0; s < t.num_states(); ++s) {
        out << "state " << t.name(s);
        if (t.is_initial(s)) out << " initial";
        if (t.is_final(s)) out << " final";
        out << '\n';
    }
    auto side = [](const std::optional<Symbol>& s) { return s ? std::to_string(*s) : std::string("-"); };
    for (const Edge& e : t.edges()) {
        out << "arc " << t.name(e.source) << ' ' << t.name(e.target) << ' ' << side(e.label.input) << ' '
            << side(e.label.output) << '\n';
    }
    return out.str();
}

std::string to_dot(const Transducer& t) {
    auto quoted = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q.push_back('\\');
            q.push_back(c);
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "digraph transducer {\n  rankdir=LR;\n";
    for (StateId s = 0; s < t.num_states(); ++s) {
        out << "  " << quoted(t.name(s)) << " [shape=" << (t.is_final(s) ? "doublecircle" : "circle") << "];\n";
    }
    for (StateId s : t.initial_states()) {
        const std::string start = "__start" + std::to_string(s);
        out << "  " << start << " [shape=point];\n";
        out << "  " << start << " -> " << quoted(t.name(s)) << ";\n";
    }
    for (const Edge& e : t.edges()) {
        out << "  " << quoted(t.name(e.source)) << " -> " << quoted(t.name(e.target)) << " [label="
            << quoted(format_label(e.label, "\xce\xbb")) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace ratpart
