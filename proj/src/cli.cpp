#include "ratpart/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ratpart/corpus.hpp"
#include "ratpart/discrepancy.hpp"
#include "ratpart/error.hpp"
#include "ratpart/io.hpp"
#include "ratpart/operations.hpp"
#include "ratpart/oracle.hpp"
#include "ratpart/partition.hpp"

namespace ratpart::cli {

namespace {

/// Unreadable input or unwritable output; reported as a usage error.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf || !(outf << text)) throw FileError("cannot write '" + path + "'");
}

/// Writes to `path` when given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) out << text;
    else write_file(path, text);
}

const char* boolean(bool b) { return b ? "true" : "false"; }

void print_witness(const Transducer& t, const ZeroAvoidanceWitness& w, std::ostream& out) {
    auto states = [&](const Path& p) { return p.empty() ? std::string("-") : format_states(t, p); };
    out << "witness_lead_in: " << states(w.lead_in) << "\n";
    out << "witness_first_cycle: " << states(w.first_cycle) << "\n";
    out << "witness_link: " << states(w.link) << "\n";
    out << "witness_second_cycle: " << states(w.second_cycle) << "\n";
}

int cmd_analyze(const std::string& in_path, std::ostream& out) {
    const Transducer t = parse(read_file(in_path));
    const Transducer clean = remove_epsilon_pairs(t);
    const auto report = analyze_zero_avoidance(clean);
    const bool ltl = is_letter_to_letter(clean);

    std::string altering = "unknown";
    if (ltl) altering = boolean(is_input_altering_bounded_lag(clean, 0).input_altering);
    else if (report.zero_avoiding) altering = boolean(is_input_altering_bounded_lag(clean, *report.min_bound).input_altering);

    out << "letter_to_letter: " << boolean(ltl) << "\n";
    out << "zero_avoiding: " << boolean(report.zero_avoiding) << "\n";
    out << "min_bound: " << (report.min_bound ? std::to_string(*report.min_bound) : "-") << "\n";
    out << "input_altering: " << altering << "\n";
    out << "states: " << t.num_states() << "\n";
    out << "edges: " << t.num_edges() << "\n";
    if (report.witness) print_witness(clean, *report.witness, out);
    return ok;
}

int report_partition(const BoundedRelation& r, const BoundedRelation& a, const BoundedRelation& b,
                     std::ostream& out) {
    const auto check = check_partition(r, a, b);
    for (const auto& v : check.violations)
        out << "violation: " << to_string(v.kind) << " " << format_word(v.pair.u) << "\t" << format_word(v.pair.v)
            << "\n";
    out << "verified: " << boolean(check.passed()) << "\n";
    return check.passed() ? ok : verification_failed;
}

int cmd_partition(const std::string& in_path, const std::string& out1, const std::string& out2,
                  std::optional<unsigned> bound, std::optional<std::size_t> verify_len, std::ostream& out) {
    const Transducer s = parse(read_file(in_path));
    const auto result = partition(s, PartitionOptions{bound});
    write_file(out1, serialize(result.t1));
    write_file(out2, serialize(result.t2));
    out << "letter_to_letter: " << boolean(result.letter_to_letter) << "\n";
    out << "bound: " << result.k << "\n";
    out << "t1_states: " << result.t1.num_states() << "\n";
    out << "t2_states: " << result.t2.num_states() << "\n";
    if (!verify_len) return ok;
    const std::size_t cap = *verify_len;
    return report_partition(enumerate(s, cap), enumerate(result.t1, cap), enumerate(result.t2, cap), out);
}

int cmd_verify(const std::string& rel, const std::string& a, const std::string& b, std::optional<std::size_t> len,
               std::ostream& out) {
    auto r_rel = parse_pairs(read_file(rel));
    auto a_rel = parse_pairs(read_file(a));
    auto b_rel = parse_pairs(read_file(b));
    const std::size_t cap = len.value_or(std::max({r_rel.cap(), a_rel.cap(), b_rel.cap()}));
    auto widen = [cap](const BoundedRelation& x) { return BoundedRelation(cap, x.pairs()); };
    return report_partition(widen(r_rel), widen(a_rel), widen(b_rel), out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Asymmetric partitions of rational relations", "ratpart"};
    app.require_subcommand(1);

    std::string in_path, out_path, out1, out2, rel_path, a_path, b_path, example;
    std::optional<unsigned> bound;
    std::optional<std::size_t> verify_len, len;
    std::size_t enum_len = 0;

    auto* analyze = app.add_subcommand("analyze", "Report letter-to-letter, zero-avoidance and bound facts");
    analyze->add_option("--in", in_path, "Transducer file")->required();

    auto* part = app.add_subcommand("partition", "Split rel(S) into T1 (radix-decreasing) and T2 = T1^-1");
    part->add_option("--in", in_path, "Transducer file")->required();
    part->add_option("--out1", out1, "Output file for T1")->required();
    part->add_option("--out2", out2, "Output file for T2")->required();
    part->add_option("--bound", bound, "Discrepancy bound k (default: the minimum bound)");
    part->add_option("--verify-len", verify_len, "Check the partition contract on pairs up to this length");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the pairs of rel(T) with both sides within --len");
    enumerate_cmd->add_option("--in", in_path, "Transducer file")->required();
    enumerate_cmd->add_option("--len", enum_len, "Length cap")->required();
    enumerate_cmd->add_option("--out", out_path, "Pair file (default: standard output)");

    auto* verify = app.add_subcommand("verify", "Check that --a and --b partition --rel asymmetrically");
    verify->add_option("--rel", rel_path, "Pair file of the relation")->required();
    verify->add_option("--a", a_path, "Pair file of the first part")->required();
    verify->add_option("--b", b_path, "Pair file of the second part")->required();
    verify->add_option("--len", len, "Length cap (default: longest word in the files)");

    auto* dot = app.add_subcommand("dot", "Render a transducer in Graphviz format");
    dot->add_option("--in", in_path, "Transducer file")->required();
    dot->add_option("--out", out_path, "Output file (default: standard output)");

    auto* examples = app.add_subcommand("examples", "Built-in example machines");
    examples->require_subcommand(1);
    auto* list = examples->add_subcommand("list", "List example names");
    auto* emit_cmd = examples->add_subcommand("emit", "Write an example in the text format");
    emit_cmd->add_option("name", example, "Example name")->required();
    emit_cmd->add_option("--out", out_path, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*analyze) return cmd_analyze(in_path, out);
        if (*part) return cmd_partition(in_path, out1, out2, bound, verify_len, out);
        if (*enumerate_cmd) {
            emit(out_path, serialize_pairs(enumerate(parse(read_file(in_path)), enum_len)), out);
            return ok;
        }
        if (*verify) return cmd_verify(rel_path, a_path, b_path, len, out);
        if (*dot) {
            emit(out_path, to_dot(parse(read_file(in_path))), out);
            return ok;
        }
        if (*list) {
            for (const auto& e : corpus::entries()) out << e.name << "\t" << e.description << "\n";
            return ok;
        }
        if (*emit_cmd) {
            emit(out_path, serialize(corpus::find(example).build()), out);
            return ok;
        }
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const EmptyInitialSet& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const InvalidSymbol& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const NotZeroAvoiding& e) {
        err << "error: " << e.what() << "\n";
        return not_zero_avoiding;
    } catch (const NotInputAltering& e) {
        err << "error: " << e.what() << "\n";
        out << "witness: " << format_word(e.witness()) << "\n";
        return not_input_altering;
    } catch (const BoundTooSmall& e) {
        err << "error: " << e.what() << "\n";
        return bound_too_small;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return not_applicable;
    }
    return usage_error;
}

} // namespace ratpart::cli
