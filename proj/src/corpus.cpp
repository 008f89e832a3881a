#include "ratpart/corpus.hpp"

#include <stdexcept>

#include "ratpart/error.hpp"
#include "ratpart/io.hpp"
#include "ratpart/operations.hpp"

namespace ratpart::corpus {

namespace {

const Alphabet binary{2};

Label io(Symbol x, Symbol y) { return Label::pair(x, y); }
Label in(Symbol x) { return Label::in_only(x); }
Label out(Symbol y) { return Label::out_only(y); }

/// A chain of blocks, each read as "one step, then a loop": label+ per block.
/// The last state is the only final one.
Transducer plus_chain(const std::vector<Label>& blocks) {
    TransducerBuilder b(binary);
    StateId prev = b.add_state("s0", true, false);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        StateId next = b.add_state("s" + std::to_string(i + 1), false, i + 1 == blocks.size());
        b.add_edge(prev, blocks[i], next).add_edge(next, blocks[i], next);
        prev = next;
    }
    return b.build();
}

/// x* y* without -/- edges.
Transducer star_star(Label x, Label y) {
    TransducerBuilder b(binary);
    StateId p = b.add_state("p", true, true);
    StateId r = b.add_state("r", false, true);
    b.add_edge(p, x, p).add_edge(p, y, r).add_edge(r, y, r);
    return b.build();
}

enum class Side { none, input, output };

Side tail_side(const Transducer& tail) {
    Side side = Side::none;
    for (const Edge& e : tail.edges()) {
        Side here;
        if (e.label.input && !e.label.output) here = Side::input;
        else if (!e.label.input && e.label.output) here = Side::output;
        else throw ShapeViolation("tail edge " + format_label(e.label) + " is not one-sided");
        if (side != Side::none && side != here) throw ShapeViolation("tail mixes input-only and output-only edges");
        side = here;
    }
    return side;
}

} // namespace

Transducer fig_double_half() {
    TransducerBuilder b(binary);
    StateId p = b.add_state("p", true, true);
    StateId r = b.add_state("r");
    b.add_edge(p, io(0, 0), r).add_edge(r, in(0), p);
    return b.build();
}

Transducer double_half_plus() {
    TransducerBuilder b(binary);
    StateId p = b.add_state("p", true, false);
    StateId r = b.add_state("r");
    StateId f = b.add_state("f", false, true);
    b.add_edge(p, io(0, 0), r).add_edge(r, in(0), f).add_edge(f, io(0, 0), r);
    return b.build();
}

Transducer fig_example_S() {
    TransducerBuilder b(binary);
    StateId q1 = b.add_state("q1", true, false);
    StateId q2 = b.add_state("q2");
    StateId q3 = b.add_state("q3");
    StateId q4 = b.add_state("q4", false, true);
    StateId q5 = b.add_state("q5", false, true);
    StateId q6 = b.add_state("q6");
    b.add_edge(q1, io(1, 0), q1).add_edge(q1, io(0, 1), q2).add_edge(q1, io(0, 0), q3);
    b.add_edge(q2, io(0, 1), q1).add_edge(q2, io(0, 0), q3);
    b.add_edge(q3, io(1, 1), q3).add_edge(q3, io(1, 0), q4).add_edge(q3, io(0, 1), q4);
    b.add_edge(q4, io(1, 0), q4).add_edge(q4, io(0, 1), q4).add_edge(q4, io(1, 1), q5);
    b.add_edge(q5, io(1, 0), q6).add_edge(q5, io(0, 1), q6);
    b.add_edge(q6, io(1, 0), q5).add_edge(q6, io(0, 1), q5);
    return b.build();
}

Transducer fig_R1() {
    // Blocks 0^a/-, 1^i/0^i, -/1^c, 0^j/0^j, then 1/1 followed by the independent
    // tails 1^(b-1) and 1^(d-1) drawn as two loops on the final state.
    TransducerBuilder b(binary);
    std::vector<StateId> s;
    for (int i = 0; i < 6; ++i) s.push_back(b.add_state("s" + std::to_string(i), i == 0, i == 5));
    const Label blocks[] = {in(0), io(1, 0), out(1), io(0, 0), io(1, 1)};
    for (int i = 0; i < 5; ++i) b.add_edge(s[i], blocks[i], s[i + 1]);
    for (int i = 1; i < 5; ++i) b.add_edge(s[i], blocks[i - 1], s[i]);
    b.add_edge(s[5], in(1), s[5]).add_edge(s[5], out(1), s[5]);
    return b.build();
}

Transducer fig_R2() {
    return plus_chain({in(0), out(0), io(1, 1), out(0), io(0, 1), in(1)});
}

Transducer witness_A() {
    TransducerBuilder b(binary);
    StateId s0 = b.add_state("s0", true, false);
    StateId s1 = b.add_state("s1", false, true);
    StateId s2 = b.add_state("s2");
    StateId s3 = b.add_state("s3", false, true);
    b.add_edge(s0, io(1, 0), s1).add_edge(s1, io(0, 0), s2).add_edge(s2, in(0), s1);
    b.add_edge(s1, out(1), s3).add_edge(s3, out(1), s3);
    return b.build();
}

Transducer witness_B() {
    // 00/0 (00/0)^i (-/0)^j 1/1 0/1 1/0
    TransducerBuilder b(binary);
    StateId s0 = b.add_state("s0", true, false);
    StateId s1 = b.add_state("s1");
    StateId s2 = b.add_state("s2");
    StateId s3 = b.add_state("s3");
    StateId s4 = b.add_state("s4");
    StateId s5 = b.add_state("s5");
    StateId s6 = b.add_state("s6", false, true);
    b.add_edge(s0, io(0, 0), s1).add_edge(s1, in(0), s2).add_edge(s2, io(0, 0), s1);
    b.add_edge(s2, out(0), s3).add_edge(s3, out(0), s3);
    b.add_edge(s2, io(1, 1), s4).add_edge(s3, io(1, 1), s4);
    b.add_edge(s4, io(0, 1), s5).add_edge(s5, io(1, 0), s6);
    return b.build();
}

std::pair<Transducer, Transducer> nonclosure_pair() {
    return {star_star(io(0, 0), in(1)), star_star(in(0), io(1, 0))};
}

Transducer build_left_synchronous(const std::vector<SynchronousPart>& parts, Alphabet alphabet) {
    std::optional<Transducer> result;
    for (const auto& part : parts) {
        for (const Transducer* t : {&part.head, &part.tail})
            if (t->alphabet() != alphabet) throw AlphabetMismatch(alphabet.size, t->alphabet().size);
        if (!is_letter_to_letter(part.head)) throw NotLetterToLetter();
        tail_side(part.tail);
        Transducer piece = concat(part.head, part.tail);
        result = result ? union_of(*result, piece) : piece;
    }
    if (!result) return empty_relation(alphabet);
    return remove_epsilon_pairs(*result);
}

const std::vector<CorpusEntry>& entries() {
    static const std::vector<CorpusEntry> all{
        {"double_half", "(00/0)*", fig_double_half, {false, true, 0u}},
        {"double_half_plus", "(00/0)(00/0)*", double_half_plus, {false, true, 0u}},
        {"example_S", "six-state letter-to-letter machine", fig_example_S, {true, true, 0u}},
        {"R1", "0^a 1^i 0^j 1^b / 0^i 1^c 0^j 1^d", fig_R1, {false, false, std::nullopt}},
        {"R2", "0^a 1^i 0^j 1^b / 0^c 1^i 0^d 1^j", fig_R2, {false, false, std::nullopt}},
        {"witness_A", "1(00)^j / 0 0^j 1^i", witness_A, {false, false, std::nullopt}},
        {"witness_B", "0^(2i+2) 101 / 0^(i+1) 0^j 110", witness_B, {false, false, std::nullopt}},
        {"nonclosure_1", "(0/0)*(1/-)*", [] { return nonclosure_pair().first; }, {false, true, 0u}},
        {"nonclosure_2", "(0/-)*(1/0)*", [] { return nonclosure_pair().second; }, {false, true, 0u}},
    };
    return all;
}

const CorpusEntry& find(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw std::out_of_range("unknown example '" + name + "'");
}

} // namespace ratpart::corpus
