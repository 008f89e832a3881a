#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratpart/transducer.hpp"

namespace ratpart::corpus {

/// (00/0)*: an initial-final state p, p -0/0-> r, r -0/-> p.
Transducer fig_double_half();

/// (00/0)(00/0)*: at least one repetition.
Transducer double_half_plus();

/// The six-state letter-to-letter machine used to illustrate the {L, A, R} construction.
Transducer fig_example_S();

/// R1 = { 0^a 1^i 0^j 1^b / 0^i 1^c 0^j 1^d : all exponents >= 1 }.
Transducer fig_R1();

/// R2 = { 0^a 1^i 0^j 1^b / 0^c 1^i 0^d 1^j : all exponents >= 1 }.
Transducer fig_R2();

/// A = { 1(00)^j / 0 0^j 1^i : i, j >= 0 }.
Transducer witness_A();

/// B = { 0^(2i+2) 101 / 0^(i+1) 0^j 110 : i, j >= 0 }.
Transducer witness_B();

/// Two zero-avoiding machines whose relations intersect in { 0^i 1^i / 0^i }:
/// (0/0)*(1/-)* and (0/-)*(1/0)*.
std::pair<Transducer, Transducer> nonclosure_pair();

/// One component T_i S_i of a left synchronous union.
struct SynchronousPart {
    Transducer head;  // letter-to-letter
    Transducer tail;  // labels all in Sigma x {-} or all in {-} x Sigma
};

/// The union of the concatenations head_i tail_i. Zero-avoiding with bound 0.
/// Throws NotLetterToLetter, ShapeViolation, AlphabetMismatch.
Transducer build_left_synchronous(const std::vector<SynchronousPart>& parts, Alphabet alphabet);

struct ExpectedFacts {
    bool letter_to_letter = false;
    bool zero_avoiding = false;
    std::optional<unsigned> min_bound;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    std::function<Transducer()> build;
    ExpectedFacts expected;
};

const std::vector<CorpusEntry>& entries();

/// Throws std::out_of_range for unknown names.
const CorpusEntry& find(const std::string& name);

} // namespace ratpart::corpus
