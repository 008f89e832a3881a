#pragma once

#include <vector>

#include "ratpart/transducer.hpp"

namespace ratpart {

/// One non-final initial state, no edges.
Transducer empty_relation(Alphabet alphabet);

/// One initial and final state, no edges: realizes {-/-}.
Transducer epsilon_relation(Alphabet alphabet);

/// Swaps every label x/y into y/x.
Transducer inverse(const Transducer& t);

/// Disjoint union. States of `b` follow those of `a`; clashing names of `b`
/// receive a "_<n>" suffix.
Transducer union_of(const Transducer& a, const Transducer& b);

/// rel(a) rel(b), linked by -/- edges from every final of `a` to every initial of `b`.
Transducer concat(const Transducer& a, const Transducer& b);

struct TrimResult {
    Transducer machine;
    /// kept[i] is the id in the input of state i of `machine`.
    std::vector<StateId> kept;
};

/// Keeps the states that are reachable and co-reachable. A machine whose
/// relation is empty becomes a single non-final initial state.
TrimResult trim_with_map(const Transducer& t);
Transducer trim(const Transducer& t);

/// Removes -/- edges through their closure; the relation is unchanged.
Transducer remove_epsilon_pairs(const Transducer& t);

bool has_epsilon_pairs(const Transducer& t);
bool is_letter_to_letter(const Transducer& t);

} // namespace ratpart
