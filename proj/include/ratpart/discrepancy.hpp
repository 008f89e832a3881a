#pragma once

#include <optional>

#include "ratpart/error.hpp"
#include "ratpart/transducer.hpp"

namespace ratpart {

/// Final discrepancy d and the largest |d| over all prefixes.
struct DiscrepancyProfile {
    int d = 0;
    unsigned dmax = 0;

    bool operator==(const DiscrepancyProfile&) const = default;
};

/// A computation lead_in . first_cycle . link . second_cycle whose two cycles
/// have length discrepancies of opposite sign.
struct ZeroAvoidanceWitness {
    Path lead_in;
    Path first_cycle;
    Path link;
    Path second_cycle;

    Path as_computation() const;
};

struct ZeroAvoidanceReport {
    bool zero_avoiding = false;
    std::optional<unsigned> min_bound;
    std::optional<ZeroAvoidanceWitness> witness;
};

class NotZeroAvoiding : public Error {
public:
    explicit NotZeroAvoiding(ZeroAvoidanceWitness witness)
        : Error("transducer is not zero-avoiding"), witness_(std::move(witness)) {}

    const ZeroAvoidanceWitness& witness() const noexcept { return witness_; }

private:
    ZeroAvoidanceWitness witness_;
};

/// |u| - |v|.
int pair_discrepancy(const WordPair& p);

/// Throws NotAPath when `path` is not a path of `t`.
DiscrepancyProfile path_profile(const Transducer& t, const Path& path);

/// Profile of a label sequence, without checking membership in a machine.
DiscrepancyProfile path_profile(const Path& path);

/// Decides zero-avoidance: the machine is not zero-avoiding iff some computation
/// runs through a cycle of positive discrepancy and later through one of negative
/// discrepancy (or the other way round). Fills `witness` when the answer is no;
/// `min_bound` is left empty.
ZeroAvoidanceReport is_zero_avoiding(const Transducer& t);

/// Least k such that every computation returning to discrepancy 0 has dmax <= k.
/// Throws NotZeroAvoiding.
unsigned minimum_bound(const Transducer& t);

/// is_zero_avoiding plus minimum_bound when applicable.
ZeroAvoidanceReport analyze_zero_avoidance(const Transducer& t);

} // namespace ratpart
