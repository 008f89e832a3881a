#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratpart/error.hpp"
#include "ratpart/transducer.hpp"

namespace ratpart {

/// Tag of a state copy. Meaning for a computation with label w_in/w_out ending in the copy:
///   lambda     w_in == w_out
///   plus(u)    w_in == w_out u,  1 <= |u| <= k
///   minus(u)   w_out == w_in u,  1 <= |u| <= k
///   a_delta(l) first difference has w_in's letter larger, d == l, |l| <= k
///   r_delta(l) first difference has w_in's letter smaller, d == l, |l| <= k
///   a / r      dmax has exceeded k and d > 0 / d < 0
struct CopyLabel {
    enum class Kind : std::uint8_t { lambda, a, r, plus, minus, a_delta, r_delta };

    Kind kind = Kind::lambda;
    Word pending;   // plus / minus
    int delta = 0;  // a_delta / r_delta

    static CopyLabel lam() { return {}; }
    static CopyLabel accept() { return {Kind::a, {}, 0}; }
    static CopyLabel reject() { return {Kind::r, {}, 0}; }
    static CopyLabel plus(Word u) { return {Kind::plus, std::move(u), 0}; }
    static CopyLabel minus(Word u) { return {Kind::minus, std::move(u), 0}; }
    static CopyLabel a_delta(int l) { return {Kind::a_delta, {}, l}; }
    static CopyLabel r_delta(int l) { return {Kind::r_delta, {}, l}; }

    /// Tag used in state names: L, A, R, +<u>, -<u>, A<l>, R<l>.
    std::string tag() const;

    bool operator==(const CopyLabel&) const = default;
    std::strong_ordering operator<=>(const CopyLabel&) const;
};

/// Every copy label for bound k over an alphabet of size q, in state-layout order:
/// L, A, R, +u (radix order), -u (radix order), A-k..Ak, R-k..Rk.
std::vector<CopyLabel> copy_labels(unsigned q, unsigned k);

/// 3 + 4k + 2 (q^(k+1) - 1) / (q - 1); for q == 1 the geometric sum is k + 1.
std::size_t copy_count(unsigned q, unsigned k);

struct CopiedState {
    StateId base = 0;
    CopyLabel copy;

    bool operator==(const CopiedState&) const = default;
};

/// A transducer whose states are tagged copies of the states of a source machine.
struct CCopy {
    Transducer machine;
    std::vector<CopiedState> origin;  // indexed by state of `machine`
};

/// Restricts a C-copy to its useful part, keeping the origin map aligned.
CCopy trim(const CCopy& c);

/// Checks the C-copy conditions against `source`: initials and finals are copies
/// of initials and finals, and every edge projects onto an edge of the source.
bool is_c_copy_of(const CCopy& c, const Transducer& source);

/// Erases copy tags edge by edge. Throws NotAPath.
Path corr_path(const CCopy& c, const Path& path);

/// Letter-to-letter construction with copies {L, A, R}: keeps exactly the pairs
/// u/v of rel(s) with u >_r v. Throws NotLetterToLetter.
CCopy build_alpha0(const Transducer& s);

struct AlphaOptions {
    /// Materialize only copies reachable from the initial L-copies.
    bool reachable_only = false;
};

/// The construction for a -/--free machine that is zero-avoiding with bound k:
/// rel(result) = rel(s) restricted to u >_r v. Throws HasEpsilonPair,
/// NotZeroAvoiding, BoundTooSmall.
CCopy build_alpha(const Transducer& s, unsigned k, AlphaOptions options = {});

/// Destination copy for an edge labelled `label` leaving a state in copy `from`.
CopyLabel next_copy(const CopyLabel& from, const Label& label, unsigned k);

/// Whether a state in copy `c` of a final source state is final.
bool is_final_copy(const CopyLabel& c, unsigned k);

struct InputAlteringResult {
    bool input_altering = false;
    /// Some w with w/w in rel(s) when not input-altering.
    std::optional<Word> witness;
};

/// Searches for a diagonal pair w/w, tracking the unmatched surplus of the side
/// that is ahead; surpluses longer than k are dropped, which is complete when
/// `s` is zero-avoiding with bound k. Throws HasEpsilonPair.
InputAlteringResult is_input_altering_bounded_lag(const Transducer& s, unsigned k);

class NotInputAltering : public Error {
public:
    explicit NotInputAltering(Word witness);

    const Word& witness() const noexcept { return witness_; }

private:
    Word witness_;
};

struct PartitionOptions {
    /// Use this bound instead of the minimum one. Must not be below the minimum.
    std::optional<unsigned> bound;
};

struct PartitionResult {
    Transducer t1;  // pairs with u >_r v
    Transducer t2;  // pairs with u <_r v; realizes the inverse of t1 when s is symmetric
    unsigned k = 0;
    bool letter_to_letter = false;
};

/// Splits rel(s) into its radix-decreasing and radix-increasing parts.
/// Throws NotZeroAvoiding, NotInputAltering, BoundTooSmall.
PartitionResult partition(const Transducer& s, PartitionOptions options = {});

} // namespace ratpart
