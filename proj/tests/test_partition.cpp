#include <doctest.h>

#include <algorithm>

#include "ratpart/corpus.hpp"
#include "ratpart/discrepancy.hpp"
#include "ratpart/error.hpp"
#include "ratpart/operations.hpp"
#include "ratpart/oracle.hpp"
#include "ratpart/partition.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace ratpart;
using namespace ratpart::testing;

namespace {

BoundedRelation radix_greater(const Transducer& t, std::size_t cap) {
    return filter_order(enumerate(t, cap), OrderKind::radix, Direction::greater);
}

bool subset(const BoundedRelation& a, const BoundedRelation& b) { return a.subtract(b).empty(); }

Transducer diagonal() {
    TransducerBuilder b(Alphabet{2});
    StateId p = b.add_state("p", true, true);
    b.add_edge(p, Label::pair(0, 0), p).add_edge(p, Label::pair(1, 1), p);
    return b.build();
}

Transducer opposite_loops() {
    TransducerBuilder b(Alphabet{2});
    StateId p = b.add_state("p", true, true);
    b.add_edge(p, Label::in_only(0), p).add_edge(p, Label::out_only(0), p);
    return b.build();
}

/// Random zero-avoiding -/--free machine (rejection sampling).
Transducer random_zero_avoiding(Rng& rng, unsigned max_states, unsigned q) {
    while (true) {
        Transducer t = random_machine(rng, uniform(rng, 1, max_states), q, all_shapes(), 2);
        if (is_zero_avoiding(t).zero_avoiding) return t;
    }
}

std::vector<std::string> final_names(const Transducer& t) {
    std::vector<std::string> out;
    for (StateId s : t.final_states()) out.push_back(t.name(s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("copy labels and counts") {
    CHECK(copy_count(2, 0) == 5);
    CHECK(copy_count(2, 1) == 13);
    CHECK(copy_count(2, 2) == 25);
    CHECK(copy_count(3, 1) == 3 + 4 + 2 * 4);
    for (unsigned q = 1; q <= 3; ++q)
        for (unsigned k = 0; k <= 3; ++k) CHECK(copy_labels(q, k).size() == copy_count(q, k));
    const auto labels = copy_labels(2, 1);
    std::vector<std::string> tags;
    for (const auto& c : labels) tags.push_back(c.tag());
    CHECK(tags == std::vector<std::string>{"L", "A", "R", "+0", "+1", "-0", "-1", "A-1", "A0", "A1", "R-1", "R0", "R1"});
}

TEST_CASE("copy transitions") {
    using CL = CopyLabel;
    // From the lambda copy.
    CHECK(next_copy(CL::lam(), Label::pair(1, 1), 1) == CL::lam());
    CHECK(next_copy(CL::lam(), Label::pair(1, 0), 1) == CL::a_delta(0));
    CHECK(next_copy(CL::lam(), Label::pair(0, 1), 1) == CL::r_delta(0));
    CHECK(next_copy(CL::lam(), Label::in_only(1), 1) == CL::plus({1}));
    CHECK(next_copy(CL::lam(), Label::in_only(1), 0) == CL::accept());
    CHECK(next_copy(CL::lam(), Label::out_only(1), 0) == CL::reject());
    // Pending input surplus u: output letters are matched against u.
    CHECK(next_copy(CL::plus({1}), Label::out_only(1), 1) == CL::lam());
    CHECK(next_copy(CL::plus({1}), Label::out_only(0), 1) == CL::a_delta(0));
    CHECK(next_copy(CL::plus({0}), Label::pair(1, 1), 1) == CL::r_delta(1));
    CHECK(next_copy(CL::plus({0}), Label::pair(1, 0), 1) == CL::plus({1}));
    CHECK(next_copy(CL::plus({0}), Label::in_only(1), 1) == CL::accept());
    CHECK(next_copy(CL::plus({0}), Label::in_only(1), 2) == CL::plus({0, 1}));
    // Pending output surplus u: the discrepancy is negative.
    CHECK(next_copy(CL::minus({1}), Label::in_only(0), 1) == CL::r_delta(0));
    CHECK(next_copy(CL::minus({0, 1}), Label::in_only(1), 2) == CL::a_delta(-1));
    CHECK(next_copy(CL::minus({0}), Label::pair(1, 0), 1) == CL::a_delta(-1));
    CHECK(next_copy(CL::minus({0}), Label::out_only(0), 1) == CL::reject());
    // Decided copies track the discrepancy until it leaves [-k, k].
    CHECK(next_copy(CL::r_delta(0), Label::in_only(0), 1) == CL::r_delta(1));
    CHECK(next_copy(CL::r_delta(1), Label::in_only(0), 1) == CL::accept());
    CHECK(next_copy(CL::a_delta(-1), Label::out_only(0), 1) == CL::reject());
    CHECK(next_copy(CL::a_delta(0), Label::in_only(0), 0) == CL::accept());
    CHECK(next_copy(CL::a_delta(0), Label::out_only(0), 0) == CL::reject());
    CHECK(next_copy(CL::accept(), Label::out_only(0), 1) == CL::accept());
    CHECK(next_copy(CL::reject(), Label::in_only(0), 1) == CL::reject());
}

TEST_CASE("final copies") {
    CHECK(is_final_copy(CopyLabel::accept(), 1));
    CHECK(is_final_copy(CopyLabel::plus({0}), 1));
    CHECK(is_final_copy(CopyLabel::a_delta(0), 1));
    CHECK(is_final_copy(CopyLabel::r_delta(1), 1));
    CHECK_FALSE(is_final_copy(CopyLabel::lam(), 1));
    CHECK_FALSE(is_final_copy(CopyLabel::reject(), 1));
    CHECK_FALSE(is_final_copy(CopyLabel::minus({0}), 1));
    CHECK_FALSE(is_final_copy(CopyLabel::a_delta(-1), 1));
    CHECK_FALSE(is_final_copy(CopyLabel::r_delta(0), 1));
}

TEST_CASE("alpha0 of the example machine") {
    const Transducer s = corpus::fig_example_S();
    const CCopy a = build_alpha0(s);
    CHECK(a.machine.num_states() == 18);
    CHECK(final_names(a.machine) == std::vector<std::string>{"q4^A", "q5^A"});
    CHECK(a.machine.name(0) == "q1^L");
    CHECK(is_c_copy_of(a, s));
    CHECK(enumerate(a.machine, 2).contains(wp("01", "00")));
    const auto rel = enumerate(a.machine, 6);
    CHECK(rel.intersect(rel.inverse()).empty());

    const CCopy trimmed = trim(a);
    for (const auto& o : trimmed.origin) CHECK(o.copy != CopyLabel::reject());
    CHECK(is_c_copy_of(trimmed, s));
    CHECK_THROWS_AS(build_alpha0(corpus::fig_double_half()), NotLetterToLetter);
}

TEST_CASE("alpha0 keeps exactly the radix-decreasing pairs") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        const Transducer s = random_letter_to_letter(rng, uniform(rng, 1, 6), uniform(rng, 2, 3));
        const CCopy a = build_alpha0(s);
        CHECK(a.machine.num_states() == 3 * s.num_states());
        CHECK(enumerate(a.machine, 7) == radix_greater(s, 7));
    }
}

TEST_CASE("alpha on (00/0)+ with bound 0") {
    const Transducer s = corpus::double_half_plus();
    const CCopy a = build_alpha(s, 0);
    CHECK(enumerate(a.machine, 8) == relation(8, {{"00", "0"}, {"0000", "00"}, {"000000", "000"}, {"00000000", "0000"}}));
    CHECK(enumerate(build_alpha(inverse(s), 0).machine, 8).empty());
}

TEST_CASE("size law before trimming") {
    const Transducer s = corpus::double_half_plus();
    for (unsigned k = 0; k <= 2; ++k) {
        const CCopy a = build_alpha(s, k);
        CHECK(a.machine.num_states() == copy_count(2, k) * s.num_states());
        CHECK(is_c_copy_of(a, s));
    }
    CHECK(build_alpha(s, 2).machine.num_states() == 25 * s.num_states());
}

TEST_CASE("alpha keeps exactly the radix-decreasing pairs") {
    Rng rng(42);
    for (int i = 0; i < 120; ++i) {
        const unsigned q = uniform(rng, 2, 3);
        const Transducer s = random_zero_avoiding(rng, 4, q);
        const unsigned k = minimum_bound(s);
        const auto expected = radix_greater(s, 6);
        CHECK(enumerate(build_alpha(s, k).machine, 6) == expected);
        CHECK(enumerate(build_alpha(s, k, {.reachable_only = true}).machine, 6) == expected);
        CHECK(enumerate(build_alpha(s, k + 1).machine, 6) == expected);
    }
}

TEST_CASE("alpha on lag fixtures") {
    for (unsigned lag = 1; lag <= 2; ++lag)
        for (unsigned q = 2; q <= 3; ++q)
            for (bool tail : {false, true}) {
                const Transducer s = lag_fixture(lag, q, tail);
                const std::size_t len = q == 2 ? 7 : 5;
                REQUIRE(minimum_bound(s) == lag);
                CHECK(enumerate(build_alpha(s, lag).machine, len) == radix_greater(s, len));
                CHECK(enumerate(build_alpha(inverse(s), lag).machine, len) == radix_greater(inverse(s), len));
                CHECK_THROWS_AS(build_alpha(s, lag - 1), BoundTooSmall);
            }
}

TEST_CASE("alpha preconditions") {
    TransducerBuilder b(Alphabet{2});
    StateId p = b.add_state("p", true, true);
    b.add_edge(p, Label::epsilon(), p);
    CHECK_THROWS_AS(build_alpha(b.build(), 1), HasEpsilonPair);
    CHECK_THROWS_AS(build_alpha(opposite_loops(), 3), NotZeroAvoiding);
    try {
        build_alpha(lag_fixture(2), 1);
        FAIL("expected BoundTooSmall");
    } catch (const BoundTooSmall& e) {
        CHECK(e.required() == 2);
        CHECK(e.given() == 1);
    }
}

TEST_CASE("C-copies: soundness, closed A and R copies, profiles") {
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        const Transducer s = random_zero_avoiding(rng, 4, 2);
        const unsigned k = minimum_bound(s);
        const CCopy a = build_alpha(s, k);
        CHECK(is_c_copy_of(a, s));
        CHECK(subset(enumerate(a.machine, 5), enumerate(s, 5)));
        for (const Edge& e : a.machine.edges()) {
            const auto kind = a.origin[e.source].copy.kind;
            if (kind == CopyLabel::Kind::a || kind == CopyLabel::Kind::r)
                CHECK(a.origin[e.target].copy.kind == kind);
        }
    }
}

TEST_CASE("corr_path erases tags and every computation has a copy") {
    Rng rng(44);
    CHECK(corr_path(build_alpha0(corpus::fig_example_S()), {}).empty());
    for (int i = 0; i < 60; ++i) {
        const Transducer s = random_zero_avoiding(rng, 4, 2);
        const unsigned k = minimum_bound(s);
        const CCopy a = build_alpha(s, k);
        // Replay a random computation of s through the copies.
        StateId src = s.initial_states().front();
        StateId cur = *a.machine.find_state(s.name(src) + "^L");
        Path in_s, in_copy;
        const unsigned len = uniform(rng, 0, 10);
        for (unsigned step = 0; step < len; ++step) {
            auto out = s.out_edges(src);
            if (out.empty()) break;
            const Edge e = out[uniform(rng, 0, static_cast<unsigned>(out.size()) - 1)];
            const CopyLabel next = next_copy(a.origin[cur].copy, e.label, k);
            const auto target = a.machine.find_state(s.name(e.target) + "^" + next.tag());
            REQUIRE(target);
            const Edge copied{cur, e.label, *target};
            REQUIRE(a.machine.has_edge(copied));
            in_s.push_back(e);
            in_copy.push_back(copied);
            src = e.target;
            cur = *target;
        }
        CHECK(corr_path(a, in_copy) == in_s);
        CHECK(path_profile(a.machine, in_copy) == path_profile(s, in_s));
        CHECK(path_label(in_copy) == path_label(in_s));
    }
    const CCopy a0 = build_alpha0(corpus::fig_example_S());
    const Edge first = a0.machine.out_edges(0)[0];
    CHECK_THROWS_AS(corr_path(a0, {first, first, first, first}), NotAPath);
}

TEST_CASE("input-altering check") {
    CHECK(is_input_altering_bounded_lag(corpus::double_half_plus(), 0).input_altering);
    CHECK(is_input_altering_bounded_lag(corpus::fig_example_S(), 0).input_altering);

    TransducerBuilder b(Alphabet{2});
    StateId i = b.add_state("i", true, false);
    StateId f = b.add_state("f", false, true);
    b.add_edge(i, Label::pair(0, 0), f);
    const auto single = is_input_altering_bounded_lag(b.build(), 0);
    CHECK_FALSE(single.input_altering);
    CHECK(single.witness == Word{0});

    CHECK_FALSE(is_input_altering_bounded_lag(lag_fixture(2), 2).input_altering);
    CHECK(is_input_altering_bounded_lag(lag_fixture(2, 2, true), 2).input_altering);

    Rng rng(45);
    for (int n = 0; n < 150; ++n) {
        const Transducer s = random_zero_avoiding(rng, 4, 2);
        const auto r = is_input_altering_bounded_lag(s, minimum_bound(s));
        const auto rel = enumerate(s, 6);
        bool diagonal = false;
        for (const auto& p : rel.pairs()) diagonal = diagonal || p.u == p.v;
        if (r.input_altering) {
            CHECK_FALSE(diagonal);
        } else {
            REQUIRE(r.witness);
            CHECK(enumerate(s, r.witness->size()).contains({*r.witness, *r.witness}));
        }
    }
}

TEST_CASE("partition pipeline on (00/0)+ and its inverse") {
    const Transducer s = corpus::double_half_plus();
    const Transducer sym = union_of(s, inverse(s));
    const auto result = partition(sym);
    CHECK(result.k == 0);
    CHECK_FALSE(result.letter_to_letter);
    const auto t1 = enumerate(result.t1, 8);
    CHECK(t1 == relation(8, {{"00", "0"}, {"0000", "00"}, {"000000", "000"}, {"00000000", "0000"}}));
    CHECK(enumerate(result.t2, 8) == t1.inverse());
    CHECK(check_partition(enumerate(sym, 8), t1, enumerate(result.t2, 8)).passed());
}

TEST_CASE("partition pipeline errors") {
    CHECK_THROWS_AS(partition(diagonal()), NotInputAltering);
    CHECK_THROWS_AS(partition(opposite_loops()), NotZeroAvoiding);
    CHECK_THROWS_AS(partition(union_of(corpus::fig_R1(), inverse(corpus::fig_R1()))), NotZeroAvoiding);
    const Transducer s = lag_fixture(2, 2, true);
    CHECK_THROWS_AS(partition(s, {.bound = 1}), BoundTooSmall);
    CHECK(partition(s, {.bound = 3}).k == 3);
}

TEST_CASE("partition contract on random symmetric inputs") {
    Rng rng(46);
    int done = 0;
    for (int i = 0; i < 200 && done < 40; ++i) {
        const Transducer base = coin(rng) ? random_left_synchronous(rng, 2) : random_zero_avoiding(rng, 4, 2);
        const Transducer sym = union_of(base, inverse(base));
        PartitionResult result{base, base, 0, false};
        try {
            result = partition(sym);
        } catch (const NotInputAltering&) {
            continue;
        } catch (const NotZeroAvoiding&) {
            continue;
        }
        ++done;
        const auto t1 = enumerate(result.t1, 6);
        CHECK(check_partition(enumerate(sym, 6), t1, enumerate(result.t2, 6)).passed());
        CHECK(t1 == radix_greater(sym, 6));
    }
    CHECK(done >= 20);
}

TEST_CASE("letter-to-letter fast path") {
    const Transducer s = corpus::fig_example_S();
    const auto result = partition(union_of(s, inverse(s)));
    CHECK(result.letter_to_letter);
    CHECK(result.k == 0);
    const auto sym = enumerate(union_of(s, inverse(s)), 6);
    CHECK(check_partition(sym, enumerate(result.t1, 6), enumerate(result.t2, 6)).passed());
}
