#include "ratpart/partition.hpp"

#include <cassert>

#include "ratpart/order.hpp"

namespace ratpart {

namespace {

/// All words of length `len` over {0..q-1}, in lexicographic order.
void append_words(unsigned q, std::size_t len, std::vector<Word>& out) {
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

Word tail(const Word& u) { return Word(u.begin() + 1, u.end()); }

/// Copy for a pending word that may have shrunk to nothing.
CopyLabel pending_copy(CopyLabel::Kind kind, Word u) {
    if (u.empty()) return CopyLabel::lam();
    return {kind, std::move(u), 0};
}

} // namespace

std::string CopyLabel::tag() const {
    switch (kind) {
    case Kind::lambda: return "L";
    case Kind::a: return "A";
    case Kind::r: return "R";
    case Kind::plus: return "+" + format_word(pending);
    case Kind::minus: return "-" + format_word(pending);
    case Kind::a_delta: return "A" + std::to_string(delta);
    case Kind::r_delta: return "R" + std::to_string(delta);
    }
    return "?";
}

std::strong_ordering CopyLabel::operator<=>(const CopyLabel& other) const {
    if (auto c = kind <=> other.kind; c != 0) return c;
    if (auto c = radix_compare(pending, other.pending); c != 0) return c;
    return delta <=> other.delta;
}

std::vector<CopyLabel> copy_labels(unsigned q, unsigned k) {
    std::vector<CopyLabel> out{CopyLabel::lam(), CopyLabel::accept(), CopyLabel::reject()};
    std::vector<Word> words;
    for (std::size_t len = 1; len <= k; ++len) append_words(q, len, words);
    for (const Word& u : words) out.push_back(CopyLabel::plus(u));
    for (const Word& u : words) out.push_back(CopyLabel::minus(u));
    const int bound = static_cast<int>(k);
    for (int l = -bound; l <= bound; ++l) out.push_back(CopyLabel::a_delta(l));
    for (int l = -bound; l <= bound; ++l) out.push_back(CopyLabel::r_delta(l));
    return out;
}

std::size_t copy_count(unsigned q, unsigned k) {
    std::size_t geometric = 0;  // 1 + q + ... + q^k
    std::size_t power = 1;
    for (unsigned i = 0; i <= k; ++i) {
        geometric += power;
        power *= q;
    }
    return 3 + 4 * static_cast<std::size_t>(k) + 2 * geometric;
}

CopyLabel next_copy(const CopyLabel& from, const Label& label, unsigned k) {
    using Kind = CopyLabel::Kind;
    assert(!label.is_epsilon_pair());
    const int bound = static_cast<int>(k);
    const bool consumes_in = label.input.has_value();
    const bool consumes_out = label.output.has_value();

    switch (from.kind) {
    case Kind::lambda: {
        if (consumes_in && consumes_out) {
            const Symbol s = *label.input, t = *label.output;
            if (s == t) return CopyLabel::lam();
            return s > t ? CopyLabel::a_delta(0) : CopyLabel::r_delta(0);
        }
        if (consumes_in) return k > 0 ? CopyLabel::plus({*label.input}) : CopyLabel::accept();
        return k > 0 ? CopyLabel::minus({*label.output}) : CopyLabel::reject();
    }
    case Kind::plus: {
        // input == output . u
        const Word& u = from.pending;
        const int len = static_cast<int>(u.size());
        if (!consumes_out) {
            Word grown = u;
            grown.push_back(*label.input);
            return len < bound ? CopyLabel::plus(std::move(grown)) : CopyLabel::accept();
        }
        const Symbol t = *label.output;
        if (!consumes_in) {
            if (u[0] == t) return pending_copy(Kind::plus, tail(u));
            return u[0] > t ? CopyLabel::a_delta(len - 1) : CopyLabel::r_delta(len - 1);
        }
        if (u[0] == t) {
            Word shifted = tail(u);
            shifted.push_back(*label.input);
            return CopyLabel::plus(std::move(shifted));
        }
        return u[0] > t ? CopyLabel::a_delta(len) : CopyLabel::r_delta(len);
    }
    case Kind::minus: {
        // output == input . u; the discrepancy is -|u|.
        const Word& u = from.pending;
        const int len = static_cast<int>(u.size());
        if (!consumes_in) {
            Word grown = u;
            grown.push_back(*label.output);
            return len < bound ? CopyLabel::minus(std::move(grown)) : CopyLabel::reject();
        }
        const Symbol s = *label.input;
        if (!consumes_out) {
            if (u[0] == s) return pending_copy(Kind::minus, tail(u));
            return u[0] > s ? CopyLabel::r_delta(-(len - 1)) : CopyLabel::a_delta(-(len - 1));
        }
        if (u[0] == s) {
            Word shifted = tail(u);
            shifted.push_back(*label.output);
            return CopyLabel::minus(std::move(shifted));
        }
        return u[0] > s ? CopyLabel::r_delta(-len) : CopyLabel::a_delta(-len);
    }
    case Kind::a_delta:
    case Kind::r_delta: {
        const int l = from.delta;
        if (consumes_in && consumes_out) return from;
        if (consumes_in) return l < bound ? CopyLabel{from.kind, {}, l + 1} : CopyLabel::accept();
        return l > -bound ? CopyLabel{from.kind, {}, l - 1} : CopyLabel::reject();
    }
    case Kind::a:
    case Kind::r: return from;
    }
    return from;
}

bool is_final_copy(const CopyLabel& c, unsigned k) {
    using Kind = CopyLabel::Kind;
    const int bound = static_cast<int>(k);
    switch (c.kind) {
    case Kind::a:
    case Kind::plus: return true;
    case Kind::a_delta: return c.delta >= 0 && c.delta <= bound;
    case Kind::r_delta: return c.delta >= 1 && c.delta <= bound;
    default: return false;
    }
}

} // namespace ratpart
