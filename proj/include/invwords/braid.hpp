#pragma once

#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "invwords/coxeter_core.hpp"
#include "invwords/report.hpp"
#include "invwords/twisted.hpp"
#include "invwords/word.hpp"

namespace invwords {

namespace detail {

inline bool alternates_at(const Word& w, std::size_t pos, int s, int t, int len) {
    if (pos + len > w.size()) return false;
    for (int k = 0; k < len; ++k)
        if (w[pos + k] != (k % 2 ? t : s)) return false;
    return true;
}

inline Word replace_block(const Word& w, std::size_t pos, int s, int t, int len) {
    Word out = w;
    for (int k = 0; k < len; ++k) out[pos + k] = k % 2 ? s : t;
    return out;
}

template <class Moves>
WordSet word_closure(const Word& seed, Moves&& moves) {
    std::unordered_set<Word, WordHash> seen = {seed};
    std::deque<Word> queue = {seed};
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        moves(w, [&](Word v) {
            if (seen.insert(v).second) queue.push_back(std::move(v));
        });
    }
    return WordSet(seen.begin(), seen.end());
}

template <CoxeterGroup G>
void require_valid_word(const G& g, const Word& w) {
    for (int s : w)
        if (s < 1 || s > g.rank()) throw Error("generator " + std::to_string(s) + " out of range");
}

template <CoxeterGroup G>
void require_type_a(const G& g) {
    for (int s = 1; s <= g.rank(); ++s)
        for (int t = s + 1; t <= g.rank(); ++t)
            if (g.m(s, t) != (t == s + 1 ? 3 : 2)) throw Error("not a type A system");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ordinary braid relations

/// Calls f(v) for each word one braid move away from w; `max_m` skips longer blocks (0 = all).
template <CoxeterGroup G, class F>
void braid_moves(const G& g, const Word& w, F&& f, int max_m = 0) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const int s = w[i], t = w[i + 1];
        if (s == t) continue;
        const int m = g.m(s, t);
        if (max_m && m > max_m) continue;
        if (detail::alternates_at(w, i, s, t, m)) f(detail::replace_block(w, i, s, t, m));
    }
}

template <CoxeterGroup G>
WordSet braid_class(const G& g, const Word& word) {
    detail::require_valid_word(g, word);
    return detail::word_closure(word, [&](const Word& w, auto&& f) { braid_moves(g, w, f); });
}

/// Words reachable by swapping adjacent commuting generators.
template <CoxeterGroup G>
WordSet commutation_class(const G& g, const Word& word) {
    detail::require_valid_word(g, word);
    return detail::word_closure(word, [&](const Word& w, auto&& f) { braid_moves(g, w, f, 2); });
}

/// No reduced word contains an alternating block of length m(s,t) > 2.
/// Checked on the commutation class of one reduced word: any other class is reached through such a block.
template <CoxeterGroup G>
bool is_fully_commutative(const G& g, const typename G::Element& w) {
    for (const Word& word : commutation_class(g, reduced_word(g, w)))
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            const int s = word[i], t = word[i + 1];
            if (s == t) continue;
            const int m = g.m(s, t);
            if (m > 2 && detail::alternates_at(word, i, s, t, m)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Truncated exponents

/// How an automorphism acts on a pair {s,t}.
enum class PairAction { Fixes, Swaps, Moves };

/// m(s,t;θ) from m(s,t) and the action of θ on {s,t}.
inline int m_star(int m, PairAction a) {
    if (m < 2) throw Error("m(s,t) must be at least 2");
    switch (a) {
        case PairAction::Moves: return m;
        case PairAction::Fixes: return m % 2 ? (m + 1) / 2 : m / 2 + 1;
        case PairAction::Swaps: return m % 2 ? (m + 1) / 2 : m / 2;
    }
    return m;
}

/// θ: g ↦ (u g u⁻¹)* with u = δ̂_*(prefix).
template <CoxeterGroup G>
class ThetaPrefix {
public:
    using Element = typename G::Element;

    ThetaPrefix(const TwistedSystem<G>& ts, Element u) : ts_(&ts), u_(std::move(u)) {}

    const Element& u() const { return u_; }

    Element operator()(const Element& g) const {
        const G& grp = ts_->group();
        return ts_->twist(grp.multiply(grp.multiply(u_, g), grp.inverse(u_)));
    }

    PairAction action(int s, int t) const {
        const G& grp = ts_->group();
        const Element gs = grp.generator(s), gt = grp.generator(t);
        const Element ts = (*this)(gs), tt = (*this)(gt);
        if (ts == gs && tt == gt) return PairAction::Fixes;
        if (ts == gt && tt == gs) return PairAction::Swaps;
        return PairAction::Moves;
    }

    int m(int s, int t) const { return m_star(ts_->group().m(s, t), action(s, t)); }

private:
    const TwistedSystem<G>* ts_;
    Element u_;
};

template <CoxeterGroup G>
ThetaPrefix<G> theta_prefix(const TwistedSystem<G>& ts, const Word& prefix) {
    detail::require_valid_word(ts.group(), prefix);
    return ThetaPrefix<G>(ts, ts.delta_hat(prefix));
}

// ---------------------------------------------------------------------------
// Involution braid relations

/// Truncated exponents m(s,t;θ_a), memoized by δ̂_*(a).
template <CoxeterGroup G>
class InvolutionBraidMoves {
public:
    using Element = typename G::Element;

    explicit InvolutionBraidMoves(const TwistedSystem<G>& ts) : ts_(ts) {}

    /// m(s,t;θ) for every ordered pair, 0 on the diagonal.
    const std::vector<int>& table(const Element& u) {
        auto it = memo_.find(u);
        if (it != memo_.end()) return it->second;
        const int r = ts_.rank();
        std::vector<int> m(r * r, 0);
        ThetaPrefix<G> theta(ts_, u);
        for (int s = 1; s <= r; ++s)
            for (int t = 1; t <= r; ++t)
                if (s != t) m[(s - 1) * r + t - 1] = theta.m(s, t);
        return memo_.emplace(u, std::move(m)).first->second;
    }

    /// f(v) for each word one involution braid move away from w; with `empty_prefix_only`
    /// just the moves at the start of the word.
    template <class F>
    void operator()(const Word& w, F&& f, bool empty_prefix_only = false) {
        const int r = ts_.rank();
        Element u = ts_.identity();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (empty_prefix_only && i > 0) break;
            const std::vector<int>& m = table(u);
            const int s = w[i];
            for (int t = 1; t <= r; ++t) {
                if (s == t) continue;
                const int len = m[(s - 1) * r + t - 1];
                if (detail::alternates_at(w, i, s, t, len)) f(detail::replace_block(w, i, s, t, len));
            }
            u = ts_.dact(u, s);
        }
    }

private:
    const TwistedSystem<G>& ts_;
    std::unordered_map<Element, std::vector<int>> memo_;
};

template <CoxeterGroup G>
WordSet involution_braid_class(const TwistedSystem<G>& ts, const Word& word) {
    detail::require_valid_word(ts.group(), word);
    InvolutionBraidMoves<G> moves(ts);
    return detail::word_closure(word, [&](const Word& w, auto&& f) { moves(w, f); });
}

/// Closure under ordinary braid moves plus the truncated moves induced by the empty prefix.
template <CoxeterGroup G>
WordSet empty_prefix_class(const TwistedSystem<G>& ts, const Word& word) {
    detail::require_valid_word(ts.group(), word);
    InvolutionBraidMoves<G> moves(ts);
    return detail::word_closure(word, [&](const Word& w, auto&& f) {
        moves(w, f, true);
        braid_moves(ts.group(), w, f);
    });
}

/// Braid relations plus (s_i,s_{i+1},...) ~ (s_{i+1},s_i,...).
template <CoxeterGroup G>
WordSet hu_zhang_class(const G& g, const Word& word) {
    detail::require_type_a(g);
    detail::require_valid_word(g, word);
    return detail::word_closure(word, [&](const Word& w, auto&& f) {
        braid_moves(g, w, f);
        if (w.size() >= 2 && (w[1] == w[0] + 1 || w[1] == w[0] - 1)) {
            Word v = w;
            std::swap(v[0], v[1]);
            f(std::move(v));
        }
    });
}

/// Braid relations plus (s_2i,s_2i-1,...) ~ (s_2i,s_2i+1,...), in S_2n.
template <CoxeterGroup G>
WordSet fpf_class_words(const G& g, const Word& word) {
    detail::require_type_a(g);
    if (g.rank() % 2 == 0) throw Error("fixed-point-free relations need rank + 1 even");
    detail::require_valid_word(g, word);
    return detail::word_closure(word, [&](const Word& w, auto&& f) {
        braid_moves(g, w, f);
        if (w.size() >= 2 && w[0] % 2 == 0 && (w[1] == w[0] - 1 || w[1] == w[0] + 1)) {
            Word v = w;
            v[1] = w[1] == w[0] - 1 ? w[0] + 1 : w[0] - 1;
            f(std::move(v));
        }
    });
}

// ---------------------------------------------------------------------------
// Checks

/// For every twisted involution x: the involution braid class of one word of ĤR_*(x) is all of ĤR_*(x).
template <CoxeterGroup G>
Report check_involution_braid(const TwistedSystem<G>& ts) {
    Report r;
    r.system = ts.name();
    InvolutionBraidMoves<G> moves(ts);
    for (const auto& x : enumerate_twisted(ts)) {
        ++r.pairs_checked;
        WordSet words = involution_words(ts, ts.identity(), x);
        WordSet cls = detail::word_closure(*words.begin(), [&](const Word& w, auto&& f) { moves(w, f); });
        if (cls != words)
            r.failures.push_back({"involution braid class", {}, reduced_word(ts.group(), x),
                                  {words.begin(), words.end()}, {cls.begin(), cls.end()}});
    }
    return r;
}

/// Fully commutative twisted involutions have one atom, which is fully commutative and carries all involution words.
/// Throws when some generator has m(s,s*) = 2.
template <CoxeterGroup G>
Report check_fc_atoms(const TwistedSystem<G>& ts) {
    const G& g = ts.group();
    for (int s = 1; s <= g.rank(); ++s)
        if (ts.twist(s) != s && g.m(s, ts.twist(s)) == 2)
            throw Error("hypothesis fails: m(s,s*) = 2 for s = " + std::to_string(s));
    Report r;
    r.system = ts.name();
    for (const auto& x : enumerate_twisted(ts)) {
        if (!is_fully_commutative(g, x)) continue;
        ++r.pairs_checked;
        const Word wx = reduced_word(g, x);
        auto a = atoms(ts, ts.identity(), x);
        if (a.size() != 1) {
            r.failures.push_back({"single atom", {}, wx, {}, words_of(g, a)});
            continue;
        }
        if (!is_fully_commutative(g, a.front()))
            r.failures.push_back({"atom fully commutative", {}, wx, {}, {reduced_word(g, a.front())}});
        WordSet iw = involution_words(ts, ts.identity(), x), rw = reduced_words(g, a.front());
        if (iw != rw) r.failures.push_back({"involution words", {}, wx, {rw.begin(), rw.end()}, {iw.begin(), iw.end()}});
    }
    return r;
}

}  // namespace invwords
