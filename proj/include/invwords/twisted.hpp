#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "invwords/coxeter_core.hpp"
#include "invwords/report.hpp"

namespace invwords {

/// A Coxeter group together with a diagram involution `*`.
template <CoxeterGroup G>
class TwistedSystem {
public:
    using Group = G;
    using Element = typename G::Element;

    explicit TwistedSystem(G group) : group_(std::move(group)) {
        star_ = DiagramInvolution::identity(group_.rank());
        prepared_ = group_.prepare_twist(star_);
    }

    TwistedSystem(G group, DiagramInvolution star) : group_(std::move(group)), star_(std::move(star)) {
        if (star_.rank() != group_.rank() || !star_.preserves(group_.matrix()))
            throw Error("invalid twist: does not preserve the Coxeter matrix");
        prepared_ = group_.prepare_twist(star_);
    }

    const G& group() const { return group_; }
    const DiagramInvolution& star() const { return star_; }
    int rank() const { return group_.rank(); }

    std::string name() const {
        if (star_.is_identity()) return group_.name();
        std::string s = group_.name() + " twist=";
        for (int i = 1; i <= rank(); ++i) s += (i > 1 ? "," : "") + std::to_string(star_(i));
        return s;
    }

    Element identity() const { return group_.identity(); }
    Element twist(const Element& w) const { return group_.apply_twist(prepared_, w); }
    int twist(int s) const { return star_(s); }

    bool is_twisted_involution(const Element& w) const { return group_.inverse(w) == twist(w); }

    const Element& require_involution(const Element& w) const {
        if (!is_twisted_involution(w)) throw Error("not a twisted involution");
        return w;
    }

    /// x⋊s: s*xs when s*x ≠ xs, else xs.
    Element rtimes(const Element& x, int s) const {
        Element xs = group_.times_generator(x, s);
        Element sx = group_.generator_times(star_(s), x);
        if (sx == xs) return xs;
        return group_.times_generator(sx, s);
    }

    /// x⊼s = s*∘x∘s.
    Element dact(const Element& x, int s) const { return group_.right_descent(x, s) ? x : rtimes(x, s); }

    Element dact_word(Element x, const Word& word) const {
        for (int s : word) x = dact(x, s);
        return x;
    }

    Element dact(const Element& x, const Element& w) const { return dact_word(x, reduced_word(group_, w)); }

    /// ℓ̂ by descending through right descents; each step lowers ℓ̂ by one.
    int hat_length(Element x) const {
        int h = 0;
        for (;;) {
            int s = 1;
            while (s <= rank() && !group_.right_descent(x, s)) ++s;
            if (s > rank()) return h;
            x = rtimes(x, s);
            ++h;
        }
    }

    Element delta_hat(const Word& word) const { return dact_word(identity(), word); }

private:
    G group_;
    DiagramInvolution star_;
    typename G::PreparedTwist prepared_{};
};

template <CoxeterGroup G>
using ElementList = std::vector<typename G::Element>;

/// Sorts elements by their lexicographically smallest reduced word.
template <CoxeterGroup G>
ElementList<G> sorted_by_word(const G& g, ElementList<G> elems) {
    std::vector<std::pair<Word, std::size_t>> keys;
    keys.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) keys.emplace_back(reduced_word(g, elems[i]), i);
    std::sort(keys.begin(), keys.end());
    ElementList<G> out;
    out.reserve(elems.size());
    for (auto& k : keys) out.push_back(std::move(elems[k.second]));
    return out;
}

template <CoxeterGroup G>
std::vector<Word> words_of(const G& g, const ElementList<G>& elems) {
    std::vector<Word> out;
    for (const auto& e : elems) out.push_back(reduced_word(g, e));
    std::sort(out.begin(), out.end());
    return out;
}

template <CoxeterGroup G>
ElementList<G> inverses(const G& g, const ElementList<G>& elems) {
    ElementList<G> out;
    for (const auto& e : elems) out.push_back(g.inverse(e));
    return sorted_by_word(g, std::move(out));
}

template <CoxeterGroup G>
ElementList<G> minimal_length(const G& g, const ElementList<G>& elems) {
    if (elems.empty()) return {};
    int best = g.length(elems.front());
    for (const auto& e : elems) best = std::min(best, g.length(e));
    ElementList<G> out;
    for (const auto& e : elems)
        if (g.length(e) == best) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Twisted involutions

template <CoxeterGroup G>
int hat_length(const TwistedSystem<G>& ts, const typename G::Element& x) {
    return ts.hat_length(ts.require_involution(x));
}

/// All twisted involutions, by breadth-first search from 1 under ⊼; ordered by ℓ̂.
template <CoxeterGroup G>
ElementList<G> enumerate_twisted(const TwistedSystem<G>& ts) {
    using E = typename G::Element;
    ElementList<G> out{ts.identity()};
    std::unordered_set<E> seen{ts.identity()};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int s = 1; s <= ts.rank(); ++s) {
            E next = ts.dact(out[head], s);
            if (seen.insert(next).second) out.push_back(std::move(next));
        }
    }
    return out;
}

/// x ≤_T y by upward search through ℓ̂-increasing ⋊ steps, pruned by Bruhat order.
template <CoxeterGroup G>
bool weak_leq_T(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    using E = typename G::Element;
    ts.require_involution(x);
    ts.require_involution(y);
    if (x == y) return true;
    const int hy = ts.hat_length(y);
    if (ts.hat_length(x) >= hy || !bruhat_leq(ts.group(), x, y)) return false;
    std::unordered_set<E> seen{x};
    std::deque<E> queue{x};
    while (!queue.empty()) {
        E z = std::move(queue.front());
        queue.pop_front();
        for (int s = 1; s <= ts.rank(); ++s) {
            if (ts.group().right_descent(z, s)) continue;
            E u = ts.rtimes(z, s);
            if (u == y) return true;
            if (!seen.insert(u).second) continue;
            if (ts.hat_length(u) < hy && bruhat_leq(ts.group(), u, y)) queue.push_back(std::move(u));
        }
    }
    return false;
}

/// A(x,y) through the descent recursion A(x,y) = ∪_{s∈Des_R(y)} A(x,y⋊s)·s.
template <CoxeterGroup G>
ElementList<G> atoms(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    using E = typename G::Element;
    ts.require_involution(x);
    ts.require_involution(y);
    const G& g = ts.group();
    const int hx = ts.hat_length(x);
    std::unordered_map<E, ElementList<G>> memo;
    std::function<const ElementList<G>&(const E&, int)> go = [&](const E& z, int hz) -> const ElementList<G>& {
        if (auto it = memo.find(z); it != memo.end()) return it->second;
        ElementList<G> out;
        if (hz == hx) {
            if (z == x) out.push_back(g.identity());
        } else if (hz > hx) {
            std::unordered_set<E> seen;
            for (int s = 1; s <= g.rank(); ++s) {
                if (!g.right_descent(z, s)) continue;
                for (const E& w : go(ts.rtimes(z, s), hz - 1)) {
                    E ws = g.times_generator(w, s);
                    if (seen.insert(ws).second) out.push_back(std::move(ws));
                }
            }
        }
        return memo.emplace(z, std::move(out)).first->second;
    };
    return sorted_by_word(g, go(y, ts.hat_length(y)));
}

/// B(x,y) by filtering the whole group; x⊼w is propagated along the enumeration tree.
template <CoxeterGroup G>
ElementList<G> hecke_atoms_filtered(const TwistedSystem<G>& ts, const typename G::Element& x,
                                    const typename G::Element& y) {
    using E = typename G::Element;
    ts.require_involution(x);
    ts.require_involution(y);
    FullGroup<G> fg(ts.group(), static_cast<std::size_t>(-1));
    std::vector<E> z(fg.size());
    ElementList<G> out;
    for (std::size_t i = 0; i < fg.size(); ++i) {
        const int p = fg.parent(static_cast<int>(i));
        z[i] = p < 0 ? x : ts.dact(z[p], fg.last_letter(static_cast<int>(i)));
        if (z[i] == y) out.push_back(fg.element(static_cast<int>(i)));
    }
    return sorted_by_word(ts.group(), std::move(out));
}

/// B(x,y) by depth-first search up the weak order; prefixes w' with x⊼w' ≰ y are pruned.
template <CoxeterGroup G>
ElementList<G> hecke_atoms_dfs(const TwistedSystem<G>& ts, const typename G::Element& x,
                               const typename G::Element& y) {
    using E = typename G::Element;
    ts.require_involution(x);
    ts.require_involution(y);
    const G& g = ts.group();
    ElementList<G> out;
    if (!bruhat_leq(g, x, y)) return out;
    std::unordered_set<E> seen{g.identity()};
    std::vector<std::pair<E, E>> stack{{g.identity(), x}};
    while (!stack.empty()) {
        auto [w, z] = std::move(stack.back());
        stack.pop_back();
        if (z == y) out.push_back(w);
        for (int s = 1; s <= g.rank(); ++s) {
            if (g.right_descent(w, s)) continue;
            E ws = g.times_generator(w, s);
            if (seen.count(ws)) continue;
            E zs = ts.dact(z, s);
            if (!bruhat_leq(g, zs, y)) continue;
            seen.insert(ws);
            stack.emplace_back(std::move(ws), std::move(zs));
        }
    }
    return sorted_by_word(g, std::move(out));
}

template <CoxeterGroup G>
ElementList<G> hecke_atoms(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    if (ts.group().order_if_small()) return hecke_atoms_filtered(ts, x, y);
    return hecke_atoms_dfs(ts, x, y);
}

/// Visits every involution word of y relative to x; stop early by returning false.
template <CoxeterGroup G, class F>
void for_each_involution_word(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y,
                              F&& visit) {
    for (const auto& w : atoms(ts, x, y))
        if (!for_each_reduced_word(ts.group(), w, visit)) return;
}

template <CoxeterGroup G>
WordSet involution_words(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    WordSet out;
    for_each_involution_word(ts, x, y, [&](const Word& w) {
        out.insert(w);
        return true;
    });
    return out;
}

template <CoxeterGroup G>
struct AtomSets {
    typename G::Element x, y;
    ElementList<G> atoms;
    ElementList<G> hecke_atoms;
    WordSet words;
};

template <CoxeterGroup G>
AtomSets<G> atom_sets(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    AtomSets<G> r{x, y, atoms(ts, x, y), hecke_atoms(ts, x, y), {}};
    for (const auto& w : r.atoms) {
        auto words = reduced_words(ts.group(), w);
        r.words.insert(words.begin(), words.end());
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bruhat-characterized sets

/// B′(x,y) = {w : w*y ≤ xw}.
template <CoxeterGroup G>
ElementList<G> bruhat_hecke(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    ts.require_involution(x);
    ts.require_involution(y);
    const G& g = ts.group();
    FullGroup<G> fg(g, static_cast<std::size_t>(-1));
    ElementList<G> out;
    for (const auto& w : fg.elements())
        if (bruhat_leq(g, g.multiply(ts.twist(w), y), g.multiply(x, w))) out.push_back(w);
    return sorted_by_word(g, std::move(out));
}

template <CoxeterGroup G>
ElementList<G> bruhat_atoms(const TwistedSystem<G>& ts, const typename G::Element& x, const typename G::Element& y) {
    return minimal_length(ts.group(), bruhat_hecke(ts, x, y));
}

// ---------------------------------------------------------------------------
// Tables for exhaustive sweeps over small systems

template <CoxeterGroup G>
class InvolutionTables {
public:
    using Element = typename G::Element;

    explicit InvolutionTables(const TwistedSystem<G>& ts) : ts_(ts), fg_(ts.group()) {
        const int r = ts.rank();
        for (const auto& x : enumerate_twisted(ts)) {
            inv_.push_back(fg_.index(x));
            hat_.push_back(ts.hat_length(x));
        }
        slot_.assign(fg_.size(), -1);
        for (std::size_t k = 0; k < inv_.size(); ++k) slot_[inv_[k]] = static_cast<int>(k);
        rt_.assign(inv_.size() * r, 0);
        for (std::size_t k = 0; k < inv_.size(); ++k)
            for (int s = 1; s <= r; ++s) rt_[k * r + s - 1] = slot_[fg_.index(ts.rtimes(element(k), s))];
        star_.resize(fg_.size());
        for (std::size_t i = 0; i < fg_.size(); ++i) star_[i] = fg_.index(ts.twist(fg_.element(static_cast<int>(i))));

        // ≤_T reachability, filled from the top layer downwards.
        const std::size_t n = inv_.size();
        words_ = (n + 63) / 64;
        reach_.assign(n * words_, 0);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return hat_[a] > hat_[b]; });
        for (std::size_t k : order) {
            reach_[k * words_ + k / 64] |= std::uint64_t{1} << (k % 64);
            for (int s = 1; s <= r; ++s) {
                const int up = rt_[k * r + s - 1];
                if (hat_[up] <= hat_[k]) continue;
                for (std::size_t b = 0; b < words_; ++b) reach_[k * words_ + b] |= reach_[up * words_ + b];
            }
        }
    }

    const TwistedSystem<G>& system() const { return ts_; }
    const FullGroup<G>& group() const { return fg_; }
    /// Built on first use; it is quadratic in the group order.
    const BruhatMatrix& bruhat() const {
        std::call_once(bruhat_once_, [this] { bruhat_ = std::make_unique<BruhatMatrix>(fg_); });
        return *bruhat_;
    }

    std::size_t size() const { return inv_.size(); }
    const Element& element(std::size_t k) const { return fg_.element(inv_[k]); }
    int group_index(std::size_t k) const { return inv_[k]; }
    /// Involution slot of a group index, or -1.
    int slot(int group_index) const { return slot_[group_index]; }
    int slot_of(const Element& x) const {
        int i = fg_.index(x);
        return i < 0 ? -1 : slot_[i];
    }
    int hat_length(std::size_t k) const { return hat_[k]; }
    int rtimes(std::size_t k, int s) const { return rt_[k * ts_.rank() + s - 1]; }
    int dact(std::size_t k, int s) const { return fg_.right_descent(inv_[k], s) ? static_cast<int>(k) : rtimes(k, s); }
    int star(int group_index) const { return star_[group_index]; }
    bool leq_T(std::size_t a, std::size_t b) const { return reach_[a * words_ + b / 64] >> (b % 64) & 1; }

    /// Slot of x⊼w for every group index w.
    std::vector<int> dact_all(std::size_t k) const {
        std::vector<int> z(fg_.size());
        z[0] = static_cast<int>(k);
        for (std::size_t i = 1; i < fg_.size(); ++i)
            z[i] = dact(z[fg_.parent(static_cast<int>(i))], fg_.last_letter(static_cast<int>(i)));
        return z;
    }

    /// Hecke atoms B(x,y) for a fixed x and every y, as group indices.
    std::vector<std::vector<int>> hecke_from(std::size_t k) const {
        std::vector<std::vector<int>> out(size());
        auto z = dact_all(k);
        for (std::size_t i = 0; i < z.size(); ++i) out[z[i]].push_back(static_cast<int>(i));
        return out;
    }

    std::vector<int> minimal(const std::vector<int>& idx) const {
        if (idx.empty()) return {};
        int best = fg_.length(idx[0]);
        for (int i : idx) best = std::min(best, fg_.length(i));
        std::vector<int> out;
        for (int i : idx)
            if (fg_.length(i) == best) out.push_back(i);
        return out;
    }

    /// B′(x,y) as group indices.
    std::vector<int> bruhat_hecke(std::size_t kx, std::size_t ky) const {
        const G& g = ts_.group();
        std::vector<int> out;
        const Element& x = element(kx);
        const Element& y = element(ky);
        for (std::size_t i = 0; i < fg_.size(); ++i) {
            const Element& w = fg_.element(static_cast<int>(i));
            const int lhs = fg_.index(g.multiply(fg_.element(star_[i]), y));
            const int rhs = fg_.index(g.multiply(x, w));
            if (bruhat().leq(lhs, rhs)) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    std::vector<Word> words(const std::vector<int>& idx) const {
        std::vector<Word> out;
        for (int i : idx) out.push_back(reduced_word(ts_.group(), fg_.element(i)));
        std::sort(out.begin(), out.end());
        return out;
    }

    Word word(std::size_t k) const { return reduced_word(ts_.group(), element(k)); }

private:
    const TwistedSystem<G>& ts_;
    FullGroup<G> fg_;
    mutable std::once_flag bruhat_once_;
    mutable std::unique_ptr<BruhatMatrix> bruhat_;
    std::vector<int> inv_, hat_, slot_, rt_, star_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> reach_;
};

namespace detail {

/// Runs `task(k)` for k in [0,n) on `jobs` threads; results merged in index order.
template <class F>
Report parallel_reports(std::size_t n, unsigned jobs, F&& task) {
    std::vector<Report> parts(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t k = 0; k < n; ++k) parts[k] = task(k);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (std::size_t k = j; k < n; k += jobs) parts[k] = task(k);
            });
    }
    Report out;
    for (auto& p : parts) out.merge(std::move(p));
    return out;
}

}  // namespace detail

/// Compares A(x,y) with A′(x,y) for every x ≤_T y, plus A ⊆ B′ and the
/// Bruhat bounds satisfied by atoms lying in some B′ set.
template <CoxeterGroup G>
Report check_conjecture(const TwistedSystem<G>& ts, unsigned jobs = 1) {
    InvolutionTables<G> tab(ts);
    const auto& fg = tab.group();
    const auto& bm = tab.bruhat();
    const std::size_t n = tab.size();
    Report report = detail::parallel_reports(n, jobs, [&](std::size_t kx) {
        Report r;
        auto hecke = tab.hecke_from(kx);
        for (std::size_t kz = 0; kz < n; ++kz) {
            if (!tab.leq_T(kx, kz)) continue;
            ++r.pairs_checked;
            auto a = tab.minimal(hecke[kz]);
            auto bprime = tab.bruhat_hecke(kx, kz);
            auto aprime = tab.minimal(bprime);
            std::sort(a.begin(), a.end());
            std::sort(aprime.begin(), aprime.end());
            if (a != aprime) r.failures.push_back({"A = A'", tab.word(kx), tab.word(kz), tab.words(a), tab.words(aprime)});
            std::vector<int> missing;
            for (int w : a)
                if (!std::binary_search(bprime.begin(), bprime.end(), w)) missing.push_back(w);
            if (!missing.empty()) r.failures.push_back({"A subset of B'", tab.word(kx), tab.word(kz), {}, tab.words(missing)});
            // w ∈ A(x,z): w ∈ B′(x,y) ⇒ y ≤ z and w ∈ B′(y,z) ⇒ x ≤ y.
            for (int w : a) {
                const auto& we = fg.element(w);
                const auto& ws = fg.element(tab.star(w));
                const auto& x = tab.element(kx);
                const auto& z = tab.element(kz);
                const int xw = fg.index(ts.group().multiply(x, we));
                const int wsz = fg.index(ts.group().multiply(ws, z));
                for (std::size_t ky = 0; ky < n; ++ky) {
                    const auto& y = tab.element(ky);
                    const int wsy = fg.index(ts.group().multiply(ws, y));
                    const int yw = fg.index(ts.group().multiply(y, we));
                    if (bm.leq(wsy, xw) && !bm.leq(tab.group_index(ky), tab.group_index(kz)))
                        r.failures.push_back({"B' upper bound", tab.word(kx), tab.word(ky), {tab.word(kz)}, tab.words({w})});
                    if (bm.leq(wsz, yw) && !bm.leq(tab.group_index(kx), tab.group_index(ky)))
                        r.failures.push_back({"B' lower bound", tab.word(ky), tab.word(kz), {tab.word(kx)}, tab.words({w})});
                }
            }
        }
        return r;
    });
    report.system = ts.name();
    return report;
}

/// B(w0) = B′(w0) and A(y) = A′(y) for every y.
template <CoxeterGroup G>
Report check_bruhat_characterization(const TwistedSystem<G>& ts) {
    InvolutionTables<G> tab(ts);
    Report r;
    r.system = ts.name();
    const int k0 = tab.slot_of(longest_element(ts.group()));
    if (k0 < 0) throw Error("longest element is not a twisted involution");
    auto hecke = tab.hecke_from(0);
    for (std::size_t ky = 0; ky < tab.size(); ++ky) {
        ++r.pairs_checked;
        auto a = tab.minimal(hecke[ky]);
        auto aprime = tab.minimal(tab.bruhat_hecke(0, ky));
        std::sort(a.begin(), a.end());
        std::sort(aprime.begin(), aprime.end());
        if (a != aprime) r.failures.push_back({"A(y) = A'(y)", {}, tab.word(ky), tab.words(a), tab.words(aprime)});
    }
    auto b = hecke[k0];
    auto bprime = tab.bruhat_hecke(0, k0);
    std::sort(b.begin(), b.end());
    ++r.pairs_checked;
    if (b != bprime) r.failures.push_back({"B(w0) = B'(w0)", {}, tab.word(k0), tab.words(b), tab.words(bprime)});
    return r;
}

// ---------------------------------------------------------------------------
// Duality

/// J with v0 = w_J, after checking that conjugation by v0 preserves S.
template <CoxeterGroup G>
std::vector<int> duality_component(const TwistedSystem<G>& ts, const typename G::Element& v0) {
    const G& g = ts.group();
    if (!ts.is_twisted_involution(v0)) throw Error("invalid v0: not a twisted involution");
    for (int s = 1; s <= g.rank(); ++s)
        if (g.length(g.multiply(g.inverse(v0), g.multiply(g.generator(s), v0))) != 1)
            throw Error("invalid v0: conjugation does not preserve the generators");
    auto J = descents_right(g, v0);
    if (!commutes_with_complement(g.matrix(), J) || longest_element(g, J) != v0)
        throw Error("invalid v0: not the longest element of a commuting component");
    return J;
}

/// The twist w ↦ v0 w* v0.
template <CoxeterGroup G>
TwistedSystem<G> dual_twist(const TwistedSystem<G>& ts, const typename G::Element& v0) {
    const G& g = ts.group();
    duality_component(ts, v0);
    std::vector<int> perm(g.rank());
    for (int s = 1; s <= g.rank(); ++s) {
        auto c = g.multiply(v0, g.multiply(g.generator(ts.twist(s)), v0));
        for (int t = 1; t <= g.rank(); ++t)
            if (g.generator(t) == c) perm[s - 1] = t;
    }
    return TwistedSystem<G>(g, DiagramInvolution(perm));
}

namespace detail {

template <CoxeterGroup G>
WordSet words_from_atoms(const G& g, const std::vector<int>& idx, const FullGroup<G>& fg) {
    WordSet out;
    for (int i : idx) {
        auto w = reduced_words(g, fg.element(i));
        out.insert(w.begin(), w.end());
    }
    return out;
}

inline std::vector<Word> as_vector(const WordSet& s) { return {s.begin(), s.end()}; }

}  // namespace detail

/// Verifies the comparison between (W,S,⋄) and (W,S,*) for all ⋄-comparable pairs,
/// the reversal bijection at v0, the ℓ̂ identity when v0 = w0, and reversal
/// closure for central longest elements of standard parabolics.
template <CoxeterGroup G>
Report check_duality(const TwistedSystem<G>& ts, const typename G::Element& v0) {
    const G& g = ts.group();
    auto J = duality_component(ts, v0);
    std::vector<int> K;
    for (int s = 1; s <= g.rank(); ++s)
        if (std::find(J.begin(), J.end(), s) == J.end()) K.push_back(s);
    TwistedSystem<G> dual = dual_twist(ts, v0);
    InvolutionTables<G> star_tab(ts), dia_tab(dual);
    const auto& fg = star_tab.group();
    const bool full = g.length(v0) == g.length(longest_element(g));

    Report r;
    r.system = ts.name() + " dual by " + to_string(reduced_word(g, v0));
    auto idx_sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    auto inverse_idx = [&](const std::vector<int>& v) {
        std::vector<int> out;
        for (int i : v) out.push_back(fg.inverse(i));
        return idx_sorted(out);
    };

    for (std::size_t kx = 0; kx < dia_tab.size(); ++kx) {
        auto dia_hecke = dia_tab.hecke_from(kx);
        const auto& x = dia_tab.element(kx);
        const auto v0x = g.multiply(v0, x);
        const int sx = star_tab.slot_of(v0x);
        if (sx < 0) {
            r.failures.push_back({"v0 x twisted involution", dia_tab.word(kx), {}, {}, {}});
            continue;
        }
        auto star_hecke_from_x = star_tab.hecke_from(sx);
        for (std::size_t ky = 0; ky < dia_tab.size(); ++ky) {
            if (!dia_tab.leq_T(kx, ky)) continue;
            ++r.pairs_checked;
            const auto& y = dia_tab.element(ky);
            const int sy = star_tab.slot_of(g.multiply(v0, y));
            auto a_dia = idx_sorted(dia_tab.minimal(dia_hecke[ky]));
            auto w_dia = detail::words_from_atoms(g, a_dia, fg);
            const bool same_j = restrict_to_component(g, x, J) == restrict_to_component(g, y, J);
            const bool same_k = restrict_to_component(g, x, K) == restrict_to_component(g, y, K);
            if (same_j) {
                auto a_star = idx_sorted(star_tab.minimal(star_hecke_from_x[sy]));
                if (a_dia != a_star)
                    r.failures.push_back({"same J-part: atoms", dia_tab.word(kx), dia_tab.word(ky),
                                          star_tab.words(a_star), dia_tab.words(a_dia)});
                if (w_dia != detail::words_from_atoms(g, a_star, fg))
                    r.failures.push_back({"same J-part: words", dia_tab.word(kx), dia_tab.word(ky), {}, {}});
            }
            if (same_k) {
                auto a_star = idx_sorted(star_tab.minimal(star_tab.hecke_from(sy)[sx]));
                if (a_dia != inverse_idx(a_star))
                    r.failures.push_back({"same K-part: atoms", dia_tab.word(kx), dia_tab.word(ky),
                                          star_tab.words(inverse_idx(a_star)), dia_tab.words(a_dia)});
                if (w_dia != reversed(detail::words_from_atoms(g, a_star, fg)))
                    r.failures.push_back({"same K-part: words", dia_tab.word(kx), dia_tab.word(ky), {}, {}});
            }
            if (!same_j && !same_k && (star_tab.leq_T(sx, sy) || star_tab.leq_T(sy, sx)))
                r.failures.push_back({"incomparable images", dia_tab.word(kx), dia_tab.word(ky), {}, {}});
        }
        if (full) {
            const int k0 = star_tab.slot_of(v0);
            ++r.pairs_checked;
            if (dia_tab.hat_length(kx) != star_tab.hat_length(k0) - star_tab.hat_length(sx))
                r.failures.push_back({"hat length identity", dia_tab.word(kx), {}, {}, {}});
        }
    }

    // reversal bijection between the two word sets of v0
    {
        ++r.pairs_checked;
        auto a = involution_words(ts, ts.identity(), v0);
        auto b = involution_words(dual, dual.identity(), v0);
        if (reversed(a) != b)
            r.failures.push_back({"reversal at v0", {}, reduced_word(g, v0), detail::as_vector(reversed(a)),
                                  detail::as_vector(b)});
    }
    if (full) {
        // B_*(w0)^{-1} = B_⋄(w0)
        ++r.pairs_checked;
        const int k0s = star_tab.slot_of(v0), k0d = dia_tab.slot_of(v0);
        auto b_star = inverse_idx(star_tab.hecke_from(0)[k0s]);
        auto b_dia = idx_sorted(dia_tab.hecke_from(0)[k0d]);
        if (b_star != b_dia)
            r.failures.push_back({"Hecke atoms of w0 under inversion", {}, reduced_word(g, v0), star_tab.words(b_star),
                                  dia_tab.words(b_dia)});
    }

    // reversal closure at central longest elements of standard parabolics
    const int rank = g.rank();
    auto hecke_from_one = star_tab.hecke_from(0);
    for (unsigned mask = 1; mask < (1u << rank); ++mask) {
        std::vector<int> L;
        for (int s = 1; s <= rank; ++s)
            if (mask >> (s - 1) & 1) L.push_back(s);
        auto wl = longest_element(g, L);
        bool central = true;
        for (int s : L) central = central && g.times_generator(wl, s) == g.generator_times(s, wl);
        const int k = star_tab.slot_of(wl);
        if (!central || k < 0) continue;
        ++r.pairs_checked;
        auto words = involution_words(ts, ts.identity(), wl);
        if (reversed(words) != words)
            r.failures.push_back({"reversal closure", {}, reduced_word(g, wl), {}, {}});
        auto a = idx_sorted(star_tab.minimal(hecke_from_one[k]));
        auto b = idx_sorted(hecke_from_one[k]);
        if (a != inverse_idx(a) || b != inverse_idx(b))
            r.failures.push_back({"inverse closure", {}, reduced_word(g, wl), {}, {}});
    }
    return r;
}

template <CoxeterGroup G>
Report check_duality(const TwistedSystem<G>& ts) {
    return check_duality(ts, longest_element(ts.group()));
}

}  // namespace invwords
