#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "invwords/report.hpp"
#include "invwords/twisted.hpp"
#include "invwords/type_a.hpp"

namespace invwords {

/// Finite integer sequence; permutations enter through their one-line notation.
using IntSeq = std::vector<int>;

struct IntSeqHash {
    std::size_t operator()(const IntSeq& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// ---------------------------------------------------------------------------
// Moves

namespace detail {

/// Calls f(neighbor) for each sequence obtained by rewriting the window at `pos`
/// from one of `forms` to another; forms index into the sorted window values.
template <std::size_t K, class F>
void window_moves(const IntSeq& s, std::size_t pos, const std::vector<std::array<int, K>>& forms, F&& f) {
    std::array<int, K> w, v;
    for (std::size_t i = 0; i < K; ++i) w[i] = v[i] = s[pos + i];
    std::sort(v.begin(), v.end());
    auto realize = [&](const std::array<int, K>& form) {
        std::array<int, K> r;
        for (std::size_t i = 0; i < K; ++i) r[i] = v[form[i]];
        return r;
    };
    bool matches = false;
    for (const auto& form : forms) matches = matches || realize(form) == w;
    if (!matches) return;
    for (const auto& form : forms) {
        auto r = realize(form);
        if (r == w) continue;
        IntSeq t = s;
        for (std::size_t i = 0; i < K; ++i) t[pos + i] = r[i];
        f(std::move(t));
    }
}

// with sorted values a<=b<=c (indices 0,1,2)
inline const std::vector<std::array<int, 3>>& chinese_forms() {
    static const std::vector<std::array<int, 3>> f = {{2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
    return f;
}
// with sorted values a<=b<=c<=d
inline const std::vector<std::array<int, 4>>& fpf_forms() {
    static const std::vector<std::array<int, 4>> f = {{0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
    return f;
}

template <class Moves>
std::vector<IntSeq> closure(const IntSeq& seed, Moves&& moves) {
    std::unordered_set<IntSeq, IntSeqHash> seen = {seed};
    std::deque<IntSeq> queue = {seed};
    while (!queue.empty()) {
        IntSeq s = std::move(queue.front());
        queue.pop_front();
        moves(s, [&](IntSeq t) {
            if (seen.insert(t).second) queue.push_back(std::move(t));
        });
    }
    std::vector<IntSeq> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline void require_even(const IntSeq& s) {
    if (s.size() % 2) throw Error("sequence of odd length");
}

}  // namespace detail

/// One-step rewrites generating the Chinese relation.
template <class F>
void chinese_moves(const IntSeq& s, F&& f) {
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) detail::window_moves<3>(s, i, detail::chinese_forms(), f);
}

/// One-step rewrites generating the fixed-point-free relation.
template <class F>
void fpf_moves(const IntSeq& s, F&& f) {
    detail::require_even(s);
    for (std::size_t i = 0; i + 2 <= s.size(); i += 2) {
        if (s[i] == s[i + 1]) continue;
        IntSeq t = s;
        std::swap(t[i], t[i + 1]);
        f(std::move(t));
    }
    for (std::size_t i = 0; i + 4 <= s.size(); i += 2) detail::window_moves<4>(s, i, detail::fpf_forms(), f);
}

/// Upward moves [c,a,b] -> [b,c,a] with a<=b<=c.
template <class F>
void prec_A_moves(const IntSeq& s, F&& f) {
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
        const int c = s[i], a = s[i + 1], b = s[i + 2];
        if (a <= b && b <= c && !(a == b && b == c)) {
            IntSeq t = s;
            t[i] = b;
            t[i + 1] = c;
            t[i + 2] = a;
            if (t != s) f(std::move(t));
        }
    }
}

/// Upward moves [a,d,b,c] -> [b,c,a,d] at even offsets with a<=b<=c<=d.
template <class F>
void prec_Afpf_moves(const IntSeq& s, F&& f) {
    detail::require_even(s);
    for (std::size_t i = 0; i + 4 <= s.size(); i += 2) {
        const int a = s[i], d = s[i + 1], b = s[i + 2], c = s[i + 3];
        if (a <= b && b <= c && c <= d) {
            IntSeq t = {b, c, a, d};
            if (std::equal(t.begin(), t.end(), s.begin() + i)) continue;
            IntSeq r = s;
            std::copy(t.begin(), t.end(), r.begin() + i);
            f(std::move(r));
        }
    }
}

inline std::vector<IntSeq> chinese_class(const IntSeq& seq) {
    return detail::closure(seq, [](const IntSeq& s, auto&& f) { chinese_moves(s, f); });
}

inline std::vector<IntSeq> fpf_class(const IntSeq& seq) {
    detail::require_even(seq);
    return detail::closure(seq, [](const IntSeq& s, auto&& f) { fpf_moves(s, f); });
}

/// Everything reachable from u by upward moves, u included.
inline std::vector<IntSeq> prec_A_up(const IntSeq& u) {
    return detail::closure(u, [](const IntSeq& s, auto&& f) { prec_A_moves(s, f); });
}
inline std::vector<IntSeq> prec_Afpf_up(const IntSeq& u) {
    detail::require_even(u);
    return detail::closure(u, [](const IntSeq& s, auto&& f) { prec_Afpf_moves(s, f); });
}

inline bool prec_A_leq(const IntSeq& u, const IntSeq& v) {
    if (u.size() != v.size()) throw Error("sequences of different lengths");
    auto up = prec_A_up(u);
    return std::binary_search(up.begin(), up.end(), v);
}
inline bool prec_Afpf_leq(const IntSeq& u, const IntSeq& v) {
    if (u.size() != v.size()) throw Error("sequences of different lengths");
    auto up = prec_Afpf_up(u);
    return std::binary_search(up.begin(), up.end(), v);
}

// ---------------------------------------------------------------------------
// Extremal atoms

namespace detail {

inline Permutation dedupe(const std::vector<int>& e, int n) {
    std::vector<int> out;
    std::vector<char> seen(n + 1, 0);
    for (int v : e)
        if (!seen[v]) {
            seen[v] = 1;
            out.push_back(v);
        }
    return Permutation(std::move(out));
}

inline std::vector<CyclePair> by_second(std::vector<CyclePair> c) {
    std::sort(c.begin(), c.end(), [](auto& p, auto& q) { return p.b < q.b; });
    return c;
}

inline const Permutation& require_fpf(const Permutation& x) {
    if (!is_fpf_involution(x)) throw Error("not a fixed-point-free involution");
    return x;
}

}  // namespace detail

/// [[b1,a1,...,bk,ak]] over cycles sorted by a.
inline Permutation hat0(const Permutation& x) {
    std::vector<int> e;
    for (auto [a, b] : cyc(x)) {
        e.push_back(b);
        e.push_back(a);
    }
    return detail::dedupe(e, x.size());
}

/// [[d1,c1,...,dk,ck]] over cycles sorted by d.
inline Permutation hat1(const Permutation& x) {
    std::vector<int> e;
    for (auto [c, d] : detail::by_second(cyc(x))) {
        e.push_back(d);
        e.push_back(c);
    }
    return detail::dedupe(e, x.size());
}

inline Permutation hat0_fpf(const Permutation& x) {
    detail::require_fpf(x);
    std::vector<int> e;
    for (auto [a, b] : cyc_strict(x)) {
        e.push_back(a);
        e.push_back(b);
    }
    return Permutation(std::move(e));
}

inline Permutation hat1_fpf(const Permutation& x) {
    detail::require_fpf(x);
    std::vector<int> e;
    for (auto [c, d] : detail::by_second(cyc_strict(x))) {
        e.push_back(c);
        e.push_back(d);
    }
    return Permutation(std::move(e));
}

inline bool is_321_avoiding(const Permutation& w) {
    // longest decreasing subsequence < 3: track the smallest value with a larger one to its left
    const int n = w.size();
    int max_so_far = 0;
    int max_mid = 0;  // largest w(j) having a larger entry before it
    for (int i = 1; i <= n; ++i) {
        const int v = w(i);
        if (v < max_mid) return false;
        if (v < max_so_far) max_mid = std::max(max_mid, v);
        max_so_far = std::max(max_so_far, v);
    }
    return true;
}

/// {(p,q) ∈ Z_x : u⁻¹(p) < u⁻¹(q)} for u ∈ A(x)⁻¹.
inline std::set<std::pair<int, int>> a_inversion_set(const Permutation& u, const Permutation& x) {
    if (u.size() != x.size()) throw Error("mismatched sizes");
    if (!is_atom_absolute(u.inverse(), x)) throw Error("not the inverse of an atom");
    const Permutation ui = u.inverse();
    std::set<std::pair<int, int>> out;
    const int n = x.size();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            const bool lp = p <= x(p), lq = q <= x(q);
            const bool in_z = (lp && lq && p > q) || (!lp && !lq && p < q);
            if (in_z && ui(p) < ui(q)) out.insert({p, q});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Posets

struct AtomPoset {
    std::vector<Permutation> elements;          // sorted
    std::vector<std::pair<int, int>> covers;    // (lower, upper) indices
    Permutation bottom, top;
    std::vector<int> ranks;                     // rank of each element

    int index(const Permutation& u) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), u);
        return it != elements.end() && *it == u ? static_cast<int>(it - elements.begin()) : -1;
    }
};

namespace detail {

/// Reachability (upward) as bitsets, from the single-move relation on a finite set.
struct Reach {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;
    bool get(std::size_t a, std::size_t b) const { return bits[a * words + b / 64] >> (b % 64) & 1; }
};

inline Reach reachability(std::size_t n, const std::vector<std::pair<int, int>>& moves) {
    Reach r;
    r.words = (n + 63) / 64;
    r.bits.assign(n * r.words, 0);
    std::vector<std::vector<int>> up(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : moves) {
        up[a].push_back(b);
        ++indeg[b];
    }
    // topological order; the move relations are acyclic (subrelations of a lexicographic order)
    std::vector<int> order;
    for (std::size_t i = 0; i < n; ++i)
        if (!indeg[i]) order.push_back(static_cast<int>(i));
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int b : up[order[k]])
            if (--indeg[b] == 0) order.push_back(b);
    if (order.size() != n) throw Error("move relation has a cycle");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int a = *it;
        r.bits[a * r.words + a / 64] |= std::uint64_t{1} << (a % 64);
        for (int b : up[a])
            for (std::size_t j = 0; j < r.words; ++j) r.bits[a * r.words + j] |= r.bits[b * r.words + j];
    }
    return r;
}

template <class Moves, class Rank>
AtomPoset build_poset(const Permutation& bottom, const Permutation& top, Moves&& moves, Rank&& rank) {
    AtomPoset p;
    for (auto& s : detail::closure(bottom.one_line(), moves)) p.elements.emplace_back(s);
    p.bottom = bottom;
    p.top = top;
    std::vector<std::pair<int, int>> step;
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        moves(p.elements[i].one_line(), [&](IntSeq t) {
            int j = p.index(Permutation(std::move(t)));
            if (j < 0) throw Error("poset not closed under moves");
            step.emplace_back(static_cast<int>(i), j);
        });
    auto reach = reachability(p.elements.size(), step);
    // transitive reduction of the move relation
    for (auto [a, b] : step) {
        bool cover = true;
        for (auto [c, d] : step)
            if (c == a && d != b && reach.get(d, b)) {
                cover = false;
                break;
            }
        if (cover) p.covers.emplace_back(a, b);
    }
    std::sort(p.covers.begin(), p.covers.end());
    p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());
    for (auto& u : p.elements) p.ranks.push_back(rank(u));
    return p;
}

}  // namespace detail

/// (A(x)⁻¹, ≺_A), generated upward from 0̂(x).
inline AtomPoset atom_poset(const Permutation& x) {
    require_involution(x);
    return detail::build_poset(
        hat0(x), hat1(x), [](const IntSeq& s, auto&& f) { prec_A_moves(s, f); },
        [&x](const Permutation& u) { return static_cast<int>(a_inversion_set(u, x).size()); });
}

/// Φ(u): the pair order of u relabelled by the position of each cycle among cycles sorted by first entry.
inline Permutation phi_fpf(const Permutation& u, const Permutation& x) {
    auto c = cyc_strict(detail::require_fpf(x));
    std::map<std::pair<int, int>, int> label;
    for (std::size_t i = 0; i < c.size(); ++i) label[{c[i].a, c[i].b}] = static_cast<int>(i) + 1;
    std::vector<int> out;
    for (int i = 1; i + 1 <= u.size(); i += 2) {
        auto it = label.find({u(i), u(i + 1)});
        if (it == label.end()) throw Error("not the inverse of a fixed-point-free atom");
        out.push_back(it->second);
    }
    return Permutation(std::move(out));
}

/// (A_FPF(x)⁻¹, ≺_AFPF), generated upward from 0̂_FPF(x); ranks are lengths of Φ.
inline AtomPoset atom_poset_fpf(const Permutation& x) {
    return detail::build_poset(
        hat0_fpf(x), hat1_fpf(x), [](const IntSeq& s, auto&& f) { prec_Afpf_moves(s, f); },
        [&x](const Permutation& u) { return phi_fpf(u, x).inversions(); });
}

/// Upward reachability between poset elements.
inline detail::Reach poset_order(const AtomPoset& p) { return detail::reachability(p.elements.size(), p.covers); }

struct PosetChecks {
    bool bounded = false;   // unique minimum bottom, unique maximum top
    bool graded = false;    // ranks go up by one along covers
    bool lattice = false;   // all meets and joins exist
};

inline PosetChecks check_poset(const AtomPoset& p) {
    PosetChecks c;
    const std::size_t n = p.elements.size();
    if (n == 0) return c;
    auto r = poset_order(p);
    const int b = p.index(p.bottom), t = p.index(p.top);
    c.bounded = b >= 0 && t >= 0;
    for (std::size_t i = 0; c.bounded && i < n; ++i) c.bounded = r.get(b, i) && r.get(i, t);
    c.graded = true;
    for (auto [lo, hi] : p.covers) c.graded = c.graded && p.ranks[hi] == p.ranks[lo] + 1;
    c.lattice = true;
    for (std::size_t i = 0; c.lattice && i < n; ++i)
        for (std::size_t j = i + 1; c.lattice && j < n; ++j) {
            int joins = 0, meets = 0;
            std::vector<std::size_t> ub, lb;
            for (std::size_t k = 0; k < n; ++k) {
                if (r.get(i, k) && r.get(j, k)) ub.push_back(k);
                if (r.get(k, i) && r.get(k, j)) lb.push_back(k);
            }
            for (auto u : ub) joins += std::all_of(ub.begin(), ub.end(), [&](auto v) { return r.get(u, v); });
            for (auto l : lb) meets += std::all_of(lb.begin(), lb.end(), [&](auto v) { return r.get(v, l); });
            c.lattice = joins == 1 && meets == 1;
        }
    return c;
}

/// Compact label: digits run together when every value is a single digit.
inline std::string compact(const Permutation& u) {
    std::string s;
    const bool small = u.size() <= 9;
    for (int i = 1; i <= u.size(); ++i) {
        if (!small && i > 1) s += ",";
        s += std::to_string(u(i));
    }
    return s;
}

inline std::string to_dot(const AtomPoset& p, const std::string& name = "atoms") {
    std::string s = "digraph " + name + " {\n  rankdir=BT;\n";
    for (auto& u : p.elements) s += "  \"" + compact(u) + "\";\n";
    for (auto [a, b] : p.covers) s += "  \"" + compact(p.elements[a]) + "\" -> \"" + compact(p.elements[b]) + "\";\n";
    return s + "}\n";
}

inline void to_json(nlohmann::json& j, const AtomPoset& p) {
    auto lines = nlohmann::json::array();
    for (auto& u : p.elements) lines.push_back(u.one_line());
    auto covers = nlohmann::json::array();
    for (auto [a, b] : p.covers) covers.push_back({p.elements[a].one_line(), p.elements[b].one_line()});
    j = nlohmann::json{{"elements", lines},
                       {"covers", covers},
                       {"bottom", p.bottom.one_line()},
                       {"top", p.top.one_line()},
                       {"ranks", p.ranks}};
}

// ---------------------------------------------------------------------------
// Hecke atom sets of S_n, by group index

/// B(base, y)⁻¹ for every involution y, in one-line notation; base is the identity or s1 s3 ... .
class HeckeInverses {
public:
    HeckeInverses(int n, bool fpf)
        : n_(n), ts_(symmetric_system(n)), tab_(std::make_unique<InvolutionTables<SymmetricGroup>>(ts_)) {
        const Permutation base = fpf ? fpf_base(n) : Permutation::identity(n);
        const int kb = tab_->slot_of(base);
        auto hecke = tab_->hecke_from(kb);
        for (std::size_t k = 0; k < tab_->size(); ++k) {
            if (hecke[k].empty()) continue;
            const auto& y = tab_->element(k);
            auto& sets = sets_[y];
            for (int i : hecke[k]) sets.push_back(tab_->group().element(i).inverse());
            std::sort(sets.begin(), sets.end());
            std::size_t shortest = SIZE_MAX;
            for (int i : hecke[k]) shortest = std::min<std::size_t>(shortest, tab_->group().length(i));
            auto& at = atoms_[y];
            for (int i : hecke[k])
                if (static_cast<std::size_t>(tab_->group().length(i)) == shortest)
                    at.push_back(tab_->group().element(i).inverse());
            std::sort(at.begin(), at.end());
        }
    }

    int n() const { return n_; }
    /// y ↦ B(base,y)⁻¹, only nonempty entries.
    const std::map<Permutation, std::vector<Permutation>>& hecke() const { return sets_; }
    /// y ↦ A(base,y)⁻¹.
    const std::map<Permutation, std::vector<Permutation>>& atoms() const { return atoms_; }

private:
    int n_;
    TwistedSystem<SymmetricGroup> ts_;
    std::unique_ptr<InvolutionTables<SymmetricGroup>> tab_;
    std::map<Permutation, std::vector<Permutation>> sets_, atoms_;
};

namespace detail {

template <class ClassOf>
Report verify_classes(const HeckeInverses& h, const std::string& system, ClassOf&& class_of, unsigned jobs) {
    std::vector<const std::pair<const Permutation, std::vector<Permutation>>*> entries;
    for (auto& e : h.hecke()) entries.push_back(&e);
    std::size_t covered = 0;
    for (auto* e : entries) covered += e->second.size();
    Report r = parallel_reports(entries.size(), jobs, [&](std::size_t k) {
        Report part;
        const auto& [y, inv] = *entries[k];
        ++part.pairs_checked;
        std::vector<Permutation> cls;
        for (auto& s : class_of(inv.front().one_line())) cls.emplace_back(s);
        if (cls != inv) {
            auto words = [](const std::vector<Permutation>& v) {
                std::vector<Word> out;
                for (auto& p : v) out.push_back(Word(p.one_line().begin(), p.one_line().end()));
                return out;
            };
            part.failures.push_back({"class differs from inverse Hecke atoms", {}, Word(y.one_line().begin(), y.one_line().end()),
                                     words(inv), words(cls)});
        }
        return part;
    });
    std::size_t total = 1;
    for (int i = 2; i <= h.n(); ++i) total *= i;
    if (covered != total) r.failures.push_back({"Hecke atom sets do not partition the group", {}, {}, {}, {}});
    r.system = system;
    return r;
}

}  // namespace detail

/// Each ∼_B class of S_n equals B(y)⁻¹ for one involution y (n <= 8).
/// Failures carry one-line permutations in place of words.
inline Report verify_chinese(int n, unsigned jobs = 1) {
    if (n < 0 || n > 8) throw Error("verify_chinese supported for n <= 8");
    HeckeInverses h(n, false);
    return detail::verify_classes(h, "S" + std::to_string(n) + " Chinese classes", chinese_class, jobs);
}

/// Each fixed-point-free class of S_n equals B_FPF(y)⁻¹ (n even, n <= 8).
inline Report verify_fpf(int n, unsigned jobs = 1) {
    if (n < 0 || n % 2 || n > 8) throw Error("verify_fpf supported for even n <= 8");
    HeckeInverses h(n, true);
    return detail::verify_classes(h, "S" + std::to_string(n) + " fixed-point-free classes", fpf_class, jobs);
}

/// Distinct classes of all of S_n under a move system, each sorted; classes sorted by first element.
template <class Moves>
std::vector<std::vector<IntSeq>> partition_classes(int n, Moves&& moves) {
    std::vector<std::vector<IntSeq>> out;
    std::unordered_set<IntSeq, IntSeqHash> seen;
    IntSeq p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        if (seen.count(p)) continue;
        auto cls = detail::closure(p, moves);
        for (auto& s : cls) seen.insert(s);
        out.push_back(std::move(cls));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::vector<IntSeq>> chinese_classes(int n) {
    return partition_classes(n, [](const IntSeq& s, auto&& f) { chinese_moves(s, f); });
}
inline std::vector<std::vector<IntSeq>> fpf_classes(int n) {
    if (n % 2) throw Error("fixed-point-free classes need even n");
    return partition_classes(n, [](const IntSeq& s, auto&& f) { fpf_moves(s, f); });
}

}  // namespace invwords
