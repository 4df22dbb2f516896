#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invwords/coxeter_core.hpp"
#include "invwords/twisted.hpp"

namespace invwords {

// ---------------------------------------------------------------------------
// Permutations

/// A permutation of [n] in one-line notation; w(i) is 1-based.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
        std::vector<char> seen(p_.size() + 1, 0);
        for (int v : p_) {
            if (v < 1 || v > size() || seen[v]) throw Error("not a permutation");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 1);
        return Permutation(std::move(p));
    }
    static Permutation longest(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = n - i;
        return Permutation(std::move(p));
    }

    int size() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_[i - 1]; }
    const std::vector<int>& one_line() const { return p_; }

    Permutation inverse() const {
        std::vector<int> q(p_.size());
        for (int i = 0; i < size(); ++i) q[p_[i] - 1] = i + 1;
        return Permutation(std::move(q), Unchecked{});
    }
    /// (u*v)(i) = u(v(i)).
    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        if (u.size() != v.size()) throw Error("mismatched systems");
        std::vector<int> q(v.p_.size());
        for (int i = 0; i < v.size(); ++i) q[i] = u.p_[v.p_[i] - 1];
        return Permutation(std::move(q), Unchecked{});
    }

    bool is_involution() const {
        for (int i = 0; i < size(); ++i)
            if (p_[p_[i] - 1] != i + 1) return false;
        return true;
    }
    int inversions() const {
        int n = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j) n += p_[i] > p_[j];
        return n;
    }

    /// "[3,5,1,4,2]".
    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
        return s + "]";
    }
    /// Cycle notation without fixed points; "()" for the identity.
    std::string to_cycles() const {
        std::string s;
        std::vector<char> done(p_.size(), 0);
        for (int i = 1; i <= size(); ++i) {
            if (done[i - 1] || p_[i - 1] == i) continue;
            s += "(";
            for (int j = i; !done[j - 1]; j = p_[j - 1]) {
                if (j != i) s += ",";
                s += std::to_string(j);
                done[j - 1] = 1;
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // swaps used by the group policy; no validation needed
    Permutation swap_positions(int i) const {
        Permutation q = *this;
        std::swap(q.p_[i - 1], q.p_[i]);
        return q;
    }
    Permutation swap_values(int v) const {
        Permutation q = *this;
        for (int& x : q.p_) {
            if (x == v) x = v + 1;
            else if (x == v + 1) x = v;
        }
        return q;
    }

private:
    struct Unchecked {};
    Permutation(std::vector<int> p, Unchecked) : p_(std::move(p)) {}

    std::vector<int> p_;
};

}  // namespace invwords

template <>
struct std::hash<invwords::Permutation> {
    std::size_t operator()(const invwords::Permutation& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : p.one_line()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

namespace invwords {

/// Cycle notation "(1,4)(2,3)" in S_n; "()" is the identity.
inline Permutation parse_cycles(std::string_view text, int n) {
    std::vector<int> p(std::max(n, 0));
    std::iota(p.begin(), p.end(), 1);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) throw Error("invalid cycle notation: empty");
    std::vector<char> used(p.size() + 1, 0);
    while (i < text.size()) {
        if (text[i] != '(') throw Error("invalid cycle notation: expected '('");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw Error("invalid cycle notation: expected a number");
            int v = std::stoi(std::string(text.substr(i, j - i)));
            if (v < 1 || v > n) throw Error("invalid cycle notation: entry " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
            if (used[v]) throw Error("invalid cycle notation: repeated entry " + std::to_string(v));
            used[v] = 1;
            cyc.push_back(v);
            i = j;
            skip();
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        skip();
    }
    return Permutation(std::move(p));
}

/// One-line "[3,5,1,4,2]", "3,5,1,4,2" or "3 5 1 4 2"; cycle notation when the text starts with '('.
/// `n` is required for cycle notation and checked for one-line input when positive.
inline Permutation parse_permutation(std::string_view text, int n = 0) {
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k < text.size() && text[k] == '(') {
        if (n <= 0) throw Error("cycle notation needs the size n");
        return parse_cycles(text, n);
    }
    std::vector<int> p;
    std::string cur;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
            if (!cur.empty()) p.push_back(std::stoi(cur));
            cur.clear();
        } else {
            throw Error(std::string("invalid permutation: unexpected '") + c + "'");
        }
    }
    if (!cur.empty()) p.push_back(std::stoi(cur));
    if (n > 0 && static_cast<int>(p.size()) != n)
        throw Error("invalid permutation: expected " + std::to_string(n) + " entries");
    return Permutation(std::move(p));
}

// ---------------------------------------------------------------------------
// The symmetric group as a Coxeter group of type A_{n-1}

class SymmetricGroup {
public:
    using Element = Permutation;
    /// true when the twist is conjugation by the longest element.
    using PreparedTwist = bool;

    explicit SymmetricGroup(int n) : n_(n), matrix_(make_matrix(n)) {
        if (n < 0) throw Error("invalid size");
    }

    int n() const { return n_; }
    int rank() const { return std::max(n_ - 1, 0); }
    int m(int s, int t) const { return s == t ? 1 : (s - t == 1 || t - s == 1) ? 3 : 2; }
    const CoxeterMatrix& matrix() const { return matrix_; }
    std::string name() const { return matrix_.name(); }

    Element identity() const { return Permutation::identity(n_); }
    Element generator(int s) const { return identity().swap_positions(s); }
    Element multiply(const Element& w, const Element& v) const { return w * v; }
    Element inverse(const Element& w) const { return w.inverse(); }
    int length(const Element& w) const { return w.inversions(); }
    bool right_descent(const Element& w, int s) const { return w(s) > w(s + 1); }
    bool left_descent(const Element& w, int s) const {
        // s+1 appears before s in one-line notation
        for (int v : w.one_line()) {
            if (v == s + 1) return true;
            if (v == s) return false;
        }
        return false;
    }
    Element times_generator(const Element& w, int s) const { return w.swap_positions(s); }
    Element generator_times(int s, const Element& w) const { return w.swap_values(s); }

    PreparedTwist prepare_twist(const DiagramInvolution& d) const {
        if (d.is_identity()) return false;
        for (int s = 1; s <= rank(); ++s)
            if (d(s) != n_ - s) throw Error("invalid twist: does not preserve the Coxeter matrix");
        return true;
    }
    Element apply_twist(PreparedTwist flip, const Element& w) const {
        if (!flip) return w;
        std::vector<int> q(n_);
        for (int i = 1; i <= n_; ++i) q[i - 1] = n_ + 1 - w(n_ + 1 - i);
        return Permutation(std::move(q));
    }

    std::optional<std::size_t> order_if_small() const {
        std::size_t f = 1;
        for (int i = 2; i <= n_; ++i) {
            f *= static_cast<std::size_t>(i);
            if (f > kSmallGroupLimit) return std::nullopt;
        }
        return f;
    }

private:
    static CoxeterMatrix make_matrix(int n) {
        const int r = std::max(n - 1, 0);
        std::vector<std::vector<int>> e(r, std::vector<int>(r, 2));
        for (int i = 0; i < r; ++i) {
            e[i][i] = 1;
            if (i + 1 < r) e[i][i + 1] = e[i + 1][i] = 3;
        }
        return CoxeterMatrix(std::move(e), "A" + std::to_string(r));
    }

    int n_;
    CoxeterMatrix matrix_;
};

static_assert(CoxeterGroup<SymmetricGroup>);

/// S_n with * = id, or with * = conjugation by w0 when `twisted`.
inline TwistedSystem<SymmetricGroup> symmetric_system(int n, bool twisted = false) {
    SymmetricGroup g(n);
    if (!twisted) return TwistedSystem<SymmetricGroup>(g);
    std::vector<int> p(g.rank());
    for (int s = 1; s <= g.rank(); ++s) p[s - 1] = n - s;
    return TwistedSystem<SymmetricGroup>(g, DiagramInvolution(p));
}

/// Element of a root-system realization of A_{n-1}, through a reduced word.
inline GroupElement to_root_element(const CoxeterSystem& g, const Permutation& w) {
    if (g.rank() != std::max(w.size() - 1, 0)) throw Error("mismatched systems");
    return element_from_word(g, reduced_word(SymmetricGroup(w.size()), w));
}

inline Permutation to_permutation(const CoxeterSystem& g, const GroupElement& w) {
    SymmetricGroup sg(g.rank() + 1);
    for (int s = 1; s <= g.rank(); ++s)
        for (int t = 1; t <= g.rank(); ++t)
            if (g.m(s, t) != sg.m(s, t)) throw Error("not a type A system");
    return element_from_word(sg, reduced_word(g, w));
}

/// s1 s3 ... s_{n-1} in S_n for even n.
inline Permutation fpf_base(int n) {
    if (n % 2) throw Error("fixed-point-free involutions need even n");
    Permutation w = Permutation::identity(n);
    for (int s = 1; s < n; s += 2) w = w.swap_positions(s);
    return w;
}

inline bool is_fpf_involution(const Permutation& y) {
    if (!y.is_involution()) return false;
    for (int i = 1; i <= y.size(); ++i)
        if (y(i) == i) return false;
    return true;
}

inline std::vector<Permutation> involutions(int n) {
    std::vector<Permutation> out;
    for (const auto& x : enumerate_twisted(symmetric_system(n))) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Permutation> fpf_involutions(int n) {
    std::vector<Permutation> out;
    for (const auto& x : involutions(n))
        if (is_fpf_involution(x)) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------
// Cycle sets

struct CyclePair {
    int a = 0, b = 0;
    friend bool operator==(const CyclePair&, const CyclePair&) = default;
    friend auto operator<=>(const CyclePair&, const CyclePair&) = default;
};

inline bool disjoint(const CyclePair& g, const CyclePair& h) {
    return g.a != h.a && g.a != h.b && g.b != h.a && g.b != h.b;
}

inline CyclePair apply(const Permutation& w, const CyclePair& g) { return {w(g.a), w(g.b)}; }

inline const Permutation& require_involution(const Permutation& y) {
    if (!y.is_involution()) throw Error("not an involution");
    return y;
}

/// {(a,b) : a <= b = y(a)}, sorted.
inline std::vector<CyclePair> cyc(const Permutation& y) {
    require_involution(y);
    std::vector<CyclePair> out;
    for (int a = 1; a <= y.size(); ++a)
        if (a <= y(a)) out.push_back({a, y(a)});
    return out;
}

/// Cyc with strict a < b, the convention for fixed-point-free involutions.
inline std::vector<CyclePair> cyc_strict(const Permutation& y) {
    std::vector<CyclePair> out;
    for (auto g : cyc(y))
        if (g.a < g.b) out.push_back(g);
    return out;
}

inline std::vector<int> fix(const Permutation& y) {
    require_involution(y);
    std::vector<int> out;
    for (int a = 1; a <= y.size(); ++a)
        if (y(a) == a) out.push_back(a);
    return out;
}

/// Cyc(y) together with (a,b) for fixed points b < a.
inline std::vector<CyclePair> gamma(const Permutation& y) {
    auto out = cyc(y);
    auto f = fix(y);
    for (int a : f)
        for (int b : f)
            if (b < a) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

inline bool in_gamma(const Permutation& x, const CyclePair& g) {
    if (g.a < 1 || g.b < 1 || g.a > x.size() || g.b > x.size()) return false;
    if (g.a <= g.b) return x(g.a) == g.b;
    return x(g.a) == g.a && x(g.b) == g.b;
}

/// Standardization: ties are numbered left to right.
inline Permutation standardize(const std::vector<int>& e) {
    std::vector<int> idx(e.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return e[i] < e[j]; });
    std::vector<int> p(e.size());
    for (std::size_t r = 0; r < idx.size(); ++r) p[idx[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(p));
}

// ---------------------------------------------------------------------------
// Colored involutions

/// A partial matching on [2n] with two vertices of each color 1..n; matched vertices share a color.
class ColoredInvolution {
public:
    ColoredInvolution() = default;
    ColoredInvolution(std::vector<int> matching, std::vector<int> colors)
        : match_(std::move(matching)), color_(std::move(colors)) {
        const int m = static_cast<int>(match_.size());
        if (m % 2 || static_cast<int>(color_.size()) != m) throw Error("invalid colored involution: size");
        std::vector<int> count(m / 2 + 1, 0);
        for (int i = 1; i <= m; ++i) {
            int j = match_[i - 1];
            if (j < 1 || j > m || match_[j - 1] != i) throw Error("invalid colored involution: matching");
            int c = color_[i - 1];
            if (c < 1 || c > m / 2) throw Error("invalid colored involution: color out of range");
            ++count[c];
            if (color_[j - 1] != c) throw Error("invalid colored involution: matched vertices differ in color");
        }
        for (int c = 1; c <= m / 2; ++c)
            if (count[c] != 2) throw Error("invalid colored involution: each color needs two vertices");
    }

    int colors() const { return static_cast<int>(color_.size()) / 2; }
    int size() const { return static_cast<int>(color_.size()); }
    int partner(int i) const { return match_[i - 1]; }
    int color(int i) const { return color_[i - 1]; }
    const std::vector<int>& matching() const { return match_; }
    const std::vector<int>& coloring() const { return color_; }

    /// Underlying involution of S_{2n}.
    Permutation pi() const { return Permutation(match_); }

    /// α⋊s_i: toggles the edge when i and i+1 share a color, else swaps the two vertices.
    ColoredInvolution rtimes(int i) const {
        if (i < 1 || i >= size()) throw Error("generator out of range");
        ColoredInvolution r = *this;
        if (color_[i - 1] == color_[i]) {
            if (match_[i - 1] == i + 1) {
                r.match_[i - 1] = i;
                r.match_[i] = i + 1;
            } else {
                r.match_[i - 1] = i + 1;
                r.match_[i] = i;
            }
            return r;
        }
        auto sw = [i](int v) { return v == i ? i + 1 : v == i + 1 ? i : v; };
        for (int v = 1; v <= size(); ++v) {
            r.match_[sw(v) - 1] = sw(match_[v - 1]);
            r.color_[sw(v) - 1] = color_[v - 1];
        }
        return r;
    }

    /// Color reversal c ↦ n+1−c.
    ColoredInvolution star() const {
        ColoredInvolution r = *this;
        for (int& c : r.color_) c = colors() + 1 - c;
        return r;
    }

    /// "1-4:1 2-3:2" style text: one token per vertex pair.
    std::string to_string() const {
        std::string s;
        for (int i = 1; i <= size(); ++i) {
            s += std::to_string(color(i));
            if (partner(i) != i) s += partner(i) > i ? "(" : ")";
            if (i < size()) s += " ";
        }
        return s;
    }

    friend bool operator==(const ColoredInvolution&, const ColoredInvolution&) = default;
    friend auto operator<=>(const ColoredInvolution&, const ColoredInvolution&) = default;

private:
    std::vector<int> match_, color_;
};

}  // namespace invwords

template <>
struct std::hash<invwords::ColoredInvolution> {
    std::size_t operator()(const invwords::ColoredInvolution& a) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 1; i <= a.size(); ++i) {
            h ^= static_cast<std::uint64_t>(a.partner(i) * 16 + a.color(i));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

namespace invwords {

/// Vertices w(2i-1), w(2i) get color i and are joined when w(2i-1) > w(2i).
inline ColoredInvolution tau(const Permutation& w) {
    const int m = w.size();
    if (m % 2) throw Error("tau needs a permutation of even size");
    std::vector<int> match(m), color(m);
    std::iota(match.begin(), match.end(), 1);
    for (int i = 1; i <= m / 2; ++i) {
        int u = w(2 * i - 1), v = w(2 * i);
        color[u - 1] = color[v - 1] = i;
        if (u > v) {
            match[u - 1] = v;
            match[v - 1] = u;
        }
    }
    return ColoredInvolution(std::move(match), std::move(color));
}

/// τ∘std[b1,a1,...,bk,ak].
inline ColoredInvolution sigma(const std::vector<CyclePair>& pairs) {
    std::vector<int> e;
    for (const auto& g : pairs) {
        e.push_back(g.b);
        e.push_back(g.a);
    }
    return tau(standardize(e));
}

/// The order ≺ on colored involutions with n colors, materialized for n <= 3.
class PrecOrder {
public:
    explicit PrecOrder(int n) : n_(n) {
        if (n < 1 || n > 3) throw Error("prec order supported for 1 <= n <= 3 colors");
        const int m = 2 * n;
        auto ts = symmetric_system(m);
        InvolutionTables<SymmetricGroup> tab(ts);
        FullGroup<SymmetricGroup> fg(ts.group());
        for (const auto& w : fg.elements()) {
            index_.emplace(tau(w), static_cast<int>(elems_.size()));
            elems_.push_back(tau(w));
        }
        const std::size_t N = elems_.size();
        words_ = (N + 63) / 64;
        std::vector<int> level(N);
        std::vector<std::vector<int>> below(N);
        for (std::size_t k = 0; k < N; ++k) {
            const int pk = tab.slot_of(elems_[k].pi());
            level[k] = tab.hat_length(pk);
            for (int s = 1; s < m; ++s) {
                auto b = elems_[k].rtimes(s);
                const int pb = tab.slot_of(b.pi());
                if (pb != pk && tab.leq_T(pb, pk)) {
                    const int kb = index_.at(b);
                    below[k].push_back(kb);
                    covers_.emplace_back(kb, static_cast<int>(k));
                }
            }
        }
        std::vector<int> order(N);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return level[a] < level[b]; });
        down_.assign(N * words_, 0);
        for (int k : order) {
            down_[k * words_ + k / 64] |= std::uint64_t{1} << (k % 64);
            for (int b : below[k])
                for (std::size_t j = 0; j < words_; ++j) down_[k * words_ + j] |= down_[b * words_ + j];
        }
    }

    int colors() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<ColoredInvolution>& elements() const { return elems_; }
    /// Generating relations (lower, upper) as element indices.
    const std::vector<std::pair<int, int>>& relations() const { return covers_; }
    int index(const ColoredInvolution& a) const {
        auto it = index_.find(a);
        if (it == index_.end()) throw Error("colored involution of the wrong size");
        return it->second;
    }
    bool leq(int a, int b) const { return down_[b * words_ + a / 64] >> (a % 64) & 1; }
    bool leq(const ColoredInvolution& a, const ColoredInvolution& b) const { return leq(index(a), index(b)); }

    /// Elements below `top`, with the Hasse diagram of that interval.
    std::pair<std::vector<int>, std::vector<std::pair<int, int>>> lower_interval(const ColoredInvolution& top) const {
        const int t = index(top);
        std::vector<int> nodes;
        for (std::size_t k = 0; k < size(); ++k)
            if (leq(static_cast<int>(k), t)) nodes.push_back(static_cast<int>(k));
        std::vector<std::pair<int, int>> hasse;
        for (int a : nodes)
            for (int b : nodes) {
                if (a == b || !leq(a, b)) continue;
                bool cover = true;
                for (int c : nodes)
                    if (c != a && c != b && leq(a, c) && leq(c, b)) {
                        cover = false;
                        break;
                    }
                if (cover) hasse.emplace_back(a, b);
            }
        return {nodes, hasse};
    }

private:
    int n_;
    std::vector<ColoredInvolution> elems_;
    std::unordered_map<ColoredInvolution, int> index_;
    std::vector<std::pair<int, int>> covers_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> down_;
};

/// Shared, lazily built order for n colors.
inline const PrecOrder& prec_order(int n) {
    if (n < 1 || n > 3) throw Error("prec order supported for 1 <= n <= 3 colors");
    static std::array<std::once_flag, 3> once;
    static std::array<std::unique_ptr<PrecOrder>, 3> cache;
    std::call_once(once[n - 1], [n] { cache[n - 1] = std::make_unique<PrecOrder>(n); });
    return *cache[n - 1];
}

inline bool prec_leq(const ColoredInvolution& a, const ColoredInvolution& b) {
    if (a.colors() != b.colors()) throw Error("colored involutions of different sizes");
    return prec_order(a.colors()).leq(a, b);
}

// ---------------------------------------------------------------------------
// Atom classifiers

/// w γ ∈ Γ(x) for γ ∈ Cyc(y), and σ(wγ,wγ') ⪯ σ(γ,γ') for distinct γ, γ'.
inline bool is_atom_colored(const Permutation& w, const Permutation& x, const Permutation& y) {
    auto c = cyc(y);
    require_involution(x);
    for (const auto& g : c)
        if (!in_gamma(x, apply(w, g))) return false;
    const PrecOrder& order = prec_order(2);
    for (const auto& g : c)
        for (const auto& h : c) {
            if (!disjoint(g, h)) continue;
            if (!order.leq(sigma({apply(w, g), apply(w, h)}), sigma({g, h}))) return false;
        }
    return true;
}

/// The explicit inequality form of the classifier.
inline bool is_atom_general(const Permutation& w, const Permutation& x, const Permutation& y) {
    auto c = cyc(y);
    require_involution(x);
    for (const auto& [a, b] : c) {
        if (w(a) < w(b)) {
            if (x(w(a)) != w(b)) return false;
        } else if (x(w(a)) != w(a) || x(w(b)) != w(b)) {
            return false;
        }
    }
    for (const auto& [a, b] : c)
        for (const auto& [a2, b2] : c) {
            const int wa = w(a), wb = w(b), wa2 = w(a2), wb2 = w(b2);
            if (a <= b && b < a2 && a2 <= b2) {
                if (!(wa < wa2 && wa < wb2 && wb < wb2 && wb < wa2)) return false;
            } else if (a < a2 && a2 < b && b < b2) {
                if (!(wa < wa2 && wa < wb2 && wb < wb2)) return false;
            } else if (a < a2 && a2 < b2 && b2 < b) {
                if ((wb < wa2 && wa2 < wa) || (wb < wb2 && wb2 < wa)) return false;
                if ((wa2 < wa && wa < wb && wb < wb2) || (wa2 < wb && wb <= wa && wa < wb2)) return false;
            } else if (a < a2 && a2 == b2 && b2 < b) {
                if (wb < wa2 && wa2 < wa) return false;
            }
        }
    return true;
}

/// Membership in A(1,y).
inline bool is_atom_absolute(const Permutation& w, const Permutation& y) {
    auto c = cyc(y);
    for (const auto& [a, b] : c) {
        if (w(b) > w(a)) return false;
        for (int t = a + 1; t < b; ++t)
            if (w(b) < w(t) && w(t) < w(a)) return false;
    }
    for (const auto& [a, b] : c)
        for (const auto& [a2, b2] : c)
            if (a < a2 && b < b2 && !(w(b) <= w(a) && w(a) < w(b2) && w(b2) <= w(a2))) return false;
    return true;
}

/// Membership in A(s1 s3 ... s_{n-1}, y) for fixed-point-free y.
inline bool is_atom_fpf(const Permutation& w, const Permutation& y) {
    if (!is_fpf_involution(y)) throw Error("not a fixed-point-free involution");
    auto c = cyc_strict(y);
    for (const auto& [a, b] : c)
        if (w(a) % 2 == 0 || w(b) != w(a) + 1) return false;
    for (const auto& [a, b] : c)
        for (const auto& [a2, b2] : c)
            if (a < a2 && b < b2 && !(w(a) < w(b) && w(b) < w(a2) && w(a2) < w(b2))) return false;
    return true;
}

/// The inequality family shown to consist of atoms of w0.
inline bool is_longest_atom_seed(const Permutation& u) {
    const int n = u.size();
    for (int i = 1; i <= n; ++i) {
        const int k = n + 1 - i;
        if (i < k && !(u(k) < u(i))) return false;
        for (int j = i + 1; j < k; ++j)
            if (!(u(j) < u(k) || u(i) < u(j))) return false;
    }
    return true;
}

/// Doubles w(i) for each fixed point i of y, then standardizes.
inline Permutation w_tilde(const Permutation& w, const Permutation& y) {
    require_involution(y);
    std::vector<int> e;
    for (int i = 1; i <= w.size(); ++i) {
        e.push_back(w(i));
        if (y(i) == i) e.push_back(w(i));
    }
    return standardize(e);
}

/// Conjectural criterion: condition (a) plus σ(wγ1,...,wγk) ⪯ σ(γ1,...,γk) over all of Cyc(y).
inline bool sigma_criterion(const Permutation& w, const Permutation& x, const Permutation& y) {
    auto c = cyc(y);
    if (c.size() > 3) throw Error("sigma criterion supported for at most 3 cycles");
    for (const auto& g : c)
        if (!in_gamma(x, apply(w, g))) return false;
    if (c.empty()) return true;
    std::vector<CyclePair> wc;
    for (const auto& g : c) wc.push_back(apply(w, g));
    return prec_leq(sigma(wc), sigma(c));
}

namespace detail {

/// A(x,y) for every involution pair of S_n, indexed by involution slots.
struct TypeATables {
    TwistedSystem<SymmetricGroup> ts;
    std::unique_ptr<InvolutionTables<SymmetricGroup>> tab;
    explicit TypeATables(int n) : ts(symmetric_system(n)), tab(std::make_unique<InvolutionTables<SymmetricGroup>>(ts)) {}
};

}  // namespace detail

/// Compares a classifier f(w,x,y) with brute-force atom membership over all x, y ∈ I(S_n), w ∈ S_n.
template <class F>
Report check_classifier(int n, F&& classify, unsigned jobs = 1, std::string name = "classifier") {
    detail::TypeATables t(n);
    const auto& tab = *t.tab;
    const auto& fg = tab.group();
    Report r = detail::parallel_reports(tab.size(), jobs, [&](std::size_t kx) {
        Report part;
        auto hecke = tab.hecke_from(kx);
        const auto& x = tab.element(kx);
        std::vector<char> is_atom(fg.size());
        for (std::size_t ky = 0; ky < tab.size(); ++ky) {
            const auto& y = tab.element(ky);
            std::fill(is_atom.begin(), is_atom.end(), 0);
            for (int w : tab.minimal(hecke[ky])) is_atom[w] = 1;
            for (std::size_t i = 0; i < fg.size(); ++i) {
                ++part.pairs_checked;
                const auto& w = fg.element(static_cast<int>(i));
                const bool got = classify(w, x, y);
                if (got != static_cast<bool>(is_atom[i])) {
                    Word wx = reduced_word(t.ts.group(), x), wy = reduced_word(t.ts.group(), y);
                    part.failures.push_back({name + (got ? ": false positive" : ": false negative"), wx, wy, {},
                                             {reduced_word(t.ts.group(), w)}});
                }
            }
        }
        return part;
    });
    r.system = "A" + std::to_string(std::max(n - 1, 0)) + " " + name;
    return r;
}

/// Sweeps the conjectural σ criterion against atoms for n <= n_max, over y with at most 3 cycles.
inline Report check_sigma_conjecture(int n_max, unsigned jobs = 1) {
    if (n_max > 6) throw Error("sigma conjecture sweep supported for n <= 6");
    Report total;
    for (int n = 1; n <= n_max; ++n) {
        detail::TypeATables t(n);
        const auto& tab = *t.tab;
        const auto& fg = tab.group();
        Report r = detail::parallel_reports(tab.size(), jobs, [&](std::size_t kx) {
            Report part;
            auto hecke = tab.hecke_from(kx);
            const auto& x = tab.element(kx);
            std::vector<char> is_atom(fg.size());
            for (std::size_t ky = 0; ky < tab.size(); ++ky) {
                const auto& y = tab.element(ky);
                if (cyc(y).size() > 3) continue;
                std::fill(is_atom.begin(), is_atom.end(), 0);
                for (int w : tab.minimal(hecke[ky])) is_atom[w] = 1;
                for (std::size_t i = 0; i < fg.size(); ++i) {
                    ++part.pairs_checked;
                    const auto& w = fg.element(static_cast<int>(i));
                    if (sigma_criterion(w, x, y) != static_cast<bool>(is_atom[i]))
                        part.failures.push_back({"sigma criterion", reduced_word(t.ts.group(), x),
                                                 reduced_word(t.ts.group(), y), {},
                                                 {reduced_word(t.ts.group(), w)}});
                }
            }
            return part;
        });
        total.merge(std::move(r));
    }
    total.system = "S_n, n <= " + std::to_string(n_max);
    return total;
}

}  // namespace invwords
