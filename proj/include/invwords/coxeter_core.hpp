#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invwords/word.hpp"

namespace invwords {

/// Raised for every domain-level failure (bad input, infinite group, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// CoxeterMatrix

class CoxeterMatrix {
public:
    CoxeterMatrix() = default;

    explicit CoxeterMatrix(std::vector<std::vector<int>> entries, std::string name = {})
        : m_(std::move(entries)), name_(std::move(name)) {
        const std::size_t n = m_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (m_[i].size() != n) throw Error("invalid matrix: not square");
            if (m_[i][i] != 1) throw Error("invalid matrix: diagonal entry must be 1");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (m_[i][j] != m_[j][i]) throw Error("invalid matrix: not symmetric");
                if (i != j && m_[i][j] <= 0) throw Error("invalid matrix: infinite entries are not supported");
                if (i != j && m_[i][j] < 2) throw Error("invalid matrix: off-diagonal entry below 2");
            }
        if (name_.empty()) name_ = "rank" + std::to_string(n);
    }

    int rank() const { return static_cast<int>(m_.size()); }
    /// m(s,t) for 1-based generators.
    int operator()(int s, int t) const { return m_[s - 1][t - 1]; }
    const std::vector<std::vector<int>>& entries() const { return m_; }
    const std::string& name() const { return name_; }

    std::string to_text() const {
        std::ostringstream os;
        os << "rank " << rank() << '\n';
        for (const auto& row : m_) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
            os << '\n';
        }
        return os.str();
    }

    friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) { return a.m_ == b.m_; }

private:
    std::vector<std::vector<int>> m_;
    std::string name_;
};

namespace detail {

inline std::vector<std::vector<int>> commuting(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline void bond(std::vector<std::vector<int>>& m, int s, int t, int v) {
    m[s - 1][t - 1] = v;
    m[t - 1][s - 1] = v;
}

inline CoxeterMatrix irreducible(char type, int n, int param) {
    auto m = commuting(n);
    std::string name = std::string(1, type) + std::to_string(n);
    switch (type) {
    case 'A':
        for (int i = 1; i < n; ++i) bond(m, i, i + 1, 3);
        break;
    case 'B':
        if (n < 2) throw Error("invalid matrix: B_n needs n >= 2");
        for (int i = 1; i < n; ++i) bond(m, i, i + 1, 3);
        bond(m, n - 1, n, 4);
        break;
    case 'D':
        if (n < 3) throw Error("invalid matrix: D_n needs n >= 3");
        for (int i = 1; i < n - 1; ++i) bond(m, i, i + 1, 3);
        bond(m, n - 2, n, 3);
        break;
    case 'E':
        if (n < 6 || n > 8) throw Error("invalid matrix: E_n needs 6 <= n <= 8");
        bond(m, 1, 3, 3);
        bond(m, 2, 4, 3);
        for (int i = 3; i < n; ++i) bond(m, i, i + 1, 3);
        break;
    case 'F':
        if (n != 4) throw Error("invalid matrix: only F4 exists");
        bond(m, 1, 2, 3);
        bond(m, 2, 3, 4);
        bond(m, 3, 4, 3);
        break;
    case 'H':
        if (n < 2 || n > 4) throw Error("invalid matrix: H_n needs 2 <= n <= 4");
        bond(m, 1, 2, 5);
        for (int i = 2; i < n; ++i) bond(m, i, i + 1, 3);
        break;
    case 'I':
        if (n != 2 || param < 2) throw Error("invalid matrix: use I2(m) with m >= 2");
        bond(m, 1, 2, param);
        name = "I2(" + std::to_string(param) + ")";
        break;
    default:
        throw Error(std::string("invalid matrix: unknown type ") + type);
    }
    return CoxeterMatrix(std::move(m), name);
}

}  // namespace detail

/// Block-diagonal product; generators of `b` are renumbered after those of `a`.
inline CoxeterMatrix product(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    const int n = a.rank() + b.rank();
    auto m = detail::commuting(n);
    for (int i = 1; i <= a.rank(); ++i)
        for (int j = 1; j <= a.rank(); ++j) m[i - 1][j - 1] = a(i, j);
    for (int i = 1; i <= b.rank(); ++i)
        for (int j = 1; j <= b.rank(); ++j) m[a.rank() + i - 1][a.rank() + j - 1] = b(i, j);
    return CoxeterMatrix(std::move(m), a.name() + "x" + b.name());
}

/// Named shorthand such as "A5", "B3", "D4", "H3", "I2(7)"; products as "A1xA2".
inline CoxeterMatrix named_matrix(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw Error("invalid matrix: empty name");
    std::optional<CoxeterMatrix> acc;
    std::size_t pos = 0;
    static const std::regex part(R"(^([A-Za-z])(\d+)(\((\d+)\))?$)");
    while (pos <= s.size()) {
        std::size_t next = s.find('x', pos);
        std::string token = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::smatch mt;
        if (!std::regex_match(token, mt, part)) throw Error("invalid matrix: cannot parse '" + token + "'");
        char type = static_cast<char>(std::toupper(static_cast<unsigned char>(mt[1].str()[0])));
        int n = std::stoi(mt[2].str());
        int param = mt[4].matched ? std::stoi(mt[4].str()) : 0;
        if (type == 'I' && !mt[4].matched) throw Error("invalid matrix: use I2(m)");
        if (type != 'I' && mt[3].matched) throw Error("invalid matrix: parameter only allowed for I2(m)");
        CoxeterMatrix piece = detail::irreducible(type, n, param);
        acc = acc ? product(*acc, piece) : piece;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return *acc;
}

/// Accepts a named shorthand or the text format "rank n" followed by n rows.
inline CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string first;
    in >> first;
    if (first != "rank") return named_matrix(text);
    int n = -1;
    if (!(in >> n) || n < 0) throw Error("invalid matrix: bad rank line");
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw Error("invalid matrix: too few entries");
            if (tok == "inf" || tok == "oo" || tok == "infinity")
                throw Error("invalid matrix: infinite entries are not supported");
            try {
                std::size_t used = 0;
                m[i][j] = std::stoi(tok, &used);
                if (used != tok.size()) throw Error("invalid matrix: bad entry '" + tok + "'");
            } catch (const std::logic_error&) {
                throw Error("invalid matrix: bad entry '" + tok + "'");
            }
        }
    std::string extra;
    if (in >> extra) throw Error("invalid matrix: trailing data");
    return CoxeterMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// DiagramInvolution

/// An automorphism of order at most two of the Coxeter diagram.
class DiagramInvolution {
public:
    DiagramInvolution() = default;

    explicit DiagramInvolution(std::vector<int> images) : perm_(std::move(images)) {
        const int n = rank();
        for (int s = 1; s <= n; ++s) {
            int t = perm_[s - 1];
            if (t < 1 || t > n || perm_[t - 1] != s) throw Error("invalid twist: not an involution of the generators");
        }
    }

    static DiagramInvolution identity(int rank) {
        std::vector<int> p(rank);
        std::iota(p.begin(), p.end(), 1);
        return DiagramInvolution(std::move(p));
    }

    int rank() const { return static_cast<int>(perm_.size()); }
    int operator()(int s) const { return perm_[s - 1]; }
    const std::vector<int>& images() const { return perm_; }
    bool is_identity() const {
        for (int s = 1; s <= rank(); ++s)
            if (perm_[s - 1] != s) return false;
        return true;
    }
    bool preserves(const CoxeterMatrix& m) const {
        if (m.rank() != rank()) return false;
        for (int s = 1; s <= rank(); ++s)
            for (int t = 1; t <= rank(); ++t)
                if (m((*this)(s), (*this)(t)) != m(s, t)) return false;
        return true;
    }
    Word apply(const Word& w) const {
        Word out(w);
        for (int& x : out) x = (*this)(x);
        return out;
    }

    friend bool operator==(const DiagramInvolution& a, const DiagramInvolution& b) { return a.perm_ == b.perm_; }

private:
    std::vector<int> perm_;
};

/// All diagram automorphisms of order <= 2, identity first.
inline std::vector<DiagramInvolution> diagram_automorphisms(const CoxeterMatrix& m) {
    const int n = m.rank();
    std::vector<int> p(n + 1, 0);
    std::vector<DiagramInvolution> out;
    std::function<void(int)> go = [&](int s) {
        if (s > n) {
            out.emplace_back(std::vector<int>(p.begin() + 1, p.end()));
            return;
        }
        if (p[s]) {
            go(s + 1);
            return;
        }
        for (int t = s; t <= n; ++t) {
            if (p[t]) continue;
            p[s] = t;
            p[t] = s;
            bool ok = true;
            for (int u = 1; u <= n && ok; ++u) {
                if (!p[u]) continue;
                if (m(s, u) != m(t, p[u]) || m(t, u) != m(s, p[u])) ok = false;
            }
            if (ok) go(s + 1);
            p[s] = 0;
            p[t] = 0;
        }
    };
    go(1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.is_identity() != b.is_identity()) return a.is_identity();
        return a.images() < b.images();
    });
    return out;
}

// ---------------------------------------------------------------------------
// GroupElement and CoxeterSystem

/// A group element stored as its permutation of root indices.
/// Indices [0,N) are positive roots; index i+N is the negative of root i.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::vector<std::uint16_t> action) : a_(std::move(action)) {}

    const std::vector<std::uint16_t>& action() const { return a_; }
    std::uint16_t operator[](std::size_t i) const { return a_[i]; }
    std::size_t size() const { return a_.size(); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    std::vector<std::uint16_t> a_;
};

}  // namespace invwords

template <>
struct std::hash<invwords::GroupElement> {
    std::size_t operator()(const invwords::GroupElement& g) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        const std::size_t half = g.size() / 2;
        for (std::size_t i = 0; i < half; ++i) {
            h ^= g[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

namespace invwords {

/// Interface shared by the root-system realization and the one-line symmetric group.
template <class G>
concept CoxeterGroup = requires(const G& g, const typename G::Element& w, int s,
                                const typename G::PreparedTwist& pt, const DiagramInvolution& d) {
    { g.rank() } -> std::convertible_to<int>;
    { g.m(s, s) } -> std::convertible_to<int>;
    { g.name() } -> std::convertible_to<std::string>;
    { g.matrix() } -> std::convertible_to<CoxeterMatrix>;
    { g.identity() } -> std::same_as<typename G::Element>;
    { g.generator(s) } -> std::same_as<typename G::Element>;
    { g.multiply(w, w) } -> std::same_as<typename G::Element>;
    { g.inverse(w) } -> std::same_as<typename G::Element>;
    { g.length(w) } -> std::convertible_to<int>;
    { g.right_descent(w, s) } -> std::convertible_to<bool>;
    { g.left_descent(w, s) } -> std::convertible_to<bool>;
    { g.times_generator(w, s) } -> std::same_as<typename G::Element>;
    { g.generator_times(s, w) } -> std::same_as<typename G::Element>;
    { g.prepare_twist(d) } -> std::same_as<typename G::PreparedTwist>;
    { g.apply_twist(pt, w) } -> std::same_as<typename G::Element>;
    { g.order_if_small() } -> std::same_as<std::optional<std::size_t>>;
    { std::hash<typename G::Element>{}(w) } -> std::convertible_to<std::size_t>;
};

/// Groups up to this order are handled by full enumeration.
inline constexpr std::size_t kSmallGroupLimit = 50000;

/// Finite Coxeter group realized by its action on a real root system.
class CoxeterSystem {
public:
    using Element = GroupElement;
    using PreparedTwist = std::vector<std::uint16_t>;

    static constexpr std::size_t kDefaultRootCap = 10000;
    static constexpr double kTolerance = 1e-9;

    explicit CoxeterSystem(CoxeterMatrix matrix, std::size_t root_cap = kDefaultRootCap)
        : matrix_(std::move(matrix)) {
        if (root_cap > 60000) throw Error("root_cap too large");
        build_roots(root_cap);
        probe_order();
    }

    int rank() const { return matrix_.rank(); }
    int m(int s, int t) const { return matrix_(s, t); }
    const CoxeterMatrix& matrix() const { return matrix_; }
    std::string name() const { return matrix_.name(); }

    std::size_t positive_count() const { return npos_; }
    std::size_t root_count() const { return 2 * npos_; }
    /// Root coordinates in the basis of simple roots; negatives are implicit.
    const std::vector<std::vector<double>>& positive_roots() const { return roots_; }
    std::vector<double> root(std::size_t i) const {
        if (i < npos_) return roots_[i];
        auto r = roots_[i - npos_];
        for (double& x : r) x = -x;
        return r;
    }
    const std::vector<std::uint16_t>& generator_action(int s) const { return gens_[s - 1].action(); }

    Element identity() const {
        std::vector<std::uint16_t> a(2 * npos_);
        std::iota(a.begin(), a.end(), std::uint16_t{0});
        return Element(std::move(a));
    }
    Element generator(int s) const { return gens_[s - 1]; }

    Element multiply(const Element& w, const Element& v) const {
        check(w);
        check(v);
        std::vector<std::uint16_t> a(v.size());
        for (std::size_t j = 0; j < a.size(); ++j) a[j] = w[v[j]];
        return Element(std::move(a));
    }
    Element inverse(const Element& w) const {
        check(w);
        std::vector<std::uint16_t> a(w.size());
        for (std::size_t j = 0; j < a.size(); ++j) a[w[j]] = static_cast<std::uint16_t>(j);
        return Element(std::move(a));
    }
    int length(const Element& w) const {
        int n = 0;
        for (std::size_t j = 0; j < npos_; ++j) n += w[j] >= npos_;
        return n;
    }
    bool is_identity(const Element& w) const { return length(w) == 0; }
    bool right_descent(const Element& w, int s) const { return w[s - 1] >= npos_; }
    bool left_descent(const Element& w, int s) const {
        const std::size_t target = s - 1 + npos_;
        for (std::size_t j = 0; j < npos_; ++j)
            if (w[j] == target) return true;
        return false;
    }
    Element times_generator(const Element& w, int s) const { return multiply(w, gens_[s - 1]); }
    Element generator_times(int s, const Element& w) const { return multiply(gens_[s - 1], w); }

    /// Root permutation induced by relabeling simple roots through `d`.
    PreparedTwist prepare_twist(const DiagramInvolution& d) const {
        if (!d.preserves(matrix_)) throw Error("invalid twist: does not preserve the Coxeter matrix");
        PreparedTwist map(2 * npos_);
        for (std::size_t i = 0; i < npos_; ++i) {
            std::vector<double> v(rank());
            for (int s = 1; s <= rank(); ++s) v[d(s) - 1] = roots_[i][s - 1];
            auto j = find_root(v);
            if (!j) throw Error("invalid twist: root system not preserved");
            map[i] = static_cast<std::uint16_t>(*j);
            map[i + npos_] = static_cast<std::uint16_t>(*j + npos_);
        }
        return map;
    }
    Element apply_twist(const PreparedTwist& map, const Element& w) const {
        std::vector<std::uint16_t> a(w.size());
        for (std::size_t j = 0; j < a.size(); ++j) a[map[j]] = map[w[j]];
        return Element(std::move(a));
    }

    /// Exact order when at most kSmallGroupLimit, otherwise empty.
    std::optional<std::size_t> order_if_small() const { return small_order_; }
    std::size_t order() const;

private:
    void check(const Element& w) const {
        if (w.size() != 2 * npos_) throw Error("mismatched systems");
    }

    static std::int64_t grid(double x) { return std::llround(x * 1e4); }
    std::uint64_t bucket_key(const std::vector<std::int64_t>& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : k) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::optional<std::size_t> find_root(const std::vector<double>& v) const {
        // Probe the neighbouring grid cell for coordinates close to a rounding boundary.
        std::vector<std::int64_t> base(v.size());
        std::vector<std::size_t> ambiguous;
        for (std::size_t i = 0; i < v.size(); ++i) {
            base[i] = grid(v[i]);
            double frac = v[i] * 1e4 - std::floor(v[i] * 1e4);
            if (std::abs(frac - 0.5) < 1e-3) ambiguous.push_back(i);
        }
        const std::size_t combos = std::size_t{1} << ambiguous.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            auto k = base;
            for (std::size_t b = 0; b < ambiguous.size(); ++b) {
                if (!(mask >> b & 1)) continue;
                const std::size_t i = ambiguous[b];
                k[i] = grid(v[i]) == static_cast<std::int64_t>(std::floor(v[i] * 1e4)) ? k[i] + 1 : k[i] - 1;
            }
            auto it = buckets_.find(bucket_key(k));
            if (it == buckets_.end()) continue;
            for (std::size_t j : it->second) {
                bool same = true;
                for (std::size_t c = 0; c < v.size() && same; ++c)
                    same = std::abs(roots_[j][c] - v[c]) < kTolerance;
                if (same) return j;
            }
        }
        return std::nullopt;
    }

    std::size_t add_root(std::vector<double> v) {
        std::vector<std::int64_t> k(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) k[i] = grid(v[i]);
        roots_.push_back(std::move(v));
        buckets_[bucket_key(k)].push_back(roots_.size() - 1);
        return roots_.size() - 1;
    }

    void build_roots(std::size_t root_cap) {
        const int n = rank();
        std::vector<std::vector<double>> form(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) form[i][j] = -std::cos(std::numbers::pi / matrix_(i + 1, j + 1));

        for (int i = 0; i < n; ++i) {
            std::vector<double> e(n, 0.0);
            e[i] = 1.0;
            add_root(std::move(e));
        }
        auto reflect = [&](const std::vector<double>& v, int t) {
            double c = 0;
            for (int i = 0; i < n; ++i) c += v[i] * form[i][t];
            auto r = v;
            r[t] -= 2 * c;
            return r;
        };
        // Each simple reflection permutes the positive roots other than its own.
        for (std::size_t head = 0; head < roots_.size(); ++head) {
            for (int t = 0; t < n; ++t) {
                if (static_cast<int>(head) == t) continue;
                auto r = reflect(roots_[head], t);
                for (double& x : r)
                    if (std::abs(x) < kTolerance) x = 0.0;
                if (*std::min_element(r.begin(), r.end()) < -kTolerance)
                    throw Error("invalid matrix: reflection produced a mixed-sign root");
                if (!find_root(r)) {
                    if (2 * (roots_.size() + 1) > root_cap) throw Error("infinite group");
                    add_root(std::move(r));
                }
            }
        }
        npos_ = roots_.size();

        for (int t = 0; t < n; ++t) {
            std::vector<std::uint16_t> a(2 * npos_);
            for (std::size_t i = 0; i < npos_; ++i) {
                std::size_t j;
                if (static_cast<int>(i) == t) {
                    j = i + npos_;
                } else {
                    auto found = find_root(reflect(roots_[i], t));
                    if (!found) throw Error("root system not closed under reflections");
                    j = *found;
                }
                a[i] = static_cast<std::uint16_t>(j);
                a[i + npos_] = static_cast<std::uint16_t>(j < npos_ ? j + npos_ : j - npos_);
            }
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[a[i]] != i) throw Error("generator action is not an involution");
            gens_.emplace_back(std::move(a));
        }
    }

    /// Breadth-first enumeration capped at `limit` elements; nullopt if exceeded.
    std::optional<std::size_t> bounded_count(std::size_t limit) const {
        std::unordered_map<Element, char> seen;
        std::deque<Element> queue;
        seen.emplace(identity(), 0);
        queue.push_back(identity());
        while (!queue.empty()) {
            Element w = std::move(queue.front());
            queue.pop_front();
            for (int s = 1; s <= rank(); ++s) {
                if (right_descent(w, s)) continue;
                Element v = times_generator(w, s);
                if (seen.emplace(v, 0).second) {
                    if (seen.size() > limit) return std::nullopt;
                    queue.push_back(std::move(v));
                }
            }
        }
        return seen.size();
    }

    void probe_order() { small_order_ = bounded_count(kSmallGroupLimit); }

    CoxeterMatrix matrix_;
    std::vector<std::vector<double>> roots_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
    std::size_t npos_ = 0;
    std::vector<Element> gens_;
    std::optional<std::size_t> small_order_;
};

inline std::size_t CoxeterSystem::order() const {
    if (small_order_) return *small_order_;
    return *bounded_count(static_cast<std::size_t>(-1));
}

inline CoxeterSystem build_system(const CoxeterMatrix& matrix,
                                  std::size_t root_cap = CoxeterSystem::kDefaultRootCap) {
    return CoxeterSystem(matrix, root_cap);
}

inline CoxeterSystem build_system(std::string_view text) { return CoxeterSystem(parse_coxeter_matrix(text)); }

// ---------------------------------------------------------------------------
// Generic element algorithms

template <CoxeterGroup G>
std::vector<int> descents_right(const G& g, const typename G::Element& w) {
    std::vector<int> out;
    for (int s = 1; s <= g.rank(); ++s)
        if (g.right_descent(w, s)) out.push_back(s);
    return out;
}

template <CoxeterGroup G>
std::vector<int> descents_left(const G& g, const typename G::Element& w) {
    std::vector<int> out;
    for (int s = 1; s <= g.rank(); ++s)
        if (g.left_descent(w, s)) out.push_back(s);
    return out;
}

template <CoxeterGroup G>
typename G::Element element_from_word(const G& g, const Word& word) {
    auto w = g.identity();
    for (int s : word) {
        if (s < 1 || s > g.rank()) throw Error("generator index out of range");
        w = g.times_generator(w, s);
    }
    return w;
}

/// Lexicographically smallest reduced word, built by stripping left descents.
template <CoxeterGroup G>
Word reduced_word(const G& g, typename G::Element w) {
    Word out;
    for (int len = g.length(w); len > 0; --len) {
        int s = 1;
        while (!g.left_descent(w, s)) ++s;
        out.push_back(s);
        w = g.generator_times(s, w);
    }
    return out;
}

/// Visits every reduced word of `w` in lexicographic order; stop early by returning false.
template <CoxeterGroup G, class F>
bool for_each_reduced_word(const G& g, const typename G::Element& w, F&& visit) {
    Word prefix;
    std::function<bool(const typename G::Element&)> go = [&](const typename G::Element& v) -> bool {
        if (g.length(v) == 0) return visit(static_cast<const Word&>(prefix));
        for (int s = 1; s <= g.rank(); ++s) {
            if (!g.left_descent(v, s)) continue;
            prefix.push_back(s);
            bool more = go(g.generator_times(s, v));
            prefix.pop_back();
            if (!more) return false;
        }
        return true;
    };
    return go(w);
}

template <CoxeterGroup G>
WordSet reduced_words(const G& g, const typename G::Element& w) {
    WordSet out;
    for_each_reduced_word(g, w, [&](const Word& word) {
        out.insert(word);
        return true;
    });
    return out;
}

/// w∘s: ws if that is longer, else w.
template <CoxeterGroup G>
typename G::Element demazure_step(const G& g, const typename G::Element& w, int s) {
    return g.right_descent(w, s) ? w : g.times_generator(w, s);
}

template <CoxeterGroup G>
typename G::Element demazure_product(const G& g, typename G::Element w, const typename G::Element& v) {
    for (int s : reduced_word(g, v)) w = demazure_step(g, w, s);
    return w;
}

/// Bruhat order by the lifting recursion on left descents of `v`.
template <CoxeterGroup G>
bool bruhat_leq(const G& g, typename G::Element w, typename G::Element v) {
    for (;;) {
        const int lw = g.length(w), lv = g.length(v);
        if (lw > lv) return false;
        if (lw == lv) return w == v;
        if (lw == 0) return true;
        int s = 1;
        while (!g.left_descent(v, s)) ++s;
        v = g.generator_times(s, v);
        if (g.left_descent(w, s)) w = g.generator_times(s, w);
    }
}

template <CoxeterGroup G>
bool weak_leq_right(const G& g, const typename G::Element& w, const typename G::Element& v) {
    return g.length(v) == g.length(w) + g.length(g.multiply(g.inverse(w), v));
}

template <CoxeterGroup G>
bool weak_leq_left(const G& g, const typename G::Element& w, const typename G::Element& v) {
    return g.length(v) == g.length(w) + g.length(g.multiply(v, g.inverse(w)));
}

/// Longest element of the parabolic subgroup generated by J.
template <CoxeterGroup G>
typename G::Element longest_element(const G& g, const std::vector<int>& J) {
    auto w = g.identity();
    for (bool grew = true; grew;) {
        grew = false;
        for (int s : J) {
            if (!g.right_descent(w, s)) {
                w = g.times_generator(w, s);
                grew = true;
            }
        }
    }
    return w;
}

template <CoxeterGroup G>
typename G::Element longest_element(const G& g) {
    std::vector<int> all(g.rank());
    std::iota(all.begin(), all.end(), 1);
    return longest_element(g, all);
}

inline bool commutes_with_complement(const CoxeterMatrix& m, const std::vector<int>& J) {
    std::vector<bool> in(m.rank() + 1, false);
    for (int s : J) in[s] = true;
    for (int s = 1; s <= m.rank(); ++s)
        for (int t = 1; t <= m.rank(); ++t)
            if (in[s] && !in[t] && m(s, t) != 2) return false;
    return true;
}

/// Projection W = W_J × W_{S∖J} onto the first factor.
template <CoxeterGroup G>
typename G::Element restrict_to_component(const G& g, const typename G::Element& w, const std::vector<int>& J) {
    if (!commutes_with_complement(g.matrix(), J)) throw Error("non-commuting split");
    std::vector<bool> in(g.rank() + 1, false);
    for (int s : J) in[s] = true;
    auto out = g.identity();
    for (int s : reduced_word(g, w))
        if (in[s]) out = g.times_generator(out, s);
    return out;
}

template <CoxeterGroup G>
typename G::Element apply_twist(const G& g, const DiagramInvolution& d, const typename G::Element& w) {
    return g.apply_twist(g.prepare_twist(d), w);
}

template <CoxeterGroup G>
std::vector<DiagramInvolution> diagram_automorphisms(const G& g) {
    return diagram_automorphisms(g.matrix());
}

/// All reduced words of length-m alternating products are the two dihedral words.
inline Word alternating(int s, int t, int len) {
    Word w(len);
    for (int i = 0; i < len; ++i) w[i] = i % 2 ? t : s;
    return w;
}

// ---------------------------------------------------------------------------
// FullGroup: indexed enumeration of a small group

template <CoxeterGroup G>
class FullGroup {
public:
    using Element = typename G::Element;

    explicit FullGroup(const G& g, std::size_t limit = kSmallGroupLimit) : rank_(g.rank()) {
        elems_.push_back(g.identity());
        index_.emplace(elems_[0], 0);
        parent_.push_back(-1);
        letter_.push_back(0);
        len_.push_back(0);
        for (std::size_t head = 0; head < elems_.size(); ++head) {
            for (int s = 1; s <= rank_; ++s) {
                Element v = g.times_generator(elems_[head], s);
                if (index_.count(v)) continue;
                if (elems_.size() >= limit) throw Error("group too large to enumerate");
                index_.emplace(v, static_cast<int>(elems_.size()));
                elems_.push_back(std::move(v));
                parent_.push_back(static_cast<int>(head));
                letter_.push_back(s);
                len_.push_back(len_[head] + 1);
            }
        }
        const std::size_t n = elems_.size();
        right_.assign(n * rank_, 0);
        left_.assign(n * rank_, 0);
        rdes_.assign(n, 0);
        ldes_.assign(n, 0);
        inv_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (int s = 1; s <= rank_; ++s) {
                right_[i * rank_ + s - 1] = index_.at(g.times_generator(elems_[i], s));
                left_[i * rank_ + s - 1] = index_.at(g.generator_times(s, elems_[i]));
                if (g.right_descent(elems_[i], s)) rdes_[i] |= std::uint64_t{1} << (s - 1);
                if (g.left_descent(elems_[i], s)) ldes_[i] |= std::uint64_t{1} << (s - 1);
            }
            inv_[i] = index_.at(g.inverse(elems_[i]));
        }
    }

    int rank() const { return rank_; }
    std::size_t size() const { return elems_.size(); }
    const Element& element(int i) const { return elems_[i]; }
    const std::vector<Element>& elements() const { return elems_; }
    int index(const Element& w) const {
        auto it = index_.find(w);
        return it == index_.end() ? -1 : it->second;
    }
    int length(int i) const { return len_[i]; }
    int right(int i, int s) const { return right_[i * rank_ + s - 1]; }
    int left(int s, int i) const { return left_[i * rank_ + s - 1]; }
    bool right_descent(int i, int s) const { return rdes_[i] >> (s - 1) & 1; }
    bool left_descent(int i, int s) const { return ldes_[i] >> (s - 1) & 1; }
    std::uint64_t right_descent_mask(int i) const { return rdes_[i]; }
    std::uint64_t left_descent_mask(int i) const { return ldes_[i]; }
    int inverse(int i) const { return inv_[i]; }
    /// w = parent(w)·last_letter(w) with lengths adding; -1 for the identity.
    int parent(int i) const { return parent_[i]; }
    int last_letter(int i) const { return letter_[i]; }

private:
    int rank_;
    std::vector<Element> elems_;
    std::unordered_map<Element, int> index_;
    std::vector<int> parent_, letter_, len_, right_, left_, inv_;
    std::vector<std::uint64_t> rdes_, ldes_;
};

/// Dense Bruhat order on a FullGroup, filled by the lifting recursion.
class BruhatMatrix {
public:
    template <class FG>
    explicit BruhatMatrix(const FG& fg) : n_(fg.size()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fg.length(a) < fg.length(b); });
        for (int v : order) {
            if (fg.length(v) == 0) {
                set(0, v);
                continue;
            }
            int s = std::countr_zero(fg.left_descent_mask(v)) + 1;
            int sv = fg.left(s, v);
            for (std::size_t w = 0; w < n_; ++w) {
                int wi = static_cast<int>(w);
                if (fg.length(wi) > fg.length(v)) continue;
                int reduced = fg.left_descent(wi, s) ? fg.left(s, wi) : wi;
                if (leq(reduced, sv)) set(wi, v);
            }
        }
    }

    bool leq(int w, int v) const { return bits_[static_cast<std::size_t>(v) * words_ + w / 64] >> (w % 64) & 1; }

private:
    void set(int w, int v) { bits_[static_cast<std::size_t>(v) * words_ + w / 64] |= std::uint64_t{1} << (w % 64); }

    std::size_t n_, words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace invwords
