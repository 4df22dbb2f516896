#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "invwords/braid.hpp"
#include "invwords/orders.hpp"
#include "invwords/type_a.hpp"

using namespace invwords;

namespace {

TwistedSystem<CoxeterSystem> untwisted(const std::string& name) { return TwistedSystem(build_system(name)); }

TwistedSystem<CoxeterSystem> reversed_twist(const std::string& name) {
    auto g = build_system(name);
    std::vector<int> p;
    for (int s = g.rank(); s >= 1; --s) p.push_back(s);
    return TwistedSystem(g, DiagramInvolution(p));
}

// Oracle: all words over [r] of length len, filtered by ℓ̂ of their δ̂ image.
template <class G>
WordSet involution_words_by_filter(const TwistedSystem<G>& ts, const typename G::Element& x, int len) {
    WordSet out;
    Word w(len, 1);
    const int r = ts.rank();
    for (;;) {
        if (ts.delta_hat(w) == x && ts.hat_length(x) == len) out.insert(w);
        int k = len - 1;
        while (k >= 0 && w[k] == r) w[k--] = 1;
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

}  // namespace

TEST(Braid, ClassExamples) {
    auto a2 = build_system("A2");
    EXPECT_EQ(braid_class(a2, {1}), (WordSet{{1}}));
    EXPECT_EQ(braid_class(a2, {1, 2, 1}), (WordSet{{1, 2, 1}, {2, 1, 2}}));
    auto b2 = build_system("B2");
    EXPECT_EQ(braid_class(b2, {1, 2, 1, 2}), (WordSet{{1, 2, 1, 2}, {2, 1, 2, 1}}));
    EXPECT_THROW(braid_class(a2, {3}), Error);
}

TEST(Braid, ClassesAreReducedWords) {
    for (auto name : {"A3", "B3", "H3", "A1xA2", "I2(5)"}) {
        auto g = build_system(name);
        FullGroup<CoxeterSystem> fg(g);
        for (const auto& w : fg.elements()) EXPECT_EQ(braid_class(g, reduced_word(g, w)), reduced_words(g, w)) << name;
    }
}

TEST(Braid, MStarFormula) {
    EXPECT_EQ(m_star(3, PairAction::Swaps), 2);
    EXPECT_EQ(m_star(4, PairAction::Fixes), 3);
    EXPECT_EQ(m_star(4, PairAction::Swaps), 2);
    EXPECT_EQ(m_star(5, PairAction::Moves), 5);
    EXPECT_THROW(m_star(1, PairAction::Fixes), Error);
    // against ℓ̂ of the longest element of a dihedral group
    for (int m = 2; m <= 8; ++m) {
        auto g = build_system("I2(" + std::to_string(m) + ")");
        auto w0 = longest_element(g);
        TwistedSystem<CoxeterSystem> fixed(g), swapped(g, DiagramInvolution({2, 1}));
        EXPECT_EQ(m_star(m, PairAction::Fixes), fixed.hat_length(w0)) << m;
        EXPECT_EQ(m_star(m, PairAction::Swaps), swapped.hat_length(w0)) << m;
        EXPECT_LE(m_star(m, PairAction::Swaps), m);
        EXPECT_LE(m_star(m, PairAction::Fixes), m);
    }
}

TEST(Braid, ThetaPrefix) {
    auto a2 = untwisted("A2");
    auto id = theta_prefix(a2, {});
    EXPECT_EQ(id.action(1, 2), PairAction::Fixes);
    auto th = theta_prefix(a2, {1});
    EXPECT_EQ(th.u(), a2.group().generator(1));
    EXPECT_NE(th(a2.group().generator(2)), a2.group().generator(1));
    EXPECT_EQ(th.action(1, 2), PairAction::Moves);
    auto a3 = reversed_twist("A3");
    auto t3 = theta_prefix(a3, {});
    EXPECT_EQ(t3(a3.group().generator(1)), a3.group().generator(3));
    EXPECT_EQ(t3.action(1, 3), PairAction::Swaps);
    EXPECT_EQ(t3.m(1, 3), 1);
}

TEST(InvolutionBraid, Examples) {
    auto a2 = untwisted("A2");
    EXPECT_EQ(involution_braid_class(a2, {1, 2}), (WordSet{{1, 2}, {2, 1}}));
    auto x = a2.delta_hat({1, 2});
    EXPECT_EQ(involution_words(a2, a2.identity(), x), (WordSet{{1, 2}, {2, 1}}));
    EXPECT_EQ(theta_prefix(a2, {}).m(1, 2), 2);
    auto b2 = untwisted("B2");
    auto w0 = longest_element(b2.group());
    auto all = involution_words(b2, b2.identity(), w0);
    for (auto& w : all) EXPECT_EQ(involution_braid_class(b2, w), all);
}

TEST(InvolutionBraid, ClassesAreInvolutionWords) {
    for (const auto& ts : {untwisted("A3"), reversed_twist("A3"), untwisted("B3"), untwisted("A1xA2"), reversed_twist("A4")}) {
        auto r = check_involution_braid(ts);
        EXPECT_TRUE(r.ok()) << ts.name() << " " << r.summary();
    }
}

TEST(InvolutionBraid, MovesPreserveTarget) {
    // every word of length <= 5
    for (auto ts : {untwisted("A3"), reversed_twist("A3"), untwisted("B3")}) {
        InvolutionBraidMoves<CoxeterSystem> moves(ts);
        for (int len = 1; len <= 5; ++len) {
            Word w(len, 1);
            for (;;) {
                const auto target = ts.delta_hat(w);
                const bool involution_word = ts.hat_length(target) == len;
                moves(w, [&](Word v) {
                    if (involution_word) EXPECT_EQ(ts.delta_hat(v), target) << to_string(w) << to_string(v);
                });
                // ordinary braid moves between involution words are involution braid moves
                braid_moves(ts.group(), w, [&](Word v) {
                    if (!involution_word || ts.hat_length(ts.delta_hat(v)) != len) return;
                    bool found = false;
                    moves(w, [&](Word u) { found = found || u == v; });
                    EXPECT_TRUE(found) << to_string(w) << to_string(v);
                });
                int k = len - 1;
                while (k >= 0 && w[k] == ts.rank()) w[k--] = 1;
                if (k < 0) break;
                ++w[k];
            }
        }
    }
}

TEST(InvolutionBraid, OracleWords) {
    auto ts = reversed_twist("A3");
    for (const auto& x : enumerate_twisted(ts)) {
        auto words = involution_words(ts, ts.identity(), x);
        EXPECT_EQ(words, involution_words_by_filter(ts, x, ts.hat_length(x)));
    }
}

TEST(InvolutionBraid, EmptyPrefixRelationsFailForTwistedS4) {
    auto ts = reversed_twist("A3");
    auto w0 = longest_element(ts.group());
    auto all = involution_words(ts, ts.identity(), w0);
    auto cls = empty_prefix_class(ts, *all.begin());
    EXPECT_NE(cls, all);
    EXPECT_LT(cls.size(), all.size());
    // untwisted S4: the same relations suffice
    auto u = untwisted("A3");
    auto all_u = involution_words(u, u.identity(), longest_element(u.group()));
    EXPECT_EQ(empty_prefix_class(u, *all_u.begin()), all_u);
}

TEST(HuZhang, Examples) {
    SymmetricGroup s3(3);
    EXPECT_EQ(hu_zhang_class(s3, {1, 2}), (WordSet{{1, 2}, {2, 1}}));
    EXPECT_THROW(hu_zhang_class(build_system("B3"), {1}), Error);
    EXPECT_THROW(fpf_class_words(SymmetricGroup(5), {1}), Error);
}

TEST(HuZhang, SpansInvolutionWords) {
    for (int n = 1; n <= 6; ++n) {
        auto ts = symmetric_system(n);
        for (auto& x : involutions(n)) {
            auto words = involution_words(ts, ts.identity(), x);
            EXPECT_EQ(hu_zhang_class(ts.group(), *words.begin()), words) << x.to_string();
        }
    }
    for (int n = 2; n <= 6; n += 2) {
        auto ts = symmetric_system(n);
        for (auto& x : fpf_involutions(n)) {
            auto words = involution_words(ts, fpf_base(n), x);
            EXPECT_EQ(fpf_class_words(ts.group(), *words.begin()), words) << x.to_string();
        }
    }
}

TEST(HuZhang, BraidClosureInsideInvolutionWords) {
    auto ts = symmetric_system(6);
    auto x = parse_cycles("(1,4)(2,3)(5,6)", 6);
    auto base = parse_cycles("(1,2)(5,6)", 6);
    auto words = involution_words(ts, base, x);
    ASSERT_FALSE(words.empty());
    for (auto& w : words)
        for (auto& v : braid_class(ts.group(), w)) EXPECT_TRUE(words.count(v)) << to_string(v);
}

TEST(FullyCommutative, Examples) {
    SymmetricGroup s3(3);
    EXPECT_TRUE(is_fully_commutative(s3, Permutation::identity(3)));
    EXPECT_FALSE(is_fully_commutative(s3, Permutation::longest(3)));
}

TEST(FullyCommutative, Is321AvoidingInTypeA) {
    for (int n = 1; n <= 6; ++n) {
        SymmetricGroup sg(n);
        FullGroup<SymmetricGroup> fg(sg);
        for (const auto& w : fg.elements()) EXPECT_EQ(is_fully_commutative(sg, w), is_321_avoiding(w)) << w.to_string();
    }
}

TEST(FullyCommutative, MatchesReducedWordDefinition) {
    // oracle: scan every reduced word
    for (auto name : {"B3", "H3", "D4"}) {
        auto g = build_system(name);
        FullGroup<CoxeterSystem> fg(g);
        for (const auto& w : fg.elements()) {
            bool fc = true;
            for_each_reduced_word(g, w, [&](const Word& word) {
                for (std::size_t i = 0; i + 1 < word.size(); ++i) {
                    int s = word[i], t = word[i + 1];
                    if (s == t || g.m(s, t) <= 2 || i + g.m(s, t) > word.size()) continue;
                    bool alt = true;
                    for (int k = 0; k < g.m(s, t); ++k) alt = alt && word[i + k] == (k % 2 ? t : s);
                    if (alt) fc = false;
                }
                return fc;
            });
            EXPECT_EQ(is_fully_commutative(g, w), fc) << name << to_string(reduced_word(g, w));
        }
    }
}

TEST(FullyCommutative, AtomsOfFullyCommutativeInvolutions) {
    for (auto ts : {untwisted("A4"), untwisted("B3"), untwisted("H3"), reversed_twist("A2"), reversed_twist("I2(5)"),
                    reversed_twist("I2(6)")}) {
        auto r = check_fc_atoms(ts);
        EXPECT_GT(r.pairs_checked, 0u);
        EXPECT_TRUE(r.ok()) << ts.name() << " " << r.summary();
    }
}

TEST(FullyCommutative, HypothesisWitness) {
    auto g = build_system("A1xA1");
    TwistedSystem<CoxeterSystem> ts(g, DiagramInvolution({2, 1}));
    EXPECT_THROW(check_fc_atoms(ts), Error);
    EXPECT_THROW(check_fc_atoms(reversed_twist("A3")), Error);
    auto x = g.multiply(g.generator(1), g.generator(2));
    EXPECT_TRUE(ts.is_twisted_involution(x));
    EXPECT_TRUE(is_fully_commutative(g, x));
    auto a = atoms(ts, ts.identity(), x);
    EXPECT_EQ(std::set(a.begin(), a.end()), (std::set{g.generator(1), g.generator(2)}));
}
