#include <catch2/catch.hpp>

#include <random>

#include "chaindd/analysis.hpp"
#include "chaindd/apply.hpp"
#include "chaindd/oracle.hpp"

using namespace chaindd;

namespace {

constexpr DiagramKind kAllKinds[] = {DiagramKind::BDD, DiagramKind::ZDD, DiagramKind::CBDD,
                                     DiagramKind::CZDD};

// Two distinct placeholder subfunctions whose tops sit just below `top`.
NodeRef probe(Manager& m, Level top, int which) {
    NodeRef f = m.make_node(m.var_count(), m.var_count(), kLeaf0, kLeaf1);
    for (Level j = m.var_count(); j-- > top + 1;)
        f = which ? m.make_node(j, j, f, kLeaf1) : m.make_node(j, j, kLeaf0, f);
    return f;
}

}  // namespace

TEST_CASE("split_levels") {
    SECTION("CBDD identical spans") {
        Manager m(DiagramKind::CBDD, 10);
        NodeRef f = probe(m, 5, 0), g = probe(m, 5, 1);
        NodeRef a = m.make_node(1, 5, f, g);
        NodeRef args[] = {a, a};
        SplitContext ctx = split_levels(m, args);
        CHECK(ctx.top == 1);
        CHECK(ctx.bot == 5);
    }
    SECTION("CBDD staggered spans stop above the second top") {
        // min(5, 3-1) = 2 by direct evaluation of the splitting rule.
        Manager m(DiagramKind::CBDD, 10);
        NodeRef a = m.make_node(1, 5, probe(m, 5, 0), probe(m, 5, 1));
        NodeRef b = m.make_node(3, 7, probe(m, 7, 0), probe(m, 7, 1));
        NodeRef args[] = {a, b};
        SplitContext ctx = split_levels(m, args);
        CHECK(ctx.top == 1);
        CHECK(ctx.bot == 2);
    }
    SECTION("CZDD leaf 0 argument does not constrain the span") {
        Manager m(DiagramKind::CZDD, 10);
        NodeRef a = m.make_node(2, 6, probe(m, 6, 0), probe(m, 6, 1));
        NodeRef args[] = {a, kLeaf0};
        SplitContext ctx = split_levels(m, args);
        CHECK(ctx.top == 2);
        CHECK(ctx.bot == 6);
    }
    SECTION("CZDD non-minimal top pins the span to the top") {
        Manager m(DiagramKind::CZDD, 10);
        NodeRef a = m.make_node(1, 4, probe(m, 4, 0), probe(m, 4, 1));
        NodeRef b = m.make_node(2, 9, probe(m, 9, 0), probe(m, 9, 1));
        NodeRef args[] = {a, b};
        SplitContext ctx = split_levels(m, args);
        CHECK(ctx.top == 1);
        CHECK(ctx.bot == 1);
    }
    SECTION("unchained kinds degenerate to the minimum top") {
        Manager m(DiagramKind::BDD, 10);
        NodeRef a = m.var(2), b = m.var(5);
        NodeRef args[] = {a, b};
        SplitContext ctx = split_levels(m, args);
        CHECK(ctx.top == 2);
        CHECK(ctx.bot == 2);
    }
    SECTION("all-leaf argument list is a caller bug") {
        Manager m(DiagramKind::CBDD, 10);
        NodeRef args[] = {kLeaf0, kLeaf1};
        CHECK_THROWS_AS(split_levels(m, args), std::logic_error);
    }
}

TEST_CASE("cofactor") {
    SECTION("CBDD exact span exposes the children") {
        Manager m(DiagramKind::CBDD, 10);
        NodeRef f = probe(m, 3, 0), g = probe(m, 3, 1);
        NodeRef v = m.make_node(3, 3, f, g);
        auto [lo, hi] = cofactor(m, v, SplitContext{3, 3});
        CHECK(lo == f);
        CHECK(hi == g);
    }
    SECTION("CBDD partial span keeps the rest of the or-chain") {
        Manager m(DiagramKind::CBDD, 10);
        NodeRef f = probe(m, 5, 0), g = probe(m, 5, 1);
        NodeRef v = m.make_node(1, 5, f, g);
        auto [lo, hi] = cofactor(m, v, SplitContext{1, 2});
        CHECK(hi == g);
        CHECK(m.level_top(lo) == 3);
        CHECK(m.level_bot(lo) == 5);
        CHECK(m.node(lo).lo == f);
        CHECK(m.node(lo).hi == g);
    }
    SECTION("CZDD below the top: lo keeps the node, hi is leaf 0") {
        Manager m(DiagramKind::CZDD, 10);
        NodeRef v = m.make_node(4, 4, probe(m, 4, 0), probe(m, 4, 1));
        auto [lo, hi] = cofactor(m, v, SplitContext{2, 2});
        CHECK(lo == v);
        CHECK(hi == kLeaf0);
    }
    SECTION("CZDD partial span keeps the don't-care chain for both cofactors") {
        Manager m(DiagramKind::CZDD, 10);
        NodeRef f = probe(m, 5, 0), g = probe(m, 5, 1);
        NodeRef v = m.make_node(1, 5, f, g);
        auto [lo, hi] = cofactor(m, v, SplitContext{1, 2});
        CHECK(lo == hi);
        CHECK(m.level_top(lo) == 3);
        CHECK(m.level_bot(lo) == 5);
    }
    SECTION("leaves behave as case 1") {
        Manager mb(DiagramKind::CBDD, 10);
        auto [bl, bh] = cofactor(mb, kLeaf1, SplitContext{2, 4});
        CHECK(bl == kLeaf1);
        CHECK(bh == kLeaf1);
        Manager mz(DiagramKind::CZDD, 10);
        auto [zl, zh] = cofactor(mz, kLeaf1, SplitContext{2, 4});
        CHECK(zl == kLeaf1);
        CHECK(zh == kLeaf0);
        auto [ol, oh] = cofactor(mz, kLeaf0, SplitContext{2, 4});
        CHECK(ol == kLeaf0);
        CHECK(oh == kLeaf0);
    }
}

TEST_CASE("combine") {
    SECTION("CBDD identical cofactors disappear") {
        Manager m(DiagramKind::CBDD, 10);
        NodeRef x = probe(m, 4, 1);
        CHECK(combine(m, SplitContext{2, 4}, x, x) == x);
    }
    SECTION("CBDD chain absorption on exact adjacency") {
        Manager m(DiagramKind::CBDD, 10);
        NodeRef w = probe(m, 6, 0), y = probe(m, 6, 1);
        NodeRef u0 = m.make_node(3, 6, w, y);
        NodeRef r = combine(m, SplitContext{1, 2}, u0, y);
        CHECK(m.level_top(r) == 1);
        CHECK(m.level_bot(r) == 6);
        CHECK(m.node(r).lo == w);
        CHECK(m.node(r).hi == y);
    }
    SECTION("CZDD zero hi with a spanned context leaves a don't-care chain") {
        Manager m(DiagramKind::CZDD, 10);
        NodeRef x = probe(m, 3, 1);
        NodeRef r = combine(m, SplitContext{1, 3}, x, kLeaf0);
        CHECK(m.level_top(r) == 1);
        CHECK(m.level_bot(r) == 2);
        CHECK(m.node(r).lo == x);
        CHECK(m.node(r).hi == x);
    }
    SECTION("CZDD plain zero suppression") {
        Manager m(DiagramKind::CZDD, 10);
        NodeRef x = probe(m, 2, 1);
        CHECK(combine(m, SplitContext{2, 2}, x, kLeaf0) == x);
    }
}

TEST_CASE("apply terminal cases") {
    for (DiagramKind k : kAllKinds) {
        Manager m(k, 6);
        NodeRef f = apply(m, BoolOp::Or, m.var(2), m.var(4));
        CHECK(apply(m, BoolOp::Xor, f, f) == kLeaf0);
        CHECK(apply(m, BoolOp::And, f, kLeaf0) == kLeaf0);
        CHECK(apply(m, BoolOp::Or, f, kLeaf0) == f);
        CHECK(apply(m, BoolOp::Xor, f, kLeaf0) == f);
        CHECK(apply(m, BoolOp::And, f, f) == f);
        CHECK(ite(m, kLeaf0, m.var(1), f) == f);
        if (is_or_chain_kind(k)) {
            CHECK(apply(m, BoolOp::And, f, kLeaf1) == f);
            CHECK(apply(m, BoolOp::Or, f, kLeaf1) == kLeaf1);
            CHECK(ite(m, f, kLeaf1, kLeaf0) == f);
        }
    }
}

TEST_CASE("apply agrees with the truth-table oracle") {
    std::mt19937_64 rng(90125);
    for (int round = 0; round < 30; ++round) {
        const Level n = 6;
        ExprPtr e = random_expr(rng, n, 6);
        TruthOracle oracle(n, *e);
        for (DiagramKind k : kAllKinds) {
            Manager m(k, n);
            NodeRef f = build_expr(m, *e);
            REQUIRE(oracle.matches(m, f));
        }
    }
}

TEST_CASE("ite(f, g, g) is g for random operands") {
    std::mt19937_64 rng(55501);
    const Level n = 6;
    for (DiagramKind k : kAllKinds) {
        Manager m(k, n);
        for (int i = 0; i < 10; ++i) {
            NodeRef f = build_expr(m, *random_expr(rng, n, 5));
            ExprPtr ge = random_expr(rng, n, 5);
            NodeRef g = build_expr(m, *ge);
            NodeRef r = ite(m, f, g, g);
            CHECK(r == g);
            TruthOracle oracle(n, *ge);
            CHECK(oracle.matches(m, r));
        }
    }
}

TEST_CASE("set S of the worked example counts five solutions") {
    // S = {0001, 0011, 0101, 0111, 1000} over four variables.
    for (DiagramKind k : kAllKinds) {
        Manager m(k, 4);
        auto cube = [&](const char* bits) {
            NodeRef acc = m.universe();
            for (Level l = 1; l <= 4; ++l) {
                NodeRef lit = m.var(l);
                if (bits[l - 1] == '0') lit = complement(m, lit);
                acc = apply(m, BoolOp::And, acc, lit);
            }
            return acc;
        };
        NodeRef s = kLeaf0;
        for (const char* mt : {"0001", "0011", "0101", "0111", "1000"})
            s = apply(m, BoolOp::Or, s, cube(mt));
        CHECK(count_solutions(m, s).to_u64() == 5);
        const std::vector<Minterm> expected{"0001", "0011", "0101", "0111", "1000"};
        CHECK(enumerate_minterms(m, s, 10) == expected);
    }
}

TEST_CASE("kind agreement on random expressions") {
    std::mt19937_64 rng(777);
    const Level n = 8;
    for (int round = 0; round < 10; ++round) {
        ExprPtr e = random_expr(rng, n, 7);
        std::vector<Minterm> reference;
        bool first = true;
        for (DiagramKind k : kAllKinds) {
            Manager m(k, n);
            NodeRef f = build_expr(m, *e);
            auto mts = enumerate_minterms(m, f, std::uint64_t(1) << n);
            if (first) {
                reference = mts;
                first = false;
            } else {
                CHECK(mts == reference);
            }
        }
    }
}

TEST_CASE("cache soundness") {
    std::mt19937_64 rng(31337);
    for (DiagramKind k : kAllKinds) {
        Manager m(k, 8);
        ExprPtr e = random_expr(rng, 8, 7);
        NodeRef with_cache = build_expr(m, *e);
        m.cache_enable(false);
        m.cache_clear();
        NodeRef without_cache = build_expr(m, *e);
        CHECK(with_cache == without_cache);
        m.cache_enable(true);
    }
}

TEST_CASE("cache lookups are counted once per non-terminal step") {
    Manager m(DiagramKind::BDD, 4);
    NodeRef x1 = m.var(1), x2 = m.var(2);
    const std::uint64_t before = m.stats().cache_lookups;
    apply(m, BoolOp::And, x1, kLeaf1);  // terminal: no lookup
    CHECK(m.stats().cache_lookups == before);
    apply(m, BoolOp::And, x1, x2);
    CHECK(m.stats().cache_lookups > before);
}

TEST_CASE("apply recursion depth stays within n + 2") {
    std::mt19937_64 rng(6502);
    for (DiagramKind k : kAllKinds) {
        const Level n = 12;
        Manager m(k, n);
        for (int i = 0; i < 8; ++i) build_expr(m, *random_expr(rng, n, 8));
        CHECK(m.stats().max_apply_depth <= n + 2);
    }
}

TEST_CASE("handles reject cross-manager arguments") {
    Manager a(DiagramKind::BDD, 4);
    Manager b(DiagramKind::BDD, 4);
    FunctionHandle fa(a, a.var(1));
    FunctionHandle fb(b, b.var(2));
    CHECK_THROWS_AS(apply(BoolOp::And, fa, fb), std::invalid_argument);
    FunctionHandle ga(a, a.var(2));
    FunctionHandle r = apply(BoolOp::And, fa, ga);
    CHECK(count_solutions(a, r.root()).to_u64() == 4);
}
