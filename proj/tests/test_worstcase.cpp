#include <catch2/catch.hpp>

#include <random>

#include "chaindd/analysis.hpp"
#include "chaindd/worstcase.hpp"

using namespace chaindd;

namespace {
constexpr DiagramKind kAllKinds[] = {DiagramKind::BDD, DiagramKind::ZDD, DiagramKind::CBDD,
                                     DiagramKind::CZDD};
}

TEST_CASE("family A: zero chains implicit in the ZDD cost the CBDD a factor") {
    SECTION("closed-form counts at small k") {
        struct Row { unsigned k; std::uint64_t zdd, cbdd; };
        for (auto [k, zdd_nodes, cbdd_nodes] : {Row{1, 5, 8}, Row{2, 7, 14}, Row{3, 9, 20}}) {
            FunctionDesc d = gen_worst_case_zdd_vs_cbdd(k);
            CHECK(d.n == 3 * k + 2);
            Manager mz(DiagramKind::ZDD, d.n);
            CHECK(mz.node_count(build_function(d, mz)) == zdd_nodes);
            Manager mc(DiagramKind::CZDD, d.n);
            CHECK(mc.node_count(build_function(d, mc)) == zdd_nodes);
            Manager mb(DiagramKind::CBDD, d.n);
            CHECK(mb.node_count(build_function(d, mb)) == cbdd_nodes);
        }
    }
    SECTION("all kinds represent the same set (k = 2, n = 8)") {
        FunctionDesc d = gen_worst_case_zdd_vs_cbdd(2);
        REQUIRE(d.n == 8);
        std::vector<std::uint8_t> bits(d.n);
        for (DiagramKind k : kAllKinds) {
            Manager m(k, d.n);
            NodeRef f = build_function(d, m);
            for (std::uint32_t a = 0; a < (1u << d.n); ++a) {
                for (Level l = 1; l <= d.n; ++l) bits[l - 1] = (a >> (d.n - l)) & 1;
                REQUIRE(m.eval(f, bits) == eval_function(d, bits));
            }
            m.check_invariants();
        }
    }
    SECTION("k = 0 is rejected") {
        CHECK_THROWS_AS(gen_worst_case_zdd_vs_cbdd(0), std::invalid_argument);
    }
}

TEST_CASE("family B: don't-care chains force CZDD node duplication") {
    SECTION("closed-form counts at small k") {
        struct Row { unsigned k; std::uint64_t bdd, czdd; };
        for (auto [k, bdd_nodes, czdd_nodes] : {Row{1, 5, 7}, Row{2, 7, 11}, Row{3, 9, 15}}) {
            FunctionDesc d = gen_worst_case_bdd_vs_czdd(k);
            CHECK(d.n == 2 * k + 1);
            Manager mb(DiagramKind::BDD, d.n);
            CHECK(mb.node_count(build_function(d, mb)) == bdd_nodes);
            Manager mz(DiagramKind::CZDD, d.n);
            CHECK(mz.node_count(build_function(d, mz)) == czdd_nodes);
        }
    }
    SECTION("the ratio stays under two (k = 2)") {
        FunctionDesc d = gen_worst_case_bdd_vs_czdd(2);
        Manager mb(DiagramKind::BDD, d.n);
        Manager mz(DiagramKind::CZDD, d.n);
        const double ratio = double(mz.node_count(build_function(d, mz))) /
                             double(mb.node_count(build_function(d, mb)));
        CHECK(ratio <= 2.0);
    }
    SECTION("described semantics match the built diagrams (k = 3)") {
        FunctionDesc d = gen_worst_case_bdd_vs_czdd(3);
        std::vector<std::uint8_t> bits(d.n);
        for (DiagramKind k : kAllKinds) {
            Manager m(k, d.n);
            NodeRef f = build_function(d, m);
            for (std::uint32_t a = 0; a < (1u << d.n); ++a) {
                for (Level l = 1; l <= d.n; ++l) bits[l - 1] = (a >> (d.n - l)) & 1;
                REQUIRE(m.eval(f, bits) == eval_function(d, bits));
            }
        }
    }
}

TEST_CASE("worst-case families keep the closed forms out to k = 12") {
    for (unsigned k = 1; k <= 12; ++k) {
        FunctionDesc a = gen_worst_case_zdd_vs_cbdd(k);
        Manager az(DiagramKind::ZDD, a.n);
        Manager ac(DiagramKind::CBDD, a.n);
        CHECK(az.node_count(build_function(a, az)) == worst_case_a_zdd_nodes(k));
        CHECK(ac.node_count(build_function(a, ac)) == worst_case_a_cbdd_nodes(k));

        FunctionDesc b = gen_worst_case_bdd_vs_czdd(k);
        Manager bb(DiagramKind::BDD, b.n);
        Manager bz(DiagramKind::CZDD, b.n);
        CHECK(bb.node_count(build_function(b, bb)) == worst_case_b_bdd_nodes(k));
        CHECK(bz.node_count(build_function(b, bz)) == worst_case_b_czdd_nodes(k));
    }
}
