// chaindd: built-in oracle-equivalence suite backing the `selftest`
// subcommand.  A compact version of the checks the test suite runs in full.

#pragma once

#include <iostream>
#include <random>
#include <set>
#include <string>

#include "chaindd/analysis.hpp"
#include "chaindd/apply.hpp"
#include "chaindd/dict.hpp"
#include "chaindd/oracle.hpp"
#include "chaindd/queens.hpp"
#include "chaindd/worstcase.hpp"

namespace chaindd {

inline bool selftest(std::ostream& log) {
    static constexpr DiagramKind kKinds[] = {DiagramKind::BDD, DiagramKind::ZDD,
                                             DiagramKind::CBDD, DiagramKind::CZDD};
    bool ok = true;
    auto report = [&](const std::string& name, bool pass) {
        log << (pass ? "  ok  " : " FAIL ") << name << "\n";
        ok = ok && pass;
    };

    // Random expressions against the exhaustive oracle, all four kinds.
    {
        std::mt19937_64 rng(20240811);
        bool pass = true;
        for (Level n : {Level(6), Level(8)}) {
            for (int i = 0; i < 25 && pass; ++i) {
                ExprPtr e = random_expr(rng, n, 6);
                TruthOracle oracle(n, *e);
                for (DiagramKind k : kKinds) {
                    Manager m(k, n);
                    NodeRef f = build_expr(m, *e);
                    m.check_invariants();
                    if (count_solutions(m, f).to_u64() != oracle.popcount()) pass = false;
                    if (support(m, f) != oracle.essential_vars()) pass = false;
                    if (enumerate_minterms(m, f, std::uint64_t(1) << n) != oracle.minterms())
                        pass = false;
                    if (!pass) break;
                }
            }
        }
        report("oracle equivalence (count/support/enumerate)", pass);
    }

    // Canonicity under reordered construction and with the cache disabled.
    {
        std::mt19937_64 rng(7);
        bool pass = true;
        for (int i = 0; i < 100 && pass; ++i) {
            ExprPtr a = random_expr(rng, 8, 5);
            ExprPtr b = random_expr(rng, 8, 5);
            for (DiagramKind k : kKinds) {
                Manager m(k, 8);
                NodeRef left = apply(m, BoolOp::Or, build_expr(m, *a), build_expr(m, *b));
                NodeRef right = apply(m, BoolOp::Or, build_expr(m, *b), build_expr(m, *a));
                if (left != right) pass = false;
                m.cache_enable(false);
                m.cache_clear();
                NodeRef again = apply(m, BoolOp::Or, build_expr(m, *a), build_expr(m, *b));
                if (again != left) pass = false;
                m.cache_enable(true);
            }
        }
        report("canonicity (operation order, cache off)", pass);
    }

    // Conversion preserves the function and lands on the canonical node.
    {
        std::mt19937_64 rng(4242);
        bool pass = true;
        for (int i = 0; i < 40 && pass; ++i) {
            ExprPtr e = random_expr(rng, 8, 6);
            Manager bdd(DiagramKind::BDD, 8);
            NodeRef direct = build_expr(bdd, *e);
            Manager czdd(DiagramKind::CZDD, 8);
            NodeRef mid = convert(bdd, direct, czdd);
            if (czdd.node_count(mid) > 2 * bdd.node_count(direct) + 2) pass = false;
            if (convert(czdd, mid, bdd) != direct) pass = false;
        }
        report("conversion round trip", pass);
    }

    // Worst-case families hit their closed-form node counts.
    {
        bool pass = true;
        for (unsigned k = 1; k <= 10 && pass; ++k) {
            FunctionDesc a = gen_worst_case_zdd_vs_cbdd(k);
            for (DiagramKind dk : {DiagramKind::ZDD, DiagramKind::CZDD}) {
                Manager m(dk, a.n);
                if (m.node_count(build_function(a, m)) != worst_case_a_zdd_nodes(k)) pass = false;
            }
            Manager mc(DiagramKind::CBDD, a.n);
            if (mc.node_count(build_function(a, mc)) != worst_case_a_cbdd_nodes(k)) pass = false;

            FunctionDesc b = gen_worst_case_bdd_vs_czdd(k);
            Manager mb(DiagramKind::BDD, b.n);
            if (mb.node_count(build_function(b, mb)) != worst_case_b_bdd_nodes(k)) pass = false;
            Manager mz(DiagramKind::CZDD, b.n);
            if (mz.node_count(build_function(b, mz)) != worst_case_b_czdd_nodes(k)) pass = false;
        }
        report("worst-case family node counts", pass);
    }

    // Queens solution counts match backtracking, every kind.
    {
        bool pass = true;
        for (std::uint32_t n : {4u, 5u, 6u}) {
            const std::uint64_t expected = queens_oracle_count(n);
            for (DiagramKind k : kKinds) {
                QueensConfig cfg{n, BoardEncoding::OneHot, RowOrder::TopDown};
                Manager m(k, cfg.total_vars());
                QueensResult r = build_queens(m, cfg);
                if (count_solutions(m, r.root).to_u64() != expected) pass = false;
            }
        }
        report("queens counts vs backtracking", pass);
    }

    // Dictionary round trip and the ZDD == CZDD size identity.
    {
        auto words = make_synthetic_words(250, 99);
        SymbolEncoding enc = SymbolEncoding::compact(SymbolMode::OneHot, words);
        std::uint64_t zdd_nodes = 0, czdd_nodes = 0;
        bool pass = true;
        for (DiagramKind k : kKinds) {
            Manager m(k, enc.total_vars());
            NodeRef f = encode_wordlist(m, words, enc);
            auto minterms = enumerate_minterms(m, f, words.size() + 1);
            std::set<std::string> decoded;
            for (const auto& mt : minterms) {
                auto w = decode_minterm(mt, enc);
                if (!w) pass = false;
                else decoded.insert(*w);
            }
            if (decoded != std::set<std::string>(words.begin(), words.end())) pass = false;
            if (k == DiagramKind::ZDD) zdd_nodes = m.node_count(f);
            if (k == DiagramKind::CZDD) czdd_nodes = m.node_count(f);
        }
        if (zdd_nodes != czdd_nodes) pass = false;
        report("dictionary round trip, zdd == czdd", pass);
    }

    log << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok;
}

}  // namespace chaindd
