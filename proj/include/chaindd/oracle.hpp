// chaindd: exhaustive truth-table oracle and random expression trees.
//
// The oracle evaluates expressions pointwise over all 2^n assignments and
// shares no code with the diagram engine, so it can vouch for counting,
// support and enumeration results independently.

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "chaindd/apply.hpp"
#include "chaindd/manager.hpp"

namespace chaindd {

// Expression tree over n variables.
struct Expr {
    enum class Tag { Const0, Const1, Var, Not, And, Or, Xor, Ite };
    Tag tag;
    Level var = 0;
    std::vector<std::shared_ptr<Expr>> kids;
};

using ExprPtr = std::shared_ptr<Expr>;

inline ExprPtr expr_const(bool v) {
    return std::make_shared<Expr>(Expr{v ? Expr::Tag::Const1 : Expr::Tag::Const0, 0, {}});
}
inline ExprPtr expr_var(Level l) {
    return std::make_shared<Expr>(Expr{Expr::Tag::Var, l, {}});
}
inline ExprPtr expr_not(ExprPtr a) {
    return std::make_shared<Expr>(Expr{Expr::Tag::Not, 0, {std::move(a)}});
}
inline ExprPtr expr_bin(Expr::Tag t, ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{t, 0, {std::move(a), std::move(b)}});
}
inline ExprPtr expr_ite(ExprPtr f, ExprPtr g, ExprPtr h) {
    return std::make_shared<Expr>(Expr{Expr::Tag::Ite, 0, {std::move(f), std::move(g), std::move(h)}});
}

inline bool eval_expr(const Expr& e, const std::vector<std::uint8_t>& bits) {
    switch (e.tag) {
        case Expr::Tag::Const0: return false;
        case Expr::Tag::Const1: return true;
        case Expr::Tag::Var: return bits[e.var - 1] != 0;
        case Expr::Tag::Not: return !eval_expr(*e.kids[0], bits);
        case Expr::Tag::And: return eval_expr(*e.kids[0], bits) && eval_expr(*e.kids[1], bits);
        case Expr::Tag::Or: return eval_expr(*e.kids[0], bits) || eval_expr(*e.kids[1], bits);
        case Expr::Tag::Xor: return eval_expr(*e.kids[0], bits) != eval_expr(*e.kids[1], bits);
        case Expr::Tag::Ite:
            return eval_expr(*e.kids[0], bits) ? eval_expr(*e.kids[1], bits)
                                               : eval_expr(*e.kids[2], bits);
    }
    return false;
}

inline NodeRef build_expr(Manager& m, const Expr& e) {
    switch (e.tag) {
        case Expr::Tag::Const0: return kLeaf0;
        case Expr::Tag::Const1: return m.universe();
        case Expr::Tag::Var: return m.var(e.var);
        case Expr::Tag::Not: return complement(m, build_expr(m, *e.kids[0]));
        case Expr::Tag::And:
            return apply(m, BoolOp::And, build_expr(m, *e.kids[0]), build_expr(m, *e.kids[1]));
        case Expr::Tag::Or:
            return apply(m, BoolOp::Or, build_expr(m, *e.kids[0]), build_expr(m, *e.kids[1]));
        case Expr::Tag::Xor:
            return apply(m, BoolOp::Xor, build_expr(m, *e.kids[0]), build_expr(m, *e.kids[1]));
        case Expr::Tag::Ite:
            return ite(m, build_expr(m, *e.kids[0]), build_expr(m, *e.kids[1]),
                       build_expr(m, *e.kids[2]));
    }
    return kLeaf0;
}

inline ExprPtr random_expr(std::mt19937_64& rng, Level n, int depth) {
    std::uniform_int_distribution<int> pick(0, 99);
    std::uniform_int_distribution<Level> pv(1, n);
    const int p = pick(rng);
    if (depth <= 0 || p < 28) {
        if (p < 3) return expr_const(p < 1);
        return expr_var(pv(rng));
    }
    if (p < 40) return expr_not(random_expr(rng, n, depth - 1));
    if (p < 60) return expr_bin(Expr::Tag::And, random_expr(rng, n, depth - 1),
                                random_expr(rng, n, depth - 1));
    if (p < 80) return expr_bin(Expr::Tag::Or, random_expr(rng, n, depth - 1),
                                random_expr(rng, n, depth - 1));
    if (p < 92) return expr_bin(Expr::Tag::Xor, random_expr(rng, n, depth - 1),
                                random_expr(rng, n, depth - 1));
    return expr_ite(random_expr(rng, n, depth - 1), random_expr(rng, n, depth - 1),
                    random_expr(rng, n, depth - 1));
}

// Explicit 2^n function table, n capped to keep memory sane.
class TruthOracle {
public:
    static constexpr Level kMaxVars = 20;

    TruthOracle(Level n, const Expr& e) : n_(n) {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("TruthOracle: n out of range");
        table_.resize(std::size_t{1} << n);
        std::vector<std::uint8_t> bits(n);
        for (std::size_t idx = 0; idx < table_.size(); ++idx) {
            for (Level l = 1; l <= n; ++l) bits[l - 1] = (idx >> (n - l)) & 1;
            table_[idx] = eval_expr(e, bits);
        }
    }

    Level var_count() const { return n_; }

    bool value(std::size_t idx) const { return table_[idx]; }

    bool value(const std::vector<std::uint8_t>& bits) const { return table_[index_of(bits)]; }

    std::size_t index_of(const std::vector<std::uint8_t>& bits) const {
        std::size_t idx = 0;
        for (Level l = 1; l <= n_; ++l) idx = (idx << 1) | (bits[l - 1] ? 1 : 0);
        return idx;
    }

    std::uint64_t popcount() const {
        std::uint64_t c = 0;
        for (bool b : table_) c += b;
        return c;
    }

    // Levels whose two cofactors differ somewhere.
    std::vector<Level> essential_vars() const {
        std::vector<Level> out;
        for (Level l = 1; l <= n_; ++l) {
            const std::size_t stride = std::size_t{1} << (n_ - l);
            bool depends = false;
            for (std::size_t idx = 0; idx < table_.size() && !depends; ++idx) {
                if ((idx >> (n_ - l)) & 1) continue;
                if (table_[idx] != table_[idx | stride]) depends = true;
            }
            if (depends) out.push_back(l);
        }
        return out;
    }

    // All true rows in lexicographic minterm order.
    std::vector<Minterm> minterms() const {
        std::vector<Minterm> out;
        for (std::size_t idx = 0; idx < table_.size(); ++idx) {
            if (!table_[idx]) continue;
            Minterm s(n_, '0');
            for (Level l = 1; l <= n_; ++l)
                if ((idx >> (n_ - l)) & 1) s[l - 1] = '1';
            out.push_back(std::move(s));
        }
        return out;
    }

    // Checks a diagram against the table point by point.
    bool matches(const Manager& m, NodeRef root) const {
        if (m.var_count() != n_) return false;
        std::vector<std::uint8_t> bits(n_);
        for (std::size_t idx = 0; idx < table_.size(); ++idx) {
            for (Level l = 1; l <= n_; ++l) bits[l - 1] = (idx >> (n_ - l)) & 1;
            if (m.eval(root, bits) != table_[idx]) return false;
        }
        return true;
    }

private:
    Level n_;
    std::vector<bool> table_;
};

}  // namespace chaindd
