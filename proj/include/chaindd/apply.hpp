// chaindd: the recursive apply engine for all four kinds.
//
// A step of apply on argument nodes v_i = <t_i,b_i>(f_i,g_i):
//   1. terminal cases
//   2. computed-cache probe (this is the operation-count metric)
//   3. choose splitting levels, cofactor each argument, recurse on the lo
//      and hi cofactors, combine the two results
//   4. store in the cache
// Only splitting, cofactoring and combining differ between the or-chain
// kinds (BDD/CBDD) and the zero-chain kinds (ZDD/CZDD); the unchained kinds
// are the degenerate case t_i == b_i of the same formulas.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "chaindd/manager.hpp"

namespace chaindd {

enum class BoolOp : std::uint8_t { And = 0, Or = 1, Xor = 2, Ite = 3 };

inline const char* op_name(BoolOp op) {
    switch (op) {
        case BoolOp::And: return "and";
        case BoolOp::Or: return "or";
        case BoolOp::Xor: return "xor";
        case BoolOp::Ite: return "ite";
    }
    return "?";
}

inline int op_arity(BoolOp op) { return op == BoolOp::Ite ? 3 : 2; }

// Splitting levels for one recursion step, derived from the argument nodes.
struct SplitContext {
    Level top;
    Level bot;
};

inline SplitContext split_levels(const Manager& m, std::span<const NodeRef> args) {
    const Level leaf = m.leaf_level();
    Level t = leaf;
    for (NodeRef v : args) t = std::min(t, m.level_top(v));
    if (t == leaf) throw std::logic_error("split_levels: all arguments are leaves");

    Level b = leaf;
    if (is_or_chain_kind(m.kind())) {
        for (NodeRef v : args) {
            const Level ti = m.level_top(v);
            Level c;
            if (ti == t) c = m.level_bot(v);
            else if (ti == leaf) c = ti;
            else c = ti - 1;
            b = std::min(b, c);
        }
    } else {
        for (NodeRef v : args) {
            const Level ti = m.level_top(v);
            Level c;
            if (ti == t) c = m.level_bot(v);
            else if (v == kLeaf0) c = leaf;
            else c = t;
            b = std::min(b, c);
        }
    }
    return SplitContext{t, b};
}

// Lo and hi cofactors of one argument with respect to the splitting levels.
// Case 3 constructs the node spanning the remainder of the encoded chain.
inline std::pair<NodeRef, NodeRef> cofactor(Manager& m, NodeRef v, SplitContext ctx) {
    const Level ti = m.level_top(v);
    if (!m.is_leaf(v) && ti < ctx.top)
        throw std::logic_error("cofactor: argument above splitting level");

    if (is_or_chain_kind(m.kind())) {
        if (ctx.bot < ti) return {v, v};  // skipped levels are don't-cares
        const Node nd = m.node(v);        // by value: make_node may grow the arena
        if (ctx.bot == nd.bot) return {nd.lo, nd.hi};
        return {m.make_node(ctx.bot + 1, nd.bot, nd.lo, nd.hi), nd.hi};
    }
    if (ctx.bot < ti) return {v, kLeaf0};  // skipped levels are zeros
    const Node nd = m.node(v);
    if (ctx.bot == nd.bot) return {nd.lo, nd.hi};
    NodeRef w = m.make_node(ctx.bot + 1, nd.bot, nd.lo, nd.hi);
    return {w, w};
}

// Result-node formation.  make_node performs the chain absorption and
// don't-care/zero-suppression rewrites, so both kind families reduce to a
// single constructor call once the identical-cofactor case is handled.
inline NodeRef combine(Manager& m, SplitContext ctx, NodeRef u0, NodeRef u1) {
    if (is_or_chain_kind(m.kind()) && u0 == u1) return u0;
    return m.make_node(ctx.top, ctx.bot, u0, u1);
}

namespace detail {

inline std::optional<NodeRef> apply_terminal(const Manager& m, BoolOp op,
                                             std::span<const NodeRef> a) {
    const bool bdd_like = is_or_chain_kind(m.kind());
    switch (op) {
        case BoolOp::And:
            if (a[0] == kLeaf0 || a[1] == kLeaf0) return kLeaf0;
            if (a[0] == a[1]) return a[0];
            // Leaf 1 is the constant-true function only without zero chains.
            if (bdd_like && a[0] == kLeaf1) return a[1];
            if (bdd_like && a[1] == kLeaf1) return a[0];
            break;
        case BoolOp::Or:
            if (a[0] == kLeaf0) return a[1];
            if (a[1] == kLeaf0) return a[0];
            if (a[0] == a[1]) return a[0];
            if (bdd_like && (a[0] == kLeaf1 || a[1] == kLeaf1)) return kLeaf1;
            break;
        case BoolOp::Xor:
            if (a[0] == a[1]) return kLeaf0;
            if (a[0] == kLeaf0) return a[1];
            if (a[1] == kLeaf0) return a[0];
            break;
        case BoolOp::Ite:
            if (a[0] == kLeaf0) return a[2];
            if (a[1] == a[2]) return a[1];
            if (bdd_like) {
                if (a[0] == kLeaf1) return a[1];
                if (a[1] == kLeaf1 && a[2] == kLeaf0) return a[0];
            } else if (a[0] == kLeaf1 && m.is_leaf(a[1]) && m.is_leaf(a[2])) {
                // Under zero-chain semantics leaf 1 is {00...0}; with leaf
                // branches the else-branch contributes nothing.
                return a[1];
            }
            break;
    }
    return std::nullopt;
}

inline NodeRef apply_rec(Manager& m, BoolOp op, std::array<NodeRef, 3> args, int k,
                         std::uint32_t depth) {
    if (depth > m.stats().max_apply_depth) m.stats().max_apply_depth = depth;
    if (auto t = apply_terminal(m, op, std::span<const NodeRef>{args.data(), std::size_t(k)}))
        return *t;

    // Commutative operands are ordered to raise the cache hit rate.
    if (op != BoolOp::Ite && args[0] > args[1]) std::swap(args[0], args[1]);

    const auto tag = static_cast<std::uint8_t>(op);
    if (auto hit = m.cache_probe(tag, args[0], args[1], args[2])) return *hit;

    const SplitContext ctx = split_levels(m, std::span<const NodeRef>{args.data(), std::size_t(k)});
    std::array<NodeRef, 3> lo = args, hi = args;
    for (int i = 0; i < k; ++i) {
        auto [l, h] = cofactor(m, args[i], ctx);
        lo[i] = l;
        hi[i] = h;
    }
    const NodeRef u0 = apply_rec(m, op, lo, k, depth + 1);
    const NodeRef u1 = apply_rec(m, op, hi, k, depth + 1);
    const NodeRef r = combine(m, ctx, u0, u1);
    m.cache_store(tag, args[0], args[1], args[2], r);
    return r;
}

}  // namespace detail

inline NodeRef apply(Manager& m, BoolOp op, std::span<const NodeRef> args) {
    if (static_cast<int>(args.size()) != op_arity(op))
        throw std::invalid_argument("apply: arity mismatch");
    std::array<NodeRef, 3> a{kLeaf0, kLeaf0, kLeaf0};
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!m.is_live(args[i])) throw std::invalid_argument("apply: dead argument");
        a[i] = args[i];
    }
    return detail::apply_rec(m, op, a, op_arity(op), 1);
}

inline NodeRef apply(Manager& m, BoolOp op, NodeRef f, NodeRef g) {
    const NodeRef args[2] = {f, g};
    return apply(m, op, args);
}

inline NodeRef ite(Manager& m, NodeRef f, NodeRef g, NodeRef h) {
    const NodeRef args[3] = {f, g, h};
    return apply(m, BoolOp::Ite, args);
}

// Complement as xor with the constant-true function of the manager's kind.
inline NodeRef complement(Manager& m, NodeRef f) {
    return apply(m, BoolOp::Xor, f, m.universe());
}

// Handle-level wrappers; these are the only place where a cross-manager
// mistake can be detected.
inline FunctionHandle apply(BoolOp op, const FunctionHandle& f, const FunctionHandle& g) {
    if (f.manager() != g.manager())
        throw std::invalid_argument("apply: arguments belong to different managers");
    Manager& m = *f.manager();
    return FunctionHandle(m, apply(m, op, f.root(), g.root()));
}

inline FunctionHandle ite(const FunctionHandle& f, const FunctionHandle& g,
                          const FunctionHandle& h) {
    if (f.manager() != g.manager() || f.manager() != h.manager())
        throw std::invalid_argument("ite: arguments belong to different managers");
    Manager& m = *f.manager();
    return FunctionHandle(m, ite(m, f.root(), g.root(), h.root()));
}

}  // namespace chaindd
