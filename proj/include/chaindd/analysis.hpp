// chaindd: function-level queries and cross-kind conversion.
//
// Counting, support and minterm enumeration must honor the kind's reading of
// level-skipping edges: a skipped level contributes a factor of two for the
// or-chain kinds and is pinned to zero for the zero-chain kinds.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chaindd/apply.hpp"
#include "chaindd/bigint.hpp"
#include "chaindd/manager.hpp"

namespace chaindd {

// Exact number of length-n minterms in the represented set.  Iterative
// post-order: graphs can be chain-shaped and as deep as the level limit.
inline BigUint count_solutions(const Manager& m, NodeRef root) {
    if (!m.is_live(root)) throw std::invalid_argument("count_solutions: stale root");
    const bool or_chain = is_or_chain_kind(m.kind());
    std::unordered_map<NodeRef, BigUint> memo;
    memo.emplace(kLeaf0, BigUint{});
    memo.emplace(kLeaf1, BigUint{1});

    // C(v) counts suffixes over levels top(v)..n.
    std::vector<NodeRef> stack{root};
    while (!stack.empty()) {
        const NodeRef v = stack.back();
        if (memo.count(v)) {
            stack.pop_back();
            continue;
        }
        const Node& nd = m.node(v);
        const auto lo_it = memo.find(nd.lo);
        const auto hi_it = memo.find(nd.hi);
        if (lo_it == memo.end() || hi_it == memo.end()) {
            if (lo_it == memo.end()) stack.push_back(nd.lo);
            if (hi_it == memo.end()) stack.push_back(nd.hi);
            continue;
        }
        BigUint r;
        if (or_chain) {
            // Sum over the b-t+1 hi-exits plus the all-zero lo path; a
            // skipped level below contributes a factor of two.
            BigUint cf = lo_it->second.shl(m.level_top(nd.lo) - nd.bot - 1);
            BigUint cg = hi_it->second.shl(m.level_top(nd.hi) - nd.bot - 1);
            r = cf + cg.shl(nd.bot - nd.top + 1) - cg;
        } else {
            // Don't-care span duplicates the bottom-level branch.
            BigUint sum = lo_it->second + hi_it->second;
            r = sum.shl(nd.bot - nd.top);
        }
        memo.emplace(v, std::move(r));
        stack.pop_back();
    }
    BigUint total = memo.at(root);
    if (or_chain) total.shl_inplace(m.level_top(root) - 1);
    return total;
}

// Set of levels the function depends on semantically (levels whose two
// cofactors differ).  Don't-care spans of CZDD nodes are not in the support;
// every level of a CBDD or-chain span is.
inline std::vector<Level> support(const Manager& m, NodeRef root) {
    if (!m.is_live(root)) throw std::invalid_argument("support: stale root");
    std::vector<bool> in(m.var_count() + 1, false);
    std::vector<NodeRef> stack{root};
    std::unordered_map<NodeRef, bool> seen;
    const bool zero_skip = is_zero_chain_kind(m.kind());

    if (zero_skip && root != kLeaf0) {
        for (Level j = 1; j < m.level_top(root); ++j) in[j] = true;
    }
    while (!stack.empty()) {
        NodeRef v = stack.back();
        stack.pop_back();
        if (m.is_leaf(v) || seen[v]) continue;
        seen[v] = true;
        const Node& nd = m.node(v);
        if (zero_skip) {
            if (nd.lo != nd.hi) in[nd.bot] = true;
            for (NodeRef c : {nd.lo, nd.hi}) {
                if (c == kLeaf0) continue;
                for (Level j = nd.bot + 1; j < m.level_top(c); ++j) in[j] = true;
            }
        } else {
            for (Level j = nd.top; j <= nd.bot; ++j) in[j] = true;
        }
        stack.push_back(nd.lo);
        stack.push_back(nd.hi);
    }
    std::vector<Level> out;
    for (Level j = 1; j <= m.var_count(); ++j)
        if (in[j]) out.push_back(j);
    return out;
}

// Lexicographically ordered minterms, up to limit.
inline std::vector<Minterm> enumerate_minterms(const Manager& m, NodeRef root,
                                               std::uint64_t limit) {
    if (!m.is_live(root)) throw std::invalid_argument("enumerate_minterms: stale root");
    std::vector<Minterm> out;
    if (limit == 0 || root == kLeaf0) return out;
    const Level n = m.var_count();
    const bool zero_skip = is_zero_chain_kind(m.kind());
    Minterm cur(n, '0');

    // Fills cur from position pos (1-based); returns false once limit is hit.
    std::function<bool(NodeRef, Level)> walk = [&](NodeRef v, Level pos) -> bool {
        if (v == kLeaf0) return true;
        const Level t = m.level_top(v);
        if (pos < t) {
            cur[pos - 1] = '0';
            if (!walk(v, pos + 1)) return false;
            if (!zero_skip) {
                cur[pos - 1] = '1';
                if (!walk(v, pos + 1)) return false;
            }
            cur[pos - 1] = '0';
            return true;
        }
        if (v == kLeaf1) {
            out.push_back(cur);
            return out.size() < limit;
        }
        const Node& nd = m.node(v);
        switch (m.kind()) {
            case DiagramKind::BDD:
            case DiagramKind::ZDD: {
                cur[t - 1] = '0';
                if (!walk(nd.lo, t + 1)) return false;
                cur[t - 1] = '1';
                if (!walk(nd.hi, t + 1)) return false;
                cur[t - 1] = '0';
                return true;
            }
            case DiagramKind::CBDD: {
                // Or-chain: zeros continue downward, the first one exits.
                std::function<bool(Level)> chain = [&](Level i) -> bool {
                    if (i > nd.bot) return walk(nd.lo, nd.bot + 1);
                    cur[i - 1] = '0';
                    if (!chain(i + 1)) return false;
                    cur[i - 1] = '1';
                    if (!walk(nd.hi, i + 1)) return false;
                    cur[i - 1] = '0';
                    return true;
                };
                return chain(t);
            }
            case DiagramKind::CZDD: {
                // Free span t..b-1, decision at b.
                std::function<bool(Level)> span = [&](Level i) -> bool {
                    if (i == nd.bot) {
                        cur[i - 1] = '0';
                        if (!walk(nd.lo, i + 1)) return false;
                        cur[i - 1] = '1';
                        if (!walk(nd.hi, i + 1)) return false;
                        cur[i - 1] = '0';
                        return true;
                    }
                    cur[i - 1] = '0';
                    if (!span(i + 1)) return false;
                    cur[i - 1] = '1';
                    if (!span(i + 1)) return false;
                    cur[i - 1] = '0';
                    return true;
                };
                return span(t);
            }
        }
        return true;
    };
    walk(root, 1);
    return out;
}

// ---- explicit fills --------------------------------------------------------
//
// fill_dc / fill_zero turn "levels from..to-1 are don't-care / zero, then h"
// into the manager's native representation.  Whenever the requested fill is
// the kind's own skip semantics they are the identity.

inline NodeRef fill_dc(Manager& m, NodeRef h, Level from, Level to) {
    if (from >= to || h == kLeaf0) return h;
    switch (m.kind()) {
        case DiagramKind::BDD:
        case DiagramKind::CBDD:
            return h;
        case DiagramKind::ZDD:
            for (Level j = to; j-- > from;) h = m.make_node(j, j, h, h);
            return h;
        case DiagramKind::CZDD:
            return m.make_node(from, to - 1, h, h);
    }
    return h;
}

inline NodeRef fill_zero(Manager& m, NodeRef h, Level from, Level to) {
    if (from >= to || h == kLeaf0) return h;
    switch (m.kind()) {
        case DiagramKind::ZDD:
        case DiagramKind::CZDD:
            return h;
        case DiagramKind::BDD:
            for (Level j = to; j-- > from;) h = m.make_node(j, j, h, kLeaf0);
            return h;
        case DiagramKind::CBDD:
            return m.make_node(from, to - 1, h, kLeaf0);
    }
    return h;
}

// Single-level decision with children that start anywhere below l.
inline NodeRef decide(Manager& m, Level l, NodeRef lo, NodeRef hi) {
    return m.make_node(l, l, lo, hi);
}

// ---- conversion ------------------------------------------------------------

// Rebuilds the same minterm set in a destination manager of any kind.  The
// result is fully reduced because it is produced through make_node.
inline NodeRef convert(const Manager& src, NodeRef root, Manager& dst) {
    if (src.var_count() != dst.var_count())
        throw std::invalid_argument("convert: variable counts differ");
    if (!src.is_live(root)) throw std::invalid_argument("convert: stale root");
    const bool src_or_chain = is_or_chain_kind(src.kind());

    // memo[v] is the image of v as a suffix function over levels
    // top_src(v)..n.  Iterative post-order, as in count_solutions.
    std::unordered_map<NodeRef, NodeRef> memo;
    memo.emplace(kLeaf0, kLeaf0);
    memo.emplace(kLeaf1, kLeaf1);
    std::vector<NodeRef> stack{root};
    while (!stack.empty()) {
        const NodeRef v = stack.back();
        if (memo.count(v)) {
            stack.pop_back();
            continue;
        }
        const Node nd = src.node(v);
        const auto lo_it = memo.find(nd.lo);
        const auto hi_it = memo.find(nd.hi);
        if (lo_it == memo.end() || hi_it == memo.end()) {
            if (lo_it == memo.end()) stack.push_back(nd.lo);
            if (hi_it == memo.end()) stack.push_back(nd.hi);
            continue;
        }
        NodeRef r;
        if (src_or_chain) {
            NodeRef f = fill_dc(dst, lo_it->second, nd.bot + 1, src.level_top(nd.lo));
            const NodeRef gi = hi_it->second;
            const Level gtop = src.level_top(nd.hi);
            r = decide(dst, nd.bot, f, fill_dc(dst, gi, nd.bot + 1, gtop));
            for (Level i = nd.bot; i-- > nd.top;)
                r = decide(dst, i, r, fill_dc(dst, gi, i + 1, gtop));
        } else {
            NodeRef f = fill_zero(dst, lo_it->second, nd.bot + 1, src.level_top(nd.lo));
            NodeRef g = fill_zero(dst, hi_it->second, nd.bot + 1, src.level_top(nd.hi));
            r = decide(dst, nd.bot, f, g);
            r = fill_dc(dst, r, nd.top, nd.bot);
        }
        memo.emplace(v, r);
        stack.pop_back();
    }

    NodeRef r = memo.at(root);
    if (src_or_chain) return fill_dc(dst, r, 1, src.level_top(root));
    return fill_zero(dst, r, 1, src.level_top(root));
}

}  // namespace chaindd
