// chaindd: parameterized families separating the chained representations.
//
// Family A: replicated two-node boxes whose edges all carry zero runs.  Its
// ZDD and CZDD have 2k+3 nodes over 3k+2 variables while the canonical CBDD
// needs 6k+2 nodes, one chain node per implicit zero run.
//
// Family B: a spine of single-level nodes whose hi edges skip one level.  The
// BDD has 2k+3 nodes over 2k+1 variables; in the CZDD every spine node below
// the second is duplicated (with and without an incoming don't-care link),
// giving 4k+3 nodes.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chaindd/analysis.hpp"
#include "chaindd/manager.hpp"

namespace chaindd {

// Kind-independent DAG description of a Boolean function.  Children either
// index another entry or name a leaf; edges follow the declared skip
// interpretation.
struct FunctionDesc {
    enum : int { kLo = -1, kHi = -2 };  // leaf sentinels: leaf 0 / leaf 1

    enum class Skip { DontCare, Zero };

    struct Entry {
        Level level;
        int lo;
        int hi;
    };

    Level n = 0;
    Skip skip = Skip::Zero;
    std::vector<Entry> nodes;
    int root = kLo;
};

namespace detail {
inline Level desc_level(const FunctionDesc& d, int idx) {
    return idx < 0 ? d.n + 1 : d.nodes[std::size_t(idx)].level;
}
}  // namespace detail

// Zero-chain worst case for CBDD compression (family A).
inline FunctionDesc gen_worst_case_zdd_vs_cbdd(unsigned k) {
    if (k < 1) throw std::invalid_argument("gen_worst_case_zdd_vs_cbdd: k >= 1");
    FunctionDesc d;
    d.n = 3 * k + 2;
    d.skip = FunctionDesc::Skip::Zero;
    // Index layout: 0 = head, then P_i at 2i+1 and Q_i at 2i+2.
    const auto P = [](unsigned i) { return int(2 * i + 1); };
    const auto Q = [](unsigned i) { return int(2 * i + 2); };
    d.nodes.push_back({1, P(0), Q(0)});
    for (unsigned i = 0; i + 1 < k; ++i) {
        d.nodes.push_back({Level(3 * i + 3), P(i + 1), Q(i + 1)});
        d.nodes.push_back({Level(3 * i + 4), Q(i + 1), P(i + 1)});
    }
    d.nodes.push_back({Level(3 * k), FunctionDesc::kLo, Q(k - 1)});
    d.nodes.push_back({Level(3 * k + 1), FunctionDesc::kLo, FunctionDesc::kHi});
    d.root = 0;
    return d;
}

// Don't-care worst case for CZDD compression (family B).
inline FunctionDesc gen_worst_case_bdd_vs_czdd(unsigned k) {
    if (k < 1) throw std::invalid_argument("gen_worst_case_bdd_vs_czdd: k >= 1");
    FunctionDesc d;
    const Level n = 2 * k + 1;
    d.n = n;
    d.skip = FunctionDesc::Skip::DontCare;
    for (Level j = 1; j + 2 <= n; ++j)
        d.nodes.push_back({j, int(j), int(j + 1)});  // V_j -> (V_{j+1}, V_{j+2})
    d.nodes.push_back({n - 1, int(n - 1), FunctionDesc::kHi});
    d.nodes.push_back({n, FunctionDesc::kLo, FunctionDesc::kHi});
    d.root = 0;
    return d;
}

// Expected canonical node counts (leaves included).
inline std::uint64_t worst_case_a_zdd_nodes(unsigned k) { return 2ull * k + 3; }
inline std::uint64_t worst_case_a_cbdd_nodes(unsigned k) { return 6ull * k + 2; }
inline std::uint64_t worst_case_b_bdd_nodes(unsigned k) { return 2ull * k + 3; }
inline std::uint64_t worst_case_b_czdd_nodes(unsigned k) { return 4ull * k + 3; }

// Builds the described function in a manager of any kind.
inline NodeRef build_function(const FunctionDesc& d, Manager& m) {
    if (m.var_count() != d.n) throw std::invalid_argument("build_function: wrong variable count");
    const bool zero = d.skip == FunctionDesc::Skip::Zero;
    std::unordered_map<int, NodeRef> memo;

    auto fill = [&](NodeRef h, Level from, Level to) {
        return zero ? fill_zero(m, h, from, to) : fill_dc(m, h, from, to);
    };
    std::function<NodeRef(int)> image = [&](int idx) -> NodeRef {
        if (idx == FunctionDesc::kLo) return kLeaf0;
        if (idx == FunctionDesc::kHi) return kLeaf1;
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
        const auto& e = d.nodes[std::size_t(idx)];
        NodeRef lo = fill(image(e.lo), e.level + 1, detail::desc_level(d, e.lo));
        NodeRef hi = fill(image(e.hi), e.level + 1, detail::desc_level(d, e.hi));
        NodeRef r = decide(m, e.level, lo, hi);
        memo.emplace(idx, r);
        return r;
    };
    NodeRef r = image(d.root);
    return fill(r, 1, detail::desc_level(d, d.root));
}

// Direct evaluation of a description; independent of the diagram engine.
inline bool eval_function(const FunctionDesc& d, const std::vector<std::uint8_t>& bits) {
    if (bits.size() != d.n) throw std::invalid_argument("eval_function: bad assignment");
    const bool zero = d.skip == FunctionDesc::Skip::Zero;
    int cur = d.root;
    Level pos = 1;
    for (;;) {
        const Level t = detail::desc_level(d, cur);
        if (zero) {
            for (Level j = pos; j < t; ++j)
                if (bits[j - 1]) return false;
        }
        if (cur < 0) return cur == FunctionDesc::kHi;
        const auto& e = d.nodes[std::size_t(cur)];
        cur = bits[e.level - 1] ? e.hi : e.lo;
        pos = e.level + 1;
    }
}

}  // namespace chaindd
