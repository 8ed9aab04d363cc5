// chaindd: node storage, hash consing and reduction rules.
//
// One Manager owns one universe of nodes of a fixed kind over a fixed number
// of variables.  make_node is the single canonicalization chokepoint: the
// kind's reduction rules (including the chain-merge rules) are applied as
// nodes are requested, so non-canonical nodes are never materialized.

#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chaindd/diagram.hpp"

namespace chaindd {

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t node_hash(Level t, Level b, NodeRef lo, NodeRef hi) {
    const std::uint64_t a = (std::uint64_t(t) << 32) | b;
    const std::uint64_t c = (std::uint64_t(lo) << 32) | hi;
    return mix64(a) ^ mix64(c + 0x6a09e667f3bcc909ull);
}

}  // namespace detail

class Manager {
public:
    struct Options {
        std::size_t cache_entries = std::size_t{1} << 18;  // rounded up to a power of two
    };

    struct Stats {
        std::uint64_t cache_lookups = 0;   // apply steps that consult the computed cache
        std::uint64_t cache_hits = 0;
        std::uint64_t nodes_created = 0;   // unique-table insertions
        std::uint64_t peak_live = 2;       // sampled at every node creation, never reset
        std::uint64_t gc_reclaimed = 0;
        std::uint32_t max_apply_depth = 0;
    };

    static constexpr Level kMaxVariables = 1u << 20;  // comfortably past the 16-bit index split

    Manager(DiagramKind kind, Level n) : Manager(kind, n, Options()) {}

    Manager(DiagramKind kind, Level n, Options opt)
        : kind_(kind), n_(n) {
        if (n_ < 1 || n_ > kMaxVariables)
            throw std::invalid_argument("Manager: variable count out of range");
        nodes_.resize(2);
        nodes_[kLeaf0] = Node{n_ + 1, n_ + 1, kLeaf0, kLeaf0};
        nodes_[kLeaf1] = Node{n_ + 1, n_ + 1, kLeaf1, kLeaf1};
        std::size_t entries = 1;
        while (entries < opt.cache_entries) entries <<= 1;
        cache_.resize(entries);
        table_.assign(kTableMin, kUnused);
        live_ = 2;
    }

    Manager(const Manager&) = delete;
    Manager& operator=(const Manager&) = delete;

    DiagramKind kind() const { return kind_; }
    Level var_count() const { return n_; }
    Level leaf_level() const { return n_ + 1; }

    bool is_leaf(NodeRef r) const { return r <= kLeaf1; }

    bool is_live(NodeRef r) const {
        return r < nodes_.size() && nodes_[r].top != 0;
    }

    const Node& node(NodeRef r) const {
        assert(is_live(r));
        return nodes_[r];
    }

    Level level_top(NodeRef r) const { return node(r).top; }
    Level level_bot(NodeRef r) const { return node(r).bot; }

    std::size_t live_count() const { return live_; }

    const Stats& stats() const { return stats_; }
    Stats& stats() { return stats_; }

    // Canonicalizing constructor.  Returns the canonical node for the
    // requested <t,b>(lo,hi) semantics under this manager's kind.
    NodeRef make_node(Level t, Level b, NodeRef lo, NodeRef hi) {
        if (t < 1 || t > b || b > n_)
            throw std::invalid_argument("make_node: level pair out of range");
        if (!is_live(lo) || !is_live(hi))
            throw std::invalid_argument("make_node: dead child");
        if (level_top(lo) <= b || level_top(hi) <= b)
            throw std::invalid_argument("make_node: child level must exceed bot");

        switch (kind_) {
            case DiagramKind::BDD:
                if (t != b) throw std::invalid_argument("make_node: BDD nodes span one level");
                if (lo == hi) return lo;
                break;

            case DiagramKind::CBDD:
                // <t,b>(f,f) collapses level by level to f.
                if (lo == hi) return lo;
                // Or-chain merge: u=<t,m>(v,g) over v=<m+1,b>(f,g) becomes <t,b>(f,g).
                if (!is_leaf(lo) && nodes_[lo].top == b + 1 && nodes_[lo].hi == hi)
                    return cons(t, nodes_[lo].bot, nodes_[lo].lo, hi);
                break;

            case DiagramKind::ZDD:
                if (t != b) throw std::invalid_argument("make_node: ZDD nodes span one level");
                if (hi == kLeaf0) return lo;
                break;

            case DiagramKind::CZDD:
                if (hi == kLeaf0) {
                    // Zero-suppression; a spanned node keeps its don't-care
                    // prefix as an explicit <t,b-1>(lo,lo) chain.
                    if (lo == kLeaf0) return kLeaf0;
                    if (t == b) return lo;
                    return make_node(t, b - 1, lo, lo);
                }
                // Don't-care chain merge: u=<t,m>(v,v) over v=<m+1,b>(f,g) becomes <t,b>(f,g).
                if (lo == hi && !is_leaf(lo) && nodes_[lo].top == b + 1)
                    return cons(t, nodes_[lo].bot, nodes_[lo].lo, nodes_[lo].hi);
                break;
        }
        return cons(t, b, lo, hi);
    }

    // Single-variable function x_l under this kind's semantics.
    NodeRef var(Level l) {
        if (l < 1 || l > n_) throw std::invalid_argument("var: level out of range");
        NodeRef cur = kLeaf1;
        if (is_zero_chain_kind(kind_)) {
            for (Level j = n_; j > l; --j) cur = make_node(j, j, cur, cur);
        }
        cur = make_node(l, l, kLeaf0, cur);
        if (is_zero_chain_kind(kind_)) {
            for (Level j = l; j-- > 1;) cur = make_node(j, j, cur, cur);
        }
        return cur;
    }

    NodeRef constant(bool v) const { return v ? kLeaf1 : kLeaf0; }

    // Constant-true over all n variables.  For zero-chain kinds this is the
    // full don't-care chain; chaining stores it in O(1) nodes.
    NodeRef universe() {
        if (is_or_chain_kind(kind_)) return kLeaf1;
        NodeRef cur = kLeaf1;
        for (Level j = n_; j >= 1; --j) cur = make_node(j, j, cur, cur);
        return cur;
    }

    // ---- pinning ----------------------------------------------------------

    void pin(NodeRef r) {
        if (!is_live(r)) throw std::invalid_argument("pin: dead node");
        ++pins_[r];
    }

    void unpin(NodeRef r) {
        auto it = pins_.find(r);
        assert(it != pins_.end());
        if (--it->second == 0) pins_.erase(it);
    }

    // ---- garbage collection ------------------------------------------------

    // Mark-and-sweep over the unique table.  Live nodes keep their NodeRef
    // values; freed slots are recycled by later insertions.  The computed
    // cache is dropped because entries may reference reclaimed nodes.
    std::uint64_t gc(std::span<const NodeRef> roots = {}) {
        next_epoch();
        for (NodeRef r : roots) mark(r);
        for (const auto& [r, cnt] : pins_) mark(r);
        std::uint64_t reclaimed = 0;
        for (NodeRef r = 2; r < nodes_.size(); ++r) {
            if (nodes_[r].top == 0 || mark_[r] == epoch_) continue;
            nodes_[r].top = 0;
            free_.push_back(r);
            --live_;
            ++reclaimed;
        }
        if (reclaimed) table_rebuild();
        cache_clear();
        stats_.gc_reclaimed += reclaimed;
        return reclaimed;
    }

    // ---- queries -----------------------------------------------------------

    // Number of distinct nodes reachable from the roots, leaves included and
    // counted once each.
    std::uint64_t node_count(NodeRef root) const {
        return node_count(std::span<const NodeRef>{&root, 1});
    }

    std::uint64_t node_count(std::span<const NodeRef> roots) const {
        next_epoch();
        std::uint64_t count = 0;
        for (NodeRef root : roots) {
            if (!is_live(root)) throw std::invalid_argument("node_count: stale root");
            count += mark(root);
        }
        return count;
    }

    // Evaluate the represented function on a full assignment
    // (bits[l-1] is x_l).  Follows kind-specific skip semantics.
    bool eval(NodeRef root, std::span<const std::uint8_t> bits) const {
        if (bits.size() != n_) throw std::invalid_argument("eval: assignment length mismatch");
        const bool zero_skip = is_zero_chain_kind(kind_);
        NodeRef cur = root;
        Level pos = 1;
        for (;;) {
            const Level t = level_top(cur);
            if (zero_skip) {
                for (Level j = pos; j < t; ++j)
                    if (bits[j - 1]) return false;
            }
            if (is_leaf(cur)) return cur == kLeaf1;
            const Node& v = nodes_[cur];
            switch (kind_) {
                case DiagramKind::BDD:
                case DiagramKind::ZDD:
                    cur = bits[v.top - 1] ? v.hi : v.lo;
                    pos = v.top + 1;
                    break;
                case DiagramKind::CBDD: {
                    // Or-chain: first 1 in t..b exits to hi, all-zero takes lo.
                    NodeRef next = v.lo;
                    pos = v.bot + 1;
                    for (Level j = v.top; j <= v.bot; ++j) {
                        if (bits[j - 1]) {
                            next = v.hi;
                            pos = j + 1;
                            break;
                        }
                    }
                    cur = next;
                    break;
                }
                case DiagramKind::CZDD:
                    // Don't-care span t..b-1, decision at b.
                    cur = bits[v.bot - 1] ? v.hi : v.lo;
                    pos = v.bot + 1;
                    break;
            }
        }
    }

    // ---- computed cache ----------------------------------------------------

    void cache_enable(bool on) { cache_on_ = on; }
    bool cache_enabled() const { return cache_on_; }

    void cache_clear() {
        for (auto& e : cache_) e.tag = kCacheEmpty;
    }

    std::optional<NodeRef> cache_probe(std::uint8_t tag, NodeRef a, NodeRef b, NodeRef c) {
        ++stats_.cache_lookups;
        if (!cache_on_) return std::nullopt;
        const CacheEntry& e = cache_[cache_slot(tag, a, b, c)];
        if (e.tag == tag && e.a == a && e.b == b && e.c == c) {
            ++stats_.cache_hits;
            return e.result;
        }
        return std::nullopt;
    }

    void cache_store(std::uint8_t tag, NodeRef a, NodeRef b, NodeRef c, NodeRef result) {
        if (!cache_on_) return;
        CacheEntry& e = cache_[cache_slot(tag, a, b, c)];
        e = CacheEntry{a, b, c, result, tag};
    }

    // ---- integrity ---------------------------------------------------------

    // Full scan asserting reducedness, chain-reducedness, level sanity and
    // unique-table soundness.  Throws std::logic_error on the first failure.
    void check_invariants() const {
        std::size_t live_seen = 0;
        for (NodeRef r = 2; r < nodes_.size(); ++r) {
            if (nodes_[r].top == 0) continue;
            ++live_seen;
            const Node& v = nodes_[r];
            if (v.top < 1 || v.top > v.bot || v.bot > n_)
                fail("level pair out of range", r);
            if (!is_live(v.lo) || !is_live(v.hi)) fail("dead child", r);
            if (level_top(v.lo) <= v.bot || level_top(v.hi) <= v.bot)
                fail("child level does not exceed bot", r);
            if (!is_chained_kind(kind_) && v.top != v.bot)
                fail("unchained node spans levels", r);
            if (is_or_chain_kind(kind_) && v.lo == v.hi)
                fail("don't-care reduction missed", r);
            if (is_zero_chain_kind(kind_) && v.hi == kLeaf0)
                fail("zero-suppression missed", r);
            if (kind_ == DiagramKind::CBDD && !is_leaf(v.lo) &&
                nodes_[v.lo].top == v.bot + 1 && nodes_[v.lo].hi == v.hi)
                fail("or-chain merge missed", r);
            if (kind_ == DiagramKind::CZDD && v.lo == v.hi && !is_leaf(v.lo) &&
                nodes_[v.lo].top == v.bot + 1)
                fail("don't-care chain merge missed", r);
            if (table_find(v.top, v.bot, v.lo, v.hi) != r)
                fail("unique table out of sync", r);
        }
        if (live_seen + 2 != live_) fail("live count out of sync", 0);
        if (table_entries_ != live_seen) fail("unique table size mismatch", 0);
    }

private:
    struct CacheEntry {
        NodeRef a = 0, b = 0, c = 0, result = 0;
        std::uint8_t tag = kCacheEmpty;
    };
    static constexpr std::uint8_t kCacheEmpty = 0xff;

    NodeRef cons(Level t, Level b, NodeRef lo, NodeRef hi) {
        std::size_t slot = slot_for(t, b, lo, hi);
        if (table_[slot] != kUnused) return table_[slot];
        NodeRef r;
        if (!free_.empty()) {
            r = free_.back();
            free_.pop_back();
        } else {
            r = static_cast<NodeRef>(nodes_.size());
            nodes_.emplace_back();
        }
        nodes_[r] = Node{t, b, lo, hi};
        table_[slot] = r;
        ++table_entries_;
        if (table_entries_ * 10 >= table_.size() * 7) table_rebuild();
        ++live_;
        ++stats_.nodes_created;
        if (live_ > stats_.peak_live) stats_.peak_live = live_;
        return r;
    }

    // Open-addressed unique table over the node arena: a slot holds the
    // NodeRef of a live nonleaf node or kUnused.  Deletions happen only in
    // gc, which rebuilds the whole table, so no tombstones are needed.
    static constexpr NodeRef kUnused = 0xffffffffu;
    static constexpr std::size_t kTableMin = 1u << 10;

    // Returns the slot holding a matching node, or the empty slot where it
    // would be inserted.
    std::size_t slot_for(Level t, Level b, NodeRef lo, NodeRef hi) const {
        std::size_t i = static_cast<std::size_t>(detail::node_hash(t, b, lo, hi)) &
                        (table_.size() - 1);
        for (;;) {
            const NodeRef r = table_[i];
            if (r == kUnused) return i;
            const Node& nd = nodes_[r];
            if (nd.top == t && nd.bot == b && nd.lo == lo && nd.hi == hi) return i;
            i = (i + 1) & (table_.size() - 1);
        }
    }

    NodeRef table_find(Level t, Level b, NodeRef lo, NodeRef hi) const {
        const NodeRef r = table_[slot_for(t, b, lo, hi)];
        return r == kUnused ? kUnused : r;
    }

    void table_rebuild() {
        std::size_t want = kTableMin;
        while (want * 10 < (live_ - 2) * 16) want <<= 1;  // rebuild at ~60% load
        table_.assign(want, kUnused);
        table_entries_ = 0;
        for (NodeRef r = 2; r < nodes_.size(); ++r) {
            if (nodes_[r].top == 0) continue;
            const Node& nd = nodes_[r];
            table_[slot_for(nd.top, nd.bot, nd.lo, nd.hi)] = r;
            ++table_entries_;
        }
    }

    std::size_t cache_slot(std::uint8_t tag, NodeRef a, NodeRef b, NodeRef c) const {
        std::uint64_t h = detail::mix64((std::uint64_t(a) << 32) | b);
        h = detail::mix64(h ^ ((std::uint64_t(tag) << 40) | c));
        return static_cast<std::size_t>(h) & (cache_.size() - 1);
    }

    void next_epoch() const {
        if (++epoch_ == 0) {
            mark_.assign(mark_.size(), 0);
            epoch_ = 1;
        }
        mark_.resize(nodes_.size(), 0);
    }

    // Marks the subgraph under r; returns how many nodes were newly marked.
    std::uint64_t mark(NodeRef r) const {
        std::uint64_t count = 0;
        scratch_.clear();
        scratch_.push_back(r);
        while (!scratch_.empty()) {
            NodeRef v = scratch_.back();
            scratch_.pop_back();
            if (mark_[v] == epoch_) continue;
            mark_[v] = epoch_;
            ++count;
            if (!is_leaf(v)) {
                scratch_.push_back(nodes_[v].lo);
                scratch_.push_back(nodes_[v].hi);
            }
        }
        return count;
    }

    [[noreturn]] void fail(const char* what, NodeRef r) const {
        throw std::logic_error(std::string("invariant violation: ") + what +
                               " at node " + std::to_string(r));
    }

    DiagramKind kind_;
    Level n_;
    std::vector<Node> nodes_;
    std::vector<NodeRef> free_;
    std::vector<NodeRef> table_;
    std::size_t table_entries_ = 0;
    std::unordered_map<NodeRef, std::uint32_t> pins_;
    std::vector<CacheEntry> cache_;
    bool cache_on_ = true;
    std::size_t live_ = 0;
    Stats stats_;

    mutable std::vector<std::uint32_t> mark_;
    mutable std::vector<NodeRef> scratch_;
    mutable std::uint32_t epoch_ = 0;
};

// RAII root pin: keeps a function alive across gc within one manager.
class FunctionHandle {
public:
    FunctionHandle() = default;
    FunctionHandle(Manager& m, NodeRef root) : m_(&m), root_(root) { m_->pin(root_); }
    FunctionHandle(const FunctionHandle& o) : m_(o.m_), root_(o.root_) {
        if (m_) m_->pin(root_);
    }
    FunctionHandle(FunctionHandle&& o) noexcept : m_(o.m_), root_(o.root_) { o.m_ = nullptr; }
    FunctionHandle& operator=(FunctionHandle o) noexcept {
        std::swap(m_, o.m_);
        std::swap(root_, o.root_);
        return *this;
    }
    ~FunctionHandle() {
        if (m_) m_->unpin(root_);
    }

    Manager* manager() const { return m_; }
    NodeRef root() const { return root_; }
    bool valid() const { return m_ != nullptr; }

private:
    Manager* m_ = nullptr;
    NodeRef root_ = kLeaf0;
};

}  // namespace chaindd
