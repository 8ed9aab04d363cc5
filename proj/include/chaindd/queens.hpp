// chaindd: symbolic n-queens construction.
//
// Works from the bottom board row to the top, maintaining per-column and
// per-diagonal occupancy functions for the rows processed so far and
// conjoining the attack exclusions row by row; this keeps the operation
// count quadratic in the board size.  The variable order is decoupled from
// the construction order: each board row is assigned a variable block
// according to the requested row sequence.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "chaindd/apply.hpp"
#include "chaindd/manager.hpp"

namespace chaindd {

enum class BoardEncoding : std::uint8_t { OneHot, Binary };
enum class RowOrder : std::uint8_t { TopDown, CenterFirst };

inline const char* board_encoding_name(BoardEncoding e) {
    return e == BoardEncoding::OneHot ? "one-hot" : "binary";
}
inline const char* row_order_name(RowOrder o) {
    return o == RowOrder::TopDown ? "top-down" : "center-first";
}

struct QueensConfig {
    std::uint32_t n = 8;
    BoardEncoding encoding = BoardEncoding::OneHot;
    RowOrder order = RowOrder::TopDown;

    std::uint32_t bits_per_row() const {
        if (encoding == BoardEncoding::OneHot) return n;
        std::uint32_t b = 0;
        while ((1u << b) < n) ++b;
        return std::max(1u, b);
    }
    Level total_vars() const { return n * bits_per_row(); }
};

// Board rows in variable-block order.  Center-first starts at ceil((n+1)/2)
// and alternates outward; for n = 15 this is 8,9,7,10,6,11,5,12,4,13,3,14,2,15,1.
inline std::vector<std::uint32_t> row_order_sequence(std::uint32_t n, RowOrder order) {
    std::vector<std::uint32_t> seq;
    seq.reserve(n);
    if (order == RowOrder::TopDown) {
        for (std::uint32_t r = 1; r <= n; ++r) seq.push_back(r);
        return seq;
    }
    const std::uint32_t mid = (n + 2) / 2;  // ceil((n+1)/2)
    seq.push_back(mid);
    for (std::uint32_t step = 1; seq.size() < n; ++step) {
        if (mid + step <= n) seq.push_back(mid + step);
        if (seq.size() < n && mid >= step + 1) seq.push_back(mid - step);
    }
    return seq;
}

struct QueensResult {
    NodeRef root = kLeaf0;
    std::uint64_t final_nodes = 0;
    std::uint64_t peak_combined = 0;  // max over rows of the combined size of
                                      // all maintained functions
};

namespace detail {

class QueensBuilder {
public:
    QueensBuilder(Manager& m, const QueensConfig& cfg)
        : m_(m), cfg_(cfg), block_of_row_(cfg.n + 1, 0) {
        const auto seq = row_order_sequence(cfg.n, cfg.order);
        for (std::uint32_t b = 1; b <= cfg_.n; ++b) block_of_row_[seq[b - 1]] = b;
    }

    QueensResult run() {
        const std::uint32_t n = cfg_.n;
        NodeRef sol = m_.universe();
        std::vector<NodeRef> col(n + 1, kLeaf0);
        std::vector<NodeRef> diag(2 * n, kLeaf0);      // r - c + n in 1..2n-1
        std::vector<NodeRef> off(2 * n, kLeaf0);       // r + c - 1 in 1..2n-1
        QueensResult res;

        for (std::uint32_t r = n; r >= 1; --r) {
            std::vector<NodeRef> sq(n + 1);
            for (std::uint32_t c = 1; c <= n; ++c) sq[c] = square(r, c);

            sol = apply(m_, BoolOp::And, sol, row_constraint(r, sq));
            for (std::uint32_t c = 1; c <= n; ++c) {
                NodeRef attack = apply(m_, BoolOp::Or, col[c],
                                       apply(m_, BoolOp::Or, diag[r - c + n], off[r + c - 1]));
                sol = apply(m_, BoolOp::And, sol,
                            complement(m_, apply(m_, BoolOp::And, sq[c], attack)));
            }
            for (std::uint32_t c = 1; c <= n; ++c) {
                col[c] = apply(m_, BoolOp::Or, col[c], sq[c]);
                diag[r - c + n] = apply(m_, BoolOp::Or, diag[r - c + n], sq[c]);
                off[r + c - 1] = apply(m_, BoolOp::Or, off[r + c - 1], sq[c]);
            }

            std::vector<NodeRef> roots{sol};
            roots.insert(roots.end(), col.begin() + 1, col.end());
            for (std::uint32_t d = 1; d <= 2 * n - 1; ++d) {
                roots.push_back(diag[d]);
                roots.push_back(off[d]);
            }
            res.peak_combined = std::max(res.peak_combined, m_.node_count(roots));
            if (m_.live_count() > kGcThreshold) m_.gc(roots);
            if (r == 1) break;
        }
        res.root = sol;
        res.final_nodes = m_.node_count(sol);
        return res;
    }

private:
    static constexpr std::size_t kGcThreshold = 4u << 20;

    // Occupancy function of one square.
    NodeRef square(std::uint32_t r, std::uint32_t c) {
        const std::uint32_t bits = cfg_.bits_per_row();
        const Level base = (block_of_row_[r] - 1) * bits;
        if (cfg_.encoding == BoardEncoding::OneHot) return m_.var(base + c);
        // Cube "row bits encode column c-1" (first block bit is the MSB).
        NodeRef cube = m_.universe();
        for (std::uint32_t b = 0; b < bits; ++b) {
            NodeRef lit = m_.var(base + b + 1);
            if (!((c - 1) >> (bits - 1 - b) & 1u)) lit = complement(m_, lit);
            cube = apply(m_, BoolOp::And, cube, lit);
        }
        return cube;
    }

    NodeRef row_constraint(std::uint32_t r, const std::vector<NodeRef>& sq) {
        if (cfg_.encoding == BoardEncoding::OneHot) {
            // Exactly one occupied square in the row.
            NodeRef one = kLeaf0;
            NodeRef none = m_.universe();
            for (std::uint32_t c = 1; c <= cfg_.n; ++c) {
                NodeRef not_sq = complement(m_, sq[c]);
                one = apply(m_, BoolOp::Or, apply(m_, BoolOp::And, one, not_sq),
                            apply(m_, BoolOp::And, none, sq[c]));
                none = apply(m_, BoolOp::And, none, not_sq);
            }
            return one;
        }
        // Binary: the row code must name a real column (< n).
        const std::uint32_t bits = cfg_.bits_per_row();
        const Level base = (block_of_row_[r] - 1) * bits;
        const std::uint32_t limit = cfg_.n - 1;  // largest valid code
        NodeRef lt = kLeaf0;
        NodeRef eq = m_.universe();
        for (std::uint32_t b = 0; b < bits; ++b) {
            NodeRef x = m_.var(base + b + 1);
            if ((limit >> (bits - 1 - b)) & 1u) {
                lt = apply(m_, BoolOp::Or, lt, apply(m_, BoolOp::And, eq, complement(m_, x)));
                eq = apply(m_, BoolOp::And, eq, x);
            } else {
                eq = apply(m_, BoolOp::And, eq, complement(m_, x));
            }
        }
        return apply(m_, BoolOp::Or, lt, eq);
    }

    Manager& m_;
    QueensConfig cfg_;
    std::vector<Level> block_of_row_;
};

}  // namespace detail

inline QueensResult build_queens(Manager& m, const QueensConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("build_queens: n >= 1");
    if (m.var_count() != cfg.total_vars())
        throw std::invalid_argument("build_queens: manager sized for a different configuration");
    return detail::QueensBuilder(m, cfg).run();
}

// Permutation backtracking reference count.
inline std::uint64_t queens_oracle_count(std::uint32_t n) {
    std::vector<std::uint32_t> colv(n + 1, 0);
    std::uint64_t count = 0;
    std::function<void(std::uint32_t)> place = [&](std::uint32_t r) {
        if (r > n) {
            ++count;
            return;
        }
        for (std::uint32_t c = 1; c <= n; ++c) {
            bool ok = true;
            for (std::uint32_t pr = 1; pr < r && ok; ++pr) {
                const std::uint32_t pc = colv[pr];
                if (pc == c || pr + pc == r + c || int(pr) - int(pc) == int(r) - int(c)) ok = false;
            }
            if (ok) {
                colv[r] = c;
                place(r + 1);
            }
        }
    };
    place(1);
    return count;
}

}  // namespace chaindd
