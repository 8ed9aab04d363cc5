// chaindd: basic decision-diagram vocabulary shared by all four kinds.

#pragma once

#include <cstdint>
#include <string>

namespace chaindd {

// The four diagram kinds.  BDD and ZDD are the classic unchained forms where
// every node spans a single level.  CBDD nodes encode or-chains and CZDD
// nodes encode don't-care chains via a level pair <top,bot>.
enum class DiagramKind : std::uint8_t { BDD, ZDD, CBDD, CZDD };

inline bool is_or_chain_kind(DiagramKind k) {
    return k == DiagramKind::BDD || k == DiagramKind::CBDD;
}
inline bool is_zero_chain_kind(DiagramKind k) {
    return k == DiagramKind::ZDD || k == DiagramKind::CZDD;
}
inline bool is_chained_kind(DiagramKind k) {
    return k == DiagramKind::CBDD || k == DiagramKind::CZDD;
}

inline const char* kind_name(DiagramKind k) {
    switch (k) {
        case DiagramKind::BDD: return "bdd";
        case DiagramKind::ZDD: return "zdd";
        case DiagramKind::CBDD: return "cbdd";
        case DiagramKind::CZDD: return "czdd";
    }
    return "?";
}

// Variable levels run 1..n; leaves live at level n+1.
using Level = std::uint32_t;

// Opaque node handle within one manager.  Slots 0 and 1 are the leaves.
using NodeRef = std::uint32_t;

inline constexpr NodeRef kLeaf0 = 0;
inline constexpr NodeRef kLeaf1 = 1;

// One diagram vertex.  For BDD/ZDD managers top == bot always; chained kinds
// use top < bot to span a compressed chain.  A freed slot has top == 0.
struct Node {
    Level top = 0;
    Level bot = 0;
    NodeRef lo = 0;
    NodeRef hi = 0;
};

// A complete variable assignment, one char per level, '0' or '1', x1 first.
using Minterm = std::string;

}  // namespace chaindd
