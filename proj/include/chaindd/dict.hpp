// chaindd: word-list encoding as characteristic Boolean functions.
//
// Words are padded with a null symbol to a fixed length L and each position
// is encoded one-hot (radix bits) or binary (ceil(log2 radix) bits).  The
// set function is produced bottom-up by a depth-first traversal of a trie;
// per-position symbol functions are full-width functions with don't-cares
// outside their block, so the intermediate conjunctions carry the long
// don't-care regions whose cost chaining is meant to remove.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chaindd/analysis.hpp"
#include "chaindd/apply.hpp"
#include "chaindd/manager.hpp"

namespace chaindd {

enum class SymbolMode : std::uint8_t { OneHot, Binary };

inline const char* symbol_mode_name(SymbolMode m) {
    return m == SymbolMode::OneHot ? "one-hot" : "binary";
}

// Symbol alphabet plus geometry of the bit-level encoding.  Code 0 is the
// null terminator; characters map to codes 1..radix-1.
struct SymbolEncoding {
    SymbolMode mode = SymbolMode::OneHot;
    std::uint32_t radix = 0;
    std::uint32_t bits_per_symbol = 0;
    std::uint32_t max_word_length = 0;
    std::vector<int> char_code = std::vector<int>(256, -1);
    std::vector<char> code_char;  // code -> char, [0] unused (null)

    static std::uint32_t ceil_log2(std::uint32_t v) {
        std::uint32_t b = 0;
        while ((1u << b) < v) ++b;
        return b;
    }

    // Alphabet restricted to the characters present in the corpus.
    static SymbolEncoding compact(SymbolMode mode, const std::vector<std::string>& words,
                                  std::uint32_t max_len = 0) {
        std::set<char> chars;
        std::uint32_t longest = 0;
        for (const auto& w : words) {
            longest = std::max<std::uint32_t>(longest, w.size());
            for (char c : w) chars.insert(c);
        }
        SymbolEncoding e;
        e.mode = mode;
        e.radix = static_cast<std::uint32_t>(chars.size()) + 1;
        e.max_word_length = max_len ? max_len : std::max(1u, longest);
        e.code_char.assign(e.radix, '\0');
        int code = 1;
        for (char c : chars) {
            e.char_code[static_cast<unsigned char>(c)] = code;
            e.code_char[std::size_t(code)] = c;
            ++code;
        }
        e.finish();
        return e;
    }

    // All 128 ASCII characters plus null, as in the full-alphabet runs.
    static SymbolEncoding ascii(SymbolMode mode, std::uint32_t max_len) {
        SymbolEncoding e;
        e.mode = mode;
        e.radix = 129;
        e.max_word_length = std::max(1u, max_len);
        e.code_char.assign(e.radix, '\0');
        for (int c = 0; c < 128; ++c) {
            e.char_code[std::size_t(c)] = c + 1;
            e.code_char[std::size_t(c + 1)] = static_cast<char>(c);
        }
        e.finish();
        return e;
    }

    void finish() {
        bits_per_symbol = mode == SymbolMode::OneHot ? radix : std::max(1u, ceil_log2(radix));
    }

    Level total_vars() const { return bits_per_symbol * max_word_length; }

    // Position-major variable layout: block p occupies
    // levels (p-1)*bits_per_symbol+1 .. p*bits_per_symbol.
    Level block_base(std::uint32_t pos) const { return (pos - 1) * bits_per_symbol; }

    std::vector<int> encode_word(const std::string& w) const {
        if (w.size() > max_word_length) throw std::invalid_argument("word longer than encoding length: " + w);
        std::vector<int> codes;
        codes.reserve(max_word_length);
        for (char c : w) {
            int code = char_code[static_cast<unsigned char>(c)];
            if (code < 0) throw std::invalid_argument(std::string("symbol outside alphabet: '") + c + "'");
            codes.push_back(code);
        }
        codes.resize(max_word_length, 0);  // null padding
        return codes;
    }
};

// Prefix tree with explicit word markers.  Children are kept in code order
// so traversals are deterministic.
class Trie {
public:
    Trie() : nodes_(1) {}

    void insert(const std::string& word, const SymbolEncoding& enc) {
        std::size_t cur = 0;
        for (char c : word) {
            int code = enc.char_code[static_cast<unsigned char>(c)];
            if (code < 0) throw std::invalid_argument(std::string("symbol outside alphabet: '") + c + "'");
            auto [it, fresh] = nodes_[cur].kids.try_emplace(code, 0);
            if (fresh) {
                it->second = nodes_.size();
                nodes_.emplace_back();
            }
            cur = it->second;
        }
        nodes_[cur].word = true;
    }

    std::size_t node_count() const { return nodes_.size(); }

    bool contains(const std::string& word, const SymbolEncoding& enc) const {
        std::size_t cur = 0;
        for (char c : word) {
            int code = enc.char_code[static_cast<unsigned char>(c)];
            if (code < 0) return false;
            auto it = nodes_[cur].kids.find(code);
            if (it == nodes_[cur].kids.end()) return false;
            cur = it->second;
        }
        return nodes_[cur].word;
    }

    std::vector<std::string> words(const SymbolEncoding& enc) const {
        std::vector<std::string> out;
        std::string cur;
        collect(0, cur, enc, out);
        return out;
    }

    struct TNode {
        std::map<int, std::size_t> kids;
        bool word = false;
    };
    const TNode& node(std::size_t i) const { return nodes_[i]; }

private:
    void collect(std::size_t idx, std::string& cur, const SymbolEncoding& enc,
                 std::vector<std::string>& out) const {
        if (nodes_[idx].word) out.push_back(cur);
        for (const auto& [code, kid] : nodes_[idx].kids) {
            cur.push_back(enc.code_char[std::size_t(code)]);
            collect(kid, cur, enc, out);
            cur.pop_back();
        }
    }

    std::vector<TNode> nodes_;
};

namespace detail {

// Full-width function "position pos carries symbol code, everything else is
// don't-care", built bottom-up through make_node so each kind lays it out in
// its native form.
class SymbolFunctions {
public:
    SymbolFunctions(Manager& m, const SymbolEncoding& enc) : m_(m), enc_(enc) {}

    NodeRef sym(std::uint32_t pos, int code) {
        auto key = std::uint64_t(pos) << 32 | std::uint32_t(code);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const Level base = enc_.block_base(pos);
        const Level n = m_.var_count();
        NodeRef h = kLeaf1;
        for (Level j = n; j >= 1; --j) {
            if (j > base && j <= base + enc_.bits_per_symbol) {
                const std::uint32_t bit_idx = j - base - 1;  // 0-based within block
                h = symbol_bit(code, bit_idx) ? m_.make_node(j, j, kLeaf0, h)
                                              : m_.make_node(j, j, h, kLeaf0);
            } else {
                h = fill_dc(m_, h, j, j + 1);
            }
        }
        memo_.emplace(key, h);
        return h;
    }

private:
    bool symbol_bit(int code, std::uint32_t bit_idx) const {
        if (enc_.mode == SymbolMode::OneHot) return std::uint32_t(code) == bit_idx;
        // Binary: first block variable is the most significant bit.
        const std::uint32_t shift = enc_.bits_per_symbol - 1 - bit_idx;
        return (std::uint32_t(code) >> shift) & 1u;
    }

    Manager& m_;
    const SymbolEncoding& enc_;
    std::unordered_map<std::uint64_t, NodeRef> memo_;
};

}  // namespace detail

// Characteristic function of the word set.  Empty input yields leaf 0.
inline NodeRef encode_wordlist(Manager& m, const std::vector<std::string>& words,
                               const SymbolEncoding& enc) {
    if (m.var_count() != enc.total_vars())
        throw std::invalid_argument("encode_wordlist: manager sized for a different encoding");
    Trie trie;
    for (const auto& w : words) {
        (void)enc.encode_word(w);  // validates symbols and length
        trie.insert(w, enc);
    }
    detail::SymbolFunctions syms(m, enc);

    // Null padding from position d+1 to L, shared across word ends.
    std::vector<NodeRef> pad(enc.max_word_length + 1, kLeaf0);
    pad[enc.max_word_length] = m.universe();
    for (std::uint32_t d = enc.max_word_length; d-- > 0;)
        pad[d] = apply(m, BoolOp::And, syms.sym(d + 1, 0), pad[d + 1]);

    std::function<NodeRef(std::size_t, std::uint32_t)> build =
        [&](std::size_t idx, std::uint32_t depth) -> NodeRef {
        const Trie::TNode& nd = trie.node(idx);
        NodeRef acc = nd.word ? pad[depth] : kLeaf0;
        for (const auto& [code, kid] : nd.kids) {
            NodeRef wf = apply(m, BoolOp::And, syms.sym(depth + 1, code), build(kid, depth + 1));
            acc = apply(m, BoolOp::Or, acc, wf);
        }
        return acc;
    };
    if (words.empty()) return kLeaf0;
    return build(0, 0);
}

// Inverse of the encoding for one minterm; nullopt when the bits are not a
// valid padded word image.
inline std::optional<std::string> decode_minterm(const Minterm& bits, const SymbolEncoding& enc) {
    if (bits.size() != enc.total_vars()) return std::nullopt;
    std::string word;
    bool terminated = false;
    for (std::uint32_t pos = 1; pos <= enc.max_word_length; ++pos) {
        const Level base = enc.block_base(pos);
        int code = -1;
        if (enc.mode == SymbolMode::OneHot) {
            for (std::uint32_t b = 0; b < enc.bits_per_symbol; ++b) {
                if (bits[base + b] != '1') continue;
                if (code >= 0) return std::nullopt;  // two hot bits
                code = int(b);
            }
            if (code < 0) return std::nullopt;
        } else {
            code = 0;
            for (std::uint32_t b = 0; b < enc.bits_per_symbol; ++b)
                code = (code << 1) | (bits[base + b] == '1' ? 1 : 0);
            if (std::uint32_t(code) >= enc.radix) return std::nullopt;
        }
        if (code == 0) {
            terminated = true;
        } else {
            if (terminated) return std::nullopt;  // symbol after the terminator
            word.push_back(enc.code_char[std::size_t(code)]);
        }
    }
    return word;
}

inline std::vector<std::string> load_wordlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word list: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) words.push_back(line);
    }
    return words;
}

namespace detail {

// Explicit splitmix64 stream so generated corpora are identical across
// standard-library implementations.
struct DetRng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace detail

// Deterministic corpus for desk-scale runs: lowercase words with a skewed
// letter distribution so the trie shares prefixes the way natural lists do.
inline std::vector<std::string> make_synthetic_words(std::size_t count, std::uint64_t seed,
                                                     std::uint32_t min_len = 3,
                                                     std::uint32_t max_len = 8) {
    detail::DetRng rng{seed};
    // Cumulative weights proportional to 1/(1 + i * 0.35), scaled to integers.
    std::vector<std::uint64_t> cum(26);
    std::uint64_t total = 0;
    for (int i = 0; i < 26; ++i) {
        total += 1000 / (10 + std::uint64_t(i) * 4);
        cum[std::size_t(i)] = total;
    }
    auto letter = [&]() {
        const std::uint64_t r = rng.below(total);
        int i = 0;
        while (cum[std::size_t(i)] <= r) ++i;
        return char('a' + i);
    };
    std::set<std::string> words;
    while (words.size() < count) {
        std::string w;
        const std::uint32_t l = min_len + std::uint32_t(rng.below(max_len - min_len + 1));
        for (std::uint32_t i = 0; i < l; ++i) w.push_back(letter());
        words.insert(std::move(w));
    }
    return {words.begin(), words.end()};
}

}  // namespace chaindd
