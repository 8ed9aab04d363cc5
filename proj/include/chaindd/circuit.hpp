// chaindd: ISCAS-85 netlists, the fanin variable-order heuristic, and
// symbolic construction of all circuit outputs.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chaindd/apply.hpp"
#include "chaindd/manager.hpp"

namespace chaindd {

enum class GateOp : std::uint8_t { And, Nand, Or, Nor, Xor, Xnor, Not, Buf };

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

struct Gate {
    std::string out;
    GateOp op;
    std::vector<std::string> ins;
    int line = 0;
};

// Parsed combinational circuit.  Gates are stored in declaration order;
// `topo` lists gate indices so every fanin precedes its user.
struct Netlist {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<Gate> gates;
    std::vector<std::size_t> topo;
    std::unordered_map<std::string, std::size_t> driver;  // net -> gate index
    std::unordered_map<std::string, std::size_t> input_index;

    bool is_input(const std::string& net) const { return input_index.count(net) != 0; }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline GateOp parse_gate_op(const std::string& s, int line) {
    std::string u;
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "AND") return GateOp::And;
    if (u == "NAND") return GateOp::Nand;
    if (u == "OR") return GateOp::Or;
    if (u == "NOR") return GateOp::Nor;
    if (u == "XOR") return GateOp::Xor;
    if (u == "XNOR") return GateOp::Xnor;
    if (u == "NOT" || u == "INV") return GateOp::Not;
    if (u == "BUF" || u == "BUFF") return GateOp::Buf;
    throw ParseError(line, "unknown gate type '" + s + "'");
}

}  // namespace detail

// Parses the ISCAS-85 textual format: INPUT(x) / OUTPUT(y) /
// net = GATE(a,b,...) lines with '#' comments.
inline Netlist parse_iscas(std::istream& in, const std::string& name = "") {
    Netlist net;
    net.name = name;
    std::string raw;
    int line_no = 0;
    bool saw_anything = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        line = detail::trim(line);
        if (line.empty()) continue;
        saw_anything = true;

        auto lpar = line.find('(');
        auto rpar = line.rfind(')');
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (lpar == std::string::npos || rpar == std::string::npos || rpar < lpar)
                throw ParseError(line_no, "malformed declaration '" + line + "'");
            std::string head = detail::trim(line.substr(0, lpar));
            std::string arg = detail::trim(line.substr(lpar + 1, rpar - lpar - 1));
            if (arg.empty()) throw ParseError(line_no, "empty net name");
            std::string headu;
            for (char c : head) headu.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            if (headu == "INPUT") {
                if (net.input_index.count(arg)) throw ParseError(line_no, "duplicate input '" + arg + "'");
                net.input_index.emplace(arg, net.inputs.size());
                net.inputs.push_back(arg);
            } else if (headu == "OUTPUT") {
                net.outputs.push_back(arg);
            } else {
                throw ParseError(line_no, "unknown declaration '" + head + "'");
            }
            continue;
        }
        if (lpar == std::string::npos || rpar == std::string::npos || rpar < lpar || lpar < eq)
            throw ParseError(line_no, "malformed gate line '" + line + "'");
        Gate g;
        g.out = detail::trim(line.substr(0, eq));
        g.op = detail::parse_gate_op(detail::trim(line.substr(eq + 1, lpar - eq - 1)), line_no);
        g.line = line_no;
        std::stringstream args(line.substr(lpar + 1, rpar - lpar - 1));
        std::string tok;
        while (std::getline(args, tok, ',')) {
            tok = detail::trim(tok);
            if (tok.empty()) throw ParseError(line_no, "empty fanin name");
            g.ins.push_back(tok);
        }
        if (g.out.empty()) throw ParseError(line_no, "gate without output net");
        const bool unary = g.op == GateOp::Not || g.op == GateOp::Buf;
        if (unary && g.ins.size() != 1)
            throw ParseError(line_no, "unary gate '" + g.out + "' needs exactly one fanin");
        if (!unary && g.ins.size() < 2)
            throw ParseError(line_no, "gate '" + g.out + "' needs at least two fanins");
        if (net.driver.count(g.out) || net.input_index.count(g.out))
            throw ParseError(line_no, "net '" + g.out + "' defined twice");
        net.driver.emplace(g.out, net.gates.size());
        net.gates.push_back(std::move(g));
    }
    if (!saw_anything) throw ParseError(line_no, "empty netlist");

    // Validate fanins and outputs, then topologically order the gates.
    for (const Gate& g : net.gates) {
        for (const std::string& f : g.ins) {
            if (!net.is_input(f) && !net.driver.count(f))
                throw ParseError(g.line, "undefined net '" + f + "'");
        }
    }
    for (const std::string& out : net.outputs) {
        if (!net.is_input(out) && !net.driver.count(out))
            throw ParseError(line_no, "undefined output net '" + out + "'");
    }
    // Iterative depth-first topological sort; netlists can be arbitrarily
    // deep, so no recursion on input data.
    std::vector<int> state(net.gates.size(), 0);  // 0 new, 1 expanded, 2 done
    std::vector<std::size_t> dfs;
    for (std::size_t start = 0; start < net.gates.size(); ++start) {
        if (state[start] != 0) continue;
        dfs.push_back(start);
        while (!dfs.empty()) {
            const std::size_t gi = dfs.back();
            if (state[gi] == 2) {
                dfs.pop_back();
                continue;
            }
            if (state[gi] == 1) {
                state[gi] = 2;
                net.topo.push_back(gi);
                dfs.pop_back();
                continue;
            }
            state[gi] = 1;
            for (const std::string& f : net.gates[gi].ins) {
                auto it = net.driver.find(f);
                if (it == net.driver.end()) continue;
                if (state[it->second] == 1)
                    throw ParseError(net.gates[gi].line,
                                     "cycle through net '" + net.gates[gi].out + "'");
                if (state[it->second] == 0) dfs.push_back(it->second);
            }
        }
    }
    return net;
}

inline Netlist parse_iscas_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open netlist: " + path);
    std::string name = path;
    if (auto pos = name.find_last_of('/'); pos != std::string::npos) name = name.substr(pos + 1);
    return parse_iscas(in, name);
}

// Fanin-heuristic variable order: depth-first traversal of the output cones,
// visiting deeper-fanin children first, recording inputs at first encounter.
// Depth of a net is its longest distance to a primary input; ties fall back
// to declaration order, so the result is deterministic.
inline std::vector<std::string> fanin_order(const Netlist& net) {
    // Cone depths fall out of one pass over the topological order.
    std::unordered_map<std::string, std::uint32_t> depth;
    for (const std::string& in : net.inputs) depth[in] = 0;
    for (std::size_t gi : net.topo) {
        std::uint32_t d = 0;
        for (const std::string& f : net.gates[gi].ins) d = std::max(d, depth.at(f) + 1);
        depth[net.gates[gi].out] = d;
    }
    auto decl_index = [&](const std::string& n) -> std::size_t {
        if (auto it = net.input_index.find(n); it != net.input_index.end()) return it->second;
        return net.inputs.size() + net.driver.at(n);
    };

    std::vector<std::string> order;
    std::unordered_map<std::string, bool> seen;
    std::vector<std::string> stack;
    auto visit = [&](const std::string& root) {
        stack.push_back(root);
        while (!stack.empty()) {
            const std::string n = std::move(stack.back());
            stack.pop_back();
            if (seen[n]) continue;
            seen[n] = true;
            if (net.is_input(n)) {
                order.push_back(n);
                continue;
            }
            std::vector<std::string> kids = net.gates[net.driver.at(n)].ins;
            std::stable_sort(kids.begin(), kids.end(),
                             [&](const std::string& a, const std::string& b) {
                                 const auto da = depth.at(a), db = depth.at(b);
                                 if (da != db) return da > db;
                                 return decl_index(a) < decl_index(b);
                             });
            // Deeper cones first; reversed so the first child is popped first.
            for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                if (!seen[*it]) stack.push_back(*it);
        }
    };
    for (const std::string& out : net.outputs) visit(out);
    for (const std::string& in : net.inputs) visit(in);  // inputs in no cone
    return order;
}

struct CircuitBuild {
    std::vector<NodeRef> outputs;
    std::uint64_t output_nodes = 0;  // shared nodes counted once
};

// Builds every output function in topological order under the given input
// permutation (order[i] gets level i+1).
inline CircuitBuild build_circuit(Manager& m, const Netlist& net,
                                  const std::vector<std::string>& order) {
    if (order.size() != net.inputs.size())
        throw std::invalid_argument("build_circuit: order must cover all primary inputs");
    std::unordered_map<std::string, NodeRef> fn;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!net.is_input(order[i]))
            throw std::invalid_argument("build_circuit: '" + order[i] + "' is not a primary input");
        fn[order[i]] = m.var(static_cast<Level>(i + 1));
    }
    if (fn.size() != net.inputs.size())
        throw std::invalid_argument("build_circuit: order repeats an input");

    for (std::size_t gi : net.topo) {
        const Gate& g = net.gates[gi];
        NodeRef acc = fn.at(g.ins[0]);
        switch (g.op) {
            case GateOp::And:
            case GateOp::Nand:
                for (std::size_t i = 1; i < g.ins.size(); ++i)
                    acc = apply(m, BoolOp::And, acc, fn.at(g.ins[i]));
                break;
            case GateOp::Or:
            case GateOp::Nor:
                for (std::size_t i = 1; i < g.ins.size(); ++i)
                    acc = apply(m, BoolOp::Or, acc, fn.at(g.ins[i]));
                break;
            case GateOp::Xor:
            case GateOp::Xnor:
                for (std::size_t i = 1; i < g.ins.size(); ++i)
                    acc = apply(m, BoolOp::Xor, acc, fn.at(g.ins[i]));
                break;
            case GateOp::Not:
            case GateOp::Buf:
                break;
        }
        if (g.op == GateOp::Nand || g.op == GateOp::Nor || g.op == GateOp::Xnor ||
            g.op == GateOp::Not)
            acc = complement(m, acc);
        fn[g.out] = acc;
    }

    CircuitBuild out;
    for (const std::string& o : net.outputs) out.outputs.push_back(fn.at(o));
    out.output_nodes = m.node_count(out.outputs);
    return out;
}

// Gate-level simulation oracle.
inline std::vector<bool> simulate(const Netlist& net, const std::vector<bool>& input_values) {
    if (input_values.size() != net.inputs.size())
        throw std::invalid_argument("simulate: input vector size mismatch");
    std::unordered_map<std::string, bool> val;
    for (std::size_t i = 0; i < net.inputs.size(); ++i) val[net.inputs[i]] = input_values[i];
    for (std::size_t gi : net.topo) {
        const Gate& g = net.gates[gi];
        bool v = val.at(g.ins[0]);
        for (std::size_t i = 1; i < g.ins.size(); ++i) {
            const bool w = val.at(g.ins[i]);
            switch (g.op) {
                case GateOp::And:
                case GateOp::Nand: v = v && w; break;
                case GateOp::Or:
                case GateOp::Nor: v = v || w; break;
                case GateOp::Xor:
                case GateOp::Xnor: v = v != w; break;
                default: break;
            }
        }
        if (g.op == GateOp::Nand || g.op == GateOp::Nor || g.op == GateOp::Xnor ||
            g.op == GateOp::Not)
            v = !v;
        val[g.out] = v;
    }
    std::vector<bool> out;
    for (const std::string& o : net.outputs) out.push_back(val.at(o));
    return out;
}

// Deterministic random-logic netlist in the ISCAS style, used for desk-scale
// runs when no benchmark file is at hand.  Layered with local fanin so the
// BDDs stay small.
inline std::string make_synthetic_circuit(std::uint64_t seed, std::uint32_t n_inputs,
                                          std::uint32_t n_gates, std::uint32_t n_outputs) {
    // Explicit splitmix64 stream: the emitted netlist must not depend on
    // standard-library distribution internals.
    std::uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    std::ostringstream os;
    os << "# synthetic circuit seed=" << seed << "\n";
    std::vector<std::string> nets;
    for (std::uint32_t i = 1; i <= n_inputs; ++i) {
        nets.push_back("i" + std::to_string(i));
        os << "INPUT(" << nets.back() << ")\n";
    }
    for (std::uint32_t g = 1; g <= n_outputs; ++g) os << "OUTPUT(g" << (n_gates - g + 1) << ")\n";
    static const char* ops[] = {"NAND", "NAND", "NOR", "AND", "OR", "XOR", "NAND", "OR"};
    const std::size_t window = 24;  // draw fanins from recent nets only
    for (std::uint32_t g = 1; g <= n_gates; ++g) {
        const std::size_t lo = nets.size() > window ? nets.size() - window : 0;
        const std::size_t span = nets.size() - lo;
        std::size_t a = lo + next() % span, b = lo + next() % span;
        while (b == a) b = lo + next() % span;
        os << "g" << g << " = " << ops[next() % 8] << "(" << nets[a] << ", " << nets[b] << ")\n";
        nets.push_back("g" + std::to_string(g));
    }
    return os.str();
}

// Deterministic 36-input control-logic netlist: a ripple adder and
// comparator over two 14-bit buses plus a priority encoder over eight
// request lines, mixed into 24 outputs.  Comparable in shape to the
// mid-size entries of the classic benchmark suite and free of the
// saturation that plagues random gate soup.
inline std::string make_mid_circuit() {
    std::ostringstream os;
    os << "# mid36: adder/comparator/priority mix\n";
    for (int i = 0; i < 14; ++i) os << "INPUT(a" << i << ")\n";
    for (int i = 0; i < 14; ++i) os << "INPUT(b" << i << ")\n";
    for (int i = 0; i < 8; ++i) os << "INPUT(r" << i << ")\n";

    // Ripple-carry adder: c_{i+1} = majority(a_i, b_i, c_i), s_i = a xor b xor c.
    os << "c0 = AND(a0, b0)\n";
    os << "s0 = XOR(a0, b0)\n";
    for (int i = 1; i < 14; ++i) {
        os << "g" << i << " = AND(a" << i << ", b" << i << ")\n";
        os << "p" << i << " = XOR(a" << i << ", b" << i << ")\n";
        os << "t" << i << " = AND(p" << i << ", c" << (i - 1) << ")\n";
        os << "c" << i << " = OR(g" << i << ", t" << i << ")\n";
        os << "s" << i << " = XOR(p" << i << ", c" << (i - 1) << ")\n";
    }

    // Equality and less-than chains over the same buses.
    os << "e0 = XNOR(a0, b0)\n";
    os << "l0 = AND(b0, nA0)\n";
    os << "nA0 = NOT(a0)\n";
    for (int i = 1; i < 14; ++i) {
        os << "x" << i << " = XNOR(a" << i << ", b" << i << ")\n";
        os << "e" << i << " = AND(e" << (i - 1) << ", x" << i << ")\n";
        os << "nA" << i << " = NOT(a" << i << ")\n";
        os << "w" << i << " = AND(b" << i << ", nA" << i << ")\n";
        os << "u" << i << " = AND(x" << i << ", l" << (i - 1) << ")\n";
        os << "l" << i << " = OR(w" << i << ", u" << i << ")\n";
    }

    // Priority encoder over the request lines: q_i = r_i and no lower request.
    os << "n0 = NOT(r0)\n";
    for (int i = 1; i < 8; ++i) {
        os << "q" << i << " = AND(r" << i << ", n" << (i - 1) << ")\n";
        os << "nr" << i << " = NOT(r" << i << ")\n";
        os << "n" << i << " = AND(n" << (i - 1) << ", nr" << i << ")\n";
    }

    // Outputs: granted sums, comparator verdicts, and a parity tree.
    for (int i = 0; i < 14; ++i) os << "OUTPUT(o" << i << ")\n";
    os << "OUTPUT(oeq)\nOUTPUT(olt)\nOUTPUT(ogt)\nOUTPUT(opar)\nOUTPUT(ocy)\n";
    for (int i = 0; i < 5; ++i) os << "OUTPUT(oq" << (i + 1) << ")\n";
    for (int i = 0; i < 14; ++i) {
        const int q = 1 + (i % 7);
        os << "o" << i << " = NAND(s" << i << ", q" << q << ")\n";
    }
    os << "oeq = BUF(e13)\n";
    os << "olt = BUF(l13)\n";
    os << "ne = NOT(e13)\n";
    os << "nl = NOT(l13)\n";
    os << "ogt = AND(ne, nl)\n";
    os << "pe0 = XOR(s0, s1)\n";
    for (int i = 1; i < 13; ++i) os << "pe" << i << " = XOR(pe" << (i - 1) << ", s" << (i + 1) << ")\n";
    os << "opar = XOR(pe12, c13)\n";
    os << "ocy = NAND(c13, q7)\n";
    for (int i = 0; i < 5; ++i) os << "oq" << (i + 1) << " = OR(q" << (i + 1) << ", q" << (i + 2) << ")\n";
    return os.str();
}

inline Netlist c17_netlist();

// The public c17 example: five inputs, six NAND gates, two outputs.
inline const char* c17_text() {
    return "# c17\n"
           "INPUT(1GAT)\n"
           "INPUT(2GAT)\n"
           "INPUT(3GAT)\n"
           "INPUT(6GAT)\n"
           "INPUT(7GAT)\n"
           "OUTPUT(22GAT)\n"
           "OUTPUT(23GAT)\n"
           "10GAT = NAND(1GAT, 3GAT)\n"
           "11GAT = NAND(3GAT, 6GAT)\n"
           "16GAT = NAND(2GAT, 11GAT)\n"
           "19GAT = NAND(11GAT, 7GAT)\n"
           "22GAT = NAND(10GAT, 16GAT)\n"
           "23GAT = NAND(16GAT, 19GAT)\n";
}

inline Netlist c17_netlist() {
    std::istringstream in(c17_text());
    return parse_iscas(in, "c17");
}

}  // namespace chaindd
