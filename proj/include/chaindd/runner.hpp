// chaindd: batch front end shared by the CLI binary and the tests.
//
// One RunSpec describes one invocation; run() executes it and streams one
// BenchReport per (kind, configuration) pair.  Apart from wall_seconds every
// field of a report is deterministic for a given spec.

#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chaindd/analysis.hpp"
#include "chaindd/apply.hpp"
#include "chaindd/circuit.hpp"
#include "chaindd/dict.hpp"
#include "chaindd/manager.hpp"
#include "chaindd/queens.hpp"
#include "chaindd/report.hpp"
#include "chaindd/selftest.hpp"
#include "chaindd/worstcase.hpp"

namespace chaindd {

// Exit codes: distinct classes for usage/input problems and memory pressure.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,    // selftest or internal failure
    kExitBadInput = 2,   // flag, file or parse errors
    kExitResource = 3,   // allocation failure / limits exceeded
};

struct RunSpec {
    std::string subcommand;        // dict | queens | circuit | worstcase | selftest
    std::string kind = "all";      // bdd | zdd | cbdd | czdd | all
    std::string encoding = "one-hot";
    std::string alphabet = "compact";  // dict: compact | ascii
    std::string order = "top-down";    // queens: top-down | center-first; circuit: fanin | file
    std::string family = "zdd-vs-cbdd";
    std::string input;             // file path or synthetic:<count>[:<seed>]
    std::string output;            // report destination, stdout when empty
    std::string format = "json";   // json | csv
    std::uint32_t n = 8;           // queens board size
    std::uint32_t k = 3;           // worst-case replication parameter
    std::size_t cache_entries = std::size_t{1} << 18;
};

namespace detail {

inline std::vector<DiagramKind> kinds_of(const std::string& s) {
    if (s == "all")
        return {DiagramKind::BDD, DiagramKind::CBDD, DiagramKind::ZDD, DiagramKind::CZDD};
    if (s == "bdd") return {DiagramKind::BDD};
    if (s == "zdd") return {DiagramKind::ZDD};
    if (s == "cbdd") return {DiagramKind::CBDD};
    if (s == "czdd") return {DiagramKind::CZDD};
    throw std::invalid_argument("unknown kind '" + s + "'");
}

class ReportSink {
public:
    ReportSink(const RunSpec& spec, std::ostream& fallback) : format_(spec.format) {
        if (!spec.output.empty()) {
            file_ = std::make_unique<std::ofstream>(spec.output);
            if (!*file_) throw std::runtime_error("cannot open output file: " + spec.output);
            out_ = file_.get();
        } else {
            out_ = &fallback;
        }
        if (format_ == "csv") (*out_) << BenchReport::csv_header() << "\n";
    }

    void emit(const BenchReport& r) {
        if (format_ == "csv") (*out_) << r.to_csv() << "\n";
        else (*out_) << r.to_json().dump() << "\n";
        reports.push_back(r);
    }

    std::vector<BenchReport> reports;

private:
    std::string format_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_ = nullptr;
};

class Timer {
public:
    double elapsed() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

// Cross-kind ratio table printed for --kind all.
inline void print_ratio_table(const std::vector<BenchReport>& reports, std::ostream& os) {
    auto find = [&](const std::string& kind) -> const BenchReport* {
        for (const auto& r : reports)
            if (r.kind == kind) return &r;
        return nullptr;
    };
    const BenchReport* bdd = find("bdd");
    const BenchReport* cbdd = find("cbdd");
    const BenchReport* zdd = find("zdd");
    const BenchReport* czdd = find("czdd");
    if (!bdd || !cbdd || !zdd || !czdd) return;
    auto ratio = [](std::uint64_t a, std::uint64_t b) {
        std::ostringstream ss;
        if (b == 0) ss << "-";
        else ss << std::fixed << std::setprecision(2) << double(a) / double(b);
        return ss.str();
    };
    os << "kind   final_nodes  peak_nodes  cache_lookups\n";
    for (const BenchReport* r : {bdd, cbdd, zdd, czdd})
        os << std::left << std::setw(7) << r->kind << std::right << std::setw(11)
           << r->final_nodes << std::setw(12) << r->peak_nodes << std::setw(15)
           << r->cache_lookups << "\n";
    os << "ratios: BDD:CBDD " << ratio(bdd->final_nodes, cbdd->final_nodes)
       << "  CBDD:CZDD " << ratio(cbdd->final_nodes, czdd->final_nodes)
       << "  ZDD:CZDD " << ratio(zdd->final_nodes, czdd->final_nodes) << "\n";
}

// dict --input accepts a path or synthetic:<count>[:<seed>].
inline std::vector<std::string> dict_words(const RunSpec& spec) {
    if (spec.input.rfind("synthetic:", 0) == 0) {
        std::string rest = spec.input.substr(10);
        std::uint64_t count = 5000, seed = 20180507;
        auto colon = rest.find(':');
        if (!rest.empty()) count = std::stoull(rest.substr(0, colon));
        if (colon != std::string::npos) seed = std::stoull(rest.substr(colon + 1));
        return make_synthetic_words(count, seed);
    }
    if (spec.input.empty()) throw std::runtime_error("dict requires --input");
    return load_wordlist(spec.input);
}

inline int run_dict(const RunSpec& spec, ReportSink& sink, std::ostream& info) {
    const auto words = dict_words(spec);
    const SymbolMode mode = spec.encoding == "binary" ? SymbolMode::Binary : SymbolMode::OneHot;
    std::uint32_t max_len = 0;
    for (const auto& w : words) max_len = std::max<std::uint32_t>(max_len, w.size());
    SymbolEncoding enc = spec.alphabet == "ascii"
                             ? SymbolEncoding::ascii(mode, max_len)
                             : SymbolEncoding::compact(mode, words);
    info << "dict: " << words.size() << " words, radix " << enc.radix << ", length "
         << enc.max_word_length << ", " << enc.total_vars() << " variables\n";

    for (DiagramKind k : kinds_of(spec.kind)) {
        Timer t;
        Manager m(k, enc.total_vars(), {spec.cache_entries});
        NodeRef f = encode_wordlist(m, words, enc);
        BenchReport r;
        r.benchmark = "dict";
        r.kind = kind_name(k);
        r.encoding = symbol_mode_name(mode) + std::string("/") + spec.alphabet;
        r.final_nodes = m.node_count(f);
        r.peak_nodes = m.stats().peak_live;
        r.cache_lookups = m.stats().cache_lookups;
        r.wall_seconds = t.elapsed();
        r.extra["words"] = std::to_string(words.size());
        r.extra["solutions"] = count_solutions(m, f).to_string();
        sink.emit(r);
    }
    if (spec.kind == "all") print_ratio_table(sink.reports, info);
    return kExitOk;
}

inline int run_queens(const RunSpec& spec, ReportSink& sink, std::ostream& info) {
    QueensConfig cfg;
    cfg.n = spec.n;
    cfg.encoding = spec.encoding == "binary" ? BoardEncoding::Binary : BoardEncoding::OneHot;
    cfg.order = spec.order == "center-first" ? RowOrder::CenterFirst : RowOrder::TopDown;

    for (DiagramKind k : kinds_of(spec.kind)) {
        Timer t;
        Manager m(k, cfg.total_vars(), {spec.cache_entries});
        QueensResult q = build_queens(m, cfg);
        BenchReport r;
        r.benchmark = "queens";
        r.kind = kind_name(k);
        r.encoding = board_encoding_name(cfg.encoding);
        r.ordering = row_order_name(cfg.order);
        r.final_nodes = q.final_nodes;
        r.peak_nodes = q.peak_combined;
        r.cache_lookups = m.stats().cache_lookups;
        r.wall_seconds = t.elapsed();
        r.extra["n"] = std::to_string(cfg.n);
        r.extra["solutions"] = count_solutions(m, q.root).to_string();
        sink.emit(r);
    }
    if (spec.kind == "all") print_ratio_table(sink.reports, info);
    return kExitOk;
}

inline int run_circuit(const RunSpec& spec, ReportSink& sink, std::ostream& info) {
    Netlist net;
    if (spec.input == "mid36") {
        std::istringstream in(make_mid_circuit());
        net = parse_iscas(in, "mid36");
    } else if (spec.input.rfind("synthetic:", 0) == 0) {
        std::uint64_t seed = std::stoull(spec.input.substr(10));
        std::istringstream in(make_synthetic_circuit(seed, 36, 320, 24));
        net = parse_iscas(in, spec.input);
    } else {
        if (spec.input.empty()) throw std::runtime_error("circuit requires --input");
        net = parse_iscas_file(spec.input);
    }
    std::vector<std::string> order = spec.order == "file" ? net.inputs : fanin_order(net);
    info << "circuit: " << net.name << ", " << net.inputs.size() << " inputs, "
         << net.gates.size() << " gates, " << net.outputs.size() << " outputs\n";

    for (DiagramKind k : kinds_of(spec.kind)) {
        Timer t;
        Manager m(k, static_cast<Level>(net.inputs.size()), {spec.cache_entries});
        CircuitBuild b = build_circuit(m, net, order);
        BenchReport r;
        r.benchmark = "circuit";
        r.kind = kind_name(k);
        r.ordering = spec.order == "file" ? "file" : "fanin";
        r.final_nodes = b.output_nodes;
        r.peak_nodes = m.stats().peak_live;
        r.cache_lookups = m.stats().cache_lookups;
        r.wall_seconds = t.elapsed();
        r.extra["circuit"] = net.name;
        r.extra["outputs"] = std::to_string(net.outputs.size());
        sink.emit(r);
    }
    if (spec.kind == "all") print_ratio_table(sink.reports, info);
    return kExitOk;
}

inline int run_worstcase(const RunSpec& spec, ReportSink& sink, std::ostream& info) {
    FunctionDesc desc;
    if (spec.family == "zdd-vs-cbdd") desc = gen_worst_case_zdd_vs_cbdd(spec.k);
    else if (spec.family == "bdd-vs-czdd") desc = gen_worst_case_bdd_vs_czdd(spec.k);
    else throw std::runtime_error("unknown family '" + spec.family + "'");

    for (DiagramKind k : kinds_of(spec.kind)) {
        Timer t;
        Manager m(k, desc.n, {spec.cache_entries});
        NodeRef f = build_function(desc, m);
        BenchReport r;
        r.benchmark = "worstcase";
        r.kind = kind_name(k);
        r.final_nodes = m.node_count(f);
        r.peak_nodes = m.stats().peak_live;
        r.cache_lookups = m.stats().cache_lookups;
        r.wall_seconds = t.elapsed();
        r.extra["family"] = spec.family;
        r.extra["k"] = std::to_string(spec.k);
        r.extra["variables"] = std::to_string(desc.n);
        sink.emit(r);
    }
    if (spec.kind == "all") print_ratio_table(sink.reports, info);
    return kExitOk;
}

}  // namespace detail

inline int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.subcommand == "selftest") return selftest(out) ? kExitOk : kExitFailure;
        detail::ReportSink sink(spec, out);
        if (spec.subcommand == "dict") return detail::run_dict(spec, sink, err);
        if (spec.subcommand == "queens") return detail::run_queens(spec, sink, err);
        if (spec.subcommand == "circuit") return detail::run_circuit(spec, sink, err);
        if (spec.subcommand == "worstcase") return detail::run_worstcase(spec, sink, err);
        err << "error: unknown subcommand '" << spec.subcommand << "'\n";
        return kExitBadInput;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitResource;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

}  // namespace chaindd
