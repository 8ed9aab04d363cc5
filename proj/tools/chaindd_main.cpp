// chaindd command-line front end.

#include <CLI11.hpp>

#include "chaindd/runner.hpp"

namespace {

void add_common(CLI::App* cmd, chaindd::RunSpec& spec) {
    cmd->add_option("--kind", spec.kind, "diagram kind: bdd, zdd, cbdd, czdd or all")
        ->check(CLI::IsMember({"bdd", "zdd", "cbdd", "czdd", "all"}))
        ->capture_default_str();
    cmd->add_option("--format", spec.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", spec.output, "write reports to a file instead of stdout");
    cmd->add_option("--cache-size", spec.cache_entries, "computed-cache entries (rounded to 2^k)")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaindd: chain-reduced decision diagram benchmarks"};
    app.require_subcommand(1);
    chaindd::RunSpec spec;

    CLI::App* dict = app.add_subcommand("dict", "encode a word list as a Boolean function");
    dict->add_option("--input", spec.input, "word list file (one word per line) or synthetic:<count>[:<seed>]")
        ->required();
    dict->add_option("--encoding", spec.encoding, "symbol encoding")
        ->check(CLI::IsMember({"one-hot", "binary"}))
        ->capture_default_str();
    dict->add_option("--alphabet", spec.alphabet, "symbol alphabet")
        ->check(CLI::IsMember({"compact", "ascii"}))
        ->capture_default_str();
    add_common(dict, spec);

    CLI::App* queens = app.add_subcommand("queens", "build all n-queens solutions");
    queens->add_option("--n", spec.n, "board size")->capture_default_str();
    queens->add_option("--encoding", spec.encoding, "board encoding")
        ->check(CLI::IsMember({"one-hot", "binary"}))
        ->capture_default_str();
    queens->add_option("--order", spec.order, "row variable order")
        ->check(CLI::IsMember({"top-down", "center-first"}))
        ->capture_default_str();
    add_common(queens, spec);

    CLI::App* circuit = app.add_subcommand("circuit", "build all outputs of an ISCAS-85 netlist");
    circuit->add_option("--input", spec.input, "netlist file, synthetic:<seed>, or mid36")
        ->required();
    circuit->add_option("--order", spec.order, "input variable order: fanin heuristic or file order")
        ->check(CLI::IsMember({"fanin", "file"}))
        ->default_val("fanin");
    add_common(circuit, spec);

    CLI::App* worstcase = app.add_subcommand("worstcase", "build a worst-case family member");
    worstcase->add_option("--family", spec.family, "which family")
        ->check(CLI::IsMember({"zdd-vs-cbdd", "bdd-vs-czdd"}))
        ->capture_default_str();
    worstcase->add_option("--k", spec.k, "replication parameter")->capture_default_str();
    add_common(worstcase, spec);

    app.add_subcommand("selftest", "run the built-in oracle-equivalence suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? chaindd::kExitOk : chaindd::kExitBadInput;
    }
    spec.subcommand = app.get_subcommands().front()->get_name();
    return chaindd::run(spec, std::cout, std::cerr);
}
