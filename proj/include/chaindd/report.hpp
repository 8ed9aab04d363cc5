// chaindd: benchmark report records, emitted as JSON objects or CSV rows.

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

namespace chaindd {

struct BenchReport {
    std::string benchmark;
    std::string kind;
    std::string encoding = "-";
    std::string ordering = "-";
    std::uint64_t final_nodes = 0;
    std::uint64_t peak_nodes = 0;
    std::uint64_t cache_lookups = 0;
    double wall_seconds = 0.0;
    // Benchmark-specific values (solution counts, parameters, ...); carried
    // in JSON output only.
    std::map<std::string, std::string> extra;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["benchmark"] = benchmark;
        j["kind"] = kind;
        j["encoding"] = encoding;
        j["ordering"] = ordering;
        j["final_nodes"] = final_nodes;
        j["peak_nodes"] = peak_nodes;
        j["cache_lookups"] = cache_lookups;
        j["wall_seconds"] = wall_seconds;
        for (const auto& [k, v] : extra) j[k] = v;
        return j;
    }

    static const char* csv_header() {
        return "benchmark,kind,encoding,ordering,final_nodes,peak_nodes,cache_lookups,wall_seconds";
    }

    std::string to_csv() const {
        std::string s;
        s += benchmark + "," + kind + "," + encoding + "," + ordering + ",";
        s += std::to_string(final_nodes) + "," + std::to_string(peak_nodes) + ",";
        s += std::to_string(cache_lookups) + ",";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", wall_seconds);
        s += buf;
        return s;
    }
};

}  // namespace chaindd
