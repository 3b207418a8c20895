#pragma once

// Machine-readable analysis report. Field order is fixed and all numbers are
// exact integers, so serialization is byte-stable across runs.

#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "snp/behavioral.hpp"
#include "snp/structural.hpp"

namespace snp {

inline constexpr const char* kToolName = "snpcheck";
inline constexpr const char* kToolVersion = "0.1.0";

struct Report {
    std::string system_name;
    int neurons = 0;
    int rules = 0;
    std::vector<std::vector<Nat>> matrix;
    std::vector<std::vector<int>> struct_matrix;
    std::optional<std::size_t> graph_vertices;
    std::optional<std::size_t> graph_edges;
    std::optional<std::string> graph_status;
    std::vector<Verdict> verdicts;
};

nlohmann::ordered_json report_to_json(const Report& report);

}  // namespace snp
