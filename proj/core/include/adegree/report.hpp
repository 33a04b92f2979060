#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adegree/catalog.hpp"
#include "adegree/heights.hpp"
#include "adegree/monomial.hpp"
#include "adegree/padiccert.hpp"

namespace adegree {

enum class OutputFormat { Text, Json, Csv };

/// Everything a CLI invocation pins down. Budgets are positive, the seed
/// defaults to 0 so runs are reproducible.
struct ExperimentConfig {
    std::string command;
    std::string map_source;  // DSL string, empty when catalog_id is used
    std::string catalog_id;  // classification case id or example name
    std::map<std::string, Rat> params;
    std::vector<std::vector<Rat>> points;
    std::string matrix;
    int max_n = 0;        // 0 picks the per-command default
    int window = 0;
    double tolerance = -1; // negative picks the default
    std::optional<Int> prime;
    std::string kind;     // certificate kind
    int period = 1;
    int m = 2;            // iterate identity order
    double delta_override = -1;
    OutputFormat format = OutputFormat::Text;
    unsigned seed = 0;
    bool parallel = false;
};

struct ReportDocument {
    nlohmann::ordered_json json;
    std::string text;
    std::string csv;
    bool all_pass = true;

    int exit_code() const { return all_pass ? 0 : 1; }
    std::string rendered(OutputFormat format) const;
};

/// Resolves the map named by a config (DSL, classification case, or example).
RationalMap resolve_map(const ExperimentConfig& config);

ReportDocument run_command(const ExperimentConfig& config);

nlohmann::ordered_json defaults_json();

} // namespace adegree
