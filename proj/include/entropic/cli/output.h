#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "entropic/inequalities.h"
#include "entropic/serialization.h"

namespace entropic::cli {

inline constexpr const char *kToolVersion = "0.1.0";

enum class Format { Text, Json, Csv };

Format format_from_string(const std::string &name);

// A numeric table such as a temperature sweep; emitted as-is in CSV mode.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Everything a subcommand produces. Serialized as
// {"tool_version", "seed", "spec", "results", "summary"}; a table, when
// present, lives under summary.table.
struct Document {
    uint64_t seed = 0;
    Json spec = Json::object();
    std::vector<InequalityReport> results;
    Json summary = Json::object();
    Table table;
};

Json document_to_json(const Document &doc);
Document document_from_json(const Json &root);

// Text mode rounds numbers to 6 significant digits; JSON and CSV do not.
void render(const Document &doc, Format format, std::ostream &out);

}  // namespace entropic::cli
