#include "entropic/cli/output.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "entropic/errors.h"

namespace entropic::cli {

Format format_from_string(const std::string &name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw UsageError(fmt::format("unknown format '{}'; expected text, json or csv", name));
}

Json document_to_json(const Document &doc) {
    Json results = Json::array();
    for (const auto &r : doc.results) {
        results.push_back(to_json_value(r));
    }
    Json summary = doc.summary;
    if (!doc.table.columns.empty()) {
        summary["table"] = {{"columns", doc.table.columns}, {"rows", doc.table.rows}};
    }
    return Json{
        {"tool_version", kToolVersion},
        {"seed", doc.seed},
        {"spec", doc.spec},
        {"results", std::move(results)},
        {"summary", std::move(summary)},
    };
}

Document document_from_json(const Json &root) {
    if (!root.is_object()) {
        throw ValidationError("report: expected a JSON object");
    }
    for (const char *key : {"tool_version", "seed", "spec", "results", "summary"}) {
        if (!root.contains(key)) {
            throw ValidationError(fmt::format("report: missing top-level field '{}'", key));
        }
    }
    Document doc;
    try {
        doc.seed = root.at("seed").get<uint64_t>();
        doc.spec = root.at("spec");
        for (const auto &r : root.at("results")) {
            doc.results.push_back(report_from_json(r));
        }
        doc.summary = root.at("summary");
        if (doc.summary.contains("table")) {
            const Json &table = doc.summary.at("table");
            doc.table.columns = table.at("columns").get<std::vector<std::string>>();
            for (const auto &row : table.at("rows")) {
                std::vector<double> values;
                for (const auto &v : row) {
                    values.push_back(v.get<double>());
                }
                doc.table.rows.push_back(std::move(values));
            }
            doc.summary.erase("table");
        }
    } catch (const Json::exception &e) {
        throw ValidationError(fmt::format("report: malformed document: {}", e.what()));
    }
    return doc;
}

namespace {

std::string text_number(double v) { return fmt::format("{:.6g}", v); }

std::string text_scalar(const Json &v) {
    if (v.is_number_float()) return text_number(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const Json &node, const std::string &path, std::ostream &out) {
    if (node.is_object()) {
        if (node.empty()) {
            out << "  " << path << ": {}\n";
        }
        for (const auto &[key, value] : node.items()) {
            flatten(value, path.empty() ? key : path + "." + key, out);
        }
    } else if (node.is_array()) {
        bool scalars = true;
        for (const auto &v : node) {
            scalars = scalars && !v.is_structured();
        }
        if (scalars) {
            out << "  " << path << ": [";
            for (size_t i = 0; i < node.size(); i++) {
                out << (i ? ", " : "") << text_scalar(node[i]);
            }
            out << "]\n";
        } else {
            for (size_t i = 0; i < node.size(); i++) {
                flatten(node[i], fmt::format("{}[{}]", path, i), out);
            }
        }
    } else {
        out << "  " << path << ": " << text_scalar(node) << "\n";
    }
}

void render_text(const Document &doc, std::ostream &out) {
    out << "seed: " << doc.seed << "\n";
    if (!doc.results.empty()) {
        out << "results:\n";
        for (const auto &r : doc.results) {
            out << fmt::format("  {:<36} lhs={:<12} bound={:<12} margin={:<12} {}", r.name, text_number(r.lhs),
                               text_number(r.bound), text_number(r.margin), r.satisfied ? "ok" : "VIOLATED");
            if (!r.input_descriptor.empty()) out << "  [" << r.input_descriptor << "]";
            if (!r.notes.empty()) out << "  " << r.notes;
            out << "\n";
        }
    }
    if (!doc.summary.empty()) {
        out << "summary:\n";
        flatten(doc.summary, "", out);
    }
    if (!doc.table.columns.empty()) {
        out << "table:\n  " << fmt::format("{}", fmt::join(doc.table.columns, "  ")) << "\n";
        for (const auto &row : doc.table.rows) {
            out << "  ";
            for (size_t i = 0; i < row.size(); i++) {
                out << (i ? "  " : "") << text_number(row[i]);
            }
            out << "\n";
        }
    }
}

void render_csv(const Document &doc, std::ostream &out) {
    if (!doc.table.columns.empty()) {
        out << fmt::format("{}", fmt::join(doc.table.columns, ",")) << "\n";
        for (const auto &row : doc.table.rows) {
            for (size_t i = 0; i < row.size(); i++) {
                out << (i ? "," : "") << fmt::format("{:.17g}", row[i]);
            }
            out << "\n";
        }
        return;
    }
    out << kReportCsvHeader << "\n";
    for (const auto &r : doc.results) {
        out << to_csv_row(r) << "\n";
    }
}

}  // namespace

void render(const Document &doc, Format format, std::ostream &out) {
    switch (format) {
        case Format::Text:
            render_text(doc, out);
            break;
        case Format::Json:
            out << dump_precise(document_to_json(doc)) << "\n";
            break;
        case Format::Csv:
            render_csv(doc, out);
            break;
    }
}

}  // namespace entropic::cli
