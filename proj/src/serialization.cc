#include "entropic/serialization.h"

#include <cmath>

#include <fmt/format.h>

#include "entropic/errors.h"

namespace entropic {

namespace {

Json encode_number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

double decode_number(const Json &v, const char *field) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw ValidationError(fmt::format("JSON: field '{}' is not a number", field));
}

const Json &require(const Json &doc, const char *field) {
    if (!doc.is_object() || !doc.contains(field)) {
        throw ValidationError(fmt::format("JSON: missing field '{}'", field));
    }
    return doc.at(field);
}

template <typename T>
T get_as(const Json &v, const char *field) {
    try {
        return v.get<T>();
    } catch (const Json::exception &e) {
        throw ValidationError(fmt::format("JSON: field '{}' has the wrong type ({})", field, e.what()));
    }
}

Json matrix_part(const ComplexMatrix &m, bool imag) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            row.push_back(imag ? m(i, j).imag() : m(i, j).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix decode_matrix(const Json &doc) {
    const auto re = get_as<std::vector<std::vector<double>>>(require(doc, "re"), "re");
    std::vector<std::vector<double>> im;
    if (doc.contains("im")) {
        im = get_as<std::vector<std::vector<double>>>(doc.at("im"), "im");
    } else {
        im.assign(re.size(), std::vector<double>(re.empty() ? 0 : re.front().size(), 0.0));
    }
    const auto n = static_cast<Eigen::Index>(re.size());
    if (im.size() != re.size()) {
        throw ValidationError("JSON: 're' and 'im' differ in shape");
    }
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        const auto &r = re[static_cast<size_t>(i)];
        const auto &c = im[static_cast<size_t>(i)];
        if (static_cast<Eigen::Index>(r.size()) != n || c.size() != r.size()) {
            throw ValidationError("JSON: matrix is not square");
        }
        for (Eigen::Index j = 0; j < n; j++) {
            m(i, j) = Complex(r[static_cast<size_t>(j)], c[static_cast<size_t>(j)]);
        }
    }
    return m;
}

}  // namespace

Json to_json_value(const ProbDist &d) {
    Json doc = {{"probs", d.probs()}};
    if (!d.labels().empty()) {
        doc["labels"] = d.labels();
    }
    return doc;
}

Json to_json_value(const JointDist2 &j) {
    Json rows = Json::array();
    for (size_t x = 0; x < j.rows(); x++) {
        std::vector<double> row;
        for (size_t y = 0; y < j.cols(); y++) {
            row.push_back(j(x, y));
        }
        rows.push_back(row);
    }
    return {{"shape", {j.rows(), j.cols()}}, {"probs", rows}};
}

Json to_json_value(const JointDist3 &j) {
    const auto &s = j.shape();
    Json outer = Json::array();
    for (size_t x = 0; x < s[0]; x++) {
        Json middle = Json::array();
        for (size_t y = 0; y < s[1]; y++) {
            std::vector<double> row;
            for (size_t z = 0; z < s[2]; z++) {
                row.push_back(j(x, y, z));
            }
            middle.push_back(row);
        }
        outer.push_back(std::move(middle));
    }
    return {{"shape", {s[0], s[1], s[2]}}, {"probs", outer}};
}

Json to_json_value(const DensityOperator &rho) {
    return {{"dims", rho.subsystem_dims()}, {"re", matrix_part(rho.matrix(), false)},
            {"im", matrix_part(rho.matrix(), true)}};
}

Json to_json_value(const MeasurementSet &m) {
    Json ops = Json::array();
    for (const auto &op : m.operators()) {
        ops.push_back({{"re", matrix_part(op, false)}, {"im", matrix_part(op, true)}});
    }
    return {{"kind", to_string(m.kind())}, {"dim", m.dim()}, {"operators", ops}};
}

Json to_json_value(const InequalityReport &r) {
    return {{"name", r.name},
            {"lhs", encode_number(r.lhs)},
            {"bound", encode_number(r.bound)},
            {"satisfied", r.satisfied},
            {"margin", encode_number(r.margin)},
            {"input_descriptor", r.input_descriptor},
            {"notes", r.notes}};
}

Json to_json_value(const ThermoConfig &cfg) { return {{"k", cfg.k}, {"h", cfg.h}}; }

ProbDist prob_dist_from_json(const Json &doc) {
    auto probs = get_as<std::vector<double>>(require(doc, "probs"), "probs");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = get_as<std::vector<std::string>>(doc.at("labels"), "labels");
    }
    return ProbDist(std::move(probs), std::move(labels));
}

JointDist2 joint2_from_json(const Json &doc) {
    const auto shape = get_as<std::vector<size_t>>(require(doc, "shape"), "shape");
    const auto nested = get_as<std::vector<std::vector<double>>>(require(doc, "probs"), "probs");
    if (shape.size() != 2) {
        throw ValidationError("JSON: JointDist2 shape must have two entries");
    }
    JointDist2 j(nested);
    if (j.rows() != shape[0] || j.cols() != shape[1]) {
        throw ValidationError("JSON: JointDist2 probs do not match shape");
    }
    return j;
}

JointDist3 joint3_from_json(const Json &doc) {
    const auto shape = get_as<std::vector<size_t>>(require(doc, "shape"), "shape");
    const auto nested = get_as<std::vector<std::vector<std::vector<double>>>>(require(doc, "probs"), "probs");
    if (shape.size() != 3) {
        throw ValidationError("JSON: JointDist3 shape must have three entries");
    }
    std::vector<double> flat;
    if (nested.size() != shape[0]) {
        throw ValidationError("JSON: JointDist3 probs do not match shape");
    }
    for (const auto &plane : nested) {
        if (plane.size() != shape[1]) {
            throw ValidationError("JSON: JointDist3 probs do not match shape");
        }
        for (const auto &row : plane) {
            if (row.size() != shape[2]) {
                throw ValidationError("JSON: JointDist3 probs do not match shape");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return JointDist3({shape[0], shape[1], shape[2]}, std::move(flat));
}

DensityOperator density_from_json(const Json &doc) {
    auto dims = get_as<std::vector<size_t>>(require(doc, "dims"), "dims");
    return DensityOperator(decode_matrix(doc), std::move(dims));
}

MeasurementSet measurement_from_json(const Json &doc) {
    const auto kind = measurement_kind_from_string(get_as<std::string>(require(doc, "kind"), "kind"));
    const auto &ops = require(doc, "operators");
    if (!ops.is_array()) {
        throw ValidationError("JSON: 'operators' must be an array");
    }
    std::vector<ComplexMatrix> matrices;
    for (const auto &op : ops) {
        matrices.push_back(decode_matrix(op));
    }
    return MeasurementSet(std::move(matrices), kind);
}

InequalityReport report_from_json(const Json &doc) {
    InequalityReport r;
    r.name = get_as<std::string>(require(doc, "name"), "name");
    r.lhs = decode_number(require(doc, "lhs"), "lhs");
    r.bound = decode_number(require(doc, "bound"), "bound");
    r.satisfied = get_as<bool>(require(doc, "satisfied"), "satisfied");
    r.margin = decode_number(require(doc, "margin"), "margin");
    r.input_descriptor = get_as<std::string>(require(doc, "input_descriptor"), "input_descriptor");
    if (doc.contains("notes")) {
        r.notes = get_as<std::string>(doc.at("notes"), "notes");
    }
    return r;
}

ThermoConfig thermo_config_from_json(const Json &doc) {
    if (!doc.is_object()) {
        throw ValidationError("JSON: ThermoConfig must be an object");
    }
    ThermoConfig cfg;
    if (doc.contains("k")) cfg.k = decode_number(doc.at("k"), "k");
    if (doc.contains("h")) cfg.h = decode_number(doc.at("h"), "h");
    cfg.validate();
    return cfg;
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ValidationError(fmt::format("JSON: {}", e.what()));
    }
}

namespace {

void write_precise(const Json &v, int indent, int depth, std::string &out) {
    const auto newline = [&](int level) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent * level), ' ');
        }
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                write_precise(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto &item : v) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                write_precise(item, indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float: {
            const double d = v.get<double>();
            out += std::isfinite(d) ? fmt::format("{:.16e}", d) : encode_number(d).dump();
            return;
        }
        default:
            out += v.dump();
    }
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string csv_number(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : encode_number(v).get<std::string>(); }

}  // namespace

std::string dump_precise(const Json &doc, int indent) {
    std::string out;
    write_precise(doc, indent, 0, out);
    return out;
}

std::string to_csv_row(const InequalityReport &r) {
    return fmt::format("{},{},{},{},{},{},{}", csv_field(r.name), csv_number(r.lhs), csv_number(r.bound),
                       r.satisfied ? "true" : "false", csv_number(r.margin), csv_field(r.input_descriptor),
                       csv_field(r.notes));
}

}  // namespace entropic
