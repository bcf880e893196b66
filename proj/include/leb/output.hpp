#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leb/analysis.hpp"
#include "leb/lebesgue.hpp"
#include "leb/nodes.hpp"

/// Serialization of node sets, sweep tables, fits, and residual reports to
/// CSV, JSON, and (for plots) SVG.  All emitters are deterministic: identical
/// inputs produce byte-identical output.
namespace leb::output {

inline constexpr const char* tool_version = "1.0.0";

/// Formats a double with 17 significant digits, enough for exact round trips
/// through text.
[[nodiscard]] inline std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

/// A header row plus string cells; the common shape of every CSV we emit.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Renders one or more tables as CSV; multiple tables are separated by a
/// single blank line.
[[nodiscard]] inline std::string csv_string(const std::vector<CsvTable>& tables) {
    std::ostringstream out;
    bool first = true;
    for (const CsvTable& table : tables) {
        if (!first) out << "\n";
        first = false;
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << "\n";
        }
    }
    return out.str();
}

/// Parses CSV produced by csv_string back into its blank-line-separated
/// tables.  Cells are returned verbatim (no numeric conversion).
[[nodiscard]] inline std::vector<CsvTable> parse_csv(const std::string& text) {
    std::vector<CsvTable> tables;
    std::istringstream in(text);
    std::string line;
    bool expect_header = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            expect_header = true;
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        if (expect_header) {
            tables.push_back({std::move(cells), {}});
            expect_header = false;
        } else {
            tables.back().rows.push_back(std::move(cells));
        }
    }
    return tables;
}

/// First node index used in listings: 0 when the set was augmented on the
/// left (the extra -1 traditionally being "node zero"), otherwise 1.
[[nodiscard]] inline int first_node_index(nodes::PointSetFamily family) {
    using PF = nodes::PointSetFamily;
    return (family == PF::GaussPlusLeftEnd || family == PF::RadauRightPlusLeftEnd) ? 0 : 1;
}

[[nodiscard]] inline CsvTable make_nodes_table(const nodes::NodeSet& ns) {
    CsvTable table{{"index", "tau", "theta"}, {}};
    const int base = first_node_index(ns.family);
    for (std::size_t i = 0; i < ns.size(); ++i)
        table.rows.push_back({std::to_string(base + static_cast<int>(i)),
                              format_g17(ns.nodes[i]), format_g17(ns.thetas[i])});
    return table;
}

[[nodiscard]] inline CsvTable make_sweep_table(const analysis::SweepTable& table) {
    CsvTable csv{{"N", "num_points", "lambda", "argmax_tau", "erdos_bound"}, {}};
    for (const analysis::SweepRow& row : table.rows)
        csv.rows.push_back({std::to_string(row.n), std::to_string(row.num_points),
                            format_g17(row.lambda), format_g17(row.argmax_tau),
                            format_g17(lebesgue::erdos_lower_bound(row.num_points))});
    return csv;
}

[[nodiscard]] inline CsvTable make_fit_table(const analysis::FitResult& fit) {
    CsvTable csv{{"model", "a", "b", "rms_residual", "max_rel_deviation", "n_lo", "n_hi"}, {}};
    csv.rows.push_back({analysis::to_string(fit.model), format_g17(fit.a), format_g17(fit.b),
                        format_g17(fit.rms_residual), format_g17(fit.max_rel_deviation),
                        std::to_string(fit.n_lo), std::to_string(fit.n_hi)});
    return csv;
}

[[nodiscard]] inline CsvTable make_residual_table(const std::vector<analysis::ResidualReport>& reports) {
    CsvTable csv{{"N", "r0", "sup_norm"}, {}};
    for (const analysis::ResidualReport& rep : reports)
        csv.rows.push_back(
            {std::to_string(rep.n), format_g17(rep.r0), format_g17(rep.sup_norm)});
    return csv;
}

[[nodiscard]] inline nlohmann::ordered_json meta_json() {
    return {{"tool", "lebtool"}, {"version", tool_version}};
}

[[nodiscard]] inline nlohmann::ordered_json nodes_json(const nodes::NodeSet& ns) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_json();
    doc["meta"]["family"] = nodes::to_string(ns.family);
    doc["meta"]["n"] = ns.n_quadrature;
    doc["rows"] = nlohmann::ordered_json::array();
    const int base = first_node_index(ns.family);
    for (std::size_t i = 0; i < ns.size(); ++i)
        doc["rows"].push_back({{"index", base + static_cast<int>(i)},
                               {"tau", ns.nodes[i]},
                               {"theta", ns.thetas[i]}});
    return doc;
}

[[nodiscard]] inline nlohmann::ordered_json fit_json(const analysis::FitResult& fit) {
    return {{"model", analysis::to_string(fit.model)},
            {"a", fit.a},
            {"b", fit.b},
            {"rms_residual", fit.rms_residual},
            {"max_rel_deviation", fit.max_rel_deviation},
            {"n_lo", fit.n_lo},
            {"n_hi", fit.n_hi}};
}

[[nodiscard]] inline nlohmann::ordered_json sweep_json(const analysis::SweepTable& table,
                                                       const analysis::FitResult* fit) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_json();
    doc["meta"]["family"] = nodes::to_string(table.family);
    if (!table.rows.empty()) {
        doc["meta"]["n_lo"] = table.rows.front().n;
        doc["meta"]["n_hi"] = table.rows.back().n;
    }
    doc["rows"] = nlohmann::ordered_json::array();
    for (const analysis::SweepRow& row : table.rows)
        doc["rows"].push_back({{"n", row.n},
                               {"num_points", row.num_points},
                               {"lambda", row.lambda},
                               {"argmax_tau", row.argmax_tau},
                               {"erdos_bound", lebesgue::erdos_lower_bound(row.num_points)}});
    if (fit != nullptr) doc["fit"] = fit_json(*fit);
    return doc;
}

[[nodiscard]] inline nlohmann::ordered_json residual_json(
    const std::string& problem, const std::vector<analysis::ResidualReport>& reports) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_json();
    doc["meta"]["problem"] = problem;
    if (!reports.empty()) doc["meta"]["family"] = nodes::to_string(reports.front().family);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const analysis::ResidualReport& rep : reports)
        doc["rows"].push_back({{"n", rep.n}, {"r0", rep.r0}, {"sup_norm", rep.sup_norm}});
    return doc;
}

namespace detail {

[[nodiscard]] inline std::string format_coord(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

[[nodiscard]] inline std::string format_label(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

}  // namespace detail

/// Renders a sweep (and optionally its fitted curve) as a fixed-size
/// 800x600 SVG: one polyline for the measured Lebesgue constants and, when a
/// fit is given, one for the model curve.  No external assets.
[[nodiscard]] inline std::string sweep_svg(const analysis::SweepTable& table,
                                           const analysis::FitResult* fit) {
    if (table.rows.empty()) throw std::domain_error("sweep_svg: empty table");
    constexpr double width = 800.0, height = 600.0;
    constexpr double ml = 70.0, mr = 25.0, mt = 25.0, mb = 55.0;
    const double x_lo = table.rows.front().n, x_hi = table.rows.back().n;
    double y_lo = table.rows.front().lambda, y_hi = y_lo;
    for (const analysis::SweepRow& row : table.rows) {
        y_lo = std::min(y_lo, row.lambda);
        y_hi = std::max(y_hi, row.lambda);
    }
    const double pad = (y_hi - y_lo) > 0.0 ? 0.05 * (y_hi - y_lo) : 0.5;
    y_lo -= pad;
    y_hi += pad;
    const double x_span = (x_hi > x_lo) ? x_hi - x_lo : 1.0;
    const auto sx = [&](double n) { return ml + (n - x_lo) / x_span * (width - ml - mr); };
    const auto sy = [&](double v) {
        return height - mb - (v - y_lo) / (y_hi - y_lo) * (height - mt - mb);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg << "  <line x1=\"" << detail::format_coord(ml) << "\" y1=\""
        << detail::format_coord(height - mb) << "\" x2=\"" << detail::format_coord(width - mr)
        << "\" y2=\"" << detail::format_coord(height - mb)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << detail::format_coord(ml) << "\" y1=\"" << detail::format_coord(mt)
        << "\" x2=\"" << detail::format_coord(ml) << "\" y2=\""
        << detail::format_coord(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    const auto polyline = [&](const std::string& stroke, const std::string& extra, auto&& value) {
        svg << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\""
            << extra << " points=\"";
        bool first = true;
        for (const analysis::SweepRow& row : table.rows) {
            if (!first) svg << " ";
            first = false;
            svg << detail::format_coord(sx(row.n)) << "," << detail::format_coord(sy(value(row)));
        }
        svg << "\"/>\n";
    };
    polyline("#1f77b4", "", [](const analysis::SweepRow& row) { return row.lambda; });
    if (fit != nullptr) {
        const auto model = [&](double n) {
            const double gn =
                fit->model == analysis::FitModel::SqrtAffine ? std::sqrt(n) : std::log(n);
            return fit->a * gn + fit->b;
        };
        polyline("#d62728", " stroke-dasharray=\"6,4\"",
                 [&](const analysis::SweepRow& row) { return model(row.n); });
    }
    svg << "  <text x=\"" << detail::format_coord(ml) << "\" y=\""
        << detail::format_coord(height - mb + 20.0) << "\" font-size=\"12\">N="
        << detail::format_label(x_lo) << "</text>\n";
    svg << "  <text x=\"" << detail::format_coord(width - mr - 60.0) << "\" y=\""
        << detail::format_coord(height - mb + 20.0) << "\" font-size=\"12\">N="
        << detail::format_label(x_hi) << "</text>\n";
    svg << "  <text x=\"5\" y=\"" << detail::format_coord(height - mb)
        << "\" font-size=\"12\">" << detail::format_label(y_lo) << "</text>\n";
    svg << "  <text x=\"5\" y=\"" << detail::format_coord(mt + 12.0) << "\" font-size=\"12\">"
        << detail::format_label(y_hi) << "</text>\n";
    svg << "  <text x=\"" << detail::format_coord(width / 2.0 - 80.0) << "\" y=\""
        << detail::format_coord(height - 12.0) << "\" font-size=\"14\">Lebesgue constant, "
        << nodes::to_string(table.family) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace leb::output
