#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "leb/analysis.hpp"
#include "leb/output.hpp"

using namespace leb;
using nodes::PointSetFamily;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

analysis::SweepTable small_sweep() {
    return analysis::sweep_constants(PointSetFamily::GaussPlusLeftEnd, 5, 12);
}

}  // namespace

TEST_CASE("format_g17 round-trips doubles exactly", "[output]") {
    const double values[] = {0.0,
                             -0.0,
                             1.0,
                             -1.0 / 3.0,
                             0.1,
                             std::numbers::pi,
                             std::sqrt(2.0),
                             1e300,
                             -2.2250738585072014e-308,
                             6.02214076e23,
                             -0.49999999999999994};
    for (double value : values) {
        const double back = std::stod(output::format_g17(value));
        CHECK(back == value);
    }
}

TEST_CASE("csv emit and parse are inverse on multi-table documents", "[output]") {
    output::CsvTable first{{"a", "b"}, {{"1", "x"}, {"2", "y"}}};
    output::CsvTable second{{"only"}, {{"z"}}};
    const std::string text = output::csv_string({first, second});
    CHECK(count_occurrences(text, "\n\n") == 1);

    const std::vector<output::CsvTable> back = output::parse_csv(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].columns == first.columns);
    CHECK(back[0].rows == first.rows);
    CHECK(back[1].columns == second.columns);
    CHECK(back[1].rows == second.rows);
}

TEST_CASE("node listings start at index 0 only for left-augmented families", "[output]") {
    CHECK(output::first_node_index(PointSetFamily::GaussPlusLeftEnd) == 0);
    CHECK(output::first_node_index(PointSetFamily::RadauRightPlusLeftEnd) == 0);
    CHECK(output::first_node_index(PointSetFamily::GaussLegendre) == 1);
    CHECK(output::first_node_index(PointSetFamily::RadauRight) == 1);
    CHECK(output::first_node_index(PointSetFamily::RadauLeft) == 1);
    CHECK(output::first_node_index(PointSetFamily::Equidistant) == 1);
}

TEST_CASE("nodes CSV lists radau-right n=2 exactly", "[output]") {
    const nodes::NodeSet set = nodes::build_point_set(PointSetFamily::RadauRight, 2);
    const output::CsvTable table = output::make_nodes_table(set);
    REQUIRE(table.columns == std::vector<std::string>{"index", "tau", "theta"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][0] == "1");
    CHECK(std::stod(table.rows[0][1]) == Catch::Approx(-1.0 / 3.0).margin(1e-15));
    CHECK(table.rows[1][0] == "2");
    CHECK(table.rows[1][1] == "1");
    CHECK(table.rows[1][2] == "0");
}

TEST_CASE("nodes CSV round-trips node coordinates exactly", "[output]") {
    for (PointSetFamily family :
         {PointSetFamily::GaussLegendre, PointSetFamily::GaussPlusLeftEnd,
          PointSetFamily::RadauRightPlusLeftEnd}) {
        const nodes::NodeSet set = nodes::build_point_set(family, 9);
        const std::string text = output::csv_string({output::make_nodes_table(set)});
        const std::vector<output::CsvTable> back = output::parse_csv(text);
        REQUIRE(back.size() == 1);
        REQUIRE(back[0].rows.size() == set.size());
        for (std::size_t i = 0; i < set.size(); ++i) {
            CHECK(std::stod(back[0].rows[i][1]) == set.nodes[i]);
            CHECK(std::stod(back[0].rows[i][2]) == set.thetas[i]);
        }
    }
}

TEST_CASE("sweep CSV with fit emits two tables that round-trip", "[output]") {
    const analysis::SweepTable sweep = small_sweep();
    const analysis::FitResult fit = analysis::fit_model(sweep, analysis::FitModel::SqrtAffine);
    const std::string text =
        output::csv_string({output::make_sweep_table(sweep), output::make_fit_table(fit)});

    const std::vector<output::CsvTable> back = output::parse_csv(text);
    REQUIRE(back.size() == 2);
    REQUIRE(back[0].columns ==
            std::vector<std::string>{"N", "num_points", "lambda", "argmax_tau", "erdos_bound"});
    REQUIRE(back[0].rows.size() == sweep.rows.size());
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        CHECK(std::stoi(back[0].rows[i][0]) == sweep.rows[i].n);
        CHECK(std::stoi(back[0].rows[i][1]) == sweep.rows[i].num_points);
        CHECK(std::stod(back[0].rows[i][2]) == sweep.rows[i].lambda);
        CHECK(std::stod(back[0].rows[i][3]) == sweep.rows[i].argmax_tau);
        CHECK(std::stod(back[0].rows[i][4]) ==
              lebesgue::erdos_lower_bound(sweep.rows[i].num_points));
    }
    REQUIRE(back[1].columns ==
            std::vector<std::string>{"model", "a", "b", "rms_residual", "max_rel_deviation",
                                     "n_lo", "n_hi"});
    REQUIRE(back[1].rows.size() == 1);
    CHECK(back[1].rows[0][0] == "sqrt");
    CHECK(std::stod(back[1].rows[0][1]) == fit.a);
    CHECK(std::stod(back[1].rows[0][2]) == fit.b);
    CHECK(std::stoi(back[1].rows[0][5]) == 5);
    CHECK(std::stoi(back[1].rows[0][6]) == 12);
}

TEST_CASE("residual CSV round-trips", "[output]") {
    std::vector<analysis::ResidualReport> reports;
    for (int n : {5, 10})
        reports.push_back(analysis::collocation_residual(analysis::find_problem("exp"),
                                                         PointSetFamily::GaussPlusLeftEnd, n));
    const std::string text = output::csv_string({output::make_residual_table(reports)});
    const std::vector<output::CsvTable> back = output::parse_csv(text);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].columns == std::vector<std::string>{"N", "r0", "sup_norm"});
    REQUIRE(back[0].rows.size() == 2);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(std::stoi(back[0].rows[i][0]) == reports[i].n);
        CHECK(std::stod(back[0].rows[i][1]) == reports[i].r0);
        CHECK(std::stod(back[0].rows[i][2]) == reports[i].sup_norm);
    }
}

TEST_CASE("nodes JSON carries meta and rows", "[output]") {
    const nodes::NodeSet set = nodes::build_point_set(PointSetFamily::RadauRight, 2);
    const nlohmann::json doc = nlohmann::json::parse(output::nodes_json(set).dump(2));
    CHECK(doc["meta"]["tool"] == "lebtool");
    CHECK(doc["meta"]["version"] == output::tool_version);
    CHECK(doc["meta"]["family"] == "radau-right");
    CHECK(doc["meta"]["n"] == 2);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["index"] == 1);
    CHECK(doc["rows"][0]["tau"].get<double>() == Catch::Approx(-1.0 / 3.0).margin(1e-15));
    CHECK(doc["rows"][1]["tau"].get<double>() == 1.0);
    CHECK(doc["rows"][1]["theta"].get<double>() == 0.0);
}

TEST_CASE("sweep JSON embeds the fit block when given one", "[output]") {
    const analysis::SweepTable sweep = small_sweep();
    const analysis::FitResult fit = analysis::fit_model(sweep, analysis::FitModel::LogAffine);

    const nlohmann::json bare = nlohmann::json::parse(output::sweep_json(sweep, nullptr).dump());
    CHECK(bare["meta"]["family"] == "gauss-plus-left");
    CHECK(bare["meta"]["n_lo"] == 5);
    CHECK(bare["meta"]["n_hi"] == 12);
    CHECK(!bare.contains("fit"));
    REQUIRE(bare["rows"].size() == sweep.rows.size());
    CHECK(bare["rows"][0]["lambda"].get<double>() == sweep.rows[0].lambda);

    const nlohmann::json with_fit =
        nlohmann::json::parse(output::sweep_json(sweep, &fit).dump());
    REQUIRE(with_fit.contains("fit"));
    CHECK(with_fit["fit"]["model"] == "log");
    CHECK(with_fit["fit"]["a"].get<double>() == fit.a);
    CHECK(with_fit["fit"]["n_hi"] == 12);
}

TEST_CASE("residual JSON names its problem and family", "[output]") {
    std::vector<analysis::ResidualReport> reports{analysis::collocation_residual(
        analysis::find_problem("rational"), PointSetFamily::RadauRight, 7)};
    const nlohmann::json doc =
        nlohmann::json::parse(output::residual_json("rational", reports).dump());
    CHECK(doc["meta"]["problem"] == "rational");
    CHECK(doc["meta"]["family"] == "radau-right");
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["n"] == 7);
    CHECK(doc["rows"][0]["sup_norm"].get<double>() == reports[0].sup_norm);
}

TEST_CASE("sweep SVG has the fixed frame and one polyline per curve", "[output]") {
    const analysis::SweepTable sweep = small_sweep();
    const analysis::FitResult fit = analysis::fit_model(sweep, analysis::FitModel::SqrtAffine);

    const std::string bare = output::sweep_svg(sweep, nullptr);
    CHECK(bare.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(count_occurrences(bare, "<polyline") == 1);
    CHECK(bare.find("#1f77b4") != std::string::npos);
    CHECK(bare.find("gauss-plus-left") != std::string::npos);

    const std::string with_fit = output::sweep_svg(sweep, &fit);
    CHECK(count_occurrences(with_fit, "<polyline") == 2);
    CHECK(with_fit.find("#d62728") != std::string::npos);
    CHECK(with_fit.find("stroke-dasharray") != std::string::npos);

    CHECK_THROWS_AS(output::sweep_svg(analysis::SweepTable{}, nullptr), std::domain_error);
}

TEST_CASE("emitters are deterministic", "[output]") {
    const nodes::NodeSet set = nodes::build_point_set(PointSetFamily::GaussPlusLeftEnd, 17);
    CHECK(output::csv_string({output::make_nodes_table(set)}) ==
          output::csv_string({output::make_nodes_table(set)}));

    const analysis::SweepTable sweep = small_sweep();
    const analysis::FitResult fit = analysis::fit_model(sweep, analysis::FitModel::SqrtAffine);
    CHECK(output::sweep_json(sweep, &fit).dump(2) == output::sweep_json(sweep, &fit).dump(2));
    CHECK(output::sweep_svg(sweep, &fit) == output::sweep_svg(sweep, &fit));
}
