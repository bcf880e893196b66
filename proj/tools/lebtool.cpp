// lebtool: command-line front end for the leb library.  Subcommands generate
// point sets, sweep Lebesgue constants (with optional growth fits), run
// collocation-residual experiments, and execute the cross-module invariant
// check suite.  Exit codes: 0 success, 1 failed check, 2 usage error,
// 3 numeric failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leb/analysis.hpp"
#include "leb/common.hpp"
#include "leb/interp.hpp"
#include "leb/jacobi.hpp"
#include "leb/lebesgue.hpp"
#include "leb/nodes.hpp"
#include "leb/output.hpp"

namespace {

using namespace leb;
using nodes::PointSetFamily;

/// Writes `content` to `path`, with "-" meaning standard output.  Returns 0 on
/// success, 2 when the file cannot be written.
int write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "lebtool: cannot open '" << path << "' for writing\n";
        return 2;
    }
    out << content;
    return out.good() ? 0 : 2;
}

/// Rejects plot-only formats for table commands.
bool require_table_format(const std::string& format, const char* command) {
    if (format != "svg") return true;
    std::cerr << "lebtool: " << command << " emits tables; --format svg is only valid for sweep\n";
    return false;
}

int run_nodes(const std::string& family_name, int n, const std::string& format,
              const std::string& path) {
    if (!require_table_format(format, "nodes")) return 2;
    const PointSetFamily family = nodes::family_from_string(family_name);
    const nodes::NodeSet set = nodes::build_point_set(family, n);
    const std::string text = format == "csv"
                                 ? output::csv_string({output::make_nodes_table(set)})
                                 : output::nodes_json(set).dump(2) + "\n";
    return write_output(path, text);
}

int run_sweep(const std::string& family_name, int from, int to, const std::string& fit_name,
              const std::string& format, const std::string& path) {
    const PointSetFamily family = nodes::family_from_string(family_name);
    if (from < 2 || to > 200 || from > to)
        throw std::domain_error("sweep: need 2 <= from <= to <= 200");
    if (!fit_name.empty() && to - from + 1 < 3) {
        std::cerr << "lebtool: sweep --fit needs at least 3 rows (got " << to - from + 1
                  << "); widen --from/--to\n";
        return 2;
    }
    const analysis::SweepTable table = analysis::sweep_constants(family, from, to);
    std::optional<analysis::FitResult> fit;
    if (!fit_name.empty())
        fit = analysis::fit_model(table, fit_name == "sqrt" ? analysis::FitModel::SqrtAffine
                                                            : analysis::FitModel::LogAffine);
    const analysis::FitResult* fit_ptr = fit ? &*fit : nullptr;
    std::string text;
    if (format == "csv") {
        std::vector<output::CsvTable> tables{output::make_sweep_table(table)};
        if (fit) tables.push_back(output::make_fit_table(*fit));
        text = output::csv_string(tables);
    } else if (format == "json") {
        text = output::sweep_json(table, fit_ptr).dump(2) + "\n";
    } else {
        text = output::sweep_svg(table, fit_ptr);
    }
    return write_output(path, text);
}

int run_residual(const std::string& problem_name, const std::string& family_name,
                 const std::vector<int>& degrees, const std::string& format,
                 const std::string& path) {
    if (!require_table_format(format, "residual")) return 2;
    const analysis::CollocationProblem& problem = analysis::find_problem(problem_name);
    const PointSetFamily family = nodes::family_from_string(family_name);
    std::vector<analysis::ResidualReport> reports;
    reports.reserve(degrees.size());
    for (int n : degrees) reports.push_back(analysis::collocation_residual(problem, family, n));
    const std::string text = format == "csv"
                                 ? output::csv_string({output::make_residual_table(reports)})
                                 : output::residual_json(problem_name, reports).dump(2) + "\n";
    return write_output(path, text);
}

// ---------------------------------------------------------------------------
// Invariant check suite
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool ok = false;
    double worst_margin = 0.0;  ///< smallest slack seen; positive means pass
};

/// Shared state for the checks.  When `tamper` is set (hidden test hook) the
/// first zero of every computed zero list is shifted by 1e-3, which must be
/// caught by the zero-residual (and typically interlacing) checks.
struct CheckContext {
    int max_n = 50;
    bool tamper = false;

    [[nodiscard]] std::vector<std::vector<double>> zero_table(const jacobi::JacobiParams& params,
                                                              int n_max) const {
        std::vector<std::vector<double>> table = nodes::jacobi_zero_table(params, n_max);
        if (tamper)
            for (std::vector<double>& zeros : table) zeros.front() += 1e-3;
        return table;
    }
};

/// Wraps a zero list as a NodeSet (appending +1 for Radau) so the angle
/// diagnostics can run on possibly tampered zeros.
nodes::NodeSet node_set_from_zeros(PointSetFamily family, int n, std::vector<double> zeros) {
    if (family == PointSetFamily::RadauRight) zeros.push_back(1.0);
    nodes::NodeSet set;
    set.family = family;
    set.n_quadrature = n;
    set.nodes = std::move(zeros);
    set.thetas.reserve(set.nodes.size());
    for (double tau : set.nodes)
        set.thetas.push_back(tau == 1.0 ? 0.0 : tau == -1.0 ? pi : std::acos(tau));
    return set;
}

double poly_eval(const std::vector<double>& coeff, double tau) {
    double acc = 0.0;
    for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * tau + coeff[i];
    return acc;
}

double poly_deriv_eval(const std::vector<double>& coeff, double tau) {
    double acc = 0.0;
    for (std::size_t i = coeff.size(); i-- > 1;) acc = acc * tau + coeff[i] * static_cast<double>(i);
    return acc;
}

/// P_n^{(a,b)}(-tau) == (-1)^n P_n^{(b,a)}(tau) for random parameters on a
/// 101-point grid; margin is relative slack against 1e-11 * max(1, |value|).
CheckResult check_flip_identity(const CheckContext& ctx) {
    CheckResult result{"flip-identity", true, std::numeric_limits<double>::infinity()};
    std::mt19937_64 rng(0xF11Eu);
    std::uniform_real_distribution<double> param(-0.9, 3.0);
    const std::vector<double> grid = uniform_grid(101);
    for (int trial = 0; trial < 12; ++trial) {
        const jacobi::JacobiParams ab{param(rng), param(rng)};
        const jacobi::JacobiParams ba{ab.beta, ab.alpha};
        for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 50}) {
            if (n > std::min(50, ctx.max_n)) continue;
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            for (double tau : grid) {
                const double lhs = jacobi_eval(ab, n, -tau);
                const double rhs = sign * jacobi_eval(ba, n, tau);
                const double tol = 1e-11 * std::max(1.0, std::abs(rhs));
                result.worst_margin =
                    std::min(result.worst_margin, (tol - std::abs(lhs - rhs)) / tol);
            }
        }
    }
    result.ok = result.worst_margin > 0.0;
    return result;
}

/// Angle bracketing for Gauss or Radau zeros; margin is the smallest raw slack
/// reported by the diagnostics (radians).
CheckResult check_zero_angles(const CheckContext& ctx, PointSetFamily family,
                              const std::string& name) {
    CheckResult result{name, true, std::numeric_limits<double>::infinity()};
    const jacobi::JacobiParams params =
        family == PointSetFamily::GaussLegendre ? jacobi::JacobiParams{0.0, 0.0}
                                                : jacobi::JacobiParams{1.0, 0.0};
    const auto table = ctx.zero_table(params, ctx.max_n);
    for (int n = 2; n <= ctx.max_n; ++n) {
        const std::size_t row = static_cast<std::size_t>(n) -
                                (family == PointSetFamily::GaussLegendre ? 1 : 2);
        const nodes::NodeSet set = node_set_from_zeros(family, n, table[row]);
        const nodes::ZeroAngleDiagnostics diag = nodes::zero_angle_diagnostics(set);
        for (const nodes::AngleCheck& check : diag.checks) {
            result.ok = result.ok && check.ok;
            result.worst_margin = std::min(result.worst_margin, check.margin);
        }
    }
    return result;
}

/// Adjacent Radau zero angles differ by less than 2.5*pi/N.
CheckResult check_radau_separation(const CheckContext& ctx) {
    CheckResult result{"radau-separation", true, std::numeric_limits<double>::infinity()};
    const auto table = ctx.zero_table({1.0, 0.0}, ctx.max_n);
    for (int n = 3; n <= ctx.max_n; ++n) {
        const nodes::NodeSet set =
            node_set_from_zeros(PointSetFamily::RadauRight, n, table[static_cast<std::size_t>(n) - 2]);
        const nodes::ZeroAngleDiagnostics diag = nodes::zero_angle_diagnostics(set);
        for (const nodes::AngleCheck& check : diag.separation) {
            result.ok = result.ok && check.ok;
            result.worst_margin = std::min(result.worst_margin, check.margin);
        }
    }
    return result;
}

/// |P(z)| at every tabulated zero must vanish to within derivative scale times
/// (1e-12 * local spacing + 2e-15); margin is relative slack against that
/// bound.  This is the check a 1e-3 node perturbation cannot survive.
CheckResult check_zero_residual(const CheckContext& ctx) {
    CheckResult result{"zero-residual", true, std::numeric_limits<double>::infinity()};
    for (const jacobi::JacobiParams& params :
         {jacobi::JacobiParams{0.0, 0.0}, jacobi::JacobiParams{1.0, 0.0}}) {
        const auto table = ctx.zero_table(params, ctx.max_n);
        for (int n = 1; n <= ctx.max_n; ++n) {
            const std::vector<double>& zeros = table[static_cast<std::size_t>(n) - 1];
            for (std::size_t i = 0; i < zeros.size(); ++i) {
                const double lo = (i == 0) ? -1.0 : zeros[i - 1];
                const double hi = (i + 1 == zeros.size()) ? 1.0 : zeros[i + 1];
                const double spacing = std::min(zeros[i] - lo, hi - zeros[i]);
                const double scale = std::abs(jacobi_deriv(params, n, zeros[i]));
                const double bound = scale * (1e-12 * spacing + 2e-15);
                const double residual = std::abs(jacobi_eval(params, n, zeros[i]));
                result.worst_margin = std::min(result.worst_margin, (bound - residual) / bound);
            }
        }
    }
    result.ok = result.worst_margin > 0.0;
    return result;
}

/// Zeros of P_{N-1}^{(1,0)} lie strictly between the zeros of P_N and those of
/// P_{N-1}; margin is the smallest gap (tau units).
CheckResult check_interlacing(const CheckContext& ctx) {
    CheckResult result{"interlacing", true, std::numeric_limits<double>::infinity()};
    const auto legendre = ctx.zero_table({0.0, 0.0}, ctx.max_n);
    const auto radau = ctx.zero_table({1.0, 0.0}, ctx.max_n - 1);
    for (int n = 2; n <= ctx.max_n; ++n) {
        const auto& z = radau[static_cast<std::size_t>(n) - 2];
        const auto& below = legendre[static_cast<std::size_t>(n) - 2];  // zeros of P_{N-1}
        const auto& above = legendre[static_cast<std::size_t>(n) - 1];  // zeros of P_N
        for (std::size_t i = 0; i < z.size(); ++i) {
            result.worst_margin = std::min(result.worst_margin, z[i] - above[i]);
            result.worst_margin = std::min(result.worst_margin, below[i] - z[i]);
        }
    }
    result.ok = result.worst_margin > 0.0;
    return result;
}

/// Random power-basis polynomials never violate ||p'|| <= N^2 ||p|| on the
/// shared grid; margin is relative slack.
CheckResult check_markov_witness(const CheckContext& ctx) {
    CheckResult result{"markov-witness", true, std::numeric_limits<double>::infinity()};
    std::mt19937 rng(0x5EED);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int degree : {1, 2, 5, 11, 19, 30}) {
        if (degree > std::min(30, ctx.max_n)) continue;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> coeff(static_cast<std::size_t>(degree) + 1);
            for (double& c : coeff) c = unit(rng);
            const double norm_p = grid_sup_norm([&](double t) { return poly_eval(coeff, t); });
            const double norm_dp =
                grid_sup_norm([&](double t) { return poly_deriv_eval(coeff, t); });
            const double bound = static_cast<double>(degree) * degree * norm_p * (1.0 + 1e-9);
            result.worst_margin = std::min(result.worst_margin, (bound - norm_dp) / bound);
        }
    }
    result.ok = result.worst_margin > 0.0;
    return result;
}

/// Every family's Lebesgue constant sits above the Erdos lower bound; margin
/// is the smallest gap.
CheckResult check_erdos_floor(const CheckContext& ctx) {
    CheckResult result{"erdos-floor", true, std::numeric_limits<double>::infinity()};
    const int cap = std::min(ctx.max_n, 100);
    for (PointSetFamily family : nodes::buildable_families()) {
        for (int n : {2, 3, 5, 8, 13, 21, 34, 55, 89}) {
            if (n > cap) continue;
            const nodes::NodeSet set = nodes::build_point_set(family, n);
            const interp::BarycentricBasis basis = interp::barycentric_weights(set.nodes);
            const double lambda = lebesgue::lebesgue_constant(basis).constant;
            const double floor =
                lebesgue::erdos_lower_bound(static_cast<int>(set.size()));
            result.worst_margin = std::min(result.worst_margin, lambda - floor);
        }
    }
    result.ok = result.worst_margin > 0.0;
    return result;
}

int run_check(int max_n, bool tamper, const std::string& format, const std::string& path) {
    if (!require_table_format(format, "check")) return 2;
    if (max_n < 2 || max_n > 200) throw std::domain_error("check: need 2 <= max-n <= 200");
    const CheckContext ctx{max_n, tamper};
    const std::vector<CheckResult> results{
        check_flip_identity(ctx),
        check_zero_angles(ctx, PointSetFamily::GaussLegendre, "legendre-zero-angles"),
        check_zero_angles(ctx, PointSetFamily::RadauRight, "radau-zero-angles"),
        check_radau_separation(ctx),
        check_zero_residual(ctx),
        check_interlacing(ctx),
        check_markov_witness(ctx),
        check_erdos_floor(ctx),
    };
    bool all_ok = true;
    for (const CheckResult& result : results) all_ok = all_ok && result.ok;

    std::string text;
    if (format == "csv") {
        output::CsvTable table{{"check", "status", "worst_margin"}, {}};
        for (const CheckResult& result : results)
            table.rows.push_back({result.name, result.ok ? "pass" : "fail",
                                  output::format_g17(result.worst_margin)});
        text = output::csv_string({table});
    } else {
        nlohmann::ordered_json doc;
        doc["meta"] = output::meta_json();
        doc["meta"]["max_n"] = max_n;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const CheckResult& result : results)
            doc["rows"].push_back({{"check", result.name},
                                   {"status", result.ok ? "pass" : "fail"},
                                   {"worst_margin", result.worst_margin}});
        doc["meta"]["all_ok"] = all_ok;
        text = doc.dump(2) + "\n";
    }
    const int io_status = write_output(path, text);
    if (io_status != 0) return io_status;
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi/Legendre point sets, Lebesgue constants, and collocation residuals"};
    app.set_version_flag("--version", leb::output::tool_version);
    app.require_subcommand(1);

    const std::string family_help =
        "Point-set family: gauss, gauss-plus-left, gauss-plus-right, radau-right, radau-left, "
        "radau-right-plus-left, radau-left-plus-right, equidistant";

    std::string family, format = "csv", out_path = "-";
    int n = 0;

    CLI::App* cmd_nodes = app.add_subcommand("nodes", "Emit one point set (index, tau, theta)");
    cmd_nodes->add_option("--family", family, family_help)->required();
    cmd_nodes->add_option("--n", n, "Quadrature point count")->required();
    cmd_nodes->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd_nodes->add_option("--output", out_path, "Output file, or - for stdout");

    int from = 0, to = 0;
    std::string fit_name;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Lebesgue constants over a range of N, with optional fit");
    cmd_sweep->add_option("--family", family, family_help)->required();
    cmd_sweep->add_option("--from", from, "Smallest N (>= 2)")->required();
    cmd_sweep->add_option("--to", to, "Largest N (<= 200)")->required();
    cmd_sweep->add_option("--fit", fit_name, "Fit model: sqrt (a*sqrt(N)+b) or log (a*ln(N)+b)")
        ->check(CLI::IsMember({"sqrt", "log"}));
    cmd_sweep->add_option("--format", format, "Output format: csv, json, or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd_sweep->add_option("--output", out_path, "Output file, or - for stdout");

    std::string problem;
    std::vector<int> degrees;
    CLI::App* cmd_residual =
        app.add_subcommand("residual", "Collocation residuals of a test problem");
    cmd_residual->add_option("--problem", problem, "Problem name: linear, exp, rational, exp-shifted")
        ->required();
    cmd_residual->add_option("--family", family, family_help)->required();
    cmd_residual->add_option("--n", degrees, "Comma-separated quadrature counts")
        ->required()
        ->delimiter(',');
    cmd_residual->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd_residual->add_option("--output", out_path, "Output file, or - for stdout");

    int max_n = 50;
    bool tamper = false;
    CLI::App* cmd_check = app.add_subcommand("check", "Run the cross-module invariant suite");
    cmd_check->add_option("--max-n", max_n, "Largest degree/point count exercised (2..200)");
    cmd_check->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd_check->add_option("--output", out_path, "Output file, or - for stdout");
    cmd_check->add_flag("--tamper", tamper)->group("");  // test hook: perturb first zeros by 1e-3

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_nodes->parsed()) return run_nodes(family, n, format, out_path);
        if (cmd_sweep->parsed()) return run_sweep(family, from, to, fit_name, format, out_path);
        if (cmd_residual->parsed()) return run_residual(problem, family, degrees, format, out_path);
        return run_check(max_n, tamper, format, out_path);
    } catch (const leb::numerical_error& e) {
        std::cerr << "lebtool: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "lebtool: " << e.what() << "\n";
        return 2;
    }
}
