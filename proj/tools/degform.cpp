#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degform/report_io.hpp"
#include "degform/sweep.hpp"

namespace {

using degform::Json;

void emit(const Json& json, const std::string& text,
          const std::string& format) {
    if (format == "json")
        std::cout << json.dump(2) << "\n";
    else
        std::cout << text;
}

Json degrees_json(const degform::CompleteIntersection& X) {
    Json degrees = Json::array();
    for (int d : X.degrees())
        degrees.push_back(std::to_string(d));
    return degrees;
}

void run_chi(int ambient, const std::string& degrees,
             const std::string& format) {
    const degform::CompleteIntersection X(ambient,
                                          degform::parse_int_list(degrees));
    const degform::BigInt via_residue = degform::euler_char_residue(X);
    const degform::BigInt via_charnum =
        degform::euler_char_via_charnumbers(degform::compute_char_numbers(X));
    if (via_residue != via_charnum)
        throw degform::internal_inconsistency_error(
            "chi: residue route gives " + via_residue.str() +
            " but the characteristic-number route gives " +
            via_charnum.str() + " for " + X.to_string());

    Json j;
    j["command"] = "chi";
    j["inputs"] = Json{{"ambient", std::to_string(X.ambient())},
                       {"degrees", degrees_json(X)}};
    j["results"] = Json{{"chi", via_residue.str()},
                        {"residue_route", via_residue.str()},
                        {"charnumber_route", via_charnum.str()}};
    j["verdicts"] =
        Json{{"routes_agree",
              Json{{"verdict", "pass"},
                   {"detail", "residue route = characteristic-number route = " +
                                  via_residue.str()}}}};

    std::string text;
    text += "variety: " + X.to_string() + "\n";
    text += "chi(O_X): " + via_residue.str() + "\n";
    text += "residue route: " + via_residue.str() + "\n";
    text += "characteristic-number route: " + via_charnum.str() + "\n";
    text += "routes agree: yes\n";
    emit(j, text, format);
}

void run_tau(int d, const std::string& format) {
    if (d < 0)
        throw degform::invalid_operand_error("tau: d must be >= 0");
    const degform::BigInt tau = degform::todd_number(d);
    Json j;
    j["command"] = "tau";
    j["inputs"] = Json{{"d", std::to_string(d)}};
    j["results"] = Json{{"tau", tau.str()}};
    j["verdicts"] = Json::object();
    emit(j, "tau_" + std::to_string(d) + " = " + tau.str() + "\n", format);
}

void run_charnum(int ambient, const std::string& degrees,
                 const std::string& partition, const std::string& format) {
    const degform::CompleteIntersection X(ambient,
                                          degform::parse_int_list(degrees));
    const degform::Partition alpha = degform::parse_partition(partition);
    const degform::BigInt value = degform::char_number(X, alpha);
    const degform::BigInt cross = degform::char_number_via_chern(X, alpha);
    if (value != cross)
        throw degform::internal_inconsistency_error(
            "charnum: powersum route gives " + value.str() +
            " but the Chern-coefficient route gives " + cross.str() +
            " for " + X.to_string() + ", alpha = " + alpha.to_string());

    Json j;
    j["command"] = "charnum";
    j["inputs"] = Json{{"ambient", std::to_string(X.ambient())},
                       {"degrees", degrees_json(X)},
                       {"partition", alpha.to_string()}};
    j["results"] = Json{{"char_number", value.str()}};
    j["verdicts"] = Json::object();

    std::string text;
    text += "variety: " + X.to_string() + "\n";
    text += "c_" + alpha.to_string() + " = " + value.str() + "\n";
    emit(j, text, format);
}

void run_report(int ambient, const std::string& degrees,
                const std::string& nx, const std::string& format) {
    std::optional<degform::BigInt> point_index;
    if (!nx.empty())
        point_index = degform::parse_bigint(nx);
    const degform::CompleteIntersection X(
        ambient, degform::parse_int_list(degrees), point_index);
    const degform::IncompressibilityReport report = degform::build_report(X);
    emit(degform::report_to_json(report), degform::report_to_text(report),
         format);
}

void run_degform(const std::string& chi_y, int dim_y,
                 const std::string& chi_x, const std::string& deg_f,
                 const std::string& nx, const std::string& format) {
    const degform::MapHypothesis h{
        degform::parse_bigint(chi_y), dim_y, degform::parse_bigint(chi_x),
        degform::parse_bigint(deg_f), degform::parse_bigint(nx)};
    const bool holds = degform::degree_formula_holds(h);
    const degform::BigInt tau = degform::todd_number(h.dim_Y - 1);
    const degform::BigInt difference =
        (h.chi_Y - h.deg_f * h.chi_X) * tau;
    const std::string detail =
        "n_X = " + h.n_X.str() + (holds ? " divides" : " does not divide") +
        " (chi_Y - deg_f * chi_X) * tau_{dim_Y - 1} = " + difference.str();

    Json j;
    j["command"] = "degform";
    j["inputs"] = Json{{"chi_y", h.chi_Y.str()},
                       {"dim_y", std::to_string(h.dim_Y)},
                       {"chi_x", h.chi_X.str()},
                       {"deg_f", h.deg_f.str()},
                       {"nx", h.n_X.str()}};
    j["results"] = Json{{"tau_dim_y_minus_1", tau.str()},
                        {"difference_times_tau", difference.str()}};
    j["verdicts"] = Json{{"degree_formula",
                          Json{{"verdict", holds ? "holds" : "violated"},
                               {"detail", detail}}}};

    std::string text;
    text += "tau_{dim_Y - 1}: " + tau.str() + "\n";
    text += "(chi_Y - deg_f * chi_X) * tau: " + difference.str() + "\n";
    text += std::string("degree formula: ") + (holds ? "holds" : "violated") +
            " (" + detail + ")\n";
    emit(j, text, format);
}

void run_sweep(int max_dim, int max_degree, int max_m,
               const std::string& format) {
    const degform::SweepBounds bounds{max_dim, max_degree, max_m};
    const std::vector<degform::CheckResult> checks =
        degform::run_all_checks(bounds);

    Json checks_json = Json::array();
    Json verdicts;
    std::string text;
    long long failed = 0;
    for (const degform::CheckResult& c : checks) {
        Json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["cases"] = std::to_string(c.cases);
        entry["failures"] = std::to_string(c.failures);
        entry["detail"] = c.detail;
        checks_json.push_back(std::move(entry));
        verdicts[c.name] = c.passed ? "pass" : "fail";
        if (!c.passed)
            ++failed;
        text += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name +
                " (" + std::to_string(c.cases) + " cases)";
        if (!c.passed)
            text += ": " + c.detail;
        text += "\n";
    }
    text += std::to_string(checks.size() - failed) + "/" +
            std::to_string(checks.size()) + " checks passed\n";

    Json j;
    j["command"] = "sweep";
    j["inputs"] = Json{{"max_dim", std::to_string(max_dim)},
                       {"max_degree", std::to_string(max_degree)},
                       {"max_m", std::to_string(max_m)}};
    j["results"] = Json{{"checks", std::move(checks_json)}};
    j["verdicts"] = std::move(verdicts);
    emit(j, text, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic calculator for Euler characteristics, "
                 "characteristic numbers, and incompressibility criteria of "
                 "complete intersections"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int ambient = 0;
    std::string degrees;
    std::string partition;
    std::string nx;
    int tau_d = 0;
    std::string chi_y, chi_x, deg_f;
    int dim_y = 1;
    int max_dim = 5, max_degree = 5, max_m = 3;

    CLI::App* chi = app.add_subcommand(
        "chi", "Euler characteristic chi(O_X) by two independent routes");
    chi->fallthrough();
    chi->add_option("--ambient", ambient, "ambient projective dimension n")
        ->required();
    chi->add_option("--degrees", degrees,
                    "comma-separated hypersurface degrees (empty: X = P^n)");
    chi->callback([&] { run_chi(ambient, degrees, format); });

    CLI::App* tau = app.add_subcommand(
        "tau", "universal Todd denominator tau_d");
    tau->fallthrough();
    tau->add_option("d", tau_d, "index d >= 0")->required();
    tau->callback([&] { run_tau(tau_d, format); });

    CLI::App* charnum = app.add_subcommand(
        "charnum", "characteristic number c_alpha of -T_X");
    charnum->fallthrough();
    charnum->add_option("--ambient", ambient, "ambient projective dimension")
        ->required();
    charnum->add_option("--degrees", degrees,
                        "comma-separated hypersurface degrees");
    charnum
        ->add_option("--partition", partition,
                     "partition of dim X, e.g. 1,2")
        ->required();
    charnum->callback(
        [&] { run_charnum(ambient, degrees, partition, format); });

    CLI::App* report = app.add_subcommand(
        "report", "full incompressibility report for one variety");
    report->fallthrough();
    report->add_option("--ambient", ambient, "ambient projective dimension")
        ->required();
    report->add_option("--degrees", degrees,
                       "comma-separated hypersurface degrees");
    report->add_option("--nx", nx,
                       "point index n_X (default: product of the degrees)");
    report->callback([&] { run_report(ambient, degrees, nx, format); });

    CLI::App* degform_cmd = app.add_subcommand(
        "degform", "check the degree-formula congruence for map data");
    degform_cmd->fallthrough();
    degform_cmd->add_option("--chi-y", chi_y, "chi(O_Y)")->required();
    degform_cmd->add_option("--dim-y", dim_y, "dim Y >= 1")->required();
    degform_cmd->add_option("--chi-x", chi_x, "chi(O_X)")->required();
    degform_cmd->add_option("--deg-f", deg_f, "deg f >= 0 (0: non-dominant)")
        ->required();
    degform_cmd->add_option("--nx", nx, "point index n_X >= 1")->required();
    degform_cmd->callback(
        [&] { run_degform(chi_y, dim_y, chi_x, deg_f, nx, format); });

    CLI::App* sweep = app.add_subcommand(
        "sweep", "run the exhaustive invariant checks and print a table");
    sweep->fallthrough();
    sweep->add_option("--max-dim", max_dim, "largest dimension")
        ->capture_default_str();
    sweep->add_option("--max-degree", max_degree, "largest degree")
        ->capture_default_str();
    sweep->add_option("--max-m", max_m, "largest number of hypersurfaces")
        ->capture_default_str();
    sweep->callback([&] { run_sweep(max_dim, max_degree, max_m, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const degform::internal_inconsistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const degform::invalid_operand_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
