#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "csplab/errors.hpp"
#include "csplab/verify.hpp"

namespace {

using csplab::cox::CoxType;
using csplab::cox::Family;
using csplab::cox::ParabolicClass;
using csplab::polygon::Budget;
using csplab::verify::ClassReport;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

int emit(const std::vector<ClassReport>& reports, const OutputOptions& opts,
         const std::string& command, const std::string& config) {
    std::string text;
    if (opts.format == "json") {
        text = csplab::verify::reports_to_json(reports, command, config);
    } else if (opts.format == "csv") {
        text = csplab::verify::reports_to_csv(reports);
    } else if (opts.format == "md") {
        text = csplab::verify::reports_to_markdown(reports);
    } else {
        std::cerr << "unknown format: " << opts.format << "\n";
        return kExitUsage;
    }
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path);
        if (!out) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    return csplab::verify::all_pass(reports) ? kExitPass : kExitMismatch;
}

// The rank option follows the polygon parameter of each family: A with
// --rank n is the symmetric group on n letters (the (mn+2)-gon model),
// B/D take their own rank, I2 takes the dihedral parameter k.
CoxType type_from_cli(const std::string& family, int rank) {
    if (family == "A" && rank >= 2) return CoxType::A(rank - 1);
    if ((family == "A" || family == "B") && rank < 2)
        throw std::invalid_argument(family + " needs --rank >= 2");
    if ((family == "D" || family == "I2") && rank < 3)
        throw std::invalid_argument(family + " needs --rank >= 3");
    return csplab::cox::parse_cox_type(family, rank);
}

Budget budget_from_env() {
    Budget budget;
    if (const char* env = std::getenv("CSPLAB_BUDGET")) {
        std::istringstream is(env);
        std::string tok;
        if (std::getline(is, tok, ',') && !tok.empty()) {
            budget.max_polygon = std::stol(tok);
            budget.max_polygon_i2 = std::max(budget.max_polygon_i2, budget.max_polygon);
        }
        if (std::getline(is, tok, ',') && !tok.empty()) budget.max_vertices = std::stol(tok);
    }
    return budget;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"csplab: exact cyclic sieving checks on generalized cluster complexes"};
    app.require_subcommand(1);

    OutputOptions out_opts;
    int jobs = 1;
    long budget_polygon = 0, budget_vertices = 0;
    app.add_option("--format", out_opts.format, "json, csv, or md")->capture_default_str();
    app.add_option("--out", out_opts.out_path, "write the report to a file instead of stdout");
    app.add_option("--jobs", jobs, "parallel class sweeps")->check(CLI::PositiveNumber);
    app.add_option("--budget", budget_polygon, "polygon size cap (also via CSPLAB_BUDGET=P[,V])");
    app.add_option("--budget-vertices", budget_vertices, "complex vertex cap");

    std::string type_name, lambda_text, types_list = "A,B,I2", m_list = "1";
    int rank = 0, m_value = 1, max_rank = 5, min_rank = 2;
    bool no_brute = false, experimental_d = false;
    std::string dump_path;

    auto* verify = app.add_subcommand("verify", "divisor sweep for one class");
    verify->fallthrough();
    verify->add_option("--type", type_name, "A, B, D, I2, H3, H4, F4, E6, E7, E8")->required();
    verify->add_option("--rank", rank, "n for A (the n-letter model), rank for B/D, k for I2");
    verify->add_option("--m", m_value, "Fuss parameter")->check(CLI::PositiveNumber);
    verify->add_option("--lambda", lambda_text, "class, e.g. 2,2 or 2,2:+ or 1:j1 or rank1:0")->required();
    verify->add_flag("--no-brute", no_brute, "skip brute-force enumeration");
    verify->add_flag("--experimental-d", experimental_d, "allow type D with m >= 2");

    auto* sweep = app.add_subcommand("sweep", "verify every class of a family range");
    sweep->fallthrough();
    sweep->add_option("--types", types_list, "comma-separated families")->capture_default_str();
    sweep->add_option("--max-rank", max_rank, "largest rank / dihedral parameter")->capture_default_str();
    sweep->add_option("--min-rank", min_rank, "smallest rank / dihedral parameter")->capture_default_str();
    sweep->add_option("--m", m_list, "comma-separated Fuss parameters")->capture_default_str();
    sweep->add_flag("--experimental-d", experimental_d, "allow type D with m >= 2");

    auto* tables = app.add_subcommand("tables", "property checks for the exceptional tables");
    tables->fallthrough();
    std::string tables_type = "all";
    tables->add_option("--type", tables_type, "H3, H4, F4, E6, E7, E8, or all")->capture_default_str();

    auto* census = app.add_subcommand("census", "enumerate faces and report per-class counts");
    census->fallthrough();
    census->add_option("--type", type_name, "A, B, D, or I2")->required();
    census->add_option("--rank", rank, "n for A, rank for B/D, k for I2")->required();
    census->add_option("--m", m_value, "Fuss parameter")->check(CLI::PositiveNumber);
    census->add_option("--dump-faces", dump_path, "write one face per line to this file");
    census->add_flag("--experimental-d", experimental_d, "allow type D with m >= 2");

    CLI11_PARSE(app, argc, argv);
    Budget budget = budget_from_env();
    if (budget_polygon > 0) {
        budget.max_polygon = budget_polygon;
        budget.max_polygon_i2 = std::max(budget.max_polygon_i2, budget_polygon);
    }
    if (budget_vertices > 0) budget.max_vertices = budget_vertices;

    try {
        if (verify->parsed()) {
            const CoxType W = type_from_cli(type_name, rank);
            if (W.family == Family::D && m_value > 1 && !experimental_d) {
                std::cerr << "type D with m >= 2 requires --experimental-d\n";
                return kExitUsage;
            }
            auto cls = csplab::cox::parse_lambda(W, lambda_text);
            if (!cls) {
                std::cerr << "cannot parse lambda '" << lambda_text << "' for " << W.name() << "\n";
                return kExitUsage;
            }
            std::cerr << "verifying " << W.name() << " m=" << m_value << " lambda="
                      << cls->canonical_string() << "\n";
            const ClassReport report =
                csplab::verify::verify_class(W, m_value, *cls, !no_brute && W.is_classical(), budget);
            std::ostringstream config;
            config << "type=" << W.name() << " m=" << m_value << " lambda=" << cls->canonical_string();
            return emit({report}, out_opts, "verify", config.str());
        }

        if (sweep->parsed()) {
            std::vector<ClassReport> reports;
            for (const std::string& fam : split_list(types_list)) {
                for (const std::string& mtext : split_list(m_list)) {
                    const int m = std::stoi(mtext);
                    if (fam == "D" && m > 1 && !experimental_d) continue;
                    const int lo = std::max(min_rank, fam == "D" ? 4 : (fam == "I2" ? 3 : 2));
                    for (int r = lo; r <= max_rank; ++r) {
                        const CoxType W = type_from_cli(fam, r);
                        std::cerr << "sweeping " << W.name() << " m=" << m << "\n";
                        auto group = csplab::verify::verify_group(W, m, budget, jobs);
                        if (!group.partition_complete) {
                            std::cerr << "face partition incomplete for " << W.name() << "\n";
                            return kExitMismatch;
                        }
                        for (auto& r2 : group.classes) reports.push_back(std::move(r2));
                    }
                }
            }
            std::ostringstream config;
            config << "types=" << types_list << " ranks=[" << min_rank << "," << max_rank
                   << "] m=" << m_list;
            return emit(reports, out_opts, "sweep", config.str());
        }

        if (tables->parsed()) {
            std::vector<ClassReport> reports;
            const std::vector<std::string> names =
                tables_type == "all" ? std::vector<std::string>{"H3", "H4", "F4", "E6", "E7", "E8"}
                                     : std::vector<std::string>{tables_type};
            for (const auto& name : names) {
                const CoxType W = csplab::cox::parse_cox_type(name, 0);
                std::cerr << "checking tables for " << W.name() << "\n";
                auto rs = csplab::verify::exceptional_table_check(W);
                for (auto& r : rs) reports.push_back(std::move(r));
            }
            return emit(reports, out_opts, "tables", "type=" + tables_type);
        }

        if (census->parsed()) {
            const CoxType W = type_from_cli(type_name, rank);
            if (W.family == Family::D && m_value > 1 && !experimental_d) {
                std::cerr << "type D with m >= 2 requires --experimental-d\n";
                return kExitUsage;
            }
            std::cerr << "census of " << W.name() << " m=" << m_value << "\n";
            auto group = csplab::verify::verify_group(W, m_value, budget, jobs);
            if (!dump_path.empty()) {
                const auto model = csplab::polygon::build_model(W, m_value, budget);
                const auto faces = csplab::polygon::enumerate_faces(model, budget);
                std::ofstream out(dump_path);
                for (const auto& f : faces) out << csplab::polygon::face_to_line(model, f) << "\n";
            }
            std::ostringstream config;
            config << "type=" << W.name() << " m=" << m_value
                   << " total_faces=" << group.total_faces
                   << " partition=" << (group.partition_complete ? "complete" : "INCOMPLETE");
            const int code = emit(group.classes, out_opts, "census", config.str());
            if (!group.partition_complete) return kExitMismatch;
            return code;
        }
    } catch (const csplab::BudgetExceededError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitUsage;
    } catch (const csplab::UnsupportedClassError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
