#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cyclic/algebra.hpp"
#include "cyclic/coach.hpp"
#include "cyclic/equivalence.hpp"
#include "cyclic/icos.hpp"
#include "cyclic/mds.hpp"
#include "cyclic/primes.hpp"
#include "cyclic/render.hpp"
#include "cyclic/residue.hpp"
#include "cyclic/schick.hpp"
#include "cyclic/sequences.hpp"
#include "cyclic/tour.hpp"
#include "cyclic/verify.hpp"

namespace {

using cyclic::i64;

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

std::string json_text(const cyclic::json& value) {
    return value.dump(2) + "\n";
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* candidate : allowed) {
        if (format == candidate) return;
    }
    throw std::invalid_argument("unsupported format '" + format + "'");
}

std::string system_output(const std::string& kind, i64 b, const std::string& format) {
    using namespace cyclic;
    if (kind == "coach") {
        CoachSystem system = coach_system(b);
        if (format == "text") return render_coach_display(system) + "\n";
        if (format == "json") return json_text(to_json(system));
        return to_csv(system);
    }
    if (kind == "sbb") {
        SbbSystem system = sbb_system(b);
        if (format == "text") return render_sbb_row(system) + "\n";
        if (format == "json") return json_text(to_json(system));
        return to_csv(system);
    }
    if (kind == "sbb-signed") {
        std::vector<SignedCycle> cycles = sbb_signed_system(b);
        if (format == "text") return render_signed_row(cycles) + "\n";
        if (format == "json") return json_text(to_json(cycles, b));
        return to_csv(cycles, b);
    }
    if (kind == "mds") {
        MdsSystem system = mds_system(b);
        if (format == "text") return render_mds_row(system) + "\n";
        if (format == "json") return json_text(to_json(system));
        return to_csv(system);
    }
    std::vector<IcosCycle> cycles = icos_system(b);
    if (format == "text") return render_icos_row(cycles) + "\n";
    if (format == "json") return json_text(to_json(cycles, b));
    return to_csv(cycles, b);
}

int run_verify(const std::vector<std::string>& suites, const cyclic::SuiteOptions& options) {
    using namespace cyclic;
    std::vector<std::string> selected = suites.empty() ? suite_names() : suites;
    std::ostringstream table;
    table << std::left << std::setw(14) << "suite" << std::right << std::setw(10)
          << "checked" << std::setw(10) << "failures" << "\n";
    i64 total_checked = 0, total_failures = 0;
    std::vector<std::string> messages;
    for (const std::string& name : selected) {
        SuiteResult result = run_suite(name, options);
        table << std::left << std::setw(14) << result.name << std::right
              << std::setw(10) << result.checked << std::setw(10) << result.failures
              << "\n";
        total_checked += result.checked;
        total_failures += result.failures;
        messages.insert(messages.end(), result.messages.begin(), result.messages.end());
    }
    table << std::left << std::setw(14) << "total" << std::right << std::setw(10)
          << total_checked << std::setw(10) << total_failures << "\n";
    std::cout << table.str();
    for (const std::string& message : messages) {
        std::cout << "FAIL: " << message << "\n";
    }
    return total_failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycles of odd integers: coach, Schick and doubling systems, "
                 "polygon tours, and exact polynomial constructions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    i64 b = 0;

    auto add_system = [&](const std::string& name, const std::string& blurb) {
        CLI::App* cmd = app.add_subcommand(name, blurb);
        cmd->add_option("--b", b, "odd modulus >= 3")->required();
        cmd->add_option("--format", format, "text, json or csv");
        cmd->add_option("--output", output_path, "write to a file instead of stdout");
        return cmd;
    };
    CLI::App* cmd_coach = add_system("coach", "complete coach system");
    CLI::App* cmd_sbb = add_system("sbb", "unsigned cycle system");
    CLI::App* cmd_signed = add_system("sbb-signed", "signed cycle system");
    CLI::App* cmd_mds = add_system("mds", "modified modular doubling system");
    CLI::App* cmd_icos = add_system("icos", "signed-cosine iteration system");

    CLI::App* cmd_tour = app.add_subcommand("tour", "closed trail on the (2b)-gon");
    i64 tour_cycle = 1;
    cmd_tour->add_option("--b", b, "odd modulus >= 3")->required();
    cmd_tour->add_option("--cycle", tour_cycle, "1-based cycle index");
    cmd_tour->add_option("--format", format, "text, json, dot or svg");
    cmd_tour->add_option("--output", output_path, "write to a file instead of stdout");

    CLI::App* cmd_seq = app.add_subcommand("seq", "integer sequences from the systems");
    std::string seq_id;
    i64 seq_count = 20;
    {
        std::ostringstream ids;
        ids << "sequence id:";
        for (const cyclic::SequenceInfo& info : cyclic::sequence_catalog()) {
            ids << "\n  " << info.id << " (" << info.alias << "): " << info.description;
        }
        cmd_seq->add_option("id", seq_id, ids.str())->required();
    }
    cmd_seq->add_option("--count", seq_count, "number of terms");
    cmd_seq->add_option("--format", format, "text, json, csv or bfile");
    cmd_seq->add_option("--output", output_path, "write to a file instead of stdout");

    CLI::App* cmd_poly = app.add_subcommand("poly", "exact polynomials");
    std::string poly_kind;
    i64 poly_n = 0;
    cmd_poly->add_option("kind", poly_kind, "R, C, mpr2 or pstar")
        ->required()
        ->check(CLI::IsMember({"R", "C", "mpr2", "pstar"}));
    CLI::Option* opt_n = cmd_poly->add_option("--n", poly_n, "index n");
    cmd_poly->add_option("--b", poly_n, "odd modulus (alias of --n)")->excludes(opt_n);
    cmd_poly->add_option("--format", format, "text or json");
    cmd_poly->add_option("--output", output_path, "write to a file instead of stdout");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run invariant sweeps");
    std::vector<std::string> suites;
    cyclic::SuiteOptions suite_options;
    {
        std::ostringstream names;
        names << "suite name (repeatable); one of:";
        for (const std::string& name : cyclic::suite_names()) names << " " << name;
        cmd_verify->add_option("--suite", suites, names.str());
    }
    cmd_verify->add_option("--max-b", suite_options.max_b, "odd-modulus sweep bound");
    cmd_verify->add_option("--max-n", suite_options.max_n, "modulus bound for mod*/algebra");
    cmd_verify->add_option("--max-p", suite_options.max_p, "prime bound");

    try {
        app.parse(argc, argv);

        for (CLI::App* cmd : {cmd_coach, cmd_sbb, cmd_signed, cmd_mds, cmd_icos}) {
            if (cmd->parsed()) {
                check_format(format, {"text", "json", "csv"});
                emit(output_path, system_output(cmd->get_name(), b, format));
                return 0;
            }
        }
        if (cmd_tour->parsed()) {
            check_format(format, {"text", "json", "dot", "svg"});
            cyclic::SbbSystem system = cyclic::sbb_system(b);
            if (tour_cycle < 1 || tour_cycle > system.count) {
                throw std::invalid_argument("cycle index out of range: B(b) = " +
                                            std::to_string(system.count));
            }
            cyclic::EulerTour tour = cyclic::euler_tour(
                b, system.cycles[static_cast<std::size_t>(tour_cycle - 1)],
                static_cast<std::size_t>(tour_cycle));
            if (format == "dot") {
                emit(output_path, cyclic::export_graph(tour, cyclic::GraphFormat::Dot));
            } else if (format == "svg") {
                emit(output_path, cyclic::export_graph(tour, cyclic::GraphFormat::Svg));
            } else if (format == "json") {
                emit(output_path, json_text(cyclic::to_json(tour)));
            } else {
                cyclic::TourStats stats = cyclic::tour_stats(tour);
                std::ostringstream out;
                out << "L = " << tour.length() << "\n";
                out << "N = " << stats.distinct_nodes << "\n";
                out << "m = " << tour.blocks << "\n";
                out << "labels:";
                for (i64 label : tour.labels) out << ' ' << label;
                out << "\n";
                emit(output_path, out.str());
            }
            return 0;
        }
        if (cmd_seq->parsed()) {
            check_format(format, {"text", "json", "csv", "bfile"});
            std::vector<i64> terms = cyclic::sequence_terms(seq_id, seq_count);
            std::ostringstream out;
            if (format == "bfile") {
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    out << i + 1 << ' ' << terms[i] << "\n";
                }
            } else if (format == "csv") {
                out << "index,value\r\n";
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    out << i + 1 << ',' << terms[i] << "\r\n";
                }
            } else if (format == "json") {
                out << json_text({{"id", seq_id}, {"offset", 1}, {"terms", terms}});
            } else {
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    if (i) out << ", ";
                    out << terms[i];
                }
                out << "\n";
            }
            emit(output_path, out.str());
            return 0;
        }
        if (cmd_poly->parsed()) {
            check_format(format, {"text", "json"});
            std::ostringstream out;
            if (poly_kind == "pstar") {
                cyclic::RhoPoly p = cyclic::p_star(poly_n);
                out << (format == "json" ? json_text(cyclic::to_json(p))
                                         : cyclic::render_rho_poly(p) + "\n");
            } else {
                cyclic::IntPoly p;
                if (poly_kind == "R") p = cyclic::chebyshev_R(poly_n);
                if (poly_kind == "C") p = cyclic::minimal_poly_C(poly_n);
                if (poly_kind == "mpr2") p = cyclic::mpr2(poly_n);
                out << (format == "json" ? json_text(cyclic::to_json(p))
                                         : cyclic::render_int_poly(p) + "\n");
            }
            emit(output_path, out.str());
            return 0;
        }
        if (cmd_verify->parsed()) {
            return run_verify(suites, suite_options);
        }
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error);
        std::cerr << cyclic::json{{"error", error.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << cyclic::json{{"error", error.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
