// Command-line front end: dumps groups and singular graphs, classifies a marked
// edge, prints the genus table and runs the end-to-end verification.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "maxsym/classify.hpp"

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s, bool csv_allowed) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv" && csv_allowed) return Format::Csv;
    throw CLI::ValidationError("--format", "unsupported format '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace maxsym;
    CLI::App app{"Maximal-order symmetric surfaces in the 3-torus"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string group_name, edge_name, obj_path;
    long max_index = 512;
    long max_genus = 101;
    long verify_index = 64;

    auto* groups = app.add_subcommand("groups", "the six space groups and their maximal translation lattices");
    groups->add_option("--format", format, "text or json");

    auto* sgraph = app.add_subcommand("singular-graph", "singular set of a group modulo T0");
    sgraph->add_option("group", group_name)->required();
    sgraph->add_option("--format", format, "text or json");

    auto* edges = app.add_subcommand("edges", "marked edge orbits with their graphs and cycle images");
    edges->add_option("group", group_name)->required();
    edges->add_option("--format", format, "text or json");
    edges->add_option("--obj", obj_path, "write the orbit graphs as a Wavefront OBJ file");

    auto* classify = app.add_subcommand("classify", "admitted normal translation subgroups for one marked edge");
    classify->add_option("group", group_name)->required();
    classify->add_option("edge", edge_name, "alpha, beta or gamma")->required();
    classify->add_option("--max-index", max_index, "largest lattice index [T0:T]")->check(CLI::Range(1L, 100000L));
    classify->add_option("--format", format, "text, json or csv");

    auto* table = app.add_subcommand("table", "actions by genus");
    table->add_option("--max-genus", max_genus)->check(CLI::Range(2L, 100001L));
    table->add_option("--format", format, "text, json or csv");

    auto* verify = app.add_subcommand("verify", "check edge counts, cycle images and admitted series");
    verify->add_option("--max-index", verify_index, "bound for the series check, 0 skips it")->check(CLI::Range(0L, 100000L));
    verify->add_option("--format", format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*groups) {
            const Format f = parse_format(format, false);
            std::cout << (f == Format::Json ? groups_json() + "\n" : groups_text());
            return 0;
        }
        if (*sgraph) {
            const Format f = parse_format(format, false);
            const SpaceGroup g = make_group(parse_group(group_name));
            const auto graph = singular_graph(g);
            std::cout << (f == Format::Json ? singular_graph_json(g, graph) + "\n" : singular_graph_text(g, graph));
            return 0;
        }
        if (*edges) {
            const Format f = parse_format(format, false);
            const SpaceGroup g = make_group(parse_group(group_name));
            const auto labelled = labelled_edges(g);
            std::cout << (f == Format::Json ? edges_json(g, labelled) + "\n" : edges_text(g, labelled));
            if (!obj_path.empty()) {
                std::ofstream out(obj_path);
                for (const auto& e : labelled) out << "o " << to_string(e.id.label) << "\n" << to_obj(e.graph);
                if (!out) throw Error("cannot write " + obj_path);
            }
            return 0;
        }
        if (*classify) {
            const Format f = parse_format(format, true);
            const auto c = classify_case(parse_group(group_name), parse_edge_label(edge_name), max_index);
            if (f == Format::Json) std::cout << classification_json(c) << "\n";
            else if (f == Format::Csv) std::cout << classification_csv(c);
            else std::cout << classification_text(c);
            return 0;
        }
        if (*table) {
            const Format f = parse_format(format, true);
            const auto t = theorem1_table(max_genus);
            if (f == Format::Json) std::cout << table_json(t) << "\n";
            else if (f == Format::Csv) std::cout << table_csv(t);
            else std::cout << table_text(t);
            return t.columns_match ? 0 : kMismatch;
        }
        if (*verify) {
            const Format f = parse_format(format, false);
            const auto r = verify_claims(verify_index);
            std::cout << (f == Format::Json ? verify_json(r) + "\n" : verify_text(r));
            return r.passed ? 0 : kMismatch;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const UnknownGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
