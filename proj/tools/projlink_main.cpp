#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "projlink/commands.hpp"

using namespace projlink;

int main(int argc, char** argv) {
    CLI::App app{"projective-planarity and link-condition toolkit"};
    app.require_subcommand(1);

    std::string catalog_dir = "./data";
    int workers = 1;
    bool seedless = false;
    app.add_option("--catalog", catalog_dir, "catalog directory")->capture_default_str();
    app.add_option("--workers", workers, "worker threads for candidate sweeps")
        ->capture_default_str();
    app.add_flag("--seedless", seedless,
                 "reserved: the toolkit uses no randomness, so this flag is rejected");

    CLI::App* verify = app.add_subcommand("verify", "re-run a verification campaign");
    verify->require_subcommand(1);
    CLI::App* v_closure = verify->add_subcommand("petersen-closure");
    CLI::App* v_table = verify->add_subcommand("deltay-table");
    CLI::App* v_c11 = verify->add_subcommand("c11");
    CLI::App* v_arch = verify->add_subcommand("archdeacon");

    CLI::App* search = app.add_subcommand("search", "candidate sweeps");
    search->require_subcommand(1);
    CLI::App* s16 = search->add_subcommand("sixteen", "the 16-edge candidate sweep");
    uint64_t budget = kDefaultMinorBudget;
    std::string out_file;
    s16->add_option("--budget", budget, "minor-search node budget")->capture_default_str();
    s16->add_option("--out", out_file, "also write the TSV to this file");

    CLI::App* check = app.add_subcommand("check", "predicate query on a graph file");
    std::string check_file, check_query, check_pattern;
    check->add_option("file", check_file, "graph (.el) or drawing (.emb) file")->required();
    check->add_option("query", check_query,
                      "minor | planar | projective-planar | outerplanar")
        ->required();
    check->add_option("pattern", check_pattern, "pattern for minor queries");

    CLI::App* link = app.add_subcommand("link-conditions", "link predicates of a drawing");
    std::string link_file;
    link->add_option("file", link_file, "drawing (.emb) file")->required();

    CLI::App* embed = app.add_subcommand("embed", "embedding operations");
    embed->require_subcommand(1);
    CLI::App* enumerate = embed->add_subcommand("enumerate");
    std::string embed_file;
    int embed_max = -1;
    enumerate->add_option("file", embed_file, "graph file")->required();
    enumerate->add_option("--max", embed_max, "stop after this many embeddings");

    CLI11_PARSE(app, argc, argv);

    if (seedless) {
        std::cerr << "error: --seedless is reserved; no randomness exists to disable\n";
        return 2;
    }

    try {
        auto with_catalog = [&](auto f) { return f(Catalog::load(catalog_dir)); };
        Report rep;
        if (v_closure->parsed())
            rep = with_catalog(cmd_verify_petersen_closure);
        else if (v_table->parsed())
            rep = with_catalog(cmd_verify_deltay_table);
        else if (v_c11->parsed())
            rep = with_catalog(cmd_verify_c11);
        else if (v_arch->parsed())
            rep = with_catalog(cmd_verify_archdeacon);
        else if (s16->parsed())
            rep = cmd_search_16(Catalog::load(catalog_dir), budget, workers);
        else if (check->parsed())
            rep = cmd_check(Catalog::load(catalog_dir), check_file, check_query,
                            check_pattern);
        else if (link->parsed())
            rep = cmd_link_conditions(link_file);
        else if (enumerate->parsed())
            rep = cmd_embed_enumerate(embed_file, embed_max);

        print_report(rep, std::cout, std::cerr);
        if (s16->parsed() && !out_file.empty()) {
            std::ofstream out(out_file);
            std::ostringstream sink;
            print_report(rep, out, sink);
        }
        return rep.exit_code();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
