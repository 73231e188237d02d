#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "unirat/cli.hpp"

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            // trim
            std::size_t b = part.find_first_not_of(" \t");
            std::size_t e = part.find_last_not_of(" \t");
            if (b == std::string::npos) continue;
            out.push_back(part.substr(b, e - b + 1));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unirat: intermediate fields of unirational field extensions over Q"};
    app.require_subcommand(1);

    unirat::Query q;
    std::vector<std::string> raw_vars, raw_gens;
    std::string elem;
    long timeout_s = 0;

    auto add_common = [&](CLI::App* sub, bool needs_elem) {
        sub->add_option("--vars", raw_vars, "variable names (comma separated or repeated)")
            ->required();
        sub->add_option("--gens", raw_gens, "generator expressions (comma separated or repeated)")
            ->required();
        if (needs_elem) sub->add_option("--elem", elem, "subject expression")->required();
        sub->add_option("--format", q.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-block-subsets", q.max_block_subsets,
                        "cap on factor subsets examined in the block search");
        sub->add_option("--timeout", timeout_s, "wall-clock limit in seconds (exit 3)");
    };

    add_common(app.add_subcommand("member", "decide membership in the field"), true);
    add_common(app.add_subcommand("trdeg", "transcendence degree over Q"), false);
    add_common(app.add_subcommand("basis", "greedy transcendence basis (1-based indices)"), false);
    add_common(app.add_subcommand("minpoly", "minimal polynomial of --elem over the field"), true);
    add_common(app.add_subcommand("subfields", "all intermediate fields algebraic over the input"),
               false);
    add_common(app.add_subcommand("closure", "relative algebraic closure (transcendence degree 1)"),
               false);
    add_common(app.add_subcommand("decompose", "decompositions of a univariate rational function"),
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    q.command = app.get_subcommands().front()->get_name();
    q.vars = split_commas(raw_vars);
    q.gens = split_commas(raw_gens);
    if (!elem.empty()) q.elem = elem;

    if (timeout_s > 0) {
        std::thread([timeout_s] {
            std::this_thread::sleep_for(std::chrono::seconds(timeout_s));
            std::cerr << "error: timeout\n";
            std::_Exit(3);
        }).detach();
    }

    return unirat::run_query(q, std::cout, std::cerr);
}
