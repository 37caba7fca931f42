#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <regex>

#include "mapforge/experiments.hpp"

using namespace mapforge;

namespace {

// "1000,2000,4000" or "2^10..2^17".
std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> out;
    std::smatch m;
    static const std::regex pow_range(R"((\d+)\^(\d+)\.\.(\d+)\^(\d+))");
    if (std::regex_match(text, m, pow_range)) {
        const long base = std::stol(m[1]);
        if (base != std::stol(m[3]) || base < 2) throw CLI::ValidationError("--grid", "bases must match");
        long v = 1;
        for (long e = 0; e < std::stol(m[2]); ++e) v *= base;
        for (long e = std::stol(m[2]); e <= std::stol(m[4]); ++e, v *= base) out.push_back(static_cast<int>(v));
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--grid", "bad entry '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random planar map experiments"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    int n = 0;
    std::string grid;
    bool bounds = false;

    auto common = [&](CLI::App* sub, bool sized) {
        if (sized) {
            sub->add_option("--n", n, "Size (edges or tree edges)");
            sub->add_option("--grid", grid, "Sizes: comma list or b^i..b^j");
        }
        sub->add_option("--reps", cfg.reps, "Replicates")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "Seed");
        sub->add_option("--x", cfg.x, "Weight x (rational, e.g. 1/2)");
        sub->add_option("--threads", cfg.threads, "OpenMP threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out_dir, "Output directory");
        sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--exact", cfg.exact, "Exact map diameter (default)");
        sub->add_flag("--bounds", bounds, "Certified diameter bounds instead of exact");
    };

    auto* sample = app.add_subcommand("sample", "Sample one tree, quadrangulation or map");
    common(sample, true);
    sample->add_option("--kind", cfg.variant, "tree, quad or map")
        ->required()
        ->check(CLI::IsMember({"tree", "quad", "map"}));

    auto* scaling = app.add_subcommand("scaling", "Log-log slope of a size statistic");
    common(scaling, true);
    scaling->add_option("--family", cfg.variant, "quad-radius, map-diameter, tree-height, tree-span, tree-diameter")
        ->required()
        ->check(CLI::IsMember({"quad-radius", "map-diameter", "tree-height", "tree-span", "tree-diameter"}));

    auto* tail = app.add_subcommand("tail", "Empirical tail of a face or label statistic");
    common(tail, true);
    tail->add_option("--statistic", cfg.variant, "root-face-degree, max-face-degree, label-span-excess")
        ->required()
        ->check(CLI::IsMember({"root-face-degree", "max-face-degree", "label-span-excess"}));

    auto* core = app.add_subcommand("core", "Core-size distribution, exact and Monte Carlo");
    common(core, true);

    auto* validate = app.add_subcommand("validate", "Check distance and decomposition inequalities");
    common(validate, true);
    cfg.variant = "all";
    validate->add_option("--pipeline", cfg.variant, "bijection, decomposition or all")
        ->check(CLI::IsMember({"bijection", "decomposition", "all"}));
    validate->add_flag("--exhaustive", cfg.exhaustive, "All labelled trees of size n");

    auto* series = app.add_subcommand("series", "Coefficients of a generating-function system");
    common(series, false);
    series->add_option("--system", cfg.variant, "labelled-trees, bicolored-trees, maps, plane-networks, planar-networks")
        ->required();
    series->add_option("--order", cfg.order, "Truncation order")->check(CLI::NonNegativeNumber);
    series->add_option("--table", cfg.table_path, "3-connected coefficient CSV, or 'zero'");

    CLI11_PARSE(app, argc, argv);

    auto* chosen = app.get_subcommands().front();
    cfg.experiment = chosen->get_name();
    if (bounds) cfg.exact = false;
    try {
        if (!grid.empty()) cfg.grid = parse_grid(grid);
        if (n > 0) cfg.grid.insert(cfg.grid.begin(), n);

        CommandResult r;
        if (chosen == sample) r = cmd_sample(cfg);
        else if (chosen == scaling) r = cmd_scaling(cfg);
        else if (chosen == tail) r = cmd_tail(cfg);
        else if (chosen == core) r = cmd_core(cfg);
        else if (chosen == validate) r = cmd_validate(cfg);
        else r = cmd_series(cfg);
        std::cout << r.summary << "\n";
        for (const auto& f : r.files) std::cout << "  " << f << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
