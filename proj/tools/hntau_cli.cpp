// Command-line front end: parses flags into a RunConfig and dispatches.

#include <CLI11.hpp>
#include <hntau/cli.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct CommonOpts {
    std::vector<int> kupisch;
    int d = 2;
    std::string format = "json";
    std::string out_path;
    std::string class_selector;
    bool allow_d1 = false;
    bool tiny = false;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--l", o.kupisch, "Kupisch series as comma-separated integers")
        ->required()
        ->delimiter(',');
    cmd->add_option("--d", o.d, "dimension parameter d (default 2)");
    cmd->add_option("--format", o.format, "output format: json|csv|dot|md")
        ->check(CLI::IsMember({"json", "csv", "dot", "md"}));
    cmd->add_option("--out", o.out_path, "write output to this file instead of stdout");
    cmd->add_option("--class", o.class_selector,
                    "explicit class: semicolon-separated tuples, e.g. \"(0,0,1);(0,1,1)\"");
    cmd->add_flag("--allow-d1", o.allow_d1, "permit the classical case d = 1");
    cmd->add_flag("--tiny", o.tiny, "classical Nakayama cross-checks (linear quivers only)");
    cmd->add_option("--jobs", o.jobs, "worker count for verify/silting batches");
}

int run(hntau::Command command, const CommonOpts& o) {
    hntau::RunConfig cfg;
    cfg.kupisch = o.kupisch;
    cfg.d = o.d;
    cfg.command = command;
    cfg.allow_d1 = o.allow_d1;
    cfg.tiny = o.tiny;
    cfg.jobs = o.jobs;
    static const std::map<std::string, hntau::Format> formats = {
        {"json", hntau::Format::Json},
        {"csv", hntau::Format::Csv},
        {"dot", hntau::Format::Dot},
        {"md", hntau::Format::Md},
    };
    cfg.format = formats.at(o.format);
    if (!o.class_selector.empty()) {
        try {
            cfg.cls = hntau::parse_class_selector(o.class_selector);
        } catch (const std::exception& e) {
            std::cerr << "error: bad --class selector: " << e.what() << "\n";
            return hntau::kExitUsage;
        }
    }
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            std::cerr << "error: cannot open " << o.out_path << " for writing\n";
            return hntau::kExitUsage;
        }
        return hntau::dispatch(cfg, f, std::cerr);
    }
    return hntau::dispatch(cfg, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher Nakayama d-torsion workbench"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, hntau::Command>> commands = {
        {"enumerate", hntau::Command::Enumerate}, {"pair", hntau::Command::Pair},
        {"silting", hntau::Command::Silting},     {"verify", hntau::Command::Verify},
        {"slices", hntau::Command::Slices},       {"table", hntau::Command::Table},
    };
    std::vector<CommonOpts> opts(commands.size());
    std::vector<CLI::App*> subs;
    for (size_t i = 0; i < commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].first);
        add_common(sub, opts[i]);
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hntau::kExitUsage;
    }

    for (size_t i = 0; i < commands.size(); ++i)
        if (subs[i]->parsed()) return run(commands[i].second, opts[i]);
    return hntau::kExitUsage;
}
