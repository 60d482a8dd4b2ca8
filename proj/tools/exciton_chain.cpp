// exciton-chain: command-line front end.
//
//   exciton-chain <modes|pattern|trace|scenario-two-seg> --config run.json
//                 [--out DIR] [--format csv|json] [--threads N] [--check]
//
// Exit codes: 0 success, 1 configuration error, 2 computation error,
// 3 I/O error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "exciton/config.hpp"
#include "exciton/errors.hpp"
#include "exciton/runner.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitCompute = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Collective excitations and emission of finite atom chains"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string format;
    int threads = 1;
    bool check = false;

    for (const char* name : {"modes", "pattern", "trace", "scenario-two-seg"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration (JSON)")->required();
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        sub->add_option("--format", format, "csv or json (overrides output.format)")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", threads, "worker threads for observation points")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--check", check, "run the internal invariant suite");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    exciton::RunOptions options;
    options.command = *exciton::parse_command(name);
    options.threads = threads;
    options.check = check;

    try {
        const exciton::RunConfig config = exciton::load_config(config_path);
        options.out_dir = out_dir.empty() ? config.output_dir : out_dir;
        options.format = config.format;
        if (format == "csv") options.format = exciton::OutputFormat::csv;
        if (format == "json") options.format = exciton::OutputFormat::json;

        const exciton::RunReport report = exciton::run(config, options);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
        for (const auto& f : report.files) std::cout << f.string() << '\n';
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  " << c.detail << '\n';
        }
        return report.checks_passed() ? 0 : kExitCompute;
    } catch (const exciton::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const exciton::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return kExitCompute;
    }
}
