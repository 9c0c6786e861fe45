#include "howe/cli.hpp"

#include <ostream>

#include "CLI11.hpp"

#include "howe/branching.hpp"
#include "howe/report.hpp"
#include "howe/singular.hpp"
#include "howe/suite.hpp"

namespace howe::cli {

Scalar parse_rational(std::string_view text, bool parameter_slot) {
    Scalar value;
    try {
        value = parse_scalar(text);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (parameter_slot && value.is_integer()) {
        throw ConfigError("parameter must be a non-integer rational (got '" + std::string(text) + "')");
    }
    return value;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Exact branching of degree-1 sl(2n)-modules to the dual pair (sl2, sln)", "howe"};
    app.set_config("--config", "", "key=value file mirroring the long flags; flags override it");
    app.add_option("command", cfg.command, "verify | hwv | branch | series | table")
        ->required()
        ->check(CLI::IsMember({"verify", "hwv", "branch", "series", "table"}));
    app.add_option("--n", cfg.n, "rank parameter, the module lives in sl(2n)")->required();
    app.add_option("--a1", cfg.a1, "first parameter, non-integer rational p/q")->required();
    app.add_option("--a2", cfg.a2, "second parameter, non-integer rational p/q")->required();
    app.add_option("--b-min", cfg.b_min, "smallest b in tables");
    app.add_option("--b-max", cfg.b_max, "largest b in tables");
    app.add_option("--b", cfg.b, "b for hwv and series");
    app.add_option("--c", cfg.c, "c for hwv")->check(CLI::NonNegativeNumber);
    app.add_option("--c-max", cfg.c_max, "largest c in grids")->check(CLI::NonNegativeNumber);
    app.add_option("--depth", cfg.depth, "string steps checked per entry")->check(CLI::PositiveNumber);
    app.add_option("--box", cfg.box, "offset box for scans")->check(CLI::NonNegativeNumber);
    app.add_option("--samples", cfg.samples, "random samples per relation check")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for random sampling");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "json | md")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--variant", cfg.variant, "plain | s | ss")->check(CLI::IsMember({"plain", "s", "ss"}));
    app.add_flag("--oracle", cfg.oracle, "compare hwv with the brute-force kernel");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    if (cfg.b_min > cfg.b_max) {
        throw ConfigError("--b-min must not exceed --b-max");
    }
    if (cfg.n < 2) {
        throw ConfigError("--n must be at least 2");
    }
    return cfg;
}

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Scalar a1 = parse_rational(cfg.a1, true);
    const Scalar a2 = parse_rational(cfg.a2, true);
    if (cfg.n < 2) {
        throw ConfigError("--n must be at least 2");
    }
    const ModuleParams params = ModuleParams::make(cfg.n, a1, a2);
    const bool md = cfg.format == "md";

    if (cfg.command == "verify") {
        SuiteConfig sc(params);
        sc.b_min = cfg.b_min;
        sc.b_max = cfg.b_max;
        sc.c_max = cfg.c_max;
        sc.depth = cfg.depth;
        sc.box = cfg.box;
        sc.samples = cfg.samples;
        sc.seed = cfg.seed;
        sc.jobs = cfg.jobs;
        const auto checks = run_suite(sc);
        if (md) {
            out << suite_markdown(sc, checks);
        } else {
            emit(out, suite_json(sc, checks));
        }
        bool ok = true;
        for (const auto& c : checks) {
            if (!c.pass) {
                err << "FAIL " << c.module << "/" << c.name << ": " << c.detail << "\n";
                ok = false;
            }
        }
        return static_cast<int>(ok ? ExitCode::ok : ExitCode::verification_failed);
    }

    if (cfg.command == "hwv") {
        if (cfg.c < 0) {
            throw ConfigError("--c must be nonnegative");
        }
        const HwvLabel label{cfg.b, cfg.c};
        const WeightVector x = hwv_closed_form(params, label);
        Json j = {{"params", params_json(params)}, {"seed", cfg.seed}};
        j.update(hwv_json(params, label, x));
        bool ok = true;
        if (cfg.oracle) {
            const auto kernel = singular_kernel(params, build_dual_pair(params), label);
            const bool match = kernel.kernel_dimension == 1 && kernel.basis.front() == x;
            j["oracle"] = {{"weight_space_dimension", kernel.weight_space_dimension},
                           {"kernel_dimension", kernel.kernel_dimension},
                           {"match", match}};
            ok = match;
            if (!match) {
                err << "closed form and kernel oracle disagree\n";
            }
        }
        if (md) {
            out << "# x(" << label.b << "," << label.c << ")\n\n| k | coefficient |\n|---|---|\n";
            for (const auto& t : j["terms"]) {
                out << "| " << t["k"].dump() << " | " << t["coeff"].get<std::string>() << " |\n";
            }
            if (cfg.oracle) {
                out << "\noracle match: " << (ok ? "true" : "false") << "\n";
            }
        } else {
            emit(out, j);
        }
        return static_cast<int>(ok ? ExitCode::ok : ExitCode::verification_failed);
    }

    if (cfg.command == "series") {
        const SeriesDetail d = composition_series(params, cfg.b, cfg.depth);
        const Json j = series_json(params, d, cfg.seed);
        if (md) {
            out << series_markdown(params, d);
        } else {
            emit(out, j);
        }
        return static_cast<int>(j["passed"].get<bool>() ? ExitCode::ok : ExitCode::verification_failed);
    }

    const TableVariant variant = cfg.command == "branch" ? TableVariant::plain : parse_variant(cfg.variant);
    const BranchingReport report =
        build_table(params, cfg.b_min, cfg.b_max, cfg.c_max, variant, cfg.depth, cfg.jobs, cfg.seed);
    if (md) {
        out << report_markdown(report);
    } else {
        emit(out, report_json(report));
    }
    if (!report.passed()) {
        err << "some table entries failed verification\n";
    }
    return static_cast<int>(report.passed() ? ExitCode::ok : ExitCode::verification_failed);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_args(args), out, err);
    } catch (const HelpRequested& e) {
        out << e.what();
        return static_cast<int>(ExitCode::ok);
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return static_cast<int>(ExitCode::invalid_config);
    } catch (const InvalidParams& e) {
        err << e.what() << "\n";
        return static_cast<int>(ExitCode::invalid_config);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::verification_failed);
    }
}

}  // namespace howe::cli
