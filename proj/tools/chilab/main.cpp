#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

#include "chilab/errors.hpp"
#include "chilab/lab/manifest.hpp"

namespace fs = std::filesystem;
using chilab::lab::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct GlobalFlags {
    std::string out, format, config;
    std::size_t threads = 0;
    std::uint64_t budget_ms = 0;
    CLI::Option* out_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* threads_opt = nullptr;
    CLI::Option* budget_opt = nullptr;
};

// Precedence: command-line flag, then CHILAB_* environment, then config file.
chilab::cli::Settings resolve(const GlobalFlags& g) {
    chilab::cli::Settings s;
    Json config = Json::object();
    if (!g.config.empty()) {
        try {
            config = Json::parse(chilab::lab::read_text_file(g.config));
        } catch (const Json::exception& e) {
            throw chilab::DomainError("bad config file: " + std::string(e.what()));
        }
    }
    auto pick = [&](CLI::Option* opt, const char* env, const char* key, auto apply, const auto& flag) {
        if (opt->count() > 0) {
            apply(flag);
        } else if (const char* v = std::getenv(env); v != nullptr && *v != '\0') {
            apply(std::string(v));
        } else if (config.contains(key)) {
            const Json& c = config.at(key);
            apply(c.is_string() ? c.get<std::string>() : c.dump());
        }
    };
    auto to_u64 = [](const auto& v) -> std::uint64_t {
        if constexpr (std::is_arithmetic_v<std::decay_t<decltype(v)>>) {
            return static_cast<std::uint64_t>(v);
        } else {
            std::size_t used = 0;
            std::uint64_t x = 0;
            try {
                x = std::stoull(v, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != v.size()) throw chilab::DomainError("expected an integer, got '" + v + "'");
            return x;
        }
    };
    pick(g.out_opt, "CHILAB_OUT", "out", [&](const auto& v) { s.out = v; }, g.out);
    pick(g.format_opt, "CHILAB_FORMAT", "format", [&](const auto& v) { s.format = chilab::cli::parse_format(v); },
         g.format);
    pick(g.threads_opt, "CHILAB_THREADS", "threads",
         [&](const auto& v) { s.threads = std::max<std::size_t>(1, to_u64(v)); }, g.threads);
    pick(g.budget_opt, "CHILAB_BUDGET_MS", "budget_ms", [&](const auto& v) { s.budget_ms = to_u64(v); }, g.budget_ms);
    return s;
}

Json parameters(const std::string& command, const Json& args, const chilab::cli::Settings& s) {
    return Json{{"command", command},
                {"args", args},
                {"format", chilab::cli::format_name(s.format)},
                {"budget_ms", s.budget_ms}};
}

std::vector<chilab::lab::OutputRecord> write_outputs(const fs::path& dir, const chilab::cli::CommandResult& r) {
    fs::create_directories(dir);
    std::vector<chilab::lab::OutputRecord> records;
    for (const auto& f : r.files) {
        chilab::lab::write_text_file((dir / f.name).string(), f.content);
        records.push_back({f.name, chilab::lab::sha256_hex(f.content), f.content.size()});
    }
    return records;
}

int run(const Json& params, const chilab::cli::Settings& s) {
    chilab::lab::Manifest m;
    m.experiment = params.at("command").get<std::string>();
    m.parameters = params;
    m.workers = s.threads;
    m.started = chilab::lab::utc_now();
    const auto result = chilab::cli::run_command(params, s);
    m.finished = chilab::lab::utc_now();
    m.master_seed = result.master_seed;
    m.stream_assignment = result.stream_assignment;
    m.node_budget = result.node_budget;
    m.toolchain = chilab::lab::toolchain_fingerprint();
    m.outputs = write_outputs(s.out, result);
    chilab::lab::write_text_file((fs::path(s.out) / chilab::lab::kManifestFile).string(),
                                 chilab::lab::dump(chilab::lab::to_json(m)));
    std::cout << result.files.front().content;
    return kExitOk;
}

int replay(const std::string& manifest_path, chilab::cli::Settings s, bool out_given) {
    const auto m = chilab::lab::read_manifest(manifest_path);
    s.format = chilab::cli::parse_format(m.parameters.at("format").get<std::string>());
    s.budget_ms = m.parameters.at("budget_ms").get<std::uint64_t>();
    if (!out_given) s.out = (fs::path(manifest_path).parent_path() / "replay").string();
    const auto result = chilab::cli::run_command(m.parameters, s);
    const auto records = write_outputs(s.out, result);
    bool identical = records.size() == m.outputs.size();
    for (const auto& want : m.outputs) {
        const auto got = std::find_if(records.begin(), records.end(),
                                      [&](const auto& r) { return r.path == want.path; });
        const bool same = got != records.end() && got->sha256 == want.sha256;
        identical = identical && same;
        std::cout << (same ? "identical " : "MISMATCH  ") << want.path << ' ' << want.sha256 << '\n';
    }
    std::cout << (identical ? "replay: identical\n" : "replay: outputs differ\n");
    return identical ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chilab: random-graph laboratory for chromatic number non-concentration"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    g.out_opt = app.add_option("--out", g.out, "output directory (default chilab-out)");
    g.format_opt = app.add_option("--format", g.format, "csv or json (default json)");
    g.threads_opt = app.add_option("--threads", g.threads, "worker threads (results do not depend on it)");
    g.budget_opt = app.add_option("--budget-ms", g.budget_ms, "per-solve budget, converted to search nodes");
    app.add_option("--config", g.config, "JSON file with keys out, format, threads, budget_ms");

    Json args = Json::object();
    std::string command;
    std::string manifest_path;
    auto text = [&](CLI::App* sub, const char* name, const char* help) {
        sub->add_option_function<std::string>(name, [&args, name](const std::string& v) { args[name] = v; }, help)
            ->required();
    };
    auto optional_text = [&](CLI::App* sub, const char* flag, const char* key, const char* def, const char* help) {
        args[key] = def;
        sub->add_option_function<std::string>(flag, [&args, key](const std::string& v) { args[key] = v; }, help);
    };
    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&command, name] { command = name; });
        return s;
    };

    auto* s = sub("profile", "analytic profile of one n");
    text(s, "n", "vertex count (digits, 1e12 or 10^12)");
    s = sub("find-band", "smallest n >= N with x(n) in (c1, c2)");
    text(s, "c1", "lower band edge");
    text(s, "c2", "upper band edge");
    text(s, "N", "start of the search");
    optional_text(s, "--max-candidates", "max_candidates", "100000000", "search budget");
    s = sub("fgap", "f(n') - f(n) against r + (1 - x) r / a");
    text(s, "n", "vertex count");
    s = sub("ybound", "sigma_t table and the first-moment bound on Y");
    text(s, "n", "vertex count");
    text(s, "A", "number of planted sets inside V");
    s = sub("ledger", "step sequence n_1 < n_2 < ... and its bookkeeping");
    text(s, "c", "target exponent in (0, 1/4)");
    text(s, "n1", "hint for n_1");
    optional_text(s, "--enumerate-cap", "enumerate_cap", "1000000", "maximum number of enumerated steps");
    s = sub("poisson-shift", "shifted-set check for Poi(lambda)");
    text(s, "lambda", "Poisson mean (>= 4)");
    text(s, "epsilon", "epsilon in (0, 1)");
    text(s, "set", "integer set: empty, a..b, a.., ..b, comma lists, or upper:<s> for k >= lambda + s sqrt(lambda)");
    s = sub("sample", "draw G(n, 1/2)");
    text(s, "n", "vertex count");
    text(s, "seed", "master seed");
    optional_text(s, "--stream", "stream", "0", "stream index");
    s = sub("xk-dist", "distribution of the number of independent k-sets");
    text(s, "n", "vertex count");
    text(s, "k", "set size");
    text(s, "samples", "number of graphs (>= 100)");
    text(s, "seed", "master seed");
    s = sub("couple", "build and verify a conditioned pair (H, H')");
    text(s, "n", "order of H");
    text(s, "a", "planted set size");
    text(s, "A", "planted sets inside H");
    text(s, "r", "planted sets outside H");
    text(s, "seed", "master seed");
    optional_text(s, "--max-attempts", "max_attempts", "100000", "rejection budget");
    s = sub("chi-interval", "empirical distribution of chi(G(n, 1/2))");
    text(s, "n", "vertex count (<= 80)");
    text(s, "samples", "number of graphs (>= 50)");
    text(s, "seed", "master seed");
    s = sub("claim2", "compare H with G(n, 1/2) conditioned on X_a = A");
    text(s, "n", "order of H");
    text(s, "a", "set size");
    text(s, "A", "number of independent a-sets");
    text(s, "samples", "samples per law");
    text(s, "statistic", "edge_count, chi, max_degree or triangle_count");
    text(s, "seed", "master seed");
    optional_text(s, "--slack", "slack", "0.1", "allowed relative excess on threshold events");
    s = sub("replay", "rerun a manifest and compare output hashes");
    s->add_option("manifest", manifest_path, "path to manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        const auto settings = resolve(g);
        if (command == "replay") return replay(manifest_path, settings, g.out_opt->count() > 0 || std::getenv("CHILAB_OUT"));
        // Drop defaults belonging to other subcommands.
        Json own = Json::object();
        for (const auto* opt : app.get_subcommand(command)->get_options()) {
            std::string key = opt->get_name(false, true);
            if (key.rfind("--", 0) == 0) key = key.substr(2);
            for (auto& c : key)
                if (c == '-') c = '_';
            if (args.contains(key)) own[key] = args[key];
        }
        return run(parameters(command, own, settings), settings);
    } catch (const chilab::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const chilab::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
