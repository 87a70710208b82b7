#include "commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "chilab/asymptotics.hpp"
#include "chilab/coupling.hpp"
#include "chilab/errors.hpp"
#include "chilab/graph_io.hpp"
#include "chilab/lab/experiments.hpp"
#include "chilab/lab/serialize.hpp"
#include "chilab/poisson.hpp"

namespace chilab::cli {
namespace {

using lab::Json;

std::string ext(Format f) { return f == Format::json ? ".json" : ".csv"; }

BigInt big(const Json& args, const char* key) { return parse_bigint(args.at(key).get<std::string>()); }

std::uint64_t u64(const Json& args, const char* key) {
    const BigInt v = big(args, key);
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw DomainError(std::string(key) + " must fit in 64 bits");
    return v.convert_to<std::uint64_t>();
}

double real(const Json& args, const char* key) {
    const std::string text = args.at(key).get<std::string>();
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size()) throw DomainError(std::string(key) + ": not a number: " + text);
    return v;
}

std::string graph_binary(const graph::Graph& g) {
    std::ostringstream o;
    graph::write_binary(o, g);
    return o.str();
}

CommandResult single(const std::string& stem, Format f, const Json& j, const std::string& csv) {
    CommandResult r;
    r.files.push_back({stem + ext(f), f == Format::json ? lab::dump(j) : csv});
    return r;
}

CommandResult profile_cmd(const Json& a, const Settings& s) {
    const auto p = asymptotics::profile(big(a, "n"));
    return single("profile", s.format, lab::to_json(p), lab::profile_csv(p));
}

CommandResult find_band_cmd(const Json& a, const Settings& s) {
    const double c1 = real(a, "c1"), c2 = real(a, "c2");
    const BigInt N = big(a, "N");
    asymptotics::BandSearchOptions opt;
    opt.max_candidates = u64(a, "max_candidates");
    const auto p = asymptotics::profile(asymptotics::find_n_in_band(c1, c2, N, opt));
    return single("find-band", s.format, lab::band_json(c1, c2, N, p), lab::band_csv(c1, c2, N, p));
}

CommandResult fgap_cmd(const Json& a, const Settings& s) {
    const auto g = asymptotics::f_gap(big(a, "n"));
    return single("fgap", s.format, lab::to_json(g), lab::fgap_csv(g));
}

CommandResult ybound_cmd(const Json& a, const Settings& s) {
    const auto y = asymptotics::y_bound(big(a, "n"), big(a, "A"));
    return single("ybound", s.format, lab::to_json(y), lab::ybound_csv(y));
}

CommandResult ledger_cmd(const Json& a, const Settings& s) {
    const auto l = asymptotics::ledger(real(a, "c"), big(a, "n1"), u64(a, "enumerate_cap"));
    return single("ledger", s.format, lab::to_json(l), lab::ledger_csv(l));
}

IntegerSet parse_set(const std::string& text, double lambda) {
    // "upper:<s>" is the tail beyond lambda + s sqrt(lambda).
    if (text.rfind("upper:", 0) == 0) {
        const double k = std::stod(text.substr(6));
        return IntegerSet::at_least(static_cast<std::int64_t>(std::ceil(lambda + k * std::sqrt(lambda))));
    }
    return IntegerSet::parse(text);
}

CommandResult poisson_shift_cmd(const Json& a, const Settings& s) {
    const double lambda = real(a, "lambda"), eps = real(a, "epsilon");
    const auto c = poisson::shifted_mass_check(lambda, parse_set(a.at("set").get<std::string>(), lambda), eps);
    return single("poisson-shift", s.format, lab::to_json(c), lab::shifted_mass_csv(c));
}

CommandResult sample_cmd(const Json& a, const Settings& s) {
    const std::uint64_t n = u64(a, "n"), seed = u64(a, "seed"), stream = u64(a, "stream");
    if (n < 1 || n > graph::kMaxVertices) throw DomainError("n must be in [1, 16384]");
    const auto g = graph::sample_gnp_half(n, seed, stream);
    Json j;
    j["schema"] = lab::schema_id("graph_sample");
    j["n"] = n;
    j["seed"] = seed;
    j["stream"] = stream;
    j["edges"] = g.edge_count();
    j["hash"] = g.hash();
    j["graph_file"] = "graph.chigraph";
    std::ostringstream csv;
    csv << "n,seed,stream,edges,hash\n" << n << ',' << seed << ',' << stream << ',' << g.edge_count() << ','
        << g.hash() << '\n';
    auto r = single("sample", s.format, j, csv.str());
    r.files.push_back({"graph.chigraph", graph_binary(g)});
    std::ostringstream dimacs;
    graph::write_dimacs(dimacs, g, "G(n,1/2) seed " + std::to_string(seed) + " stream " + std::to_string(stream));
    r.files.push_back({"graph.dimacs", dimacs.str()});
    r.master_seed = seed;
    r.stream_assignment = "single graph on stream " + std::to_string(stream);
    return r;
}

CommandResult xk_cmd(const Json& a, const Settings& s) {
    lab::XkOptions opt;
    opt.threads = s.threads;
    const auto rep = lab::xk_distribution_experiment(u64(a, "n"), u64(a, "k"), u64(a, "samples"), u64(a, "seed"), opt);
    auto r = single("xk-dist", s.format, lab::to_json(rep), lab::xk_csv(rep));
    r.master_seed = rep.seed;
    r.stream_assignment = "sample i uses stream i";
    return r;
}

CommandResult couple_cmd(const Json& a, const Settings& s) {
    const auto pair = coupling::build_conditioned_pair(u64(a, "n"), u64(a, "a"), u64(a, "A"), u64(a, "r"),
                                                       u64(a, "seed"), u64(a, "max_attempts"));
    const auto budget = graph::SolveBudget::nodes(s.budget_ms * lab::kNodesPerMs);
    const auto verification = coupling::verify_pair(pair);
    const auto gap = coupling::verify_chi_gap(pair, budget);
    const Json sidecar = lab::pair_json(pair, verification, gap);
    CommandResult r;
    r.files.push_back({"pair" + ext(s.format), s.format == Format::json ? lab::dump(sidecar) : lab::pair_csv(pair, gap)});
    if (s.format == Format::csv) r.files.push_back({"pair.json", lab::dump(sidecar)});
    r.files.push_back({"H.chigraph", graph_binary(pair.H)});
    r.files.push_back({"H_prime.chigraph", graph_binary(pair.H_prime)});
    r.master_seed = pair.seed;
    r.stream_assignment = "attempt j uses stream j";
    r.node_budget = s.budget_ms * lab::kNodesPerMs;
    return r;
}

CommandResult chi_interval_cmd(const Json& a, const Settings& s) {
    lab::ChiIntervalOptions opt;
    opt.threads = s.threads;
    opt.budget_ms = s.budget_ms;
    const auto rep = lab::chi_interval_experiment(u64(a, "n"), u64(a, "samples"), u64(a, "seed"), opt);
    auto r = single("chi-interval", s.format, lab::to_json(rep), lab::chi_interval_csv(rep));
    r.master_seed = rep.seed;
    r.stream_assignment = "sample i uses stream i";
    r.node_budget = rep.node_budget;
    return r;
}

CommandResult claim2_cmd(const Json& a, const Settings& s) {
    coupling::Claim2Options opt;
    opt.seed = u64(a, "seed");
    opt.threads = s.threads;
    opt.slack = real(a, "slack");
    const auto rep = coupling::claim2_experiment(u64(a, "n"), u64(a, "a"), u64(a, "A"), u64(a, "samples"),
                                                 coupling::parse_statistic(a.at("statistic").get<std::string>()), opt);
    std::ostringstream csv;
    csv << "sample,statistic_H,statistic_reference\n";
    for (std::size_t i = 0; i < rep.values_H.size(); ++i)
        csv << i << ',' << rep.values_H[i] << ',' << rep.values_ref[i] << '\n';
    auto r = single("claim2", s.format, lab::to_json(rep), csv.str());
    r.master_seed = opt.seed;
    r.stream_assignment = "sample i: pair seed derive(seed,1,i), reference seed derive(seed,2,i)";
    return r;
}

}  // namespace

std::string format_name(Format f) { return f == Format::json ? "json" : "csv"; }

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw DomainError("format must be csv or json, got '" + text + "'");
}

CommandResult run_command(const Json& params, const Settings& settings) {
    const std::string name = params.at("command").get<std::string>();
    const Json& args = params.at("args");
    if (name == "profile") return profile_cmd(args, settings);
    if (name == "find-band") return find_band_cmd(args, settings);
    if (name == "fgap") return fgap_cmd(args, settings);
    if (name == "ybound") return ybound_cmd(args, settings);
    if (name == "ledger") return ledger_cmd(args, settings);
    if (name == "poisson-shift") return poisson_shift_cmd(args, settings);
    if (name == "sample") return sample_cmd(args, settings);
    if (name == "xk-dist") return xk_cmd(args, settings);
    if (name == "couple") return couple_cmd(args, settings);
    if (name == "chi-interval") return chi_interval_cmd(args, settings);
    if (name == "claim2") return claim2_cmd(args, settings);
    throw DomainError("unknown command '" + name + "'");
}

}  // namespace chilab::cli
