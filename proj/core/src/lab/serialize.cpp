#include "chilab/lab/serialize.hpp"

#include <sstream>

namespace chilab::lab {
namespace {

std::string dec(const Real& v) { return to_decimal(v, 36); }
std::string dec(double v) { return to_decimal(Real(v), 36); }

Json header(const std::string& name) {
    Json j;
    j["schema"] = schema_id(name);
    return j;
}

std::string boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string schema_id(const std::string& name) { return kSchemaPrefix + name + "/v1"; }

Json real_json(const Real& v) { return Json{{"dec", dec(v)}, {"hex", to_hex(v)}}; }
Json real_json(double v) { return real_json(Real(v)); }

Json certified_json(const poisson::Certified& c) {
    return Json{{"value", real_json(c.value)}, {"error", real_json(c.error)}};
}

Json to_json(const asymptotics::AsymptoticProfile& p) {
    Json j = header("profile");
    j["n"] = to_string(p.n);
    j["alpha0"] = real_json(p.alpha0);
    j["a"] = p.a;
    j["log2_mu"] = real_json(p.log2_mu);
    j["x"] = real_json(p.x);
    j["r"] = to_string(p.r);
    j["n_prime"] = to_string(p.n_prime);
    j["discrepancy"] = real_json(p.discrepancy);
    j["a_ambiguous"] = p.a_ambiguous;
    if (p.a_ambiguous) j["a_alternate"] = p.a_alternate;
    j["outside_envelope"] = p.outside_envelope;
    return j;
}

Json band_json(double c1, double c2, const BigInt& N, const asymptotics::AsymptoticProfile& found) {
    Json j = header("band");
    j["c1"] = real_json(c1);
    j["c2"] = real_json(c2);
    j["N"] = to_string(N);
    j["n"] = to_string(found.n);
    j["x"] = real_json(found.x);
    j["a"] = found.a;
    return j;
}

Json to_json(const asymptotics::FGap& g) {
    Json j = header("fgap");
    j["n"] = to_string(g.n);
    j["n_prime"] = to_string(g.n_prime);
    j["a"] = g.a;
    j["r"] = to_string(g.r);
    j["x"] = real_json(g.x);
    j["gap"] = real_json(g.gap);
    j["predicted"] = real_json(g.predicted);
    j["relative_error"] = real_json(g.relative_error);
    return j;
}

Json to_json(const asymptotics::YBoundReport& y) {
    Json j = header("ybound");
    j["n"] = to_string(y.n);
    j["A"] = to_string(y.A);
    j["r"] = to_string(y.r);
    j["a"] = y.a;
    j["mu"] = real_json(y.mu);
    Json sigma = Json::array();
    for (const auto& [t, l] : y.log2_sigma) sigma.push_back(Json{{"t", t}, {"log2_sigma", real_json(l)}});
    j["sigma"] = sigma;
    j["argmax_t"] = y.argmax_t;
    j["sigma_max"] = real_json(y.sigma_max);
    j["endpoint_max_holds"] = y.endpoint_max_holds;
    j["a_sigma_max"] = real_json(y.a_sigma_max);
    j["divergent"] = y.divergent;
    j["bound"] = y.bound ? real_json(*y.bound) : Json("+inf");
    return j;
}

Json to_json(const asymptotics::LedgerReport& l) {
    Json j = header("ledger");
    j["c"] = real_json(l.c);
    j["epsilon"] = real_json(l.epsilon);
    j["n1"] = to_string(l.n1);
    j["x1"] = real_json(l.x1);
    j["a"] = l.a;
    j["M_alpha0"] = to_string(l.M_alpha0);
    j["M_exponent"] = to_string(l.M_exponent);
    j["M"] = to_string(l.M);
    j["boundary"] = l.boundary == asymptotics::LedgerBoundary::alpha0_threshold ? "alpha0" : "exponent";
    j["complete"] = l.complete;
    if (l.complete)
        j["i_max"] = l.i_max_low;
    else
        j["i_max"] = Json{{"estimated", true}, {"low", l.i_max_low}, {"high", l.i_max_high}};
    Json steps = Json::array();
    for (const auto& s : l.steps)
        steps.push_back(Json{{"n", to_string(s.n)},
                             {"x", real_json(s.x)},
                             {"r", to_string(s.r)},
                             {"a", s.a},
                             {"hypothesis_ok", s.hypothesis_ok}});
    j["steps"] = steps;
    j["telescoped_sum"] = to_string(l.telescoped_sum);
    j["telescoped_span"] = to_string(l.telescoped_span);
    j["sum_r_over_3a"] = real_json(l.sum_r_over_3a);
    j["sum_r_over_3a_high"] = real_json(l.sum_r_over_3a_high);
    j["crossover_n"] = l.crossover_n ? Json(to_string(*l.crossover_n)) : Json(nullptr);
    return j;
}

Json to_json(const poisson::ShiftedMassCheck& s) {
    Json j = header("shifted_mass");
    j["lambda"] = real_json(s.lambda);
    j["r"] = s.r;
    j["epsilon"] = real_json(s.epsilon);
    j["delta"] = real_json(s.delta);
    j["t"] = real_json(s.t);
    j["t_lower"] = real_json(s.t_lower);
    j["t_upper"] = real_json(s.t_upper);
    j["set"] = s.set;
    j["mass_B"] = certified_json(s.mass_B);
    j["mass_B_shifted"] = certified_json(s.mass_B_shifted);
    j["mass_B1_shifted"] = certified_json(s.mass_B1_shifted);
    j["mass_B2_shifted"] = certified_json(s.mass_B2_shifted);
    j["mass_B2"] = certified_json(s.mass_B2);
    j["mass_outside_I_t_minus_1"] = certified_json(s.mass_outside_I_t_minus_1);
    j["chebyshev_bound"] = real_json(s.chebyshev_bound);
    j["max_log_ratio"] = real_json(s.max_log_ratio);
    j["ratio_points"] = s.ratio_points;
    j["ratio_bound_ok"] = s.ratio_bound_ok;
    j["chebyshev_ok"] = s.chebyshev_ok;
    j["b2_bound_ok"] = s.b2_bound_ok;
    j["union_bound_ok"] = s.union_bound_ok;
    j["conclusion_ok"] = s.conclusion_ok;
    j["status"] = s.status == poisson::ShiftStatus::ok ? "ok" : "hypothesis_violated";
    j["min_slack"] = real_json(s.min_slack);
    return j;
}

Json to_json(const XkReport& r) {
    Json j = header("xk_distribution");
    j["n"] = r.n;
    j["k"] = r.k;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["log2_mu"] = real_json(r.log2_mu);
    j["mu"] = real_json(r.mu);
    j["histogram"] = r.histogram;
    j["tv"] = certified_json(r.tv);
    Json blocks = Json::array();
    for (const auto& b : r.block_tv) blocks.push_back(certified_json(b));
    j["block_tv"] = blocks;
    j["mean"] = real_json(r.mean);
    j["variance"] = real_json(r.variance);
    return j;
}

Json to_json(const ChiIntervalReport& r) {
    Json j = header("chi_interval");
    j["n"] = r.n;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["node_budget"] = r.node_budget;
    j["incomplete"] = r.incomplete;
    j["unreliable"] = r.unreliable;
    j["min"] = r.min;
    j["max"] = r.max;
    j["mean"] = real_json(r.mean);
    Json q = Json::array();
    for (const auto& [p, v] : r.quantiles) q.push_back(Json{{"p", real_json(p)}, {"value", v}});
    j["quantiles"] = q;
    j["interval90"] = Json{{"lo", r.interval90_lo}, {"hi", r.interval90_hi}, {"mass", real_json(r.interval90_mass)}};
    j["f_n"] = r.f_n ? real_json(*r.f_n) : Json(nullptr);
    j["relative_deviation"] = r.relative_deviation ? real_json(*r.relative_deviation) : Json(nullptr);
    j["tolerance"] = real_json(r.tolerance);
    j["within_tolerance"] = r.within_tolerance;
    j["envelope_ok"] = r.envelope_ok;
    Json per = Json::array();
    for (const auto& s : r.per_sample)
        per.push_back(Json{{"lower", s.lower}, {"upper", s.upper}, {"complete", s.complete}, {"alpha", s.alpha},
                           {"nodes", s.nodes}});
    j["per_sample"] = per;
    return j;
}

Json to_json(const coupling::Claim2Report& r) {
    Json j = header("claim2");
    j["n"] = r.n;
    j["a"] = r.a;
    j["A"] = r.A;
    j["r"] = r.r;
    j["statistic"] = coupling::to_string(r.statistic);
    j["samples"] = r.samples;
    j["slack"] = real_json(r.slack);
    j["slack_note"] = "finite-n stand-in for the asymptotic (1+o(1)) factor; chosen, not derived";
    j["statistic_invariant"] = r.statistic_invariant;
    j["mean_H"] = real_json(r.mean_H);
    j["mean_ref"] = real_json(r.mean_ref);
    j["se_H"] = real_json(r.se_H);
    j["se_ref"] = real_json(r.se_ref);
    j["mean_gap_in_se"] = real_json(r.mean_gap_in_se);
    j["tv"] = real_json(r.tv);
    j["ks"] = real_json(r.ks);
    j["ks_permutation_p"] = real_json(r.ks_permutation_p);
    j["ref_attempts"] = r.ref_attempts;
    j["ref_acceptance"] = real_json(r.ref_acceptance);
    j["pair_attempts"] = r.pair_attempts;
    Json events = Json::array();
    for (const auto& e : r.events)
        events.push_back(Json{{"threshold", e.threshold},
                              {"direction", e.upper ? ">=" : "<="},
                              {"p_H", real_json(e.p_H)},
                              {"p_ref", real_json(e.p_ref)},
                              {"se", real_json(e.se)},
                              {"dominated", e.dominated}});
    j["events"] = events;
    j["all_dominated"] = r.all_dominated;
    return j;
}

Json pair_json(const coupling::CoupledPair& pair, const coupling::PairVerification& v,
               const coupling::ChiGapReport& gap) {
    Json j = header("coupled_pair");
    j["n"] = pair.n;
    j["n_prime"] = pair.n_prime;
    j["a"] = pair.a;
    j["A"] = pair.A;
    j["r"] = pair.r;
    j["seed"] = pair.seed;
    j["planted"] = pair.planted;
    j["attempts"] = pair.attempts;
    j["rejected_u1"] = pair.rejected_u1;
    j["rejected_u2"] = pair.rejected_u2;
    j["H_hash"] = pair.H.hash();
    j["H_prime_hash"] = pair.H_prime.hash();
    j["verification"] = Json{{"planted_disjoint", v.planted_disjoint},
                             {"planted_independent", v.planted_independent},
                             {"layout_ok", v.layout_ok},
                             {"induced_ok", v.induced_ok},
                             {"count_H", v.count_H},
                             {"count_H_prime", v.count_H_prime},
                             {"ok", v.ok() && v.count_H == pair.A && v.count_H_prime == pair.A + pair.r}};
    j["chi"] = Json{{"H", Json{{"lower", gap.chi_H_lower}, {"upper", gap.chi_H_upper}}},
                    {"H_prime", Json{{"lower", gap.chi_H_prime_lower}, {"upper", gap.chi_H_prime_upper}}},
                    {"complete", gap.complete},
                    {"gap", coupling::to_string(gap.gap)},
                    {"gap_ok", gap.gap_ok()},
                    {"witness_proper", gap.witness_proper},
                    {"monotone", gap.monotone}};
    return j;
}

std::string profile_csv(const asymptotics::AsymptoticProfile& p) {
    std::ostringstream o;
    o << "n,alpha0,a,log2_mu_bits,x,r,n_prime,discrepancy,a_ambiguous\n";
    o << to_string(p.n) << ',' << dec(p.alpha0) << ',' << p.a << ',' << dec(p.log2_mu) << ',' << dec(p.x) << ','
      << to_string(p.r) << ',' << to_string(p.n_prime) << ',' << dec(p.discrepancy) << ',' << boolean(p.a_ambiguous)
      << '\n';
    return o.str();
}

std::string band_csv(double c1, double c2, const BigInt& N, const asymptotics::AsymptoticProfile& found) {
    std::ostringstream o;
    o << "c1,c2,N,n,x,a\n";
    o << dec(c1) << ',' << dec(c2) << ',' << to_string(N) << ',' << to_string(found.n) << ',' << dec(found.x) << ','
      << found.a << '\n';
    return o.str();
}

std::string fgap_csv(const asymptotics::FGap& g) {
    std::ostringstream o;
    o << "n,n_prime,a,r,x,gap_colours,predicted_colours,relative_error\n";
    o << to_string(g.n) << ',' << to_string(g.n_prime) << ',' << g.a << ',' << to_string(g.r) << ',' << dec(g.x) << ','
      << dec(g.gap) << ',' << dec(g.predicted) << ',' << dec(g.relative_error) << '\n';
    return o.str();
}

std::string ybound_csv(const asymptotics::YBoundReport& y) {
    std::ostringstream o;
    o << "t,log2_sigma_bits\n";
    for (const auto& [t, l] : y.log2_sigma) o << t << ',' << dec(l) << '\n';
    return o.str();
}

std::string ledger_csv(const asymptotics::LedgerReport& l) {
    std::ostringstream o;
    o << "i,n,x,r,a,hypothesis_ok\n";
    for (std::size_t i = 0; i < l.steps.size(); ++i) {
        const auto& s = l.steps[i];
        o << i + 1 << ',' << to_string(s.n) << ',' << dec(s.x) << ',' << to_string(s.r) << ',' << s.a << ','
          << boolean(s.hypothesis_ok) << '\n';
    }
    return o.str();
}

std::string shifted_mass_csv(const poisson::ShiftedMassCheck& s) {
    std::ostringstream o;
    o << "lambda,epsilon,delta,t,mass_B,mass_B_shifted,mass_B1_shifted,mass_B2_shifted,max_log_ratio_nats,status,"
         "min_slack\n";
    o << dec(s.lambda) << ',' << dec(s.epsilon) << ',' << dec(s.delta) << ',' << dec(s.t) << ','
      << dec(s.mass_B.value) << ',' << dec(s.mass_B_shifted.value) << ',' << dec(s.mass_B1_shifted.value) << ','
      << dec(s.mass_B2_shifted.value) << ',' << dec(s.max_log_ratio) << ','
      << (s.status == poisson::ShiftStatus::ok ? "ok" : "hypothesis_violated") << ',' << dec(s.min_slack) << '\n';
    return o.str();
}

std::string xk_csv(const XkReport& r) {
    std::ostringstream o;
    o << "independent_sets,samples,empirical_probability,poisson_probability\n";
    const poisson::PoissonSpec spec(std::max(r.mu, 1e-300));
    for (std::size_t k = 0; k < r.histogram.size(); ++k)
        o << k << ',' << r.histogram[k] << ','
          << dec(static_cast<double>(r.histogram[k]) / static_cast<double>(r.samples)) << ','
          << dec(poisson::pmf(spec, k)) << '\n';
    return o.str();
}

std::string chi_interval_csv(const ChiIntervalReport& r) {
    std::ostringstream o;
    o << "sample,stream,chi_lower_colours,chi_upper_colours,complete,alpha_vertices,search_nodes\n";
    for (std::size_t i = 0; i < r.per_sample.size(); ++i) {
        const auto& s = r.per_sample[i];
        o << i << ',' << i << ',' << s.lower << ',' << s.upper << ',' << boolean(s.complete) << ',' << s.alpha << ','
          << s.nodes << '\n';
    }
    return o.str();
}

std::string pair_csv(const coupling::CoupledPair& pair, const coupling::ChiGapReport& gap) {
    std::ostringstream o;
    o << "n,n_prime,a,A,r,seed,attempts,chi_H_colours,chi_H_prime_colours,gap_ok\n";
    o << pair.n << ',' << pair.n_prime << ',' << pair.a << ',' << pair.A << ',' << pair.r << ',' << pair.seed << ','
      << pair.attempts << ',' << gap.chi_H_upper << ',' << gap.chi_H_prime_upper << ',' << boolean(gap.gap_ok())
      << '\n';
    return o.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace chilab::lab
