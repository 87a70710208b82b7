#pragma once

// JSON and CSV renderings of every report. Reals become {"dec", "hex"}
// pairs: a 36-significant-digit decimal string plus an exact hex float.
// Big integers become decimal strings. Key order is fixed so output bytes
// are reproducible.

#include <string>

#include "json.hpp"

#include "chilab/asymptotics.hpp"
#include "chilab/coupling.hpp"
#include "chilab/lab/experiments.hpp"
#include "chilab/poisson.hpp"

namespace chilab::lab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaPrefix = "chilab/";

/// "chilab/<name>/v1"
std::string schema_id(const std::string& name);

Json real_json(const Real& v);
Json real_json(double v);
Json certified_json(const poisson::Certified& c);

Json to_json(const asymptotics::AsymptoticProfile& p);
Json to_json(const asymptotics::FGap& g);
Json to_json(const asymptotics::YBoundReport& y);
Json to_json(const asymptotics::LedgerReport& l);
Json to_json(const poisson::ShiftedMassCheck& s);
Json to_json(const XkReport& r);
Json to_json(const ChiIntervalReport& r);
Json to_json(const coupling::Claim2Report& r);

/// Sidecar describing a pair; the graphs themselves go to binary files.
Json pair_json(const coupling::CoupledPair& pair, const coupling::PairVerification& verification,
               const coupling::ChiGapReport& gap);

Json band_json(double c1, double c2, const BigInt& N, const asymptotics::AsymptoticProfile& found);

// CSV tables; every table starts with a header naming columns and units.
std::string profile_csv(const asymptotics::AsymptoticProfile& p);
std::string band_csv(double c1, double c2, const BigInt& N, const asymptotics::AsymptoticProfile& found);
std::string fgap_csv(const asymptotics::FGap& g);
std::string ybound_csv(const asymptotics::YBoundReport& y);
std::string ledger_csv(const asymptotics::LedgerReport& l);
std::string shifted_mass_csv(const poisson::ShiftedMassCheck& s);
std::string xk_csv(const XkReport& r);
std::string chi_interval_csv(const ChiIntervalReport& r);
std::string pair_csv(const coupling::CoupledPair& pair, const coupling::ChiGapReport& gap);

/// Deterministic JSON text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace chilab::lab
