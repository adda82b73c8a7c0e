#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "roughalg/algebra.hpp"
#include "roughalg/gas.hpp"
#include "roughalg/ideals.hpp"
#include "roughalg/laws.hpp"
#include "roughalg/relations.hpp"
#include "roughalg/search.hpp"
#include "roughalg/sweep.hpp"

namespace roughalg::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Subset& s);
Json to_json(const Partition& p);
Json to_json(const Witness& w);
Json to_json(const AxiomReport& r);
Json to_json(const IdealReport& r);
Json to_json(const EquivalenceReport& r);
Json to_json(const LawOutcome& o);
Json to_json(const LawResult& r);
Json to_json(const Finding& f);
Json to_json(const LawTally& t);
Json to_json(const MorphismReport& r);
Json labels_json(const std::vector<Label>& labels);
Json algebra_json(const FiniteAlgebra& alg, const std::optional<std::string>& name);
Json table_json(const FiniteAlgebra& alg);

std::string labels_text(const std::vector<Label>& labels);
std::string witnesses_text(const std::vector<Witness>& ws);
std::string outcome_text(const LawOutcome& o);
std::string finding_text(const Finding& f);

inline constexpr const char* kTick = "✓";
inline constexpr const char* kCross = "✗";

inline const char* mark(bool ok) { return ok ? kTick : kCross; }

}  // namespace roughalg::cli
