#pragma once

#include <string>

#include <json.hpp>

#include "hmlab/coset.hpp"
#include "hmlab/monodromy.hpp"
#include "hmlab/predict.hpp"

namespace hmlab {

using Json = nlohmann::json;

enum class OutputFormat { text, json, tsv };

OutputFormat parse_output_format(std::string const &s);

/// Orders whose decimal expansion would exceed this many digits are
/// reported factored only.
inline constexpr double max_decimal_digits = 100'000;

/// One computation's output: {"computation", "params", "results"}.
/// Nothing time-dependent goes in, so equal inputs give equal bytes.
struct Report
{
  std::string computation;
  Json params = Json::object();
  Json results = Json::object();

  Json to_json() const;
  std::string render(OutputFormat format) const;
};

/// Sets results[prefix + "order_factored"] = [[p, e], ...] and
/// results[prefix + "order_decimal"] (null when too long).
void put_order(Json &results, std::string const &prefix, FactoredInteger const &n);

Report make_report(MonodromyReport const &r);
Report make_report(PredictedStructure const &p);
Report make_report(OmegaCrosscheck const &c);
Report make_report(CosetRepresentation const &c);
Report make_report(CommutatorWitness const &w);
Report make_report(ChainRepCheck const &c);
Report make_report(CubeClosureCheck const &c);

} // namespace hmlab
