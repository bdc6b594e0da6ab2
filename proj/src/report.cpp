#include "hmlab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hmlab {

namespace {

std::string big(BigInt const &n)
{
  return n.str();
}

std::string scalar_text(Json const &v)
{
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

Json cycle_types_json(std::vector<std::map<std::size_t, std::size_t>> const &types)
{
  Json out = Json::array();
  for (auto const &t : types) {
    Json one = Json::array();
    for (auto [len, count] : t)
      one.push_back({len, count});
    out.push_back(one);
  }
  return out;
}

} // namespace

OutputFormat parse_output_format(std::string const &s)
{
  if (s == "text")
    return OutputFormat::text;
  if (s == "json")
    return OutputFormat::json;
  if (s == "tsv")
    return OutputFormat::tsv;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, json or tsv)");
}

void put_order(Json &results, std::string const &prefix, FactoredInteger const &n)
{
  Json f = Json::array();
  for (auto [p, e] : n.pairs())
    f.push_back({p, e});
  results[prefix + "order_factored"] = f;
  if (n.decimal_digits() > max_decimal_digits) {
    results[prefix + "order_decimal"] = nullptr;
    results[prefix + "order_note"] = "decimal expansion omitted (about " +
                                     std::to_string(static_cast<long long>(n.decimal_digits())) +
                                     " digits)";
  } else {
    results[prefix + "order_decimal"] = n.decimal();
  }
}

Json Report::to_json() const
{
  return Json{{"computation", computation}, {"params", params}, {"results", results}};
}

std::string Report::render(OutputFormat format) const
{
  std::ostringstream os;
  switch (format) {
  case OutputFormat::json:
    os << to_json().dump(2) << '\n';
    break;
  case OutputFormat::tsv:
    os << "computation\t" << computation << '\n';
    for (auto const &[k, v] : params.items())
      os << "params." << k << '\t' << scalar_text(v) << '\n';
    for (auto const &[k, v] : results.items())
      os << k << '\t' << scalar_text(v) << '\n';
    break;
  case OutputFormat::text:
    os << computation;
    for (auto const &[k, v] : params.items())
      os << ' ' << k << '=' << scalar_text(v);
    os << '\n';
    for (auto const &[k, v] : results.items()) {
      if (k.ends_with("order_factored")) {
        // print as 2^22 * 3^44 * 5
        std::string s;
        for (auto const &pe : v) {
          if (!s.empty())
            s += " * ";
          s += std::to_string(pe[0].get<std::uint64_t>());
          if (pe[1].get<std::uint64_t>() != 1)
            s += "^" + std::to_string(pe[1].get<std::uint64_t>());
        }
        os << "  " << k << ": " << (s.empty() ? "1" : s) << '\n';
      } else {
        os << "  " << k << ": " << scalar_text(v) << '\n';
      }
    }
    break;
  }
  return os.str();
}

Report make_report(MonodromyReport const &r)
{
  Report out{"analyze", {{"group", r.group}, {"b", r.b}}, Json::object()};
  auto &res = out.results;
  res["degree"] = r.degree;
  res["omega_degree"] = r.omega_degree;
  res["transitive"] = r.transitive;
  res["omega_transitive"] = r.omega_transitive;
  res["omega_primitive"] = r.omega_primitive ? Json(*r.omega_primitive) : Json(nullptr);
  put_order(res, "", r.group_order);
  put_order(res, "omega_", r.omega_order);
  put_order(res, "kernel_", r.kernel_order);
  Json fibers = Json::array();
  for (auto [size, count] : r.fiber_sizes)
    fibers.push_back({size, count});
  res["fiber_sizes"] = fibers;
  res["variant"] = r.variant;
  res["notes"] = r.notes;
  return out;
}

Report make_report(PredictedStructure const &p)
{
  Report out{"predict", {{"tag", to_string(p.tag)}, {"g", p.g}, {"b", p.b}, {"N", p.N}},
             Json::object()};
  auto &res = out.results;
  put_order(res, "", p.total);
  put_order(res, "left_", p.left);
  put_order(res, "right_", p.right);
  res["left"] = p.left_description;
  res["right"] = p.right_description;
  res["omega_size"] = p.omega_size;
  res["fiber_per_class"] = big(p.fiber_per_class);
  res["fiber_size"] = big(p.fiber_size);
  return out;
}

Report make_report(OmegaCrosscheck const &c)
{
  Report out{"omega-crosscheck", {{"g", c.g}}, Json::object()};
  auto &res = out.results;
  res["points"] = c.points;
  put_order(res, "", c.expected);
  put_order(res, "chain_", c.chain_order);
  put_order(res, "nielsen_", c.nielsen_order);
  res["chain_cycle_types"] = cycle_types_json(c.chain_cycle_types);
  res["nielsen_cycle_types"] = cycle_types_json(c.nielsen_cycle_types);
  res["orders_match"] = c.orders_match();
  res["cycle_types_match"] = c.cycle_types_match();
  return out;
}

Report make_report(CosetRepresentation const &c)
{
  Report out{"coset-rep", {{"g", c.genus}}, Json::object()};
  auto &res = out.results;
  res["degree"] = c.degree;
  put_order(res, "", c.image.factored_order());
  Json gens = Json::array();
  for (auto const &g : c.generators)
    gens.push_back(g.images());
  res["generators"] = gens;
  Json words = Json::array();
  for (auto const &w : c.words)
    words.push_back(w.str());
  res["representatives"] = words;
  return out;
}

Report make_report(CommutatorWitness const &w)
{
  Report out{"commutator-witness", {{"b", w.b}}, Json::object()};
  auto &res = out.results;
  res["nontrivial"] = w.nontrivial;
  res["in_omega_kernel"] = w.in_omega_kernel;
  res["moved_points"] = w.moved_points;
  res["fixed_fibers"] = w.fixed_fibers.size();
  res["ok"] = w.ok();
  return out;
}

Report make_report(ChainRepCheck const &c)
{
  Report out{"chain-check", {{"g", c.g}, {"N", c.modulus}}, Json::object()};
  auto &res = out.results;
  res["domain_size"] = c.domain_size;
  put_order(res, "", c.computed);
  put_order(res, "expected_", c.expected);
  res["ok"] = c.ok();
  return out;
}

Report make_report(CubeClosureCheck const &c)
{
  Report out{"cube-check", {{"g", c.g}, {"N", c.modulus}}, Json::object()};
  auto &res = out.results;
  put_order(res, "", c.closure_order);
  put_order(res, "full_", c.full_order);
  res["full"] = c.is_full();
  res["expected_full"] = c.expected_full();
  res["ok"] = c.ok();
  return out;
}

} // namespace hmlab
