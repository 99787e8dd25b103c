#pragma once

#include "daehee/identities.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace daehee {

using Json = nlohmann::ordered_json;

/// MultiPoly wire form: [coefficient-string, dl, dx, dy] quadruples sorted
/// lexicographically by exponent triple. The zero polynomial is [].
inline Json poly_json(const MultiPoly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms())
    arr.push_back(Json::array({c.str(), m.dl, m.dx, m.dy}));
  return arr;
}

/// Table cells: plain "p/q" string for constants, quadruple list otherwise.
inline Json value_json(const MultiPoly& p) {
  if (p.is_constant())
    return Json(p.constant_value().str());
  return poly_json(p);
}

/// Series wire form: {"order": N, "coeffs": [poly, ...]} with plain t^n
/// coefficients. Requires a fully computable series.
inline Json series_json(const TruncatedSeries& s) {
  if (s.known() != s.order())
    throw std::invalid_argument("series_json: series is not fully computable");
  Json coeffs = Json::array();
  for (std::size_t n = 0; n <= s.order(); ++n)
    coeffs.push_back(poly_json(s.coeff(n)));
  Json out;
  out["order"] = s.order();
  out["coeffs"] = std::move(coeffs);
  return out;
}

inline Json params_json(const ParamSet& p) {
  Json out;
  out["n_max"] = p.n_max;
  if (p.r_max)
    out["r_max"] = *p.r_max;
  if (p.d_max)
    out["d_max"] = *p.d_max;
  if (p.k_set)
    out["k_set"] = *p.k_set;
  return out;
}

inline std::string params_str(const ParamSet& p) {
  std::ostringstream os;
  os << "n_max=" << p.n_max;
  if (p.r_max)
    os << ", r_max=" << *p.r_max;
  if (p.d_max)
    os << ", d_max=" << *p.d_max;
  if (p.k_set) {
    os << ", k_set=";
    for (std::size_t i = 0; i < p.k_set->size(); ++i)
      os << (i ? "," : "") << (*p.k_set)[i];
  }
  return os.str();
}

inline Json witness_json(const Witness& w) {
  Json out;
  for (const auto& [key, value] : w.indices)
    out[key] = value;
  out["lhs"] = poly_json(w.lhs);
  out["rhs"] = poly_json(w.rhs);
  return out;
}

/// Report wire form: array of {identity, status, params, note?, witness?,
/// elapsed_ms}.
inline Json reports_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json o;
    o["identity"] = identity_name(r.identity);
    o["status"] = r.passed ? "pass" : "fail";
    o["params"] = params_json(r.params);
    if (!r.note.empty())
      o["note"] = r.note;
    if (r.witness)
      o["witness"] = witness_json(*r.witness);
    o["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(o));
  }
  return arr;
}

/// Human-readable summary table. Timings are opt-in so the default output
/// is byte-deterministic for a fixed config.
inline std::string reports_markdown(const std::vector<VerificationReport>& reports,
                                    bool timings = false) {
  std::ostringstream os;
  os << "| identity | params | status | note |";
  if (timings)
    os << " elapsed_ms |";
  os << "\n| --- | --- | --- | --- |";
  if (timings)
    os << " --- |";
  os << "\n";
  for (const auto& r : reports) {
    os << "| " << identity_name(r.identity) << " | " << params_str(r.params) << " | "
       << (r.passed ? "pass" : "fail") << " | " << r.note << " |";
    if (timings)
      os << " " << r.elapsed_ms << " |";
    os << "\n";
  }
  for (const auto& r : reports) {
    if (!r.witness)
      continue;
    os << "\nFAILED " << identity_name(r.identity) << " at";
    for (const auto& [key, value] : r.witness->indices)
      os << " " << key << "=" << value;
    os << "\n  lhs = " << r.witness->lhs << "\n  rhs = " << r.witness->rhs << "\n";
  }
  return os.str();
}

}  // namespace daehee
