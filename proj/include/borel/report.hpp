#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "borel/betti.hpp"
#include "borel/f_index.hpp"
#include "borel/lefschetz.hpp"

// JSON forms of the library's results. Betti tables are objects keyed
// "q,i" with ideal indexing (q = 0 counts minimal generators).

namespace borel {

using Json = nlohmann::ordered_json;

inline Json to_json(const BettiTable& B) {
  Json j = Json::object();
  for (const auto& [k, v] : B.entries()) j[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  return j;
}

inline BettiTable betti_from_json(const Json& j, std::size_t n) {
  if (!j.is_object()) fail(ErrorKind::InvalidArgument, "Betti table must be a JSON object keyed \"q,i\"");
  BettiTable B(n);
  for (const auto& [key, value] : j.items()) {
    auto comma = key.find(',');
    int q = 0, i = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      std::size_t used = 0;
      q = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(key);
      i = std::stoi(key.substr(comma + 1), &used);
      if (used != key.size() - comma - 1) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidArgument, "bad Betti key \"" + key + "\", expected \"q,i\"");
    }
    if (!value.is_number_integer()) fail(ErrorKind::InvalidArgument, "Betti entry \"" + key + "\" must be an integer");
    if (q < 0 || q >= static_cast<int>(n)) fail(ErrorKind::InvalidArgument, "homological degree out of range in \"" + key + "\"");
    B.set(q, i, value.get<std::int64_t>());
  }
  return B;
}

inline Json to_json(const HilbertFunction& H) { return Json(H.values()); }

inline HilbertFunction hilbert_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "Hilbert function must be a JSON array");
  std::vector<std::int64_t> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(ErrorKind::InvalidArgument, "Hilbert function values must be integers");
    v.push_back(e.get<std::int64_t>());
  }
  return HilbertFunction(std::move(v));
}

inline Json to_json(const MonomialIdeal& I, std::span<const std::string> names = {}) {
  Json gens = Json::array();
  for (const auto& g : I.generators()) gens.push_back(to_string(g, names));
  return Json{{"n", I.num_vars()}, {"generators", gens}};
}

inline Json to_json(const FIndex& F) {
  Json levels = Json::array();
  for (std::size_t k = 0; k < F.levels.size(); ++k) {
    Json values = Json::array();
    for (const auto& [alpha, v] : F.levels[k]) values.push_back({{"tuple", alpha}, {"f", v}});
    levels.push_back({{"index", k + 2}, {"values", values}});
  }
  return Json{{"n", F.n}, {"f1", F.f1}, {"levels", levels}};
}

inline Json to_json(const Witness& w) {
  return Json{{"tuple", w.tuple}, {"f_value", w.f_value}, {"lhs", w.lhs}, {"required", w.required}, {"condition", w.condition}};
}

inline Json to_json(const LefschetzReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return Json{{"property", std::string(to_string(r.property))},
              {"verdict", r.verdict},
              {"method", std::string(to_string(r.method))},
              {"r1", r.r1 ? Json(*r.r1) : Json(nullptr)},
              {"t", r.t},
              {"witnesses", witnesses}};
}

inline Json to_json(const Error& e) {
  Json body{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    body["line"] = s->line();
    body["column"] = s->column();
  }
  return Json{{"error", body}};
}

}  // namespace borel
