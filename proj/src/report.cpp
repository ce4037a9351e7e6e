#include "sachs/report.hpp"

#include "sachs/graph6.hpp"

namespace sachs {

Json to_json(Integer v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

namespace {

Json codes_json(const std::vector<CanonicalCode>& codes) {
  Json out = Json::array();
  for (const auto& c : codes) out.push_back(g6_encode(c.graph()));
  return out;
}

}  // namespace

Json to_json(const ExtremalReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["class"] = std::string(to_string(r.graph_class));
  j["min_a4"] = to_json(r.min_a4);
  j["minimizers"] = codes_json(r.minimizers);
  j["predicted"] = r.predicted ? to_json(*r.predicted) : Json(nullptr);
  j["predicted_minimizers"] = codes_json(r.predicted_minimizers);
  j["matches"] = r.matches ? Json(*r.matches) : Json(nullptr);
  j["examined"] = r.examined;
  return j;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = r.status == CheckStatus::pass ? "pass" : "fail";
  if (r.counterexample)
    j["counterexample"] = {{"graph6", r.counterexample->graph6}, {"details", r.counterexample->details}};
  else
    j["counterexample"] = nullptr;
  j["instances"] = r.instances;
  Json tables = Json::array();
  for (const auto& t : r.tables) tables.push_back(to_json(t));
  j["tables"] = std::move(tables);
  j["notes"] = r.notes;
  return j;
}

Json report_document(const std::string& command, Json params, const std::string& status, Json results,
                     Json minimizers, double wall_time_ms) {
  Json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["status"] = status;
  doc["results"] = std::move(results);
  doc["minimizers"] = std::move(minimizers);
  doc["wall_time_ms"] = wall_time_ms;
  return doc;
}

}  // namespace sachs
