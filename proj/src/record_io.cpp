#include "qkforge/record_io.hpp"

namespace qkforge {

using nlohmann::json;

json record_to_json(const SequenceRecord& record) {
  json steps = json::array();
  for (const auto& s : record.steps) {
    json step = {{"i", s.index}, {"coeffs", to_csv(s.poly)}, {"degree", s.poly.degree()}, {"kind", to_string(s.kind)}};
    if (s.alternate) step["alternate"] = to_csv(*s.alternate);
    steps.push_back(std::move(step));
  }
  json rewinds = json::array();
  for (const auto& r : record.rewinds) rewinds.push_back({{"split_step", r.split_step}, {"stalled_step", r.stalled_step}});
  return {{"p", record.p},       {"k", record.k},     {"class", to_string(record.tag)},
          {"seed", record.seed}, {"prng", kPrngName}, {"steps", std::move(steps)},
          {"rewinds", std::move(rewinds)}};
}

SequenceRecord record_from_json(const json& j) {
  try {
    SequenceRecord r;
    r.p = j.at("p").get<u64>();
    r.k = j.at("k").get<u64>();
    r.tag = parse_class_tag(j.at("class").get<std::string>());
    r.seed = j.at("seed").get<u64>();
    for (const auto& s : j.at("steps")) {
      SequenceStep step{s.at("i").get<int>(), parse_poly(s.at("coeffs").get<std::string>(), r.p),
                        parse_step_kind(s.at("kind").get<std::string>()), std::nullopt};
      if (s.contains("alternate")) step.alternate = parse_poly(s.at("alternate").get<std::string>(), r.p);
      if (step.poly.degree() != s.at("degree").get<int>()) {
        throw MalformedInput("step " + std::to_string(step.index) + ": degree field disagrees with coefficients");
      }
      r.steps.push_back(std::move(step));
    }
    if (j.contains("rewinds")) {
      for (const auto& w : j.at("rewinds")) {
        r.rewinds.push_back({w.at("split_step").get<int>(), w.at("stalled_step").get<int>()});
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad sequence record: ") + e.what());
  } catch (const UsageError& e) {
    throw MalformedInput(std::string("bad sequence record: ") + e.what());
  }
}

json schedule_to_json(const ScheduleReport& report) {
  json j = {{"p", report.p},
            {"k", report.k},
            {"n", report.n},
            {"class", to_string(report.tag)},
            {"e0", report.e0},
            {"e1", report.e1},
            {"s_bound", report.s_bound},
            {"st_bound", report.st_bound},
            {"pattern", to_string(report.pattern)}};
  if (report.observed_s) j["observed_s"] = *report.observed_s;
  if (report.observed_t) j["observed_t"] = *report.observed_t;
  return j;
}

json depth_detail_to_json(const DepthDetail& detail, const ScheduleReport& report) {
  json j = schedule_to_json(report);
  j["a_p"] = detail.a_p.str();
  j["pi"] = {{"a", detail.pi.a().str()}, {"b", detail.pi.b().str()}, {"disc", detail.pi.disc()}};
  if (detail.rho0) {
    j["rho0"] = {{"a", detail.rho0->a().str()}, {"b", detail.rho0->b().str()}, {"disc", detail.rho0->disc()}};
  }
  return j;
}

json components_to_json(const FunctionalGraph& graph, const std::vector<ComponentStats>& stats) {
  json comps = json::array();
  for (const auto& c : stats) {
    comps.push_back({{"cycle_length", c.cycle_length},
                     {"tree_depth", c.tree_depth},
                     {"node_count", c.node_count},
                     {"binary_shape_ok", c.binary_shape_ok},
                     {"contains_infinity", c.contains_infinity}});
  }
  return {{"p", graph.p},
          {"n", graph.n},
          {"k", graph.k},
          {"modulus", to_csv(graph.modulus)},
          {"nodes", graph.size()},
          {"components", std::move(comps)}};
}

}  // namespace qkforge
