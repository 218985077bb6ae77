#include "ghgeo/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

namespace ghgeo::io {
namespace {

std::string label_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorKind::MalformedInput, "labels must be strings or integers");
}

}  // namespace

FiniteMetricSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw Error(ErrorKind::MalformedInput, "expected an object with a \"matrix\" array");
  Matrix matrix;
  for (const auto& row : j["matrix"]) {
    if (!row.is_array())
      throw Error(ErrorKind::MalformedInput, "matrix rows must be arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number())
        throw Error(ErrorKind::MalformedInput, "matrix entries must be numbers");
      r.push_back(v.get<double>());
    }
    matrix.push_back(std::move(r));
  }
  if (!j.contains("labels")) return validate_metric(matrix);
  if (!j["labels"].is_array())
    throw Error(ErrorKind::MalformedInput, "\"labels\" must be an array");
  std::vector<std::string> labels;
  for (const auto& v : j["labels"]) labels.push_back(label_text(v));
  return validate_metric(matrix, std::move(labels));
}

json space_to_json(const FiniteMetricSpace& x) {
  const std::size_t n = x.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return x.label(a) < x.label(b); });

  json labels = json::array();
  json matrix = json::array();
  for (Index a : order) {
    labels.push_back(x.label(a));
    json row = json::array();
    for (Index b : order) row.push_back(x(a, b));
    matrix.push_back(std::move(row));
  }
  return json{{"labels", std::move(labels)}, {"matrix", std::move(matrix)}};
}

json correspondence_to_json(const Correspondence& r) {
  json pairs = json::array();
  for (const auto& [i, j] : r.pairs()) pairs.push_back(json::array({i, j}));
  return pairs;
}

Correspondence correspondence_from_json(const json& j, std::size_t n,
                                        std::size_t m) {
  if (!j.is_array())
    throw Error(ErrorKind::MalformedInput, "correspondence must be an array of pairs");
  std::vector<IndexPair> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned())
      throw Error(ErrorKind::MalformedInput, "pairs must be [i, j] with i, j >= 0");
    pairs.emplace_back(p[0].get<Index>(), p[1].get<Index>());
  }
  if (pairs.empty()) throw Error(ErrorKind::EmptyRelation, "relation is empty");
  return Correspondence(Relation(std::move(pairs)), n, m);
}

json to_json(const GHResult& r) {
  return json{{"distance", r.distance},
              {"distortion", r.distortion},
              {"lower_bound", r.lower_bound},
              {"upper_bound", r.upper_bound},
              {"nodes_explored", r.nodes_explored},
              {"certified", r.certified},
              {"optimal", correspondence_to_json(r.optimal)}};
}

json to_json(const NetReport& r) {
  return json{{"net", r.net},
              {"size", r.size()},
              {"epsilon", r.epsilon},
              {"radius", r.radius}};
}

json to_json(const SandwichReport& r) {
  return json{{"s", r.s},         {"t", r.t},         {"expected", r.expected},
              {"upper", r.upper}, {"lower", r.lower}, {"certified", r.certified}};
}

json to_json(const MidpointStep& step) {
  json checks = json::array();
  for (const auto& c : step.net_checks)
    checks.push_back(json{{"epsilon", c.epsilon},
                          {"n_eps", c.n_eps},
                          {"product_net_size", c.product_net_size},
                          {"projected_size", c.projected_size},
                          {"projected_radius", c.projected_radius},
                          {"passed", c.passed}});
  return json{
      {"n", step.n},
      {"x_net", {{"points", step.x_net}, {"radius", step.x_net_radius},
                 {"is_net", step.x_is_net}}},
      {"y_net", {{"points", step.y_net}, {"radius", step.y_net_radius},
                 {"is_net", step.y_is_net}}},
      {"d", step.spec.d},
      {"correspondence", correspondence_to_json(step.spec.r)},
      {"midpoint", space_to_json(step.midpoint)},
      {"D", step.bound_d},
      {"midpoint_diameter", step.midpoint_diameter},
      {"half_sum_diameter", step.half_sum_diameter},
      {"diameter_ok", step.diameter_ok},
      {"restriction_ok", step.restriction_ok},
      {"net_checks", std::move(checks)},
      {"sandwich", json::array({to_json(step.to_x), to_json(step.to_y)})},
      {"midpoint_certified", step.midpoint_certified},
      {"passed", step.passed()}};
}

json to_json(const BoundednessReport& r) {
  json per = json::array();
  for (const auto& e : r.per_space)
    per.push_back(json{{"diameter", e.diameter}, {"net_size", e.net_size}});
  return json{{"D", r.bound_d},
              {"epsilon", r.epsilon},
              {"max_net_size", r.max_net_size},
              {"per_space", std::move(per)}};
}

json to_json(const Error& e) {
  return json{{"error", std::string(to_string(e.kind()))},
              {"message", e.what()},
              {"witness", e.witness()}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
}

FiniteMetricSpace read_space(const std::string& path) {
  const json j = read_file(path);
  try {
    return space_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
}

}  // namespace ghgeo::io
