// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "json_io.hpp"

#include <string>
#include <vector>

#include "sforge/error.hpp"

namespace sforge::tools {
namespace {

Json ids(const EdgeSet& s) { return Json(std::vector<EdgeId>(s.begin(), s.end())); }
Json ids(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

Json optional_rational(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

EdgeSet edge_ids_from(const Json& j, const char* key, const Graph& host) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw DomainError(std::string("decomposition JSON lacks the array \"") + key + "\"");
  }
  std::vector<EdgeId> out;
  for (const Json& v : j[key]) {
    if (!v.is_number_integer()) {
      throw DomainError(std::string("non-integer edge id in \"") + key + "\"");
    }
    const auto id = v.get<long long>();
    if (id < 0 || id >= host.num_edges()) {
      throw DomainError("edge id " + std::to_string(id) + " is outside the host");
    }
    out.push_back(static_cast<EdgeId>(id));
  }
  return EdgeSet(host, std::move(out));
}

}  // namespace

Json to_json(const SparsityCertificate& cert) {
  Json j;
  j["verdict"] = cert.sparse() ? "sparse" : "not_sparse";
  j["a"] = to_string(cert.params.a());
  j["b"] = to_string(cert.params.b());
  j["witness"] = ids(cert.witness);
  j["max_violation"] = optional_rational(cert.max_violation);
  j["min_potential"] = optional_rational(cert.min_potential);
  return j;
}

Json to_json(const PartitionResult& result) {
  Json j;
  if (result.success()) {
    j["outcome"] = "success";
    j["e1"] = ids(result.first);
    j["e2"] = ids(result.second);
  } else {
    j["outcome"] = "deficiency";
    j["B"] = ids(result.deficient);
    j["r1"] = result.r1;
    j["r2"] = result.r2;
  }
  return j;
}

Json to_json(const RefineTrace& trace) {
  Json steps = Json::array();
  for (const RefineStep& s : trace.steps) {
    steps.push_back({{"to_forest", s.to_forest},
                     {"to_rest", s.to_rest},
                     {"before", s.before},
                     {"after", s.after}});
  }
  return steps;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["verified"] = report.ok();
  j["exact_partition"] = report.exact_partition;
  j["forest_acyclic"] = report.forest_acyclic;
  j["rest_sparse"] = report.rest_sparse;
  j["message"] = report.message;
  if (report.rest_certificate) j["rest_certificate"] = to_json(*report.rest_certificate);
  return j;
}

Json to_json(const Decomposition& d, bool verified) {
  Json j;
  j["m"] = to_string(d.m);
  j["case"] = std::string(case_label(d.label));
  j["F"] = ids(d.forest);
  j["Gprime"] = ids(d.rest);
  j["verified"] = verified;
  return j;
}

Decomposition decomposition_from_json(const Json& j, const Graph& host) {
  if (!j.is_object()) throw DomainError("decomposition JSON must be an object");
  if (!j.contains("m") || !j["m"].is_string()) {
    throw DomainError("decomposition JSON lacks the string \"m\"");
  }
  const Rational m = parse_rational(j["m"].get<std::string>());
  Decomposition d{host, edge_ids_from(j, "F", host), edge_ids_from(j, "Gprime", host), m,
                  DecompositionCase::kSmallTwoForests};
  if (m > 1) d.label = classify(m);
  return d;
}

}  // namespace sforge::tools
