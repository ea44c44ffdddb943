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


// JSON encodings of the library's certificates. Rationals are written as
// "p/q" strings (or "p" when integral), edge and vertex sets as id arrays.

#ifndef SFORGE_TOOLS_JSON_IO_HPP_
#define SFORGE_TOOLS_JSON_IO_HPP_

#include <json.hpp>

#include "sforge/decompose.hpp"
#include "sforge/partition.hpp"
#include "sforge/refine.hpp"
#include "sforge/sparsity.hpp"

namespace sforge::tools {

using Json = nlohmann::ordered_json;

Json to_json(const SparsityCertificate& cert);
Json to_json(const PartitionResult& result);
Json to_json(const RefineTrace& trace);
Json to_json(const VerificationReport& report);

// {m, case, F, Gprime, verified}.
Json to_json(const Decomposition& d, bool verified);

// Reads the output of to_json(Decomposition) back against its host graph.
// Throws DomainError on missing fields or ids outside the host.
Decomposition decomposition_from_json(const Json& j, const Graph& host);

}  // namespace sforge::tools

#endif  // SFORGE_TOOLS_JSON_IO_HPP_
