// Copyright 2026 The gperm Authors.
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
// JSON readers and writers for the file formats used by the CLI. Every
// rational travels as a string literal such as "3/4" or "-2".

#ifndef GPERM_JSON_IO_H_
#define GPERM_JSON_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gperm/ehrhart.h"
#include "gperm/hypergraph.h"
#include "gperm/permutahedron.h"
#include "gperm/polynomial.h"
#include "gperm/report.h"
#include "gperm/setfn.h"

namespace gperm {

using Json = nlohmann::ordered_json;

// Parses the file as JSON; InputError on I/O or syntax errors.
Json ReadJsonFile(const std::filesystem::path& path);

// { "d": 3, "values": ["0", "3", ...] }, values indexed by bitmask.
SetFn SetFnFromJson(const Json& j);
Json SetFnToJson(const SetFn& z);

// { "nodes": ["a", "b"], "edges": [["a", "b"], ["a"]] }. Without "nodes",
// "d" must be given and edges list 1-based integers.
Hypergraph HypergraphFromJson(const Json& j);
Json HypergraphToJson(const Hypergraph& h);

// { "d": 2, "rows": [{"a": ["1","0"], "rel": "<=", "b": "1"}, ...],
//   "bbox": [[0,1],[0,1]] }. rel is one of "<=", "<", "=".
HPolytope HPolytopeFromJson(const Json& j);
Json HPolytopeToJson(const HPolytope& q);

// { "cones": [HPolytope-without-bbox, ...] }
FullDimFan FanFromJson(const Json& j);
Json FanToJson(const FullDimFan& fan);

Json PolynomialToJson(const Polynomial& p);
// { "period": 2, "constituents": [["1","1/2"], ["1/2","1/2"]] }
Json QuasiPolynomialToJson(const QuasiPolynomial& q);

// { "d": 3, "vertices": [["3","2","1"], ...], "faces": [{"dim":0,"vertices":[0]}, ...] }
Json FaceLatticeToJson(const GPerm& p);

Json RatVecToJson(const RatVec& v);
Json EntriesToJson(const Report& report);

}  // namespace gperm

#endif  // GPERM_JSON_IO_H_
