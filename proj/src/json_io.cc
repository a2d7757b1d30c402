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

#include "gperm/json_io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "gperm/errors.h"

namespace gperm {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Rat RatFromJson(const Json& j) {
  if (j.is_string()) return ParseRat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<int64_t>());
  throw InputError("expected a rational literal string, got " + j.dump());
}

int64_t IntFromJson(const Json& j) {
  if (!j.is_number_integer()) throw InputError("expected an integer, got " + j.dump());
  return j.get<int64_t>();
}

RatVec RatVecFromJson(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVec out;
  for (const Json& item : j) out.push_back(RatFromJson(item));
  return out;
}

Relation RelationFromJson(const Json& j) {
  const std::string rel = j.is_string() ? j.get<std::string>() : "";
  if (rel == "<=") return Relation::kLessEq;
  if (rel == "<") return Relation::kLess;
  if (rel == "=") return Relation::kEq;
  throw InputError("unknown row relation " + j.dump());
}

const char* RelationName(Relation rel) {
  switch (rel) {
    case Relation::kLessEq: return "<=";
    case Relation::kLess: return "<";
    case Relation::kEq: return "=";
  }
  return "?";
}

std::vector<Row> RowsFromJson(const Json& j, int& d) {
  if (!j.is_array()) throw InputError("'rows' must be an array");
  std::vector<Row> rows;
  for (const Json& row : j) {
    Row r{RatVecFromJson(Field(row, "a")), RatFromJson(Field(row, "b")),
          row.contains("rel") ? RelationFromJson(row.at("rel")) : Relation::kLessEq};
    if (d == 0) d = static_cast<int>(r.a.size());
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

SetFn SetFnFromJson(const Json& j) {
  const int64_t d = IntFromJson(Field(j, "d"));
  if (d < 1 || d > kMaxGroundSet) throw InputError("set function d out of range");
  return SetFn(static_cast<int>(d), RatVecFromJson(Field(j, "values")));
}

Json SetFnToJson(const SetFn& z) {
  return Json{{"d", z.d()}, {"values", RatVecToJson(z.values())}};
}

Hypergraph HypergraphFromJson(const Json& j) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  if (j.contains("nodes")) {
    const Json& nodes = j.at("nodes");
    if (!nodes.is_array()) throw InputError("'nodes' must be an array");
    for (const Json& n : nodes) {
      std::string name = n.is_string() ? n.get<std::string>() : n.dump();
      if (!index.emplace(name, static_cast<int>(names.size())).second) {
        throw InputError("duplicate node name '" + name + "'");
      }
      names.push_back(std::move(name));
    }
  } else {
    const int64_t d = IntFromJson(Field(j, "d"));
    if (d < 1 || d > kMaxGroundSet) throw InputError("hypergraph d out of range");
    for (int i = 1; i <= d; ++i) {
      names.push_back(std::to_string(i));
      index.emplace(names.back(), i - 1);
    }
  }
  if (names.empty() || names.size() > static_cast<std::size_t>(kMaxGroundSet)) {
    throw InputError("hypergraph node count out of range");
  }

  const Json& edges = Field(j, "edges");
  if (!edges.is_array()) throw InputError("'edges' must be an array");
  std::vector<Subset> out;
  for (const Json& edge : edges) {
    if (!edge.is_array()) throw InputError("each edge must be an array of nodes");
    Subset s = 0;
    for (const Json& n : edge) {
      const std::string name = n.is_string() ? n.get<std::string>() : n.dump();
      auto it = index.find(name);
      if (it == index.end()) throw InputError("edge mentions unknown node '" + name + "'");
      if ((s >> it->second) & 1) throw InputError("edge repeats node '" + name + "'");
      s |= Subset{1} << it->second;
    }
    out.push_back(s);
  }
  const int d = static_cast<int>(names.size());
  return Hypergraph(d, std::move(out), std::move(names));
}

Json HypergraphToJson(const Hypergraph& h) {
  Json edges = Json::array();
  for (Subset e : h.edges()) {
    Json edge = Json::array();
    for (int i = 0; i < h.d(); ++i) {
      if ((e >> i) & 1) edge.push_back(h.node_names()[i]);
    }
    edges.push_back(std::move(edge));
  }
  return Json{{"nodes", h.node_names()}, {"edges", std::move(edges)}};
}

HPolytope HPolytopeFromJson(const Json& j) {
  int d = j.contains("d") ? static_cast<int>(IntFromJson(j.at("d"))) : 0;
  std::vector<Row> rows = RowsFromJson(Field(j, "rows"), d);
  std::optional<Box> bbox;
  if (j.contains("bbox")) {
    const Json& b = j.at("bbox");
    if (!b.is_array()) throw InputError("'bbox' must be an array of [lo, hi] pairs");
    Box box;
    for (const Json& range : b) {
      if (!range.is_array() || range.size() != 2) {
        throw InputError("'bbox' entries must be [lo, hi] pairs");
      }
      box.emplace_back(IntFromJson(range[0]), IntFromJson(range[1]));
    }
    if (d == 0) d = static_cast<int>(box.size());
    bbox = std::move(box);
  }
  if (d == 0) throw InputError("cannot determine polytope dimension");
  return HPolytope(d, std::move(rows), std::move(bbox));
}

Json HPolytopeToJson(const HPolytope& q) {
  Json rows = Json::array();
  for (const Row& row : q.rows()) {
    rows.push_back(Json{{"a", RatVecToJson(row.a)}, {"rel", RelationName(row.rel)},
                        {"b", ToString(row.b)}});
  }
  Json out{{"d", q.d()}, {"rows", std::move(rows)}};
  if (q.bbox()) {
    Json box = Json::array();
    for (const auto& [lo, hi] : *q.bbox()) box.push_back(Json::array({lo, hi}));
    out["bbox"] = std::move(box);
  }
  return out;
}

FullDimFan FanFromJson(const Json& j) {
  const Json& cones = Field(j, "cones");
  if (!cones.is_array() || cones.empty()) throw InputError("'cones' must be a nonempty array");
  FullDimFan fan;
  fan.d = j.contains("d") ? static_cast<int>(IntFromJson(j.at("d"))) : 0;
  for (const Json& cone : cones) {
    int d = cone.contains("d") ? static_cast<int>(IntFromJson(cone.at("d"))) : fan.d;
    std::vector<Row> rows = RowsFromJson(Field(cone, "rows"), d);
    for (const Row& row : rows) {
      if (row.b != 0 || row.rel != Relation::kLessEq) {
        throw InputError("fan cones need rows of the form a . y <= 0");
      }
    }
    if (d == 0) throw InputError("cannot determine cone dimension; add \"d\"");
    if (fan.d == 0) fan.d = d;
    if (d != fan.d) throw InputError("fan cones of different dimensions");
    fan.cones.emplace_back(d, std::move(rows), std::nullopt);
  }
  return fan;
}

Json FanToJson(const FullDimFan& fan) {
  Json cones = Json::array();
  for (const HPolytope& cone : fan.cones) cones.push_back(HPolytopeToJson(cone));
  return Json{{"d", fan.d}, {"cones", std::move(cones)}};
}

Json PolynomialToJson(const Polynomial& p) { return Json(p.CoefficientStrings()); }

Json QuasiPolynomialToJson(const QuasiPolynomial& q) {
  Json constituents = Json::array();
  for (const Polynomial& p : q.constituents()) constituents.push_back(PolynomialToJson(p));
  return Json{{"period", q.period()}, {"constituents", std::move(constituents)}};
}

Json FaceLatticeToJson(const GPerm& p) {
  Json vertices = Json::array();
  for (const RatVec& v : p.vertices()) vertices.push_back(RatVecToJson(v));
  Json faces = Json::array();
  for (const Face& f : p.faces()) {
    faces.push_back(Json{{"dim", f.dim}, {"vertices", f.vertex_ids}});
  }
  return Json{{"d", p.d()}, {"vertices", std::move(vertices)}, {"faces", std::move(faces)}};
}

Json RatVecToJson(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& c : v) out.push_back(ToString(c));
  return out;
}

Json EntriesToJson(const Report& report) {
  Json out = Json::array();
  for (const CheckEntry& e : report.entries()) {
    out.push_back(Json{{"label", e.label}, {"lhs", ToString(e.lhs)},
                       {"rhs", ToString(e.rhs)}, {"pass", e.pass}});
  }
  return out;
}

}  // namespace gperm
