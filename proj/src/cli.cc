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

#include "gperm/cli.h"

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gperm/ehrhart.h"
#include "gperm/errors.h"
#include "gperm/hypergraph.h"
#include "gperm/json_io.h"
#include "gperm/permutahedron.h"
#include "gperm/verify.h"

namespace gperm {

namespace {

struct Options {
  std::string setfn;
  std::string hg;
  std::string poly;
  std::string fan;
  std::optional<int> k;
  std::optional<int> m;
  int m_max = 3;
  int t_max = 4;
  std::optional<int> degree;
  int period = 1;
  int64_t seed = 1;
  int trials = 5;
  int jobs = 1;
};

struct Outcome {
  Json result = Json::object();
  Report report;
};

Rat Sign(int exponent) { return exponent % 2 == 0 ? Rat(1) : Rat(-1); }

void Require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required flag ") + flag);
}

Json HeadingToJson(const Hypergraph& h, const Heading& s) {
  Json out = Json::array();
  for (int head : s.heads) out.push_back(h.node_names()[head]);
  return out;
}

Json IntVecsToJson(const std::vector<std::vector<int64_t>>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

Outcome RunChi(const Options& o) {
  Require(o.setfn, "--setfn");
  const GPerm p(SetFnFromJson(ReadJsonFile(o.setfn)));
  Outcome out;
  out.result["d"] = p.d();
  out.result["vertex_count"] = p.vertices().size();
  Json polys = Json::array();
  const int k_lo = o.k.value_or(0);
  const int k_hi = o.k ? *o.k : p.d() - 1;
  if (k_lo < 0 || k_hi > p.d() - 1) throw InputError("--k must be in [0, d-1]");
  for (int k = k_lo; k <= k_hi; ++k) {
    polys.push_back(Json{{"k", k}, {"coefficients", PolynomialToJson(ChiDkPolynomial(p, k))}});
    out.report.Append(VerifyReciprocity(p, k, o.m_max));
  }
  out.result["polynomials"] = std::move(polys);
  return out;
}

Outcome RunFaces(const Options& o) {
  Require(o.setfn, "--setfn");
  const GPerm p(SetFnFromJson(ReadJsonFile(o.setfn)));
  Outcome out;
  out.result = FaceLatticeToJson(p);
  // Each face's normal cone dimension is the largest block count mapping
  // to it.
  std::vector<int> max_blocks(p.faces().size(), 0);
  for (const auto& [c, f] : p.face_of_composition()) {
    max_blocks[f] = std::max(max_blocks[f], c.size());
  }
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    out.report.Add("normal cone dimension of face " + std::to_string(f), Rat(max_blocks[f]),
                   Rat(p.d() - p.faces()[f].dim));
  }
  return out;
}

Outcome RunHgChromatic(const Options& o) {
  Require(o.hg, "--hg");
  const Hypergraph h = HypergraphFromJson(ReadJsonFile(o.hg));
  Outcome out;
  out.result["nodes"] = h.node_names();
  const Polynomial chi = ChromaticPolynomial(h);
  out.result["polynomial"] = PolynomialToJson(chi);
  const GPerm p(HypergraphicSetFn(h));
  std::vector<int> ms;
  if (o.m) {
    if (*o.m < 1) throw InputError("--m must be positive");
    ms.push_back(*o.m);
  } else {
    for (int m = 1; m <= o.m_max; ++m) ms.push_back(m);
  }
  Json counts = Json::array();
  for (int m : ms) {
    const uint64_t count = ChromaticCount(h, m);
    counts.push_back(Json{{"m", m}, {"count", count}});
    out.report.Add("interpolant m=" + std::to_string(m), chi(m), Rat(count));
    out.report.Add("generic directions m=" + std::to_string(m), Rat(count),
                   Rat(ChiDk(p, 0, m)));
  }
  if (o.m) out.result["count"] = counts.front()["count"];
  out.result["counts"] = std::move(counts);
  return out;
}

Outcome RunHgHeadings(const Options& o) {
  Require(o.hg, "--hg");
  const Hypergraph h = HypergraphFromJson(ReadJsonFile(o.hg));
  Outcome out;
  out.result["nodes"] = h.node_names();
  const std::vector<Heading> headings = AcyclicHeadings(h);
  Json list = Json::array();
  for (const Heading& s : headings) list.push_back(HeadingToJson(h, s));
  out.result["acyclic_heading_count"] = headings.size();
  out.result["acyclic_headings"] = std::move(list);
  const auto via_headings = HgVerticesViaHeadings(h);
  out.result["vertices"] = IntVecsToJson(via_headings);

  std::vector<RatVec> as_rat;
  for (const auto& v : via_headings) as_rat.push_back(ToRatVec(v));
  const std::vector<RatVec> greedy = Vertices(HypergraphicSetFn(h));
  out.report.Add("in-degree vertices equal greedy vertices", Rat(as_rat == greedy), Rat(1));
  out.report.Add("acyclic headings vs chromatic polynomial at -1",
                 Rat(headings.size()), Sign(h.d()) * ChromaticPolynomial(h)(-1));
  return out;
}

Outcome RunHgReciprocity(const Options& o) {
  Require(o.hg, "--hg");
  const Hypergraph h = HypergraphFromJson(ReadJsonFile(o.hg));
  Outcome out;
  out.result["nodes"] = h.node_names();
  const Polynomial chi = ChromaticPolynomial(h);
  out.result["polynomial"] = PolynomialToJson(chi);
  const GPerm p(HypergraphicSetFn(h));
  Json pairs = Json::array();
  for (int m = 1; m <= o.m_max; ++m) {
    const std::string at = " m=" + std::to_string(m);
    const Rat lhs = Sign(h.d()) * chi(-m);
    const uint64_t compatible = CompatiblePairsCount(h, m);
    pairs.push_back(Json{{"m", m}, {"compatible_pairs", compatible}});
    out.report.Add("compatible pairs" + at, lhs, Rat(compatible));
    out.report.Add("vertex sum over directions" + at, lhs, Rat(ReciprocityRhs(p, 0, m)));
  }
  out.result["counts"] = std::move(pairs);
  return out;
}

Outcome RunEhrhart(const Options& o) {
  Require(o.poly, "--poly");
  const HPolytope q = HPolytopeFromJson(ReadJsonFile(o.poly));
  const int degree = o.degree.value_or(q.d());
  Outcome out;
  out.result["quasipolynomial"] = QuasiPolynomialToJson(EhrhartQuasiPolynomial(q, degree, o.period));
  out.result["interior_quasipolynomial"] =
      QuasiPolynomialToJson(EhrhartQuasiPolynomial(q.Interior(), degree, o.period));
  out.report = EmReciprocityCheck(q, degree, o.period, o.t_max);
  return out;
}

Outcome RunPruned(const Options& o) {
  Require(o.poly, "--poly");
  const HPolytope q = HPolytopeFromJson(ReadJsonFile(o.poly));
  FullDimFan fan;
  if (!o.fan.empty()) {
    fan = FanFromJson(ReadJsonFile(o.fan));
  } else if (!o.setfn.empty()) {
    fan = NormalFanOf(GPerm(SetFnFromJson(ReadJsonFile(o.setfn))));
  } else {
    throw InputError("pruned needs --fan or --setfn");
  }
  const int degree = o.degree.value_or(q.d());
  Outcome out;
  out.result["inner"] =
      QuasiPolynomialToJson(InnerPrunedQuasiPolynomial(q.Interior(), fan, degree, o.period));
  out.result["cumulative"] =
      QuasiPolynomialToJson(CumulativePrunedQuasiPolynomial(q, fan, degree, o.period));
  out.report = PioReciprocityCheck(q, fan, degree, o.period, o.t_max);
  return out;
}

Outcome RunVerifyAll(const Options& o) {
  if (o.trials < 1) throw InputError("--trials must be at least 1");
  Outcome out;
  out.report = VerifyAll(static_cast<uint64_t>(o.seed), o.trials, o.jobs);
  out.result["trials"] = o.trials;
  return out;
}

Json EchoArgs(const CLI::App& sub) {
  Json args = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
    if (opt->count() == 0) continue;
    args[opt->get_lnames().front()] = opt->as<std::string>();
  }
  return args;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact face counting and reciprocity checks for generalized permutahedra"};
  app.name(args.empty() ? "gperm" : args.front());
  app.require_subcommand(1);

  Options o;
  auto add_setfn = [&](CLI::App* s) { s->add_option("--setfn", o.setfn, "set function JSON"); };
  auto add_hg = [&](CLI::App* s) { s->add_option("--hg", o.hg, "hypergraph JSON"); };
  auto add_jobs = [&](CLI::App* s) {
    s->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  };

  CLI::App* chi = app.add_subcommand("chi", "face-dimension counting polynomials");
  add_setfn(chi);
  chi->add_option("--k", o.k, "face dimension (default: all)");
  chi->add_option("--m-max", o.m_max, "largest m for reciprocity")->capture_default_str();
  add_jobs(chi);

  CLI::App* faces = app.add_subcommand("faces", "face lattice of P(z)");
  add_setfn(faces);
  add_jobs(faces);

  CLI::App* hg_chromatic = app.add_subcommand("hg-chromatic", "chromatic polynomial");
  add_hg(hg_chromatic);
  hg_chromatic->add_option("--m", o.m, "number of colors");
  hg_chromatic->add_option("--m-max", o.m_max, "count for m = 1..m-max")->capture_default_str();
  add_jobs(hg_chromatic);

  CLI::App* hg_headings = app.add_subcommand("hg-headings", "acyclic headings and vertices");
  add_hg(hg_headings);
  add_jobs(hg_headings);

  CLI::App* hg_reciprocity = app.add_subcommand("hg-reciprocity", "chromatic reciprocity");
  add_hg(hg_reciprocity);
  hg_reciprocity->add_option("--m-max", o.m_max, "largest m")->capture_default_str();
  add_jobs(hg_reciprocity);

  CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasipolynomial and reciprocity");
  ehrhart->add_option("--poly", o.poly, "H-polytope JSON");
  ehrhart->add_option("--degree", o.degree, "dimension of the polytope (default: d)");
  ehrhart->add_option("--period", o.period, "declared period")->capture_default_str();
  ehrhart->add_option("--t-max", o.t_max, "largest t")->capture_default_str();
  add_jobs(ehrhart);

  CLI::App* pruned = app.add_subcommand("pruned", "pruned inside-out reciprocity");
  pruned->add_option("--poly", o.poly, "H-polytope JSON");
  pruned->add_option("--fan", o.fan, "fan JSON");
  add_setfn(pruned);
  pruned->add_option("--degree", o.degree, "dimension (default: d)");
  pruned->add_option("--period", o.period, "declared period")->capture_default_str();
  pruned->add_option("--t-max", o.t_max, "largest t")->capture_default_str();
  add_jobs(pruned);

  CLI::App* verify_all = app.add_subcommand("verify-all", "randomized identity checks");
  verify_all->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  verify_all->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  add_jobs(verify_all);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("gperm");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  Outcome outcome;
  try {
    if (o.jobs < 1) throw InputError("--jobs must be at least 1");
    if (o.m_max < 1) throw InputError("--m-max must be positive");
    if (o.t_max < 1) throw InputError("--t-max must be positive");
    if (o.period < 1) throw InputError("--period must be positive");
    const std::string name = sub->get_name();
    if (name == "chi") outcome = RunChi(o);
    else if (name == "faces") outcome = RunFaces(o);
    else if (name == "hg-chromatic") outcome = RunHgChromatic(o);
    else if (name == "hg-headings") outcome = RunHgHeadings(o);
    else if (name == "hg-reciprocity") outcome = RunHgReciprocity(o);
    else if (name == "ehrhart") outcome = RunEhrhart(o);
    else if (name == "pruned") outcome = RunPruned(o);
    else outcome = RunVerifyAll(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::size_t failures = outcome.report.failures();
  Json report{{"command", Json{{"name", sub->get_name()}, {"args", EchoArgs(*sub)}}},
              {"result", std::move(outcome.result)},
              {"entries", EntriesToJson(outcome.report)},
              {"summary", Json{{"checks", outcome.report.entries().size()},
                               {"failures", failures}}},
              {"timing_ms", elapsed_ms}};
  out << report.dump(2) << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace gperm
