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

#pragma once

// Command-line front end. Needs CLI11.hpp and json.hpp on the include path.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "forest_spectra/bijections.hpp"
#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/forest_counts.hpp"
#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/hessian_spectra.hpp"
#include "forest_spectra/lefschetz.hpp"
#include "forest_spectra/matroid.hpp"

namespace forest_spectra::cli {

using Json = nlohmann::ordered_json;

enum class ExitCode : int { Success = 0, VerificationFailed = 1, InvalidInput = 2 };

/// What a subcommand hands back before timing and serialization.
struct Outcome {
  Json input = Json::object();
  Json result = Json::object();
  bool verified = true;
  std::vector<std::string> notes;
};

namespace detail {

/// --complete N or --bipartite M N, exactly one of them.
struct GraphOptions {
  std::optional<int> complete;
  std::vector<int> bipartite;

  void attach(CLI::App& app) {
    auto* c = app.add_option("--complete", complete, "complete graph K_N");
    auto* b = app.add_option("--bipartite", bipartite, "complete bipartite graph K_{M,N}")->expected(2);
    c->excludes(b);
  }

  Graph build() const {
    if (complete) return complete_graph(*complete);
    if (bipartite.size() == 2) return complete_bipartite_graph(bipartite[0], bipartite[1]);
    throw InvalidInput("choose a graph with --complete N or --bipartite M N");
  }
};

inline Json rational_json(const Rational& r) { return to_string(r); }
inline Json integer_json(const Integer& z) { return z.get_str(); }

inline Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const Eigenpair& p : s.pairs) out.push_back({{"value", rational_json(p.value)}, {"multiplicity", p.multiplicity}});
  return out;
}

inline Json params_json(const StructuredParams& params) {
  if (const auto* c = std::get_if<CompleteParams>(&params)) {
    return {{"alpha", rational_json(c->alpha)}, {"beta", rational_json(c->beta)}, {"gamma", rational_json(c->gamma)}};
  }
  const auto& b = std::get<BipartiteParams>(params);
  return {{"alpha", rational_json(b.alpha)},
          {"beta", rational_json(b.beta)},
          {"gamma", rational_json(b.gamma)},
          {"delta", rational_json(b.delta)}};
}

inline Json prediction_json(const SignPrediction& pred) {
  Json out = Json::array();
  for (const SignCheck& c : pred.checks) {
    static constexpr const char* kExpect[] = {"positive", "negative", "zero", "nonnegative"};
    static constexpr const char* kRole[] = {"eigenvalue", "auxiliary", "identity"};
    out.push_back({{"quantity", c.quantity},
                   {"value", rational_json(c.value)},
                   {"expected", kExpect[static_cast<int>(c.expected)]},
                   {"role", kRole[static_cast<int>(c.role)]},
                   {"holds", c.holds()}});
  }
  return out;
}

inline Json record_json(const Graph& g, const BijectionRecord& rec) {
  Json failures = Json::array();
  for (const MapFailure& f : rec.failures) {
    failures.push_back({{"map", f.map},
                        {"input", to_string(g, f.input)},
                        {"output", f.output ? Json(to_string(g, *f.output)) : Json(nullptr)},
                        {"reason", f.reason}});
  }
  return {{"name", rec.name},
          {"domain_size", rec.domain_size},
          {"codomain_size", rec.codomain_size},
          {"verified", rec.verified()},
          {"failures", std::move(failures)}};
}

inline std::string hessian_range_note(const Graph& g, int k) {
  const std::string limit = g.is_complete() ? "n-2" : "m+n-2";
  std::string why;
  if (g.is_complete() && g.left_size() < 4) why = "needs n >= 4";
  if (g.is_bipartite() && (g.left_size() < 2 || g.right_size() < 2)) why = "needs m, n >= 2";
  if (why.empty()) why = "hypothesis 0 < k < " + limit + " fails for k=" + std::to_string(k);
  return "outside theorem range on " + g.description() + ": " + why + "; computed but not asserted";
}

inline Graph graph_input(const GraphOptions& opts, Json& input) {
  Graph g = opts.build();
  input["graph"] = g.description();
  return g;
}

// ---------------------------------------------------------------------------

inline Outcome run_spectrum(const GraphOptions& opts, int k, bool with_matrix) {
  Outcome out;
  const Graph g = graph_input(opts, out.input);
  out.input["k"] = k;
  const bool in_range = in_theorem_range(g, k);
  const ExactMatrix by_diff = tilde_hessian_by_differentiation(g, k);
  const ExactMatrix by_count = tilde_hessian_by_counting(g, k);
  const bool routes_agree = by_diff == by_count;
  const StructuredParams params = structured_params(by_diff, g);
  const Spectrum spec = closed_form_spectrum(params);
  const bool certified = verify_spectrum(by_diff, spec);
  const SignProfile signs = sign_profile(spec);
  const Rational det = exact_determinant(by_diff);
  const bool det_matches = det == spec.determinant();

  if (with_matrix) out.result["matrix"] = matrix_json(by_diff);
  out.result["routes_agree"] = routes_agree;
  out.result["params"] = params_json(params);
  out.result["spectrum"] = spectrum_json(spec);
  out.result["spectrum_certified"] = certified;
  out.result["sign_profile"] = {{"positive", signs.positive}, {"zero", signs.zero}, {"negative", signs.negative}};
  out.result["determinant"] = rational_json(det);
  out.result["determinant_matches_spectrum"] = det_matches;
  out.result["in_theorem_range"] = in_range;

  out.verified = routes_agree && certified && det_matches;
  if (in_range) {
    const std::size_t dim = g.edge_count();
    const bool profile_ok = signs == SignProfile{1, 0, dim - 1};
    SignPrediction pred;
    if (g.is_complete()) {
      const CompletePairCounts pc = complete_pair_counts(g, k);
      const Decomposition d = pq_decomposition(g.left_size(), k);
      out.result["pair_counts"] = {{"p", integer_json(pc.p)}, {"q", integer_json(pc.q)}};
      out.result["decomposition"] = {{"t", integer_json(d.t)},
                                     {"f", integer_json(d.f)},
                                     {"holds", pc.p == 3 * d.t + d.f && pc.q == 4 * d.t + d.f}};
      out.verified = out.verified && pc.p == 3 * d.t + d.f && pc.q == 4 * d.t + d.f;
      pred = predicted_signs(pc, g.left_size());
    } else {
      const BipartitePairCounts pc = bipartite_pair_counts(g, k);
      out.result["pair_counts"] = {{"p", integer_json(pc.p)}, {"q", integer_json(pc.q)}, {"r", integer_json(pc.r)}};
      pred = predicted_signs(pc, g.left_size(), g.right_size());
    }
    out.result["predicted_signs"] = prediction_json(pred);
    out.verified = out.verified && profile_ok && det != 0 && pred.eigenvalue_signs_hold();
  } else {
    out.notes.push_back(hessian_range_note(g, k));
  }
  return out;
}

inline Outcome run_bijections(const GraphOptions& opts, int k, std::optional<int> w_size) {
  Outcome out;
  const Graph g = graph_input(opts, out.input);
  out.input["k"] = k;
  if (!in_theorem_range(g, k)) out.notes.push_back(hessian_range_note(g, k));
  if (g.is_bipartite()) {
    if (w_size) throw InvalidInput("--w applies to complete graphs only");
    const BipartiteFamilies fam = build_bipartite_families(g, k);
    Json sizes;
    auto size = [](const std::vector<Forest>& v) { return v.size(); };
    sizes["P"] = size(fam.shared_left);
    sizes["Q"] = size(fam.shared_right);
    sizes["R"] = size(fam.disjoint);
    sizes["Z"] = size(fam.left_and_disjoint);
    sizes["Z'"] = size(fam.right_and_disjoint);
    for (int i = 0; i < 4; ++i) sizes["P" + std::to_string(i + 1)] = size(fam.shared_left_parts[i]);
    for (int i = 0; i < 4; ++i) sizes["Q" + std::to_string(i + 1)] = size(fam.shared_right_parts[i]);
    for (int i = 0; i < 5; ++i) sizes["R" + std::to_string(i + 1)] = size(fam.disjoint_parts[i]);
    for (int i = 0; i < 5; ++i) sizes["R'" + std::to_string(i + 1)] = size(fam.disjoint_right_parts[i]);
    out.result["family_sizes"] = sizes;

    Json partitions = Json::array();
    for (const PartitionCheck& c : check_partitions(fam)) {
      partitions.push_back({{"name", c.name}, {"disjoint", c.disjoint}, {"covering", c.covering}});
      out.verified = out.verified && c.holds();
    }
    out.result["partitions"] = partitions;

    Json records = Json::array();
    std::vector<BijectionRecord> all;
    for (int i = 1; i <= 3; ++i) all.push_back(bijections_pr123(g, fam, i));
    all.push_back(bijection_pr4(g, fam));
    all.push_back(bijection_q2r5(g, fam));
    for (const BijectionRecord& rec : all) {
      records.push_back(record_json(g, rec));
      out.verified = out.verified && rec.verified();
    }
    out.result["bijections"] = records;

    const CountInequalityReport rep = verify_count_inequalities(fam);
    out.result["inequalities"] = {{"p", integer_json(rep.p)},
                                  {"q", integer_json(rep.q)},
                                  {"r", integer_json(rep.r)},
                                  {"p-r", integer_json(rep.p_minus_r)},
                                  {"q-r", integer_json(rep.q_minus_r)},
                                  {"r-p-q", integer_json(rep.r_minus_p_minus_q)},
                                  {"p<r", rep.p_less_than_r()},
                                  {"q<r", rep.q_less_than_r()},
                                  {"r<p+q", rep.r_less_than_p_plus_q()},
                                  {"#R5", integer_json(rep.left_surplus)},
                                  {"#R'1", integer_json(rep.right_surplus)},
                                  {"surplus_identities", rep.surplus_identities_hold()}};
    if (!rep.p_less_than_r()) out.notes.push_back("boundary observation: p = r since R5 is empty");
    if (!rep.q_less_than_r()) out.notes.push_back("boundary observation: q = r since R'1 is empty");
    out.verified = out.verified && rep.consistent();
    return out;
  }

  if (!w_size) throw InvalidInput("complete graphs need --w SIZE (4 <= SIZE <= n)");
  const int n = g.left_size();
  if (*w_size < 4 || *w_size > n) {
    throw InvalidInput("--w must lie in [4, " + std::to_string(n) + "], got " + std::to_string(*w_size));
  }
  out.input["w"] = *w_size;
  const CompleteFamilies fam = build_complete_families(g, k);
  out.result["family_sizes"] = {{"P", fam.adjacent.size()}, {"R", fam.disjoint.size()}};
  Json records = Json::array();
  for (const SubsetFamilies& s : fam.subsets) {
    if (static_cast<int>(s.w.size()) != *w_size) continue;
    const BijectionRecord rec = bijection_forestbij(g, s.w);
    Json j = record_json(g, rec);
    j["trees_adjacent"] = s.trees_adjacent.size();
    j["trees_disjoint"] = s.trees_disjoint.size();
    records.push_back(std::move(j));
    out.verified = out.verified && rec.verified();
  }
  out.result["bijections"] = records;
  if (in_theorem_range(g, k)) {
    const Decomposition d = pq_decomposition(n, k);
    const Integer p(static_cast<unsigned long>(fam.adjacent.size()));
    const Integer q(static_cast<unsigned long>(fam.disjoint.size()));
    const bool holds = p == 3 * d.t + d.f && q == 4 * d.t + d.f;
    out.result["decomposition"] = {{"t", integer_json(d.t)}, {"f", integer_json(d.f)}, {"holds", holds}};
    out.verified = out.verified && holds;
  }
  return out;
}

inline std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) point.push_back(parse_rational(item));
  return point;
}

inline Outcome run_slp(const GraphOptions& opts, int r, const std::optional<std::string>& point_text) {
  Outcome out;
  const Graph g = graph_input(opts, out.input);
  out.input["r"] = r;
  const Matroid m = truncated_graphic_matroid(g, r);
  const Polynomial phi = basis_generating_polynomial(m);
  const std::vector<Rational> point = point_text ? parse_point(*point_text) : all_ones(phi.variable_count());
  if (point.size() != phi.variable_count()) {
    throw InvalidInput("--point needs " + std::to_string(phi.variable_count()) + " coordinates, got " +
                       std::to_string(point.size()));
  }
  const bool at_ones = std::all_of(point.begin(), point.end(), [](const Rational& a) { return a == 1; });
  Json form = Json::array();
  for (const Rational& a : point) form.push_back(rational_json(a));
  out.input["linear_form"] = form;

  const SlpReport rep = slp_check(phi, point);
  out.result["hilbert_function"] = rep.hilbert.dims;
  out.result["hilbert_symmetric"] = rep.hilbert.is_symmetric();
  Json levels = Json::array();
  for (const SlpLevel& l : rep.levels) {
    Json basis = Json::array();
    for (const Exponents& e : l.basis.monomials) basis.push_back(monomial_string(phi, e));
    levels.push_back({{"k", l.k},
                      {"basis", std::move(basis)},
                      {"determinant", rational_json(l.determinant)},
                      {"bijective", l.bijective()}});
  }
  out.result["levels"] = levels;
  out.result["strong_lefschetz"] = rep.strong_lefschetz();

  const DegreeOneLefschetzReport d1 = check_degree_one_lefschetz(m);
  out.result["degree_one"] = {{"determinant", rational_json(d1.determinant)},
                              {"spectrum", spectrum_json(d1.spectrum)},
                              {"spectrum_verified", d1.spectrum_verified},
                              {"bijective", d1.bijective()},
                              {"in_theorem_range", d1.in_theorem_range},
                              {"in_literal_range", d1.in_literal_range}};
  if (!d1.in_theorem_range) {
    out.notes.push_back("outside theorem range on " + g.description() + ": hypothesis 2 < r < " +
                        (g.is_complete() ? "n" : "m+n") + " fails for r=" + std::to_string(r));
  } else if (!d1.in_literal_range) {
    out.notes.push_back("inside 2 < r < m+n but outside the narrower reading 2 < r < n, n <= 5");
  }
  if (d1.in_theorem_range) {
    out.verified = d1.spectrum_verified && d1.bijective() && (!at_ones || rep.strong_lefschetz());
  }
  return out;
}

inline Outcome run_matroid(const GraphOptions& opts, int r, bool verify_axioms) {
  Outcome out;
  const Graph g = graph_input(opts, out.input);
  out.input["r"] = r;
  const Matroid m = truncated_graphic_matroid(g, r);
  out.result["ground_size"] = m.ground().size();
  out.result["rank"] = m.rank();
  out.result["basis_count"] = m.bases().size();
  const Matroid by_truncation = truncate(graphic_matroid(g), r);
  const bool same = by_truncation.bases() == m.bases();
  out.result["bases_equal_r_edge_forests"] = same;
  out.verified = same;
  if (verify_axioms) {
    const bool ok = verify_exchange_axiom(m);
    out.result["exchange_axiom"] = ok;
    out.verified = out.verified && ok;
  }
  return out;
}

inline Outcome run_enumerate(const GraphOptions& opts, int k, bool count_only) {
  Outcome out;
  const Graph g = graph_input(opts, out.input);
  out.input["k"] = k;
  const std::vector<Forest> forests = enumerate_forests(g, k);
  out.result["count"] = forests.size();
  if (!count_only) {
    Json list = Json::array();
    for (const Forest& f : forests) list.push_back(to_string(g, f));
    out.result["forests"] = list;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const std::string& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name. The JSON report
/// goes to `out`, diagnostics and usage to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra, bijections and Lefschetz checks for forest generating functions", "forest_spectra"};
  app.require_subcommand(1);

  detail::GraphOptions graph;
  int k = 0;
  int r = 0;
  bool with_matrix = false;
  bool verify_axioms = false;
  bool count_only = false;
  std::optional<int> w_size;
  std::optional<std::string> point;

  auto* spectrum = app.add_subcommand("spectrum", "Hessian spectrum at the all-ones point");
  graph.attach(*spectrum);
  spectrum->add_option("--k", k, "number of components")->required();
  spectrum->add_flag("--matrix", with_matrix, "include the Hessian");

  auto* bijections = app.add_subcommand("bijections", "Verify the forest bijections element-wise");
  graph.attach(*bijections);
  bijections->add_option("--k", k, "number of components")->required();
  bijections->add_option("--w", w_size, "size of the vertex subsets W (complete graphs)");

  auto* slp = app.add_subcommand("slp", "Strong Lefschetz check for a truncated graphic matroid");
  graph.attach(*slp);
  slp->add_option("--r", r, "rank of the truncation")->required();
  slp->add_option("--point", point, "coefficients a1,...,aN of the linear form");

  auto* matroid = app.add_subcommand("matroid", "Truncated graphic matroid of K_N");
  matroid->add_option("--complete", graph.complete, "complete graph K_N")->required();
  matroid->add_option("--r", r, "rank of the truncation")->required();
  matroid->add_flag("--verify-axioms", verify_axioms, "check the basis exchange axiom");

  auto* enumerate = app.add_subcommand("enumerate", "List the k-component spanning forests");
  graph.attach(*enumerate);
  enumerate->add_option("--k", k, "number of components")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::Success);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return static_cast<int>(ExitCode::InvalidInput);
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (spectrum->parsed()) {
      outcome = detail::run_spectrum(graph, k, with_matrix);
    } else if (bijections->parsed()) {
      outcome = detail::run_bijections(graph, k, w_size);
    } else if (slp->parsed()) {
      outcome = detail::run_slp(graph, r, point);
    } else if (matroid->parsed()) {
      outcome = detail::run_matroid(graph, r, verify_axioms);
    } else {
      outcome = detail::run_enumerate(graph, k, count_only);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InvalidInput);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InvalidInput);
  } catch (const StructureViolation& e) {
    err << "verification failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::VerificationFailed);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["command"] = detail::join(args);
  report["input"] = std::move(outcome.input);
  report["result"] = std::move(outcome.result);
  report["verdict"] = {{"status", outcome.verified ? "verified" : "failed"}, {"notes", outcome.notes}};
  report["timing_ms"] = std::round(ms * 1000.0) / 1000.0;
  out << report.dump(2) << "\n";
  return static_cast<int>(outcome.verified ? ExitCode::Success : ExitCode::VerificationFailed);
}

}  // namespace forest_spectra::cli
