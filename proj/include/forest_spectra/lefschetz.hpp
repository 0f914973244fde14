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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/hessian_spectra.hpp"
#include "forest_spectra/matrix.hpp"
#include "forest_spectra/matroid.hpp"
#include "forest_spectra/polynomial.hpp"

namespace forest_spectra {

/// All exponent vectors of total degree `degree` in `variables` variables,
/// in lex order (x1^d first, xN^d last).
inline std::vector<Exponents> monomials_of_degree(std::size_t variables, int degree) {
  if (degree < 0) throw InvalidInput("monomial degree must be nonnegative");
  std::vector<Exponents> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(variables, 0);
  auto fill = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == variables) {
      e[i] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = static_cast<std::uint8_t>(a);
      self(self, i + 1, left - a);
    }
  };
  fill(fill, 0, degree);
  return out;
}

namespace detail {

inline int homogeneous_degree(const Polynomial& phi) {
  if (phi.is_zero()) throw InvalidInput("the zero polynomial has no Gorenstein algebra");
  if (!phi.is_homogeneous()) throw InvalidInput("polynomial is not homogeneous: " + phi.to_string());
  return *phi.degree();
}

/// e! / (e - u)! over all coordinates, or 0 if u does not divide e.
inline Integer falling_factor(const Exponents& e, const Exponents& u) {
  Integer f = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (u[i] > e[i]) return 0;
    for (int t = 0; t < u[i]; ++t) f *= e[i] - t;
  }
  return f;
}

/// Value of x^u(d) phi at a point.
inline Rational derivative_at(const Polynomial& phi, const Exponents& u, std::span<const Rational> point) {
  Rational total = 0;
  for (const auto& [e, c] : phi.terms()) {
    const Integer f = falling_factor(e, u);
    if (f == 0) continue;
    Rational term = c * f;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int t = u[i]; t < e[i]; ++t) term *= point[i];
    }
    total += term;
  }
  return total;
}

inline Exponents sum(const Exponents& a, const Exponents& b) {
  Exponents s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return s;
}

}  // namespace detail

/// Pairing of degree-k operators with Phi: row per degree-k monomial u,
/// column per degree-(s-k) monomial w, entry = coefficient of x^w in
/// x^u(d) Phi. Rows and columns follow monomials_of_degree.
inline ExactMatrix catalecticant_matrix(const Polynomial& phi, int k) {
  const int s = detail::homogeneous_degree(phi);
  if (k < 0 || k > s) {
    throw InvalidInput("catalecticant degree k=" + std::to_string(k) + " outside [0, " + std::to_string(s) + "]");
  }
  const std::size_t n = phi.variable_count();
  const std::vector<Exponents> rows = monomials_of_degree(n, k);
  const std::vector<Exponents> cols = monomials_of_degree(n, s - k);
  std::map<Exponents, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);
  ExactMatrix mat(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [e, c] : phi.terms()) {
      const Integer f = detail::falling_factor(e, rows[i]);
      if (f == 0) continue;
      Exponents w(e);
      for (std::size_t v = 0; v < n; ++v) w[v] = static_cast<std::uint8_t>(e[v] - rows[i][v]);
      mat(i, col_index.at(w)) += c * f;
    }
  }
  return mat;
}

/// Graded dimensions h_0, ..., h_s of K[x]/Ann(Phi).
struct HilbertProfile {
  std::vector<std::size_t> dims;

  int socle_degree() const { return static_cast<int>(dims.size()) - 1; }
  bool is_symmetric() const {
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] != dims[dims.size() - 1 - k]) return false;
    }
    return true;
  }
};

inline HilbertProfile hilbert_function(const Polynomial& phi) {
  const int s = detail::homogeneous_degree(phi);
  HilbertProfile h;
  for (int k = 0; k <= s; ++k) h.dims.push_back(exact_rank(catalecticant_matrix(phi, k)));
  if (!h.is_symmetric()) throw StructureViolation("Hilbert function of a Gorenstein algebra is not symmetric");
  return h;
}

/// Monomials whose classes form a basis of A_k, chosen greedily in lex order.
struct GradedBasis {
  int k = 0;
  std::vector<Exponents> monomials;
};

inline GradedBasis graded_basis(const Polynomial& phi, int k) {
  const ExactMatrix cat = catalecticant_matrix(phi, k);
  const std::vector<Exponents> all = monomials_of_degree(phi.variable_count(), k);
  GradedBasis basis{k, {}};
  for (std::size_t i : independent_rows(cat)) basis.monomials.push_back(all[i]);
  return basis;
}

/// Renders a monomial over the polynomial's variable names, "1" for degree 0.
inline std::string monomial_string(const Polynomial& phi, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += phi.variables()[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// The k-th Hessian over a given basis of A_k: entries (e_i e_j)(d) Phi at
/// the point.
inline ExactMatrix higher_hessian(const Polynomial& phi, const GradedBasis& basis, std::span<const Rational> point) {
  const int s = detail::homogeneous_degree(phi);
  if (2 * basis.k > s) {
    throw InvalidInput("higher Hessian needs k <= s/2, got k=" + std::to_string(basis.k) +
                       ", s=" + std::to_string(s));
  }
  if (point.size() != phi.variable_count()) {
    throw InvalidInput("point has " + std::to_string(point.size()) + " coordinates, expected " +
                       std::to_string(phi.variable_count()));
  }
  const std::size_t h = basis.monomials.size();
  ExactMatrix mat(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      mat(i, j) = detail::derivative_at(phi, detail::sum(basis.monomials[i], basis.monomials[j]), point);
      mat(j, i) = mat(i, j);
    }
  }
  return mat;
}

inline ExactMatrix higher_hessian(const Polynomial& phi, int k, std::span<const Rational> point) {
  const int s = detail::homogeneous_degree(phi);
  if (k < 0 || 2 * k > s) {
    throw InvalidInput("higher Hessian needs 0 <= k <= s/2, got k=" + std::to_string(k) +
                       ", s=" + std::to_string(s));
  }
  return higher_hessian(phi, graded_basis(phi, k), point);
}

struct SlpLevel {
  int k = 0;
  GradedBasis basis;
  Rational determinant;

  /// Whether multiplication by L^{s-2k} maps A_k onto A_{s-k}.
  bool bijective() const { return determinant != 0; }
};

struct SlpReport {
  std::vector<Rational> coefficients;
  HilbertProfile hilbert;
  std::vector<SlpLevel> levels;

  bool strong_lefschetz() const {
    for (const SlpLevel& l : levels) {
      if (!l.bijective()) return false;
    }
    return true;
  }
};

/// Determinant criterion for L = sum a_i x_i to be a strong Lefschetz
/// element of K[x]/Ann(Phi).
inline SlpReport slp_check(const Polynomial& phi, std::span<const Rational> coefficients) {
  if (coefficients.size() != phi.variable_count()) {
    throw InvalidInput("linear form has " + std::to_string(coefficients.size()) + " coefficients, expected " +
                       std::to_string(phi.variable_count()));
  }
  SlpReport report;
  report.coefficients.assign(coefficients.begin(), coefficients.end());
  report.hilbert = hilbert_function(phi);
  const int s = report.hilbert.socle_degree();
  for (int k = 0; 2 * k <= s; ++k) {
    GradedBasis basis = graded_basis(phi, k);
    const Rational det = exact_determinant(higher_hessian(phi, basis, coefficients));
    report.levels.push_back(SlpLevel{k, std::move(basis), det});
  }
  return report;
}

/// Whether c(d) Phi = 0.
inline bool annihilates(const Polynomial& c, const Polynomial& phi) { return apply_diff_operator(c, phi).is_zero(); }

/// Degree-one Lefschetz verdict for a truncated graphic matroid M^r: the map
/// x L^{r-2}: A_1 -> A_{r-1} with L the sum of all variables is bijective iff
/// the all-ones Hessian of Phi_M is nonsingular.
struct DegreeOneLefschetzReport {
  std::string graph;
  int rank = 0;
  ExactMatrix hessian;
  StructuredParams params;
  Spectrum spectrum;
  bool spectrum_verified = false;
  Rational determinant;
  /// 2 < r < n for K_n, 2 < r < m + n for K_{m,n}.
  bool in_theorem_range = false;
  /// Narrower bipartite reading 2 < r < n with n <= 5; equals
  /// in_theorem_range for complete graphs.
  bool in_literal_range = false;

  bool bijective() const { return determinant != 0; }
};

inline DegreeOneLefschetzReport check_degree_one_lefschetz(const Matroid& m) {
  if (!m.origin()) throw InvalidInput("degree-one check needs a truncated graphic matroid");
  const Graph& g = m.origin()->graph;
  const int r = m.origin()->rank;
  const int vertices = static_cast<int>(g.vertex_count());
  const int k = vertices - r;
  DegreeOneLefschetzReport rep;
  rep.graph = g.description();
  rep.rank = r;
  rep.hessian = tilde_hessian(g, k);
  rep.params = structured_params(rep.hessian, g);
  rep.determinant = exact_determinant(rep.hessian);
  const bool spectrum_defined = g.is_complete() ? g.left_size() >= 3 : g.left_size() >= 2 && g.right_size() >= 2;
  if (spectrum_defined) {
    rep.spectrum = closed_form_spectrum(rep.params);
    rep.spectrum_verified = verify_spectrum(rep.hessian, rep.spectrum) && rep.spectrum.determinant() == rep.determinant;
  }
  if (g.is_complete()) {
    rep.in_theorem_range = 2 < r && r < g.left_size();
    rep.in_literal_range = rep.in_theorem_range;
  } else {
    rep.in_theorem_range = 2 < r && r < vertices;
    rep.in_literal_range = 2 < r && r < g.right_size() && g.right_size() <= 5;
  }
  return rep;
}

}  // namespace forest_spectra
