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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/forest_counts.hpp"
#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/matrix.hpp"
#include "forest_spectra/matroid.hpp"
#include "forest_spectra/polynomial.hpp"

namespace forest_spectra {

namespace detail {

inline void check_hessian_range(const Graph& g, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > g.vertex_count()) {
    throw InvalidInput("k=" + std::to_string(k) + " must lie in [1, " + std::to_string(g.vertex_count()) +
                       "] for " + g.description());
  }
}

}  // namespace detail

/// Hessian of the k-component forest generating function at the all-ones
/// point, computed by symbolic differentiation.
inline ExactMatrix tilde_hessian_by_differentiation(const Graph& g, int k) {
  detail::check_hessian_range(g, k);
  const Polynomial phi = forest_generating_polynomial(g, k);
  return hessian_matrix(phi, all_ones(g.edge_count()));
}

/// Same matrix from forest counts: entry (e, e') is the number of
/// k-component forests through both e and e'; the diagonal is zero because
/// the generating function is square-free.
inline ExactMatrix tilde_hessian_by_counting(const Graph& g, int k) {
  detail::check_hessian_range(g, k);
  const std::size_t n = g.edge_count();
  ExactMatrix h(n, n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      ForestConstraints through;
      through.required = EdgeSet{e, f};
      const Rational count(count_forests_on(g, g.all_vertices(), k, through));
      h(e, f) = count;
      h(f, e) = count;
    }
  }
  return h;
}

/// Builds the all-ones Hessian by both routes and insists they agree.
inline ExactMatrix tilde_hessian(const Graph& g, int k) {
  ExactMatrix by_diff = tilde_hessian_by_differentiation(g, k);
  if (!(by_diff == tilde_hessian_by_counting(g, k))) {
    throw StructureViolation("differentiation and counting disagree on the Hessian of " + g.description() +
                             ", k=" + std::to_string(k));
  }
  return by_diff;
}

/// Entry values by edge-pair class for K_n: alpha on the diagonal, beta for
/// edges sharing a vertex, gamma for disjoint edges.
struct CompleteParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  int n = 0;
};

/// Entry values by edge-pair class for K_{m,n}: alpha diagonal, beta for a
/// shared left vertex, gamma for a shared right vertex, delta disjoint.
struct BipartiteParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  int m = 0;
  int n = 0;
};

using StructuredParams = std::variant<CompleteParams, BipartiteParams>;

/// Reads the per-class entry values off a matrix indexed by the edges of g
/// and checks every entry against them. Classes absent from g read as zero.
inline StructuredParams structured_params(const ExactMatrix& mat, const Graph& g) {
  if (mat.rows() != g.edge_count() || mat.cols() != g.edge_count()) {
    throw InvalidInput("matrix is " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                       " but " + g.description() + " has " + std::to_string(g.edge_count()) + " edges");
  }
  constexpr std::size_t kClasses = 5;
  std::optional<Rational> value[kClasses];
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      const auto c = static_cast<std::size_t>(classify_edge_pair(g, i, j));
      if (!value[c]) {
        value[c] = mat(i, j);
      } else if (*value[c] != mat(i, j)) {
        throw StructureViolation("entry (" + g.edges()[i].to_string() + ", " + g.edges()[j].to_string() +
                                 ") = " + to_string(mat(i, j)) + " differs from other " +
                                 to_string(static_cast<PairClass>(c)) + " entries (" + to_string(*value[c]) +
                                 ")");
      }
    }
  }
  auto read = [&](PairClass c) { return value[static_cast<std::size_t>(c)].value_or(Rational(0)); };
  if (g.is_complete()) {
    return CompleteParams{read(PairClass::Equal), read(PairClass::ShareVertex), read(PairClass::Disjoint),
                          g.left_size()};
  }
  return BipartiteParams{read(PairClass::Equal), read(PairClass::ShareLeft), read(PairClass::ShareRight),
                         read(PairClass::Disjoint), g.left_size(), g.right_size()};
}

struct Eigenpair {
  Rational value;
  std::size_t multiplicity = 0;

  friend bool operator==(const Eigenpair&, const Eigenpair&) = default;
};

/// Eigenvalues with multiplicities. Values are distinct after merging.
struct Spectrum {
  std::vector<Eigenpair> pairs;

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& p : pairs) d += p.multiplicity;
    return d;
  }

  /// Product of eigenvalues with multiplicity.
  Rational determinant() const {
    Rational det = 1;
    for (const auto& p : pairs) det *= rational_power(p.value, p.multiplicity);
    return det;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

namespace detail {

/// Merges equal values (first position wins) and drops empty eigenspaces.
inline Spectrum merged(const std::vector<Eigenpair>& raw) {
  Spectrum s;
  for (const auto& p : raw) {
    if (p.multiplicity == 0) continue;
    bool found = false;
    for (auto& q : s.pairs) {
      if (q.value == p.value) {
        q.multiplicity += p.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) s.pairs.push_back(p);
  }
  return s;
}

}  // namespace detail

/// Closed-form spectrum of a matrix whose entries depend only on the
/// edge-pair class.
inline Spectrum closed_form_spectrum(const StructuredParams& params) {
  if (const auto* c = std::get_if<CompleteParams>(&params)) {
    const int n = c->n;
    if (n < 3) throw InvalidInput("closed-form spectrum on K_n needs n >= 3, got " + std::to_string(n));
    const auto un = static_cast<std::size_t>(n);
    const Rational top = c->alpha + (2 * n - 4) * c->beta + ratio((n - 2) * (n - 3), 2) * c->gamma;
    const Rational middle = c->alpha - 2 * c->beta + c->gamma;
    const Rational last = c->alpha + (n - 4) * c->beta - (n - 3) * c->gamma;
    return detail::merged({{top, 1}, {middle, un * (un - 1) / 2 - un}, {last, un - 1}});
  }
  const auto& b = std::get<BipartiteParams>(params);
  const int m = b.m;
  const int n = b.n;
  if (m < 2 || n < 2) {
    throw InvalidInput("closed-form spectrum on K_{m,n} needs m, n >= 2, got (" + std::to_string(m) + ", " +
                       std::to_string(n) + ")");
  }
  const auto um = static_cast<std::size_t>(m);
  const auto un = static_cast<std::size_t>(n);
  const Rational top = b.alpha + (n - 1) * b.beta + (m - 1) * b.gamma + (m - 1) * (n - 1) * b.delta;
  const Rational left = b.alpha + (n - 1) * b.beta - b.gamma - (n - 1) * b.delta;
  const Rational right = b.alpha - b.beta + (m - 1) * b.gamma - (m - 1) * b.delta;
  const Rational rest = b.alpha - b.beta - b.gamma + b.delta;
  return detail::merged({{top, 1}, {left, um - 1}, {right, un - 1}, {rest, (um - 1) * (un - 1)}});
}

/// Exact certificate that a symmetric matrix has the given spectrum:
///  (a) prod_i (mat - lambda_i I) = 0, so every eigenvalue is listed and the
///      matrix is annihilated by a squarefree polynomial;
///  (b) trace(mat^j) = sum_i m_i lambda_i^j for j = 1..d, which together with
///      sum_i m_i = dim pins the multiplicities (Vandermonde system).
inline bool verify_spectrum(const ExactMatrix& mat, const Spectrum& claimed) {
  if (!mat.is_square()) throw InvalidInput("verify_spectrum needs a square matrix");
  if (claimed.dimension() != mat.rows()) {
    throw InvalidInput("multiplicities sum to " + std::to_string(claimed.dimension()) + " for a " +
                       std::to_string(mat.rows()) + "x" + std::to_string(mat.rows()) + " matrix");
  }
  const Spectrum spec = detail::merged(claimed.pairs);
  const std::size_t n = mat.rows();
  if (n == 0) return true;

  ExactMatrix product = ExactMatrix::identity(n);
  for (const auto& p : spec.pairs) product = product * mat.shifted(p.value);
  if (!product.is_zero()) return false;

  ExactMatrix power = mat;
  for (std::size_t j = 1; j <= spec.pairs.size(); ++j) {
    if (j > 1) power = power * mat;
    Rational expected = 0;
    for (const auto& p : spec.pairs) expected += p.multiplicity * rational_power(p.value, j);
    if (power.trace() != expected) return false;
  }
  return true;
}

struct SignProfile {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

inline SignProfile sign_profile(const Spectrum& spec) {
  SignProfile s;
  for (const auto& p : spec.pairs) {
    const int sg = sign(p.value);
    if (sg > 0) {
      s.positive += p.multiplicity;
    } else if (sg < 0) {
      s.negative += p.multiplicity;
    } else {
      s.zero += p.multiplicity;
    }
  }
  return s;
}

enum class Expectation { Positive, Negative, Zero, NonNegative };

enum class CheckRole {
  Eigenvalue,  // an eigenvalue of the all-ones Hessian
  Auxiliary,   // an intermediate inequality used to bound eigenvalues
  Identity,    // an algebraic identity, expected to vanish
};

struct SignCheck {
  std::string quantity;
  Rational value;
  Expectation expected = Expectation::Negative;
  CheckRole role = CheckRole::Eigenvalue;

  bool holds() const {
    const int s = sign(value);
    switch (expected) {
      case Expectation::Positive: return s > 0;
      case Expectation::Negative: return s < 0;
      case Expectation::Zero: return s == 0;
      case Expectation::NonNegative: return s >= 0;
    }
    return false;
  }
};

struct SignPrediction {
  std::vector<SignCheck> checks;

  bool all_hold() const {
    for (const auto& c : checks) {
      if (!c.holds()) return false;
    }
    return true;
  }

  /// Only the eigenvalue signs and identities; auxiliary inequalities may be
  /// tight on small instances without affecting the eigenvalues.
  bool eigenvalue_signs_hold() const {
    for (const auto& c : checks) {
      if (c.role != CheckRole::Auxiliary && !c.holds()) return false;
    }
    return true;
  }
};

/// Signs of the eigenvalues on K_n predicted from p and q, via t = q - p and
/// f = 4p - 3q (so p = 3t + f, q = 4t + f).
inline SignPrediction predicted_signs(const CompletePairCounts& counts, int n) {
  if (n < 4) throw InvalidInput("sign prediction on K_n needs n >= 4, got " + std::to_string(n));
  const Rational p(counts.p);
  const Rational q(counts.q);
  const Rational t = q - p;
  const Rational f = 4 * p - 3 * q;
  const Rational top = (2 * n - 4) * p + ratio((n - 2) * (n - 3), 2) * q;
  const Rational middle = -2 * p + q;
  const Rational last = (n - 4) * p - (n - 3) * q;
  SignPrediction out;
  out.checks = {
      {"(2n-4)p+(n-2)(n-3)q/2", top, Expectation::Positive, CheckRole::Eigenvalue},
      {"-2p+q", middle, Expectation::Negative, CheckRole::Eigenvalue},
      {"(n-4)p-(n-3)q", last, Expectation::Negative, CheckRole::Eigenvalue},
      {"t", t, Expectation::Positive, CheckRole::Auxiliary},
      {"f", f, Expectation::NonNegative, CheckRole::Auxiliary},
      {"(-2p+q)-(-2t-f)", middle - (-2 * t - f), Expectation::Zero, CheckRole::Identity},
      {"((n-4)p-(n-3)q)-(-nt-f)", last - (-n * t - f), Expectation::Zero, CheckRole::Identity},
  };
  return out;
}

/// Signs of the eigenvalues on K_{m,n} predicted from p, q, r.
inline SignPrediction predicted_signs(const BipartitePairCounts& counts, int m, int n) {
  if (m < 2 || n < 2) throw InvalidInput("sign prediction on K_{m,n} needs m, n >= 2");
  const Rational p(counts.p);
  const Rational q(counts.q);
  const Rational r(counts.r);
  const Rational top = (n - 1) * p + (m - 1) * q + (m - 1) * (n - 1) * r;
  const Rational left = (n - 1) * p - q - (n - 1) * r;
  const Rational right = -p + (m - 1) * q - (m - 1) * r;
  const Rational rest = -p - q + r;
  SignPrediction out;
  out.checks = {
      {"(n-1)p+(m-1)q+(m-1)(n-1)r", top, Expectation::Positive, CheckRole::Eigenvalue},
      {"(n-1)p-q-(n-1)r", left, Expectation::Negative, CheckRole::Eigenvalue},
      {"-p+(m-1)q-(m-1)r", right, Expectation::Negative, CheckRole::Eigenvalue},
      {"-p-q+r", rest, Expectation::Negative, CheckRole::Eigenvalue},
      {"p-r", p - r, Expectation::Negative, CheckRole::Auxiliary},
      {"q-r", q - r, Expectation::Negative, CheckRole::Auxiliary},
      {"((n-1)p-q-(n-1)r)-((p-r)n+(-p-q+r))", left - ((p - r) * n + rest), Expectation::Zero,
       CheckRole::Identity},
      {"(-p+(m-1)q-(m-1)r)-((q-r)m+(-p-q+r))", right - ((q - r) * m + rest), Expectation::Zero,
       CheckRole::Identity},
  };
  return out;
}

}  // namespace forest_spectra
