#pragma once

// Closed-form genus values in exact arithmetic. Powers of two with negative
// exponents appear for small parameters, so every expression is evaluated as
// a rational and must land on a non-negative integer.
//
// Conventions for the factor lists:
//   white_path_genus   paths P(m_k) on m_k vertices
//   white_cycle_genus  cycles C(2 m_k)
//   main_*/cube_*      cycles C(2 m) and paths P(2 m)

#include <cstdint>
#include <string>
#include <vector>

#include "quadgenus/error.hpp"
#include "quadgenus/family.hpp"

namespace quadgenus {

struct GenusValue {
  std::int64_t value = 0;
  std::string source;

  friend bool operator==(const GenusValue&, const GenusValue&) = default;
};

namespace detail {

inline Rational pow2(int e) {
  return e >= 0 ? Rational(std::int64_t{1} << e) : Rational(1, std::int64_t{1} << -e);
}

inline std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

inline GenusValue integral(const Rational& q, std::string source) {
  require(q.denominator() == 1, ErrorKind::internal, source + " evaluated to a non-integer");
  require(q.numerator() >= 0, ErrorKind::internal, source + " evaluated to a negative genus");
  return {q.numerator(), std::move(source)};
}

inline void require_all(const std::vector<int>& v, int min, const std::string& what) {
  for (int x : v) require(x >= min, ErrorKind::invalid_parameter, what);
}

}  // namespace detail

/// Repeated product of paths P(m_1) x ... x P(m_j), j >= 3, first three m even.
inline GenusValue white_path_genus(const std::vector<int>& m) {
  require(m.size() >= 3, ErrorKind::not_applicable, "path formula needs j >= 3 factors");
  require(m[0] % 2 == 0 && m[1] % 2 == 0 && m[2] % 2 == 0, ErrorKind::not_applicable,
          "path formula needs m_1, m_2, m_3 even");
  detail::require_all(m, 2, "paths need at least 2 vertices");
  FamilyParams p{1, 1, m};
  const auto j = static_cast<std::int64_t>(m.size());
  const Rational g = 1 + Rational(p.product_m(), 4) * (Rational(j - 2) - p.inverse_sum());
  return detail::integral(g, "white_path_genus");
}

/// Repeated product of cycles C(2 m_1) x ... x C(2 m_j), j >= 2.
inline GenusValue white_cycle_genus(const std::vector<int>& m) {
  require(m.size() >= 2, ErrorKind::not_applicable, "cycle formula needs j >= 2 factors");
  detail::require_all(m, 2, "cycle factors need m >= 2");
  FamilyParams p{1, 1, m};
  const int j = static_cast<int>(m.size());
  const Rational g = 1 + detail::pow2(j - 2) * (j - 2) * p.product_m();
  return detail::integral(g, "white_cycle_genus");
}

/// j-fold product of K_{t,t}: 1 + 2^{j-3} t^j (j t - 4). Valid for t even and
/// j >= 1, or t in {1, 3} and j >= 2.
inline GenusValue cube_genus(int j, int t) {
  const bool ok = (t >= 2 && t % 2 == 0 && j >= 1) || ((t == 1 || t == 3) && j >= 2);
  require(ok, ErrorKind::not_applicable, "cube formula needs t even, or t in {1,3} with j >= 2");
  const Rational g = 1 + detail::pow2(j - 3) * detail::ipow(t, j) * (j * t - 4);
  return detail::integral(g, "cube_genus");
}

/// The same expression with (j - 4) in place of (j t - 4). It only agrees with
/// cube_genus at t = 1 and is kept as a negative control for the identity
/// checks; the result may be negative, so it is returned as a rational.
inline Rational cube_genus_uncorrected(int j, int t) {
  return 1 + detail::pow2(j - 3) * detail::ipow(t, j) * (j - 4);
}

/// Hypercube Q_n.
inline GenusValue hypercube_genus(int n) {
  require(n >= 2, ErrorKind::invalid_parameter, "hypercube needs n >= 2");
  const Rational g = 1 + detail::pow2(n - 3) * (n - 4);
  return detail::integral(g, "hypercube_genus");
}

/// K_{2r,2r}.
inline GenusValue ringel_genus(int r) {
  require(r >= 1, ErrorKind::invalid_parameter, "K_{2r,2r} needs r >= 1");
  return {static_cast<std::int64_t>(r - 1) * (r - 1), "ringel_genus"};
}

/// Q_i^{(2r)} x C(2s).
inline GenusValue cube_cycle_genus(int i, int r, int s) {
  require(i >= 1 && r >= 1 && s >= 2, ErrorKind::invalid_parameter, "cube_cycle_genus needs i,r >= 1 and s >= 2");
  const Rational g = 1 + detail::pow2(2 * i - 1) * s * detail::ipow(r, i) * (i * r - 1);
  return detail::integral(g, "cube_cycle_genus");
}

/// Q_i^{(2r)} x C(2 m_1) x ... x C(2 m_j).
inline GenusValue main_cycles_genus(int i, int r, const std::vector<int>& m) {
  require(i >= 1 && r >= 1 && !m.empty(), ErrorKind::invalid_parameter, "main_cycles_genus needs i,r >= 1, j >= 1");
  detail::require_all(m, 2, "cycle factors need m >= 2");
  FamilyParams p{i, r, m};
  const int j = p.j();
  const Rational g = 1 + Rational(p.product_m()) * detail::pow2(2 * i + j - 2) * detail::ipow(r, i) * (j + i * r - 2);
  return detail::integral(g, "main_cycles_genus");
}

/// C(2 m_1) x ... x C(2 m_j) x K_{2r,2r}.
inline GenusValue corollary_genus(int r, const std::vector<int>& m) {
  require(r >= 1 && !m.empty(), ErrorKind::invalid_parameter, "corollary_genus needs r >= 1, j >= 1");
  detail::require_all(m, 2, "cycle factors need m >= 2");
  FamilyParams p{1, r, m};
  const int j = p.j();
  const Rational g = 1 + Rational(r) * detail::pow2(j) * p.product_m() * (j + r - 2);
  return detail::integral(g, "corollary_genus");
}

/// Q_i^{(2r)} x P(2s).
inline GenusValue cube_path_genus(int i, int r, int s) {
  require(i >= 1 && r >= 1 && s >= 1, ErrorKind::invalid_parameter, "cube_path_genus needs i,r,s >= 1");
  const Rational g = 1 + detail::pow2(2 * i - 2) * detail::ipow(r, i) * (2 * s * (i * r - 1) - 1);
  return detail::integral(g, "cube_path_genus");
}

/// Q_i^{(2r)} x P(2 m_1) x ... x P(2 m_j).
inline GenusValue main_paths_genus(int i, int r, const std::vector<int>& m) {
  require(i >= 1 && r >= 1 && !m.empty(), ErrorKind::invalid_parameter, "main_paths_genus needs i,r >= 1, j >= 1");
  detail::require_all(m, 1, "path factors need m >= 1");
  FamilyParams p{i, r, m};
  const int j = p.j();
  const Rational g = 1 + detail::pow2(2 * i + j - 3) * detail::ipow(r, i) * p.product_m() *
                             (Rational(2 * i * r + 2 * j - 4) - p.inverse_sum());
  return detail::integral(g, "main_paths_genus");
}

/// Genus of a bipartite graph with a quadrilateral embedding, 1 + m/4 - n/2,
/// exactly; used to cross-check the closed forms against vertex/edge counts.
inline Rational quadrilateral_genus(std::int64_t n, std::int64_t m) { return 1 + Rational(m, 4) - Rational(n, 2); }

}  // namespace quadgenus
