#pragma once

// Generators and independent oracles shared by the unit, property and
// acceptance suites. Nothing here calls into the solver under test.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/metric_space.hpp"

namespace ghgeo::testing {

using Rng = std::mt19937_64;

inline FiniteMetricSpace line(const std::vector<double>& coords) {
  Matrix d(coords.size(), std::vector<double>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      d[i][j] = std::abs(coords[i] - coords[j]);
  return validate_metric(d);
}

inline FiniteMetricSpace two_point(double d) {
  return validate_metric({{0.0, d}, {d, 0.0}});
}

inline FiniteMetricSpace one_point() { return validate_metric({{0.0}}); }

/// Uniform distance d between all of n points.
inline FiniteMetricSpace equilateral(std::size_t n, double d) {
  Matrix m(n, std::vector<double>(n, d));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 0.0;
  return validate_metric(m);
}

/// Symmetric matrix with entries from {0.5, 1, ..., 5}, repaired into a metric
/// by shortest-path closure. Half-integer sums are exact, so the closure
/// satisfies the triangle inequality exactly.
inline Matrix random_metric_matrix(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> half_steps(1, 10);
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d[i][j] = d[j][i] = 0.5 * half_steps(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline FiniteMetricSpace random_space(Rng& rng, std::size_t n) {
  return validate_metric(random_metric_matrix(rng, n));
}

inline FiniteMetricSpace random_space(Rng& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  return random_space(rng, size(rng));
}

/// The same space with its points shuffled.
inline FiniteMetricSpace permuted(const FiniteMetricSpace& x, Rng& rng) {
  std::vector<Index> perm(x.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix d(x.size(), std::vector<double>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) d[i][j] = x(perm[i], perm[j]);
  return validate_metric(d);
}

/// Random left-right-total relation: every point gets one random partner,
/// then extra pairs are sprinkled in.
inline Correspondence random_correspondence(Rng& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<Index> pick_x(0, n - 1), pick_y(0, m - 1);
  std::bernoulli_distribution extra(0.2);
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < n; ++i) pairs.emplace_back(i, pick_y(rng));
  for (Index j = 0; j < m; ++j) pairs.emplace_back(pick_x(rng), j);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      if (extra(rng)) pairs.emplace_back(i, j);
  return Correspondence(Relation(std::move(pairs)), n, m);
}

inline IndexSet random_subset(Rng& rng, std::size_t n) {
  std::bernoulli_distribution keep(0.5);
  IndexSet s;
  for (Index i = 0; i < n; ++i)
    if (keep(rng)) s.push_back(i);
  if (s.empty()) s.push_back(std::uniform_int_distribution<Index>(0, n - 1)(rng));
  return s;
}

// ---- oracles ---------------------------------------------------------------

/// Number of subsets of the n x m grid touching every row and column, by
/// filtering all 2^(nm) subsets.
inline std::uint64_t count_covering_subsets(std::size_t n, std::size_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n * m)); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool row = false;
      for (std::size_t j = 0; j < m; ++j) row = row || ((s >> (i * m + j)) & 1U);
      ok = row;
    }
    for (std::size_t j = 0; j < m && ok; ++j) {
      bool col = false;
      for (std::size_t i = 0; i < n; ++i) col = col || ((s >> (i * m + j)) & 1U);
      ok = col;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

/// Inclusion-exclusion over excluded rows a and columns b:
/// sum (-1)^(a+b) C(n,a) C(m,b) 2^((n-a)(m-b)).
inline std::int64_t count_by_inclusion_exclusion(std::size_t n, std::size_t m) {
  auto choose = [](std::size_t k, std::size_t r) {
    std::int64_t c = 1;
    for (std::size_t i = 0; i < r; ++i)
      c = c * static_cast<std::int64_t>(k - i) / static_cast<std::int64_t>(i + 1);
    return c;
  };
  std::int64_t total = 0;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; b <= m; ++b) {
      const std::int64_t term = choose(n, a) * choose(m, b) *
                                (std::int64_t{1} << ((n - a) * (m - b)));
      total += ((a + b) % 2 == 0) ? term : -term;
    }
  return total;
}

/// min over all covering subsets of the naive distortion, halved. Walks the
/// raw 2^(nm) subsets itself rather than using the library's enumerator.
inline double gh_oracle(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::size_t n = x.size(), m = y.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n * m)); ++s) {
    std::vector<std::pair<Index, Index>> pairs;
    std::vector<bool> hx(n, false), hy(m, false);
    for (std::size_t c = 0; c < n * m; ++c)
      if ((s >> c) & 1U) {
        pairs.emplace_back(c / m, c % m);
        hx[c / m] = true;
        hy[c % m] = true;
      }
    if (std::find(hx.begin(), hx.end(), false) != hx.end() ||
        std::find(hy.begin(), hy.end(), false) != hy.end())
      continue;
    double dis = 0.0;
    for (const auto& [a, b] : pairs)
      for (const auto& [c, d] : pairs) dis = std::max(dis, std::abs(x(a, c) - y(b, d)));
    best = std::min(best, dis);
  }
  return best / 2.0;
}

/// Checks that `perm` maps x onto y with exact entry equality.
inline bool preserves_distances(const FiniteMetricSpace& x,
                                const FiniteMetricSpace& y,
                                const std::vector<Index>& perm) {
  if (perm.size() != x.size() || x.size() != y.size()) return false;
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = 0; j < x.size(); ++j)
      if (x(i, j) != y(perm[i], perm[j])) return false;
  return true;
}

/// Max over points of the distance to the nearest member of `net`, restricted
/// to the points in `domain`.
inline double covering_radius(const FiniteMetricSpace& x, const IndexSet& domain,
                              const IndexSet& net) {
  double r = 0.0;
  for (Index p : domain) {
    double best = std::numeric_limits<double>::infinity();
    for (Index q : net) best = std::min(best, x(p, q));
    r = std::max(r, best);
  }
  return r;
}

inline IndexSet all_points(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), Index{0});
  return s;
}

}  // namespace ghgeo::testing
