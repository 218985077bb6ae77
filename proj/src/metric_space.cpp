#include "ghgeo/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ghgeo/error.hpp"

namespace ghgeo {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// Axioms shared by metrics and semi-metrics, in reporting order.
void check_basic_axioms(std::size_t n, std::span<const double> d,
                        bool allow_zero_off_diagonal) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(d[i * n + j]))
        throw Error(ErrorKind::NonFiniteEntry,
                    "entry (" + idx(i) + "," + idx(j) + ") is not finite",
                    {i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i * n + j] < 0.0)
        throw Error(ErrorKind::NegativeEntry,
                    "entry (" + idx(i) + "," + idx(j) + ") is negative",
                    {i, j});
  for (std::size_t i = 0; i < n; ++i)
    if (d[i * n + i] != 0.0)
      throw Error(ErrorKind::NonzeroDiagonal,
                  "diagonal entry " + idx(i) + " is not zero", {i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i * n + j] != d[j * n + i])
        throw Error(ErrorKind::Asymmetric,
                    "entries (" + idx(i) + "," + idx(j) + ") and (" + idx(j) +
                        "," + idx(i) + ") differ",
                    {i, j});
  if (!allow_zero_off_diagonal)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (d[i * n + j] == 0.0)
          throw Error(ErrorKind::ZeroOffDiagonal,
                      "distinct points " + idx(i) + " and " + idx(j) +
                          " are at distance zero",
                      {i, j});
}

void check_triangle(std::size_t n, std::span<const double> d,
                    ValidationOptions options) {
  const double tol = options.triangle_tolerance;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double direct = d[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double via = d[i * n + k] + d[k * n + j];
        if (direct > via + tol * via)
          throw Error(ErrorKind::TriangleViolation,
                      "d(" + idx(i) + "," + idx(j) + ") exceeds d(" + idx(i) +
                          "," + idx(k) + ") + d(" + idx(k) + "," + idx(j) + ")",
                      {i, j, k});
      }
    }
}

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!seen.insert(labels[i]).second)
      throw Error(ErrorKind::DuplicateLabel,
                  "label '" + labels[i] + "' appears more than once", {i});
}

std::vector<double> flatten(const Matrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n)
      throw Error(ErrorKind::NotSquare,
                  "row " + idx(i) + " has " + idx(matrix[i].size()) +
                      " entries, expected " + idx(n),
                  {i});
    flat.insert(flat.end(), matrix[i].begin(), matrix[i].end());
  }
  return flat;
}

Matrix unflatten(std::size_t n, std::span<const double> d) {
  Matrix m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(d.begin() + static_cast<std::ptrdiff_t>(i * n), n, m[i].begin());
  return m;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

void require_subset(const FiniteMetricSpace& x, const IndexSet& s,
                    const char* what) {
  if (s.empty())
    throw Error(ErrorKind::EmptySubset, std::string(what) + " is empty");
  for (Index i : s)
    if (i >= x.size())
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string(what) + " contains index " + idx(i) +
                      " outside a space of " + idx(x.size()) + " points",
                  {i});
}

// Distance from point p to the nearest member of s.
double distance_to_set(const FiniteMetricSpace& x, Index p, const IndexSet& s) {
  double best = std::numeric_limits<double>::infinity();
  for (Index q : s) best = std::min(best, x(p, q));
  return best;
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::constructed(
    std::vector<std::string> labels, std::vector<double> row_major) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::EmptySpace, "space has no points");
  if (row_major.size() != n * n)
    throw Error(ErrorKind::NotSquare, "matrix size does not match labels");
  check_basic_axioms(n, row_major, false);
  check_labels(labels);
  return FiniteMetricSpace(std::move(labels), std::move(row_major));
}

Matrix FiniteMetricSpace::matrix() const { return unflatten(size(), dist_); }
Matrix SemiMetricMatrix::matrix() const { return unflatten(n_, dist_); }

FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  std::vector<std::string> labels,
                                  ValidationOptions options) {
  std::vector<double> flat = flatten(matrix);
  const std::size_t n = matrix.size();
  if (labels.size() != n)
    throw Error(ErrorKind::LabelMismatch,
                idx(labels.size()) + " labels for a " + idx(n) + "-point matrix");
  if (n == 0) throw Error(ErrorKind::EmptySpace, "space has no points");
  check_basic_axioms(n, flat, false);
  check_triangle(n, flat, options);
  check_labels(labels);
  return FiniteMetricSpace(std::move(labels), std::move(flat));
}

FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  ValidationOptions options) {
  return validate_metric(matrix, default_labels(matrix.size()), options);
}

SemiMetricMatrix validate_semi_metric(std::size_t n,
                                      std::vector<double> row_major,
                                      ValidationOptions options) {
  if (row_major.size() != n * n)
    throw Error(ErrorKind::NotSquare, "matrix size does not match dimension");
  check_basic_axioms(n, row_major, true);
  check_triangle(n, row_major, options);
  return SemiMetricMatrix(n, std::move(row_major));
}

SemiMetricMatrix validate_semi_metric(const Matrix& matrix,
                                      ValidationOptions options) {
  return validate_semi_metric(matrix.size(), flatten(matrix), options);
}

double diameter(const FiniteMetricSpace& x) noexcept {
  const auto d = x.data();
  return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

double eccentricity(const FiniteMetricSpace& x, Index i) noexcept {
  const auto r = x.row(i);
  return *std::max_element(r.begin(), r.end());
}

double directed_distance(const FiniteMetricSpace& x, const IndexSet& a,
                         const IndexSet& b) {
  require_subset(x, a, "subset A");
  require_subset(x, b, "subset B");
  double worst = 0.0;
  for (Index p : b) worst = std::max(worst, distance_to_set(x, p, a));
  return worst;
}

double hausdorff(const FiniteMetricSpace& x, const IndexSet& a,
                 const IndexSet& b) {
  return std::max(directed_distance(x, a, b), directed_distance(x, b, a));
}

GreedySample farthest_point_sample(const FiniteMetricSpace& x, double epsilon,
                                   std::size_t max_points) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::InvalidEpsilon, "epsilon must be positive");
  const std::size_t n = x.size();
  GreedySample out;
  if (n == 0 || max_points == 0) return out;

  // nearest[p] = distance from p to the current sample
  std::vector<double> nearest(x.row(0).begin(), x.row(0).end());
  out.points.push_back(0);
  for (;;) {
    const auto far = std::max_element(nearest.begin(), nearest.end());
    out.radius = *far;
    if (out.radius < epsilon || out.points.size() >= max_points) break;
    const Index next = static_cast<Index>(far - nearest.begin());
    out.points.push_back(next);
    for (Index p = 0; p < n; ++p) nearest[p] = std::min(nearest[p], x(p, next));
  }
  return out;
}

NetReport epsilon_net(const FiniteMetricSpace& x, double epsilon) {
  GreedySample g =
      farthest_point_sample(x, epsilon, std::numeric_limits<std::size_t>::max());
  return NetReport{std::move(g.points), epsilon, g.radius};
}

NetReport project_net(const FiniteMetricSpace& x, const IndexSet& s,
                      const IndexSet& y, double epsilon) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::InvalidEpsilon, "epsilon must be positive");
  require_subset(x, s, "net S");
  require_subset(x, y, "subset Y");
  for (Index p = 0; p < x.size(); ++p)
    if (!(distance_to_set(x, p, s) < epsilon))
      throw Error(ErrorKind::NotANet,
                  "point " + idx(p) + " is not strictly within epsilon of S",
                  {p});

  std::set<Index> chosen;
  for (Index c : s) {
    Index best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Index q : y) {
      const double d = x(c, q);
      if (d < best_d || (d == best_d && q < best)) {
        best_d = d;
        best = q;
      }
    }
    if (best_d < epsilon) chosen.insert(best);
  }

  NetReport out{IndexSet(chosen.begin(), chosen.end()), 2.0 * epsilon, 0.0};
  for (Index q : y) out.radius = std::max(out.radius, distance_to_set(x, q, out.net));
  return out;
}

FiniteMetricSpace quotient_zero_classes(const SemiMetricMatrix& m,
                                        const std::vector<std::string>& labels) {
  const std::size_t n = m.size();
  if (labels.size() != n)
    throw Error(ErrorKind::LabelMismatch,
                idx(labels.size()) + " labels for a " + idx(n) + "-point matrix");
  if (n == 0) throw Error(ErrorKind::EmptySpace, "space has no points");

  // Zero distance is transitive under the triangle inequality, so the class of
  // a point is simply its zero-row; the first unassigned point opens a class.
  std::vector<std::ptrdiff_t> cls(n, -1);
  std::vector<IndexSet> classes;
  for (Index i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    IndexSet members;
    for (Index j = i; j < n; ++j)
      if (cls[j] < 0 && m(i, j) == 0.0) {
        cls[j] = static_cast<std::ptrdiff_t>(classes.size());
        members.push_back(j);
      }
    classes.push_back(std::move(members));
  }

  const std::size_t k = classes.size();
  std::vector<Index> rep(k);
  std::vector<std::string> out_labels(k);
  for (std::size_t c = 0; c < k; ++c) {
    rep[c] = *std::min_element(
        classes[c].begin(), classes[c].end(),
        [&](Index a, Index b) { return labels[a] < labels[b]; });
    out_labels[c] = labels[rep[c]];
  }
  std::vector<double> d(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) d[a * k + b] = m(rep[a], rep[b]);
  return FiniteMetricSpace::constructed(std::move(out_labels), std::move(d));
}

FiniteMetricSpace subspace(const FiniteMetricSpace& x, const IndexSet& points) {
  require_subset(x, points, "subspace");
  const std::size_t k = points.size();
  std::vector<std::string> labels(k);
  std::vector<double> d(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = x.label(points[a]);
    for (std::size_t b = 0; b < k; ++b) d[a * k + b] = x(points[a], points[b]);
  }
  return FiniteMetricSpace::constructed(std::move(labels), std::move(d));
}

IsometryResult is_isometric(const FiniteMetricSpace& x,
                            const FiniteMetricSpace& y, std::size_t budget) {
  IsometryResult result;
  const std::size_t n = x.size();
  if (n != y.size()) {
    result.refutation = "size";
    return result;
  }

  std::vector<double> all_x(x.data().begin(), x.data().end());
  std::vector<double> all_y(y.data().begin(), y.data().end());
  std::sort(all_x.begin(), all_x.end());
  std::sort(all_y.begin(), all_y.end());
  if (all_x != all_y) {
    result.refutation = "distance multiset";
    return result;
  }

  auto sorted_rows = [](const FiniteMetricSpace& s) {
    std::vector<std::vector<double>> rows(s.size());
    for (Index i = 0; i < s.size(); ++i) {
      rows[i].assign(s.row(i).begin(), s.row(i).end());
      std::sort(rows[i].begin(), rows[i].end());
    }
    return rows;
  };
  const auto rows_x = sorted_rows(x);
  const auto rows_y = sorted_rows(y);

  std::vector<IndexSet> candidates(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      if (rows_x[i] == rows_y[j]) candidates[i].push_back(j);
    if (candidates[i].empty()) {
      result.refutation = "distance multiset";
      return result;
    }
  }

  // Most constrained points first.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<Index> image(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Index p = order[depth];
    for (Index q : candidates[p]) {
      if (used[q]) continue;
      if (++result.nodes > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "isometry search exceeded " + idx(budget) + " nodes");
      bool consistent = true;
      for (std::size_t e = 0; e < depth && consistent; ++e) {
        const Index r = order[e];
        consistent = x(p, r) == y(q, image[r]);
      }
      if (!consistent) continue;
      image[p] = q;
      used[q] = true;
      if (self(self, depth + 1)) return true;
      used[q] = false;
    }
    return false;
  };

  if (extend(extend, 0)) {
    result.isometric = true;
    result.permutation = std::move(image);
  } else {
    result.refutation = "search";
  }
  return result;
}

}  // namespace ghgeo
