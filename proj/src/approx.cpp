#include "ghgeo/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ghgeo/error.hpp"

namespace ghgeo {
namespace {

std::vector<std::string> padded_labels(char prefix, std::size_t k) {
  const std::size_t width = std::to_string(k > 0 ? k - 1 : 0).size();
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::string digits = std::to_string(i);
    labels[i] = prefix + std::string(width - digits.size(), '0') + digits;
  }
  return labels;
}

void check_fine_enough(const SampledSpace& s, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidEpsilon, "n must be positive");
  const double limit = 1.0 / (2.0 * static_cast<double>(n));
  if (!(s.mesh < limit))
    throw Error(ErrorKind::TooCoarse,
                "sample mesh " + std::to_string(s.mesh) +
                    " is not below 1/(2n) = " + std::to_string(limit));
}

}  // namespace

std::string to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::Circle: return "circle";
    case SampleKind::Interval: return "interval";
    case SampleKind::Euclidean: return "euclidean";
  }
  return "unknown";
}

SampleKind parse_sample_kind(const std::string& name) {
  if (name == "circle") return SampleKind::Circle;
  if (name == "interval") return SampleKind::Interval;
  if (name == "euclidean") return SampleKind::Euclidean;
  throw Error(ErrorKind::MalformedInput, "unknown sample kind '" + name + "'");
}

SampledSpace sample_space(SampleKind kind, std::size_t k, double length) {
  if (k == 0) throw Error(ErrorKind::BadResolution, "resolution must be >= 1");
  Matrix d(k, std::vector<double>(k, 0.0));
  double mesh = 0.0;
  std::vector<std::string> labels;

  switch (kind) {
    case SampleKind::Circle: {
      // Arc length between angles 2*pi*i/k is the shorter index gap times the
      // angular step.
      const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const std::size_t gap = i > j ? i - j : j - i;
          d[i][j] = static_cast<double>(std::min(gap, k - gap)) * step;
        }
      mesh = step;
      labels = padded_labels('c', k);
      break;
    }
    case SampleKind::Interval: {
      if (!(length > 0.0) || !std::isfinite(length))
        throw Error(ErrorKind::BadResolution, "interval length must be positive");
      std::vector<double> coord(k, 0.0);
      if (k > 1)
        for (std::size_t i = 0; i < k; ++i)
          coord[i] = static_cast<double>(i) * length / static_cast<double>(k - 1);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) d[i][j] = std::abs(coord[i] - coord[j]);
      mesh = k > 1 ? length / static_cast<double>(k - 1) : length;
      labels = padded_labels('t', k);
      break;
    }
    case SampleKind::Euclidean:
      throw Error(ErrorKind::BadResolution,
                  "euclidean samples need explicit coordinates");
  }
  return SampledSpace{kind, k, mesh,
                      validate_metric(d, std::move(labels), kComputed)};
}

SampledSpace sample_points(const std::vector<std::vector<double>>& coordinates) {
  const std::size_t k = coordinates.size();
  if (k == 0) throw Error(ErrorKind::BadResolution, "point set is empty");
  const std::size_t dim = coordinates.front().size();
  for (std::size_t i = 0; i < k; ++i)
    if (coordinates[i].size() != dim)
      throw Error(ErrorKind::MalformedInput,
                  "point " + std::to_string(i) + " has the wrong dimension", {i});
  Matrix d(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double sum = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = coordinates[i][c] - coordinates[j][c];
        sum += diff * diff;
      }
      d[i][j] = std::sqrt(sum);
    }
  return SampledSpace{SampleKind::Euclidean, k, 0.0,
                      validate_metric(d, padded_labels('e', k), kComputed)};
}

NetReport net_sequence(const SampledSpace& s, std::size_t n) {
  check_fine_enough(s, n);
  return epsilon_net(s.space, 1.0 / static_cast<double>(n));
}

FiniteMetricSpace product_half_sum(const FiniteMetricSpace& xn,
                                   const FiniteMetricSpace& yn) {
  const std::size_t n = xn.size();
  const std::size_t m = yn.size();
  if (n * m > kMaxProductPoints)
    throw Error(ErrorKind::SizeOverflow,
                std::to_string(n * m) + " product points exceed " +
                    std::to_string(kMaxProductPoints));
  const std::size_t k = n * m;
  std::vector<std::string> labels(k);
  std::vector<double> d(k * k);
  for (std::size_t p = 0; p < k; ++p) {
    const Index i = p / m, j = p % m;
    labels[p] = "(" + xn.label(i) + "," + yn.label(j) + ")";
    for (std::size_t q = 0; q < k; ++q)
      d[p * k + q] = 0.5 * (xn(i, q / m) + yn(j, q % m));
  }
  return FiniteMetricSpace::constructed(std::move(labels), std::move(d));
}

bool MidpointStep::passed() const {
  return diameter_ok && restriction_ok && midpoint_certified &&
         std::all_of(net_checks.begin(), net_checks.end(),
                     [](const NetCheck& c) { return c.passed; });
}

std::vector<MidpointStep> midpoint_sequence(
    const SampledSpace& a, const SampledSpace& b,
    const std::vector<std::size_t>& ns, const MidpointSequenceOptions& options) {
  const double bound_d = std::max(diameter(a.space), diameter(b.space));
  std::vector<MidpointStep> steps;
  steps.reserve(ns.size());

  for (std::size_t n : ns) {
    check_fine_enough(a, n);
    check_fine_enough(b, n);
    const double eps = 1.0 / static_cast<double>(n);
    const GreedySample gx = farthest_point_sample(a.space, eps, options.max_net_size);
    const GreedySample gy = farthest_point_sample(b.space, eps, options.max_net_size);

    GeodesicSpec spec = GeodesicSpec::solve(subspace(a.space, gx.points),
                                            subspace(b.space, gy.points),
                                            options.budget);
    const FiniteMetricSpace& xn = spec.x;
    const FiniteMetricSpace& yn = spec.y;
    FiniteMetricSpace midpoint = canonical_midpoint(spec);

    const double mid_diam = diameter(midpoint);
    const double half_sum = (diameter(xn) + diameter(yn)) / 2.0;

    // R_n sits inside X_n x Y_n; its points are product indices.
    const FiniteMetricSpace product = product_half_sum(xn, yn);
    const std::size_t m = yn.size();
    IndexSet in_product;
    for (const auto& [i, j] : spec.r.pairs()) in_product.push_back(i * m + j);

    bool restriction_ok = true;
    for (std::size_t p = 0; p < in_product.size(); ++p)
      for (std::size_t q = 0; q < in_product.size(); ++q)
        restriction_ok = restriction_ok &&
                         product(in_product[p], in_product[q]) == midpoint(p, q);

    std::vector<NetCheck> checks;
    for (double e : options.epsilons) {
      const NetReport nx = epsilon_net(xn, e);
      const NetReport ny = epsilon_net(yn, e);
      IndexSet product_net;
      for (Index i : nx.net)
        for (Index j : ny.net) product_net.push_back(i * m + j);
      const NetReport projected = project_net(product, product_net, in_product, e);

      NetCheck check;
      check.epsilon = e;
      check.n_eps = std::max(nx.size(), ny.size());
      check.product_net_size = product_net.size();
      check.projected_size = projected.size();
      check.projected_radius = projected.radius;
      const std::size_t cap = check.n_eps * check.n_eps;
      check.passed = check.product_net_size <= cap && check.projected_size <= cap &&
                     projected.radius < 2.0 * e;
      checks.push_back(check);
    }

    const double half = spec.d / 2.0;
    SandwichReport to_x = verify_sandwich(spec, 0.0, half);
    SandwichReport to_y = verify_sandwich(spec, half, spec.d);

    steps.push_back(MidpointStep{
        .n = n,
        .x_net = gx.points,
        .y_net = gy.points,
        .x_net_radius = gx.radius,
        .y_net_radius = gy.radius,
        .x_is_net = gx.radius < eps,
        .y_is_net = gy.radius < eps,
        .spec = std::move(spec),
        .midpoint = std::move(midpoint),
        .bound_d = bound_d,
        .midpoint_diameter = mid_diam,
        .half_sum_diameter = half_sum,
        .diameter_ok = mid_diam <= half_sum && half_sum <= bound_d,
        .restriction_ok = restriction_ok,
        .net_checks = std::move(checks),
        .to_x = to_x,
        .to_y = to_y,
        .midpoint_certified = to_x.certified && to_y.certified,
    });
  }
  return steps;
}

BoundednessReport boundedness_report(const std::vector<FiniteMetricSpace>& family,
                                     double epsilon) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "family is empty");
  BoundednessReport report;
  report.epsilon = epsilon;
  for (const auto& space : family) {
    const BoundednessReport::Entry entry{diameter(space),
                                         epsilon_net(space, epsilon).size()};
    report.bound_d = std::max(report.bound_d, entry.diameter);
    report.max_net_size = std::max(report.max_net_size, entry.net_size);
    report.per_space.push_back(entry);
  }
  return report;
}

}  // namespace ghgeo
