#include "ghgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "ghgeo/error.hpp"

namespace ghgeo {
namespace {

void check_fits(const Correspondence& r, const FiniteMetricSpace& x,
                const FiniteMetricSpace& y) {
  if (r.x_size() != x.size() || r.y_size() != y.size())
    throw Error(ErrorKind::NotACorrespondence,
                "correspondence was built for a different pair of spaces");
}

double blend(double lambda, double dx, double dy) {
  return lambda * dx + (1.0 - lambda) * dy;
}

}  // namespace

BlendedSpace blended_space(const Correspondence& r, const FiniteMetricSpace& x,
                           const FiniteMetricSpace& y, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw Error(ErrorKind::LambdaOutOfRange,
                "lambda " + std::to_string(lambda) + " is outside [0, 1]");
  check_fits(r, x, y);

  const auto& pairs = r.pairs();
  const std::size_t k = pairs.size();
  std::vector<double> d(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t p = 0; p < k; ++p) {
    labels[p] = "(" + x.label(pairs[p].first) + "," + y.label(pairs[p].second) + ")";
    for (std::size_t q = 0; q < k; ++q)
      d[p * k + q] = blend(lambda, x(pairs[p].first, pairs[q].first),
                           y(pairs[p].second, pairs[q].second));
  }
  SemiMetricMatrix matrix = validate_semi_metric(k, std::move(d), kComputed);
  return BlendedSpace(r, x, y, lambda, std::move(matrix), std::move(labels));
}

FiniteMetricSpace BlendedSpace::as_metric_space() const {
  const auto d = matrix_.data();
  return FiniteMetricSpace::constructed(labels_,
                                        std::vector<double>(d.begin(), d.end()));
}

FiniteMetricSpace endpoint_space(const Correspondence& r,
                                 const FiniteMetricSpace& x,
                                 const FiniteMetricSpace& y, Side which) {
  const BlendedSpace b = blended_space(r, x, y, which == Side::X ? 1.0 : 0.0);
  return quotient_zero_classes(b.matrix(), b.labels());
}

SideDistortions side_distortions(const Correspondence& r,
                                 const FiniteMetricSpace& x,
                                 const FiniteMetricSpace& y, double lambda) {
  const BlendedSpace b = blended_space(r, x, y, lambda);
  const auto& pairs = r.pairs();
  const auto& m = b.matrix();
  SideDistortions out;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      out.dis_rx = std::max(
          out.dis_rx, std::abs(x(pairs[p].first, pairs[q].first) - m(p, q)));
      out.dis_ry = std::max(
          out.dis_ry, std::abs(m(p, q) - y(pairs[p].second, pairs[q].second)));
    }
  return out;
}

GeodesicSpec GeodesicSpec::from_result(FiniteMetricSpace x, FiniteMetricSpace y,
                                       const GHResult& result) {
  if (!result.certified)
    throw Error(ErrorKind::NotCertified,
                "solver stopped after " + std::to_string(result.nodes_explored) +
                    " nodes without certifying optimality");
  check_fits(result.optimal, x, y);
  return GeodesicSpec{std::move(x), std::move(y), result.optimal,
                      result.distance};
}

GeodesicSpec GeodesicSpec::solve(FiniteMetricSpace x, FiniteMetricSpace y,
                                 std::size_t budget) {
  const GHResult result = gh_exact(x, y, budget);
  return from_result(std::move(x), std::move(y), result);
}

double lambda_at(const GeodesicSpec& spec, double t) {
  return spec.d == 0.0 ? 1.0 : 1.0 - t / spec.d;
}

GeodesicPoint geodesic_point(const GeodesicSpec& spec, double t) {
  if (spec.d == 0.0 && t != 0.0)
    throw Error(ErrorKind::DegenerateGeodesic,
                "the spaces are isometric; only t = 0 is defined");
  if (!(t >= 0.0 && t <= spec.d))
    throw Error(ErrorKind::TOutOfRange,
                "t = " + std::to_string(t) + " is outside [0, " +
                    std::to_string(spec.d) + "]");
  if (t == 0.0) return endpoint_space(spec.r, spec.x, spec.y, Side::X);
  if (t == spec.d) return endpoint_space(spec.r, spec.x, spec.y, Side::Y);
  return blended_space(spec.r, spec.x, spec.y, lambda_at(spec, t));
}

FiniteMetricSpace to_metric_space(const GeodesicPoint& point) {
  if (const auto* space = std::get_if<FiniteMetricSpace>(&point)) return *space;
  return std::get<BlendedSpace>(point).as_metric_space();
}

FiniteMetricSpace canonical_midpoint(const GeodesicSpec& spec) {
  return blended_space(spec.r, spec.x, spec.y, 0.5).as_metric_space();
}

FiniteMetricSpace canonical_midpoint(const FiniteMetricSpace& x,
                                     const FiniteMetricSpace& y,
                                     std::size_t budget) {
  return canonical_midpoint(GeodesicSpec::solve(x, y, budget));
}

SandwichReport verify_sandwich(const GeodesicSpec& spec, double s, double t) {
  if (!(0.0 <= s && s <= t && t <= spec.d))
    throw Error(ErrorKind::ParameterOrder,
                "need 0 <= s <= t <= d, got s = " + std::to_string(s) +
                    ", t = " + std::to_string(t) +
                    ", d = " + std::to_string(spec.d));

  const double lambda_s = lambda_at(spec, s);
  const double lambda_t = lambda_at(spec, t);
  const BlendedSpace at_s = blended_space(spec.r, spec.x, spec.y, lambda_s);
  const BlendedSpace at_t = blended_space(spec.r, spec.x, spec.y, lambda_t);

  // Identity pairing of R's points between the two blends.
  double pairing = 0.0;
  const std::size_t k = at_s.size();
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q)
      pairing = std::max(pairing,
                         std::abs(at_s.matrix()(p, q) - at_t.matrix()(p, q)));

  // d <= d_GH(X, g(s)) + d_GH(g(s), g(t)) + d_GH(g(t), Y)
  const double to_x = side_distortions(spec.r, spec.x, spec.y, lambda_s).dis_rx / 2.0;
  const double to_y = side_distortions(spec.r, spec.x, spec.y, lambda_t).dis_ry / 2.0;

  SandwichReport report;
  report.s = s;
  report.t = t;
  report.expected = t - s;
  report.upper = pairing / 2.0;
  report.lower = spec.d - to_x - to_y;
  report.certified = report.upper - report.expected <= kSandwichTolerance &&
                     report.expected - report.lower <= kSandwichTolerance;
  return report;
}

}  // namespace ghgeo
