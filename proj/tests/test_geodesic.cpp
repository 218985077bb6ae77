#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "ghgeo/error.hpp"
#include "ghgeo/geodesic.hpp"
#include "support/test_support.hpp"

using namespace ghgeo;
using namespace ghgeo::testing;

namespace {

Correspondence bijection2() { return Correspondence(Relation::identity(2), 2, 2); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST_CASE("blended_space") {
  const auto x = line({0, 1, 3});
  const auto y = line({0, 2, 3, 7});
  Rng rng(1);
  const auto r = random_correspondence(rng, 3, 4);

  SUBCASE("lambda = 1 carries the X distances") {
    const auto b = blended_space(r, x, y, 1.0);
    for (std::size_t p = 0; p < r.size(); ++p)
      for (std::size_t q = 0; q < r.size(); ++q)
        CHECK(b.matrix()(p, q) == x(r.pairs()[p].first, r.pairs()[q].first));
  }
  SUBCASE("lambda = 0 carries the Y distances") {
    const auto b = blended_space(r, x, y, 0.0);
    for (std::size_t p = 0; p < r.size(); ++p)
      for (std::size_t q = 0; q < r.size(); ++q)
        CHECK(b.matrix()(p, q) == y(r.pairs()[p].second, r.pairs()[q].second));
  }
  SUBCASE("bijection between distances 2 and 4 at one half") {
    const auto b = blended_space(bijection2(), two_point(2), two_point(4), 0.5);
    const auto m = b.as_metric_space();
    CHECK(m.size() == 2);
    CHECK(m(0, 1) == 3.0);
    CHECK(b.labels() == std::vector<std::string>{"(0,0)", "(1,1)"});
  }
  CHECK(kind_of([&] { blended_space(r, x, y, -0.1); }) == ErrorKind::LambdaOutOfRange);
  CHECK(kind_of([&] { blended_space(r, x, y, 1.5); }) == ErrorKind::LambdaOutOfRange);
  CHECK(kind_of([&] { blended_space(r, x, y, NAN); }) == ErrorKind::LambdaOutOfRange);
  CHECK(kind_of([&] { blended_space(r, y, x, 0.5); }) == ErrorKind::NotACorrespondence);
}

TEST_CASE("endpoint_space") {
  Rng rng(2);
  const auto x = random_space(rng, 4);
  const auto y = random_space(rng, 3);
  const auto r = random_correspondence(rng, 4, 3);

  const auto ex = endpoint_space(r, x, y, Side::X);
  const auto ey = endpoint_space(r, x, y, Side::Y);
  const auto ix = is_isometric(ex, x);
  const auto iy = is_isometric(ey, y);
  REQUIRE(ix.isometric);
  REQUIRE(iy.isometric);
  CHECK(preserves_distances(ex, x, ix.permutation));
  CHECK(preserves_distances(ey, y, iy.permutation));

  SUBCASE("a bijection survives the quotient intact") {
    const auto b = endpoint_space(Correspondence(Relation::identity(3), 3, 3), line({0, 1, 3}),
                                  line({0, 2, 3}), Side::X);
    CHECK(b.size() == 3);
  }
}

TEST_CASE("side_distortions") {
  const auto x = two_point(2);
  const auto y = two_point(4);
  CHECK(side_distortions(bijection2(), x, y, 1.0).dis_rx == 0.0);
  CHECK(side_distortions(bijection2(), x, y, 0.0).dis_ry == 0.0);
  const auto half = side_distortions(bijection2(), x, y, 0.5);
  CHECK(half.dis_rx == 1.0);
  CHECK(half.dis_ry == 1.0);

  SUBCASE("identities on random correspondences") {
    Rng rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_space(rng, 1, 5);
      const auto b = random_space(rng, 1, 5);
      const auto r = random_correspondence(rng, a.size(), b.size());
      const double dis = distortion(r.relation(), a, b);
      for (double lambda : {0.0, 1.0, 0.5, unit(rng), unit(rng)}) {
        const auto s = side_distortions(r, a, b, lambda);
        CHECK(std::abs(s.dis_rx - (1.0 - lambda) * dis) <= 1e-15);
        CHECK(std::abs(s.dis_ry - lambda * dis) <= 1e-15);
      }
    }
  }
}

TEST_CASE("geodesic_point") {
  const auto x = two_point(2);
  const auto y = two_point(4);
  const auto spec = GeodesicSpec::solve(x, y);
  REQUIRE(spec.d == 1.0);

  CHECK(is_isometric(to_metric_space(geodesic_point(spec, 0.0)), x).isometric);
  CHECK(is_isometric(to_metric_space(geodesic_point(spec, 1.0)), y).isometric);
  CHECK(std::holds_alternative<FiniteMetricSpace>(geodesic_point(spec, 0.0)));

  const auto mid_point = geodesic_point(spec, 0.5);
  REQUIRE(std::holds_alternative<BlendedSpace>(mid_point));
  const auto mid = to_metric_space(mid_point);
  CHECK(mid.size() == 2);
  CHECK(mid(0, 1) == 3.0);
  // cross-check with the oracle: half way to each end
  CHECK(gh_brute(x, mid).distance == 0.5);
  CHECK(gh_brute(mid, y).distance == 0.5);

  CHECK(kind_of([&] { geodesic_point(spec, -0.25); }) == ErrorKind::TOutOfRange);
  CHECK(kind_of([&] { geodesic_point(spec, 1.25); }) == ErrorKind::TOutOfRange);

  SUBCASE("isometric ends give a degenerate geodesic") {
    const auto same = GeodesicSpec::solve(line({0, 1, 3}), line({0, 2, 3}));
    CHECK(same.d == 0.0);
    CHECK(is_isometric(to_metric_space(geodesic_point(same, 0.0)), line({0, 1, 3})).isometric);
    CHECK(kind_of([&] { geodesic_point(same, 0.1); }) == ErrorKind::DegenerateGeodesic);
  }
}

TEST_CASE("canonical_midpoint") {
  SUBCASE("isometric spaces") {
    const auto m = canonical_midpoint(line({0, 1, 3}), line({0, 2, 3}));
    CHECK(is_isometric(m, line({0, 1, 3})).isometric);
  }
  SUBCASE("distances 2 and 4") {
    const auto m = canonical_midpoint(two_point(2), two_point(4));
    CHECK(m.size() == 2);
    CHECK(m(0, 1) == 3.0);
  }
  SUBCASE("one point against distance 4") {
    const auto m = canonical_midpoint(one_point(), two_point(4));
    CHECK(m.size() == 2);
    CHECK(m(0, 1) == 2.0);
  }
  SUBCASE("uncertified solve is refused") {
    Rng rng(17);
    const auto a = random_space(rng, 7);
    const auto b = random_space(rng, 7);
    CHECK(kind_of([&] { canonical_midpoint(a, b, 1); }) == ErrorKind::NotCertified);
  }
  SUBCASE("midpoint is half way, checked by exact solves") {
    Rng rng(21);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_space(rng, 2, 3);
      const auto b = random_space(rng, 2, 3);
      const auto spec = GeodesicSpec::solve(a, b);
      const auto m = canonical_midpoint(spec);
      if (m.size() > 6) continue;
      ++checked;
      CHECK(std::abs(gh_exact(a, m).distance - spec.d / 2) <= 1e-9);
      CHECK(std::abs(gh_exact(m, b).distance - spec.d / 2) <= 1e-9);
    }
    CHECK(checked > 10);
  }
}

TEST_CASE("verify_sandwich") {
  const auto spec = GeodesicSpec::solve(two_point(2), two_point(4));

  const auto ends = verify_sandwich(spec, 0.0, spec.d);
  CHECK(ends.upper == spec.d);
  CHECK(ends.lower == spec.d);
  CHECK(ends.certified);

  const auto flat = verify_sandwich(spec, 0.4, 0.4);
  CHECK(flat.upper == 0.0);
  CHECK(flat.lower == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(flat.certified);

  const auto inner = verify_sandwich(spec, 0.25, 0.75);
  CHECK(inner.certified);
  CHECK(inner.upper == 0.5);
  CHECK(inner.lower == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(kind_of([&] { verify_sandwich(spec, 0.75, 0.25); }) == ErrorKind::ParameterOrder);
  CHECK(kind_of([&] { verify_sandwich(spec, -1.0, 0.25); }) == ErrorKind::ParameterOrder);
  CHECK(kind_of([&] { verify_sandwich(spec, 0.0, 2.0); }) == ErrorKind::ParameterOrder);

  SUBCASE("additivity along random geodesics") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = GeodesicSpec::solve(random_space(rng, 1, 4), random_space(rng, 1, 4));
      std::uniform_real_distribution<double> along(0.0, g.d);
      std::array<double, 3> st{along(rng), along(rng), along(rng)};
      std::sort(st.begin(), st.end());
      const auto a = verify_sandwich(g, st[0], st[1]);
      const auto b = verify_sandwich(g, st[1], st[2]);
      const auto c = verify_sandwich(g, st[0], st[2]);
      CHECK(a.certified);
      CHECK(b.certified);
      CHECK(c.certified);
      CHECK(std::abs(c.upper - (a.upper + b.upper)) <= 1e-9);
    }
  }
}

TEST_CASE("blends of metrics stay metrics up to rounding") {
  Rng rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_space(rng, 1, 5);
    const auto b = random_space(rng, 1, 5);
    const auto r = random_correspondence(rng, a.size(), b.size());
    double lambda = unit(rng);
    if (lambda == 0.0) lambda = 0.5;
    const auto blend = blended_space(r, a, b, lambda);
    CHECK_NOTHROW(validate_metric(blend.matrix().matrix(), blend.labels(), kComputed));
  }
}
