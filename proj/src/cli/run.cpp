#include "ghgeo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

#include "ghgeo/json_io.hpp"

namespace ghgeo::cli {
namespace {

using io::json;

struct SampleArgs {
  std::string kind = "circle";
  std::size_t resolution = 64;
  double length = 1.0;
  std::string points;

  void add_to(CLI::App& app, const std::string& side) {
    app.add_option("--" + side + "-kind", kind, "circle | interval | euclidean")
        ->check(CLI::IsMember({"circle", "interval", "euclidean"}));
    app.add_option("--" + side + "-res", resolution, "sample count")
        ->check(CLI::PositiveNumber);
    app.add_option("--" + side + "-length", length, "interval length");
    app.add_option("--" + side + "-points", points,
                   "JSON file with [[x, y, ...], ...] (euclidean)")
        ->check(CLI::ExistingFile);
  }

  SampledSpace build() const {
    const SampleKind k = parse_sample_kind(kind);
    if (k != SampleKind::Euclidean) return sample_space(k, resolution, length);
    if (points.empty())
      throw Error(ErrorKind::MalformedInput, "euclidean samples need --*-points");
    json j = io::read_file(points);
    if (j.is_object() && j.contains("points")) j = j["points"];
    try {
      return sample_points(j.get<std::vector<std::vector<double>>>());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::MalformedInput, points + ": " + e.what());
    }
  }
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Gromov-Hausdorff distances, geodesics and midpoints "
               "between finite metric spaces", "ghgeo"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "human-readable summary on stderr");

  std::string x_path, y_path;
  std::size_t budget = kDefaultBudget;

  auto* validate = app.add_subcommand("validate", "check that a space file is a metric");
  validate->add_option("space", x_path)->required()->check(CLI::ExistingFile);

  bool brute = false;
  auto* dist = app.add_subcommand("dist", "Gromov-Hausdorff distance");
  dist->add_option("x", x_path)->required()->check(CLI::ExistingFile);
  dist->add_option("y", y_path)->required()->check(CLI::ExistingFile);
  dist->add_flag("--brute", brute, "exhaustive oracle (|X||Y| <= 25)");
  dist->add_option("--budget", budget, "node budget for branch and bound");

  std::vector<double> ts;
  auto* geodesic = app.add_subcommand("geodesic", "sample the geodesic from X to Y");
  geodesic->add_option("x", x_path)->required()->check(CLI::ExistingFile);
  geodesic->add_option("y", y_path)->required()->check(CLI::ExistingFile);
  geodesic->add_option("--t", ts, "times in [0, d]")->required();
  geodesic->add_option("--budget", budget);

  auto* midpoint = app.add_subcommand("midpoint", "canonical midpoint of X and Y");
  midpoint->add_option("x", x_path)->required()->check(CLI::ExistingFile);
  midpoint->add_option("y", y_path)->required()->check(CLI::ExistingFile);
  midpoint->add_option("--budget", budget);

  double epsilon = 0.0;
  std::vector<Index> subset;
  auto* net = app.add_subcommand("net", "greedy epsilon-net, optionally projected");
  net->add_option("space", x_path)->required()->check(CLI::ExistingFile);
  net->add_option("--epsilon", epsilon)->required()->check(CLI::PositiveNumber);
  net->add_option("--subset", subset, "project the net into these indices");

  SampleArgs a, b;
  b.kind = "interval";
  b.resolution = 33;
  std::vector<std::size_t> ns{1, 2};
  std::vector<double> epsilons{0.5, 1.0};
  std::size_t max_net = 7;
  auto* approx = app.add_subcommand("approx", "midpoints of finite nets of sampled spaces");
  a.add_to(*approx, "a");
  b.add_to(*approx, "b");
  approx->add_option("--n", ns, "net resolutions (epsilon = 1/n)");
  approx->add_option("--epsilon", epsilons, "boundedness scales");
  approx->add_option("--max-net", max_net, "cap on net sizes")->check(CLI::PositiveNumber);
  approx->add_option("--budget", budget);

  auto* isometric = app.add_subcommand("isometric", "exact isometry test");
  isometric->add_option("x", x_path)->required()->check(CLI::ExistingFile);
  isometric->add_option("y", y_path)->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit(out, json{{"error", "UsageError"}, {"message", e.what()}});
    return kExitUsage;
  }

  try {
    if (*validate) {
      const FiniteMetricSpace x = io::read_space(x_path);
      emit(out, json{{"valid", true},
                     {"size", x.size()},
                     {"diameter", diameter(x)},
                     {"space", io::space_to_json(x)}});
      if (verbose) err << x_path << ": valid " << x.size() << "-point metric space\n";
    } else if (*dist) {
      const FiniteMetricSpace x = io::read_space(x_path);
      const FiniteMetricSpace y = io::read_space(y_path);
      const GHResult r = brute ? gh_brute(x, y) : gh_exact(x, y, budget);
      emit(out, io::to_json(r));
      if (verbose)
        err << "d_GH = " << r.distance << (r.certified ? " (certified)" : " (bracketed)")
            << " after " << r.nodes_explored << " nodes\n";
    } else if (*geodesic) {
      const GeodesicSpec spec = GeodesicSpec::solve(io::read_space(x_path),
                                                    io::read_space(y_path), budget);
      json points = json::array();
      for (double t : ts) {
        const GeodesicPoint p = geodesic_point(spec, t);
        points.push_back(json{{"t", t},
                              {"lambda", lambda_at(spec, t)},
                              {"space", io::space_to_json(to_metric_space(p))}});
      }
      emit(out, json{{"d", spec.d},
                     {"correspondence", io::correspondence_to_json(spec.r)},
                     {"points", std::move(points)}});
      if (verbose) err << "geodesic of length " << spec.d << ", " << ts.size() << " samples\n";
    } else if (*midpoint) {
      const GeodesicSpec spec = GeodesicSpec::solve(io::read_space(x_path),
                                                    io::read_space(y_path), budget);
      const SandwichReport to_x = verify_sandwich(spec, 0.0, spec.d / 2.0);
      const SandwichReport to_y = verify_sandwich(spec, spec.d / 2.0, spec.d);
      emit(out, json{{"d", spec.d},
                     {"correspondence", io::correspondence_to_json(spec.r)},
                     {"midpoint", io::space_to_json(canonical_midpoint(spec))},
                     {"sandwich", json::array({io::to_json(to_x), io::to_json(to_y)})}});
      if (verbose)
        err << "midpoint on " << spec.r.size() << " pairs, d = " << spec.d
            << (to_x.certified && to_y.certified ? ", certified\n" : ", NOT certified\n");
    } else if (*net) {
      const FiniteMetricSpace x = io::read_space(x_path);
      const NetReport r = epsilon_net(x, epsilon);
      json doc = io::to_json(r);
      json labels = json::array();
      for (Index i : r.net) labels.push_back(x.label(i));
      doc["labels"] = std::move(labels);
      if (!subset.empty()) doc["projected"] = io::to_json(project_net(x, r.net, subset, epsilon));
      emit(out, doc);
      if (verbose) err << r.size() << "-point net, radius " << r.radius << "\n";
    } else if (*approx) {
      const SampledSpace sa = a.build();
      const SampledSpace sb = b.build();
      const auto steps = midpoint_sequence(sa, sb, ns, {max_net, epsilons, budget});
      json per_n = json::array();
      std::vector<FiniteMetricSpace> family;
      bool all_passed = true;
      for (const auto& step : steps) {
        per_n.push_back(io::to_json(step));
        family.push_back(step.midpoint);
        all_passed = all_passed && step.passed();
      }
      json bounded = json::array();
      for (double e : epsilons) bounded.push_back(io::to_json(boundedness_report(family, e)));
      emit(out, json{{"a", {{"kind", to_string(sa.kind)}, {"resolution", sa.resolution},
                            {"diameter", diameter(sa.space)}}},
                     {"b", {{"kind", to_string(sb.kind)}, {"resolution", sb.resolution},
                            {"diameter", diameter(sb.space)}}},
                     {"steps", std::move(per_n)},
                     {"boundedness", std::move(bounded)},
                     {"passed", all_passed}});
      if (verbose)
        err << steps.size() << " resolutions, " << (all_passed ? "all checks passed\n"
                                                               : "some checks FAILED\n");
    } else if (*isometric) {
      const IsometryResult r = is_isometric(io::read_space(x_path), io::read_space(y_path));
      json doc{{"isometric", r.isometric}, {"nodes", r.nodes}};
      if (r.isometric) doc["permutation"] = r.permutation;
      else doc["refutation"] = r.refutation;
      emit(out, doc);
      if (verbose) err << (r.isometric ? "isometric\n" : "not isometric (" + r.refutation + ")\n");
    }
  } catch (const Error& e) {
    emit(out, io::to_json(e));
    if (verbose) err << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ghgeo::cli
