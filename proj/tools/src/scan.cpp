#include <algorithm>
#include <future>
#include <thread>

#include "gsic/povm.hpp"
#include "gsic_cli/cli.hpp"

namespace gsic::cli {

namespace {

constexpr std::size_t kDefaultTPoints = 25;

std::vector<double> default_grid(const std::string& name) {
  if (name == "q") return linspace(0.0, 1.0, 21);
  if (name == "f") return linspace(-1.0, 1.0, 41);
  if (name == "x") return linspace(0.01, 0.99, 99);
  throw UsageError("no default grid for parameter " + name);
}

struct PovmPair {
  GeneralSicPovm a;
  GeneralSicPovm b;
};

// Everything a row needs that does not depend on the state; built once,
// then shared read-only by the worker threads.
struct Precomputed {
  std::map<double, PovmPair> by_t;
  std::optional<PovmPair> sic;
};

CriterionReport evaluate_row(const std::string& criterion,
                             const DensityMatrix& rho, std::optional<double> t,
                             const Precomputed& pre) {
  if (criterion == "ppt") return detect_ppt(rho);
  if (criterion == "realignment") return detect_realignment(rho);
  if (criterion == "sic") {
    CriterionReport r = detect_theorem1(rho, pre.sic->a, pre.sic->b);
    r.criterion = "sic";
    return r;
  }
  const PovmPair& pair = pre.by_t.at(*t);
  if (criterion == "ja") return ja_value(rho, pair.a, pair.b);
  return detect_theorem1(rho, pair.a, pair.b);
}

}  // namespace

ScanSpec resolve_scan_spec(Family family, std::size_t d,
                           const std::map<std::string, double>& scalars,
                           const std::vector<Grid>& explicit_grids,
                           std::vector<std::string> criteria,
                           std::string output_path) {
  if (criteria.empty()) criteria = {"theorem1"};
  for (const auto& c : criteria) check_criterion_name(c);
  if ((family == Family::kHorodecki || family == Family::kHorodeckiNoise) &&
      d != 3) {
    throw UsageError("family " + std::string(family_name(family)) +
                     " is defined for d = 3 only");
  }
  if (d < 2) throw UsageError("--d must be >= 2");

  std::vector<std::string> names = family_parameters(family);
  const bool needs_t = std::any_of(criteria.begin(), criteria.end(),
                                   [](const auto& c) { return criterion_uses_t(c); });
  if (needs_t) names.emplace_back("t");

  std::map<std::string, std::vector<double>> given;
  for (const auto& g : explicit_grids) {
    if (std::find(names.begin(), names.end(), g.name) == names.end()) {
      throw UsageError("grid '" + g.name + "' is not a parameter of this scan");
    }
    if (g.values.empty()) throw UsageError("grid '" + g.name + "' is empty");
    given[g.name] = g.values;
  }

  ScanSpec spec;
  spec.family = family;
  spec.d = d;
  spec.criteria = std::move(criteria);
  spec.output_path = std::move(output_path);
  for (const auto& name : names) {
    Grid g{name, {}};
    if (auto it = given.find(name); it != given.end()) {
      g.values = it->second;
    } else if (auto s = scalars.find(name); s != scalars.end()) {
      g.values = {s->second};
    } else if (name == "t") {
      const TRange range = feasible_t_range(d);
      g.values = linspace(range.t_min, range.t_max, kDefaultTPoints);
    } else {
      g.values = default_grid(name);
    }
    spec.grids.push_back(std::move(g));
  }
  return spec;
}

std::string scan_csv(const ScanSpec& spec) {
  std::size_t points = 1;
  for (const auto& g : spec.grids) {
    if (g.values.empty()) throw UsageError("grid '" + g.name + "' is empty");
    points *= g.values.size();
  }
  for (const auto& c : spec.criteria) check_criterion_name(c);

  const auto t_grid = std::find_if(spec.grids.begin(), spec.grids.end(),
                                   [](const Grid& g) { return g.name == "t"; });
  Precomputed pre;
  if (t_grid != spec.grids.end()) {
    for (double t : t_grid->values) {
      if (pre.by_t.count(t)) continue;
      auto a = GeneralSicPovm::construct(spec.d, t);  // throws if infeasible
      auto b = conjugate_povm(a);
      pre.by_t.emplace(t, PovmPair{std::move(a), std::move(b)});
    }
  }
  if (std::find(spec.criteria.begin(), spec.criteria.end(), "sic") !=
      spec.criteria.end()) {
    auto a = sic_fiducial_povm(spec.d);
    auto b = conjugate_povm(a);
    pre.sic = PovmPair{std::move(a), std::move(b)};
  }

  auto render_point = [&](std::size_t flat) {
    std::map<std::string, double> params;
    std::vector<double> coords(spec.grids.size());
    std::size_t rem = flat;
    for (std::size_t g = spec.grids.size(); g-- > 0;) {
      const auto& values = spec.grids[g].values;
      coords[g] = values[rem % values.size()];
      rem /= values.size();
      params[spec.grids[g].name] = coords[g];
    }
    const DensityMatrix rho = make_state(spec.family, spec.d, params);
    std::optional<double> t;
    if (auto it = params.find("t"); it != params.end()) t = it->second;

    std::string rows;
    for (const auto& criterion : spec.criteria) {
      const CriterionReport r = evaluate_row(criterion, rho, t, pre);
      for (double c : coords) rows += format_double(c) + ",";
      rows += r.criterion + "," + format_double(r.value) + "," +
              format_double(r.threshold) + "," + format_double(r.margin) +
              "," + (r.detected ? "true" : "false") + "\n";
    }
    return rows;
  };

  // Workers fill disjoint index ranges; the output is stitched in grid order.
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(points, 1));
  const std::size_t chunk = (points + workers - 1) / workers;
  std::vector<std::future<std::string>> parts;
  for (std::size_t begin = 0; begin < points; begin += chunk) {
    const std::size_t end = std::min(points, begin + chunk);
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      std::string text;
      for (std::size_t i = begin; i < end; ++i) text += render_point(i);
      return text;
    }));
  }

  std::string csv;
  for (const auto& g : spec.grids) csv += g.name + ",";
  csv += "criterion,value,threshold,margin,detected\n";
  for (auto& p : parts) csv += p.get();
  return csv;
}

}  // namespace gsic::cli
