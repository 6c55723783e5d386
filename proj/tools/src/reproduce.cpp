#include <cmath>
#include <functional>
#include <sstream>

#include "gsic/povm.hpp"
#include "gsic_cli/cli.hpp"

namespace gsic::cli {

namespace {

constexpr double kClosedFormTol = 1e-9;

const std::vector<double>& example_t_grid() {
  static const std::vector<double> grid = {-0.012, -0.008, -0.004, 0.001,
                                           0.004,  0.008,  0.012};
  return grid;
}

std::string point(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : kv) {
    s << (first ? "" : " ") << k << "=" << format_double(v);
    first = false;
  }
  return s.str();
}

// Accumulates the worst |numeric - closed form| over a grid.
class DeviationCheck {
 public:
  DeviationCheck(std::string name, double tol) {
    check_.name = std::move(name);
    check_.tolerance = tol;
  }
  void add(double deviation, const std::string& where) {
    deviation = std::abs(deviation);
    if (deviation > check_.max_deviation || check_.worst_point.empty()) {
      check_.max_deviation = deviation;
      check_.worst_point = where;
    }
  }
  ReproduceCheck finish() {
    check_.passed = check_.max_deviation <= check_.tolerance;
    return check_;
  }

 private:
  ReproduceCheck check_;
};

// Counts grid points where a predicate fails; passes when none do.
class CountCheck {
 public:
  explicit CountCheck(std::string name) { check_.name = std::move(name); }
  void add(bool ok, const std::string& where) {
    if (!ok) {
      check_.max_deviation += 1.0;
      if (check_.worst_point.empty()) check_.worst_point = where;
    }
  }
  ReproduceCheck finish() {
    check_.passed = check_.max_deviation == 0.0;
    return check_;
  }

 private:
  ReproduceCheck check_;
};

struct Povms {
  GeneralSicPovm p;
  GeneralSicPovm conj;
};

Povms povms_for(double t) {
  auto p = GeneralSicPovm::construct(3, t);
  auto c = conjugate_povm(p);
  return {std::move(p), std::move(c)};
}

ReproduceSummary example1() {
  ReproduceSummary s;
  s.example = 1;
  DeviationCheck margin("theorem1 margin vs 96 t^2 (4q - 1)", kClosedFormTol);
  CountCheck detection("theorem1 detects exactly q > 1/4");
  for (double t : example_t_grid()) {
    const Povms m = povms_for(t);
    for (double q : linspace(0.0, 1.0, 21)) {
      const auto r = detect_theorem1(isotropic(3, q), m.p, m.conj);
      const std::string where = point({{"q", q}, {"t", t}});
      margin.add(r.margin - 96.0 * t * t * (4.0 * q - 1.0), where);
      detection.add(r.detected == (q > 0.25), where);
    }
  }
  s.checks = {margin.finish(), detection.finish()};
  return s;
}

ReproduceSummary example2() {
  ReproduceSummary s;
  s.example = 2;
  DeviationCheck t1("theorem1 margin vs 48 t^2 (|3f - 1| - 2)", kClosedFormTol);
  DeviationCheck ja("J_a margin vs 36 (f - 3) t^2", kClosedFormTol);
  CountCheck t1_detect("theorem1 detects exactly f < -1/3");
  CountCheck ja_detect("J_a detects nothing");
  for (double t : example_t_grid()) {
    const Povms m = povms_for(t);
    for (double f : linspace(-1.0, 1.0, 41)) {
      const DensityMatrix rho = werner(3, f);
      const auto r1 = detect_theorem1(rho, m.p, m.conj);
      const auto rj = ja_value(rho, m.p, m.conj);
      const std::string where = point({{"f", f}, {"t", t}});
      t1.add(r1.margin - 48.0 * t * t * (std::abs(3.0 * f - 1.0) - 2.0), where);
      ja.add(rj.margin - 36.0 * (f - 3.0) * t * t, where);
      t1_detect.add(r1.detected == (f < -1.0 / 3.0), where);
      ja_detect.add(!rj.detected, where);
    }
  }
  s.checks = {t1.finish(), ja.finish(), t1_detect.finish(), ja_detect.finish()};
  return s;
}

ReproduceSummary example3() {
  ReproduceSummary s;
  s.example = 3;
  const std::vector<double> xs = linspace(0.01, 0.99, 99);

  CountCheck fig1("theorem1 detects rho^x for every x at t = +-0.01");
  for (double t : {-0.01, 0.01}) {
    const Povms m = povms_for(t);
    for (double x : xs) {
      const auto r = detect_theorem1(horodecki_3x3(x), m.p, m.conj);
      fig1.add(r.detected, point({{"x", x}, {"t", t}}));
    }
  }

  DeviationCheck ja("J_a margin vs 24 t^2 (-4 + (q + 35 q x)/(1 + 8x))",
                    kClosedFormTol);
  CountCheck ja_negative("J_a margin negative on the (x, q) grid");
  for (double t : example_t_grid()) {
    const Povms m = povms_for(t);
    for (double x : xs) {
      const DensityMatrix base = horodecki_3x3(x);
      for (double q : linspace(0.0, 1.0, 21)) {
        const auto r = ja_value(mix_white_noise(base, q), m.p, m.conj);
        const std::string where = point({{"x", x}, {"q", q}, {"t", t}});
        ja.add(r.margin -
                   24.0 * t * t * (-4.0 + (q + 35.0 * q * x) / (1.0 + 8.0 * x)),
               where);
        ja_negative.add(r.margin < 0.0, where);
      }
    }
  }

  CountCheck fig3("theorem1 detects the three noisy states for some t");
  const std::vector<double> t_grid = linspace(-0.012, 0.012, 49);
  for (auto [x, q] : {std::pair{0.25, 0.994}, std::pair{0.45, 0.995},
                      std::pair{0.57, 0.996}}) {
    const auto sweep =
        best_margin_over_t(mix_white_noise(horodecki_3x3(x), q), 3, t_grid);
    fig3.add(sweep.report.detected, point({{"x", x}, {"q", q}}));
    std::ostringstream note;
    note << "rho(" << x << ", " << q << "): best margin "
         << format_double(sweep.report.margin) << " at t = "
         << format_double(sweep.t_best);
    if (auto span = detected_t_span(t_grid, sweep.margins)) {
      note << ", detected for t in [" << format_double(span->first) << ", "
           << format_double(span->second) << "]";
    }
    s.notes.push_back(note.str());
  }

  s.checks = {fig1.finish(), ja.finish(), ja_negative.finish(), fig3.finish()};
  return s;
}

}  // namespace

bool ReproduceSummary::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

ReproduceSummary reproduce(int example) {
  switch (example) {
    case 1:
      return example1();
    case 2:
      return example2();
    case 3:
      return example3();
    default:
      throw UsageError("reproduce: example must be 1, 2 or 3");
  }
}

}  // namespace gsic::cli
