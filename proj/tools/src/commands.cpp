#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "gsic/errors.hpp"
#include "gsic/gellmann.hpp"
#include "gsic/io.hpp"
#include "gsic/povm.hpp"
#include "gsic_cli/cli.hpp"

namespace gsic::cli {

namespace {

struct StateFlags {
  std::string family;
  std::string state_path;
  std::size_t d = 3;
  double q = 0.0;
  double f = 0.0;
  double x = 0.0;
  CLI::Option* q_opt = nullptr;
  CLI::Option* f_opt = nullptr;
  CLI::Option* x_opt = nullptr;

  void attach(CLI::App* cmd, bool with_state_file) {
    cmd->add_option("--family", family,
                    "isotropic, werner, horodecki or horodecki-noise");
    if (with_state_file) {
      cmd->add_option("--state", state_path, "JSON state file");
    }
    cmd->add_option("--d", d, "Local dimension (isotropic, werner)")
        ->capture_default_str();
    q_opt = cmd->add_option("--q", q, "Mixing weight q");
    f_opt = cmd->add_option("--f", f, "Werner parameter f");
    x_opt = cmd->add_option("--x", x, "Horodecki parameter x");
  }

  std::map<std::string, double> scalars() const {
    std::map<std::string, double> s;
    if (q_opt->count()) s["q"] = q;
    if (f_opt->count()) s["f"] = f;
    if (x_opt->count()) s["x"] = x;
    return s;
  }

  DensityMatrix load() const {
    if (!state_path.empty()) {
      if (!family.empty()) {
        throw UsageError("use either --family or --state, not both");
      }
      return state_from_json(read_text_file(state_path));
    }
    if (family.empty()) throw UsageError("--family or --state is required");
    const Family fam = parse_family(family);
    if ((fam == Family::kHorodecki || fam == Family::kHorodeckiNoise) &&
        d != 3) {
      throw UsageError("family " + family + " is defined for d = 3 only");
    }
    return make_state(fam, d, scalars());
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << "\n";
  } else {
    write_text_file(path, text + "\n");
  }
}

void print_validation(const ValidationReport& r, std::ostream& out) {
  const auto row = [&](const char* name, double v) {
    out << "  " << std::left << std::setw(14) << name << std::setw(26)
        << format_double(v) << (v <= r.tol ? "ok" : "VIOLATED") << "\n";
  };
  out << "  " << std::left << std::setw(14) << "shape" << std::setw(26)
      << (r.well_formed ? "d^2 elements, d x d" : "malformed")
      << (r.well_formed ? "ok" : "VIOLATED") << "\n";
  if (r.well_formed) {
    row("completeness", r.completeness);
    row("self-overlap", r.self_overlap);
    row("cross-overlap", r.cross_overlap);
    row("trace", r.trace);
    row("positivity", r.positivity);
    row("hermiticity", r.hermiticity);
    row("a-range", r.a_range);
  }
}

void print_reports(const std::vector<CriterionReport>& reports,
                   std::ostream& out) {
  out << std::left << std::setw(13) << "criterion" << std::setw(26) << "value"
      << std::setw(26) << "threshold" << std::setw(26) << "margin"
      << "detected\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(13) << r.criterion << std::setw(26)
        << format_double(r.value) << std::setw(26) << format_double(r.threshold)
        << std::setw(26) << format_double(r.margin)
        << (r.detected ? "yes" : "no") << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"General SIC-POVM entanglement detection", "gsic"};
  app.require_subcommand(1);

  // povm {build, validate, range}
  auto* povm = app.add_subcommand("povm", "Build, validate or bound general SIC-POVMs");
  povm->require_subcommand(1);
  std::size_t povm_d = 3;
  double povm_t = 0.0;
  double povm_tol = 1e-10;
  std::string povm_out;
  std::string povm_in;

  auto* build = povm->add_subcommand("build", "Emit the POVM for (d, t) as JSON");
  build->add_option("--d", povm_d, "Dimension")->capture_default_str();
  build->add_option("--t", povm_t, "Construction parameter")->required();
  build->add_option("--tol", povm_tol, "Positivity tolerance")->capture_default_str();
  build->add_option("--out", povm_out, "Output path (default stdout)");

  auto* validate_cmd = povm->add_subcommand("validate", "Check the general SIC identities");
  validate_cmd->add_option("--in", povm_in, "POVM JSON file");
  auto* vd = validate_cmd->add_option("--d", povm_d, "Dimension");
  auto* vt = validate_cmd->add_option("--t", povm_t, "Construction parameter");
  validate_cmd->add_option("--tol", povm_tol, "Violation tolerance")->capture_default_str();

  auto* range = povm->add_subcommand("range", "Feasible interval of t");
  range->add_option("--d", povm_d, "Dimension")->capture_default_str();

  // basis
  auto* basis = app.add_subcommand("basis", "Emit the normalized Gell-Mann basis as JSON");
  std::size_t basis_d = 3;
  std::string basis_out;
  basis->add_option("--d", basis_d, "Dimension")->capture_default_str();
  basis->add_option("--out", basis_out, "Output path (default stdout)");

  // state
  auto* state = app.add_subcommand("state", "Emit a state from one of the families as JSON");
  StateFlags state_flags;
  std::string state_out;
  state_flags.attach(state, false);
  state->add_option("--out", state_out, "Output path (default stdout)");

  // detect
  auto* detect = app.add_subcommand("detect", "Run separability criteria on one state");
  StateFlags detect_flags;
  detect_flags.attach(detect, true);
  double detect_t = 0.0;
  auto* detect_t_opt = detect->add_option("--t", detect_t, "Construction parameter");
  std::vector<std::string> detect_criteria{"theorem1"};
  detect->add_option("--criteria", detect_criteria,
                     "Comma-separated subset of theorem1,ja,ppt,realignment,sic")
      ->delimiter(',')
      ->capture_default_str();
  bool detect_json = false;
  detect->add_flag("--json", detect_json, "Print reports as JSON");

  // scan
  auto* scan = app.add_subcommand("scan", "Evaluate criteria over parameter grids, write CSV");
  StateFlags scan_flags;
  scan_flags.attach(scan, false);
  double scan_t = 0.0;
  auto* scan_t_opt = scan->add_option("--t", scan_t, "Single construction parameter");
  std::vector<std::string> scan_grids;
  scan->add_option("--grid", scan_grids, "name=start:stop:count (repeatable)");
  std::vector<std::string> scan_criteria{"theorem1"};
  scan->add_option("--criteria", scan_criteria, "Comma-separated criteria")
      ->delimiter(',')
      ->capture_default_str();
  std::string scan_out;
  scan->add_option("--out", scan_out, "CSV output path")->required();

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Check the worked examples against their closed forms");
  int example = 0;
  repro->add_option("example", example, "1, 2 or 3")->required()->check(CLI::Range(1, 3));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      const auto p = GeneralSicPovm::construct(povm_d, povm_t, povm_tol);
      emit(to_json(p, 2), povm_out, out);
      return kOk;
    }
    if (*validate_cmd) {
      std::optional<GeneralSicPovm> p;
      if (!povm_in.empty()) {
        if (vd->count() || vt->count()) {
          throw UsageError("use either --in or --d/--t, not both");
        }
        p = povm_from_json(read_text_file(povm_in));
      } else {
        if (!vt->count()) throw UsageError("povm validate needs --in or --t");
        p = GeneralSicPovm::construct(povm_d, povm_t);
      }
      const ValidationReport r = validate(*p, povm_tol);
      out << "d = " << p->d() << ", a = " << format_double(p->a());
      if (p->t()) out << ", t = " << format_double(*p->t());
      out << ", tol = " << povm_tol << "\n";
      print_validation(r, out);
      if (!r.passed) {
        const auto failures = r.failures();
        err << "validation failed: ";
        for (std::size_t i = 0; i < failures.size(); ++i) {
          err << (i ? ", " : "") << failures[i];
        }
        err << "\n";
        out << "FAIL\n";
        return kFailure;
      }
      out << "PASS\n";
      return kOk;
    }
    if (*range) {
      const TRange r = feasible_t_range(povm_d);
      out << "d = " << povm_d << " feasible t in [" << format_double(r.t_min)
          << ", " << format_double(r.t_max) << "]\n";
      return kOk;
    }
    if (*basis) {
      emit(to_json(gellmann_basis(basis_d), 2), basis_out, out);
      return kOk;
    }
    if (*state) {
      emit(to_json(state_flags.load(), 2), state_out, out);
      return kOk;
    }
    if (*detect) {
      const DensityMatrix rho = detect_flags.load();
      std::optional<double> t;
      if (detect_t_opt->count()) t = detect_t;
      std::vector<CriterionReport> reports;
      for (const auto& c : detect_criteria) check_criterion_name(c);
      for (const auto& c : detect_criteria) {
        reports.push_back(evaluate_criterion(c, rho, t));
      }
      if (detect_json) {
        out << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          out << (i ? "," : "") << to_json(reports[i]);
        }
        out << "]\n";
      } else {
        print_reports(reports, out);
      }
      return kOk;
    }
    if (*scan) {
      if (scan_flags.family.empty()) throw UsageError("scan needs --family");
      auto scalars = scan_flags.scalars();
      if (scan_t_opt->count()) scalars["t"] = scan_t;
      std::vector<Grid> grids;
      for (const auto& g : scan_grids) grids.push_back(parse_grid(g));
      const ScanSpec spec = resolve_scan_spec(
          parse_family(scan_flags.family), scan_flags.d, scalars, grids,
          scan_criteria, scan_out);
      const std::string csv = scan_csv(spec);
      write_text_file(spec.output_path, csv);
      const auto rows = std::count(csv.begin(), csv.end(), '\n') - 1;
      out << "wrote " << rows << " rows to " << spec.output_path << "\n";
      return kOk;
    }
    if (*repro) {
      const ReproduceSummary s = reproduce(example);
      out << "example " << s.example << "\n";
      for (const auto& c : s.checks) {
        out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << std::left
            << std::setw(58) << c.name << " max deviation "
            << std::scientific << std::setprecision(3) << c.max_deviation
            << " (tol " << c.tolerance << ")" << std::defaultfloat << "\n";
      }
      for (const auto& n : s.notes) out << "  note: " << n << "\n";
      if (!s.passed()) {
        for (const auto& c : s.checks) {
          if (!c.passed) {
            err << c.name << ": worst grid point " << c.worst_point << "\n";
          }
        }
        return kFailure;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace gsic::cli
