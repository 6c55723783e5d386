#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gsic/errors.hpp"
#include "gsic/povm.hpp"
#include "gsic_cli/cli.hpp"

namespace gsic::cli {

namespace {

constexpr std::array<std::string_view, 5> kCriteria = {
    "theorem1", "ja", "ppt", "realignment", "sic"};

double require_param(const std::map<std::string, double>& params,
                     const std::string& name, Family family) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw UsageError("family " + std::string(family_name(family)) +
                     " needs --" + name);
  }
  return it->second;
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("bad number '" + std::string(text) + "' in grid '" +
                     std::string(spec) + "'");
  }
  return v;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "isotropic") return Family::kIsotropic;
  if (name == "werner") return Family::kWerner;
  if (name == "horodecki") return Family::kHorodecki;
  if (name == "horodecki-noise") return Family::kHorodeckiNoise;
  throw UsageError("unknown family '" + std::string(name) +
                   "' (isotropic, werner, horodecki, horodecki-noise)");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kIsotropic:
      return "isotropic";
    case Family::kWerner:
      return "werner";
    case Family::kHorodecki:
      return "horodecki";
    case Family::kHorodeckiNoise:
      return "horodecki-noise";
  }
  return "unknown";
}

std::vector<std::string> family_parameters(Family family) {
  switch (family) {
    case Family::kIsotropic:
      return {"q"};
    case Family::kWerner:
      return {"f"};
    case Family::kHorodecki:
      return {"x"};
    case Family::kHorodeckiNoise:
      return {"x", "q"};
  }
  return {};
}

DensityMatrix make_state(Family family, std::size_t d,
                         const std::map<std::string, double>& params) {
  switch (family) {
    case Family::kIsotropic:
      return isotropic(d, require_param(params, "q", family));
    case Family::kWerner:
      return werner(d, require_param(params, "f", family));
    case Family::kHorodecki:
      return horodecki_3x3(require_param(params, "x", family));
    case Family::kHorodeckiNoise:
      return mix_white_noise(horodecki_3x3(require_param(params, "x", family)),
                             require_param(params, "q", family));
  }
  throw UsageError("unknown family");
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  if (count == 0) throw UsageError("grid needs at least one point");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = start + step * static_cast<double>(i);
  }
  out.back() = stop;
  return out;
}

Grid parse_grid(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw UsageError("grid '" + std::string(spec) +
                     "' is not of the form name=start:stop:count");
  }
  const std::string_view name = spec.substr(0, eq);
  const std::string_view range = spec.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw UsageError("grid '" + std::string(spec) +
                     "' is not of the form name=start:stop:count");
  }
  const double start = parse_number(range.substr(0, c1), spec);
  const double stop = parse_number(range.substr(c1 + 1, c2 - c1 - 1), spec);
  const std::string_view count_text = range.substr(c2 + 1);
  std::size_t count = 0;
  const auto [ptr, ec] = std::from_chars(
      count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size() ||
      count == 0) {
    throw UsageError("grid '" + std::string(spec) +
                     "' needs a positive integer count");
  }
  return Grid{std::string(name), linspace(start, stop, count)};
}

bool criterion_uses_t(std::string_view criterion) {
  return criterion == "theorem1" || criterion == "ja";
}

void check_criterion_name(std::string_view criterion) {
  for (auto known : kCriteria) {
    if (criterion == known) return;
  }
  throw UsageError("unknown criterion '" + std::string(criterion) +
                   "' (theorem1, ja, ppt, realignment, sic)");
}

CriterionReport evaluate_criterion(std::string_view criterion,
                                   const DensityMatrix& rho,
                                   std::optional<double> t) {
  check_criterion_name(criterion);
  if (criterion == "ppt") return detect_ppt(rho);
  if (criterion == "realignment") return detect_realignment(rho);

  const Split s = rho.require_split("evaluate_criterion");
  if (criterion == "sic") {
    const auto a = sic_fiducial_povm(s.dA);
    const auto b = conjugate_povm(sic_fiducial_povm(s.dB));
    CriterionReport r = detect_theorem1(rho, a, b);
    r.criterion = "sic";
    return r;
  }
  if (!t) {
    throw UsageError("criterion " + std::string(criterion) + " needs --t");
  }
  const auto a = GeneralSicPovm::construct(s.dA, *t);
  const auto b = conjugate_povm(GeneralSicPovm::construct(s.dB, *t));
  if (criterion == "ja") return ja_value(rho, a, b);
  return detect_theorem1(rho, a, b);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

}  // namespace gsic::cli
