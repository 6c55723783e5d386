#include "gsic/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gsic/errors.hpp"

namespace gsic {

namespace {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (const auto& z : m.entries()) out.push_back({z.real(), z.imag()});
  return out;
}

ComplexMatrix matrix_from_json(const json& j, std::size_t rows,
                               std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows * cols) {
    std::ostringstream msg;
    msg << what << ": expected " << rows * cols << " complex entries";
    throw ValidationError(msg.str());
  }
  std::vector<Complex> entries;
  entries.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw ValidationError(std::string(what) +
                            ": entries must be [re, im] number pairs");
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void require_kind(const json& doc, const char* kind) {
  if (!doc.is_object() || !doc.contains("kind") || doc["kind"] != kind) {
    throw ValidationError(std::string("expected a document of kind \"") +
                          kind + "\"");
  }
}

std::size_t require_count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned() ||
      doc[key].get<std::size_t>() == 0) {
    throw ValidationError(std::string("field \"") + key +
                          "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string to_json(const GeneralSicPovm& povm, int indent) {
  json doc;
  doc["kind"] = "povm";
  doc["d"] = povm.d();
  doc["t"] = povm.t() ? json(*povm.t()) : json(nullptr);
  doc["a"] = povm.a();
  doc["elements"] = json::array();
  for (const auto& e : povm.elements()) {
    doc["elements"].push_back(matrix_to_json(e));
  }
  return dump(doc, indent);
}

std::string to_json(const DensityMatrix& rho, int indent) {
  json doc;
  doc["kind"] = "state";
  doc["dim"] = rho.dim();
  if (rho.split()) {
    doc["split"] = {rho.split()->dA, rho.split()->dB};
  } else {
    doc["split"] = nullptr;
  }
  doc["matrix"] = matrix_to_json(rho.matrix());
  return dump(doc, indent);
}

std::string to_json(const HermitianBasis& basis, int indent) {
  json doc;
  doc["kind"] = "basis";
  doc["d"] = basis.d;
  doc["elements"] = json::array();
  for (const auto& e : basis.elements) {
    doc["elements"].push_back(matrix_to_json(e));
  }
  doc["sum"] = matrix_to_json(basis.sum);
  return dump(doc, indent);
}

std::string to_json(const CriterionReport& report, int indent) {
  json doc;
  doc["kind"] = "report";
  doc["criterion"] = report.criterion;
  doc["value"] = report.value;
  doc["threshold"] = report.threshold;
  doc["margin"] = report.margin;
  doc["detected"] = report.detected;
  doc["params"] = json::object();
  for (const auto& [name, v] : report.params) doc["params"][name] = v;
  return dump(doc, indent);
}

GeneralSicPovm povm_from_json(std::string_view text) {
  const json doc = parse(text);
  require_kind(doc, "povm");
  const std::size_t d = require_count(doc, "d");
  if (!doc.contains("a") || !doc["a"].is_number()) {
    throw ValidationError("povm: field \"a\" must be a number");
  }
  std::optional<double> t;
  if (doc.contains("t") && !doc["t"].is_null()) {
    if (!doc["t"].is_number()) {
      throw ValidationError("povm: field \"t\" must be a number or null");
    }
    t = doc["t"].get<double>();
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw ValidationError("povm: field \"elements\" must be an array");
  }
  std::vector<ComplexMatrix> elements;
  for (const auto& e : doc["elements"]) {
    elements.push_back(matrix_from_json(e, d, d, "povm element"));
  }
  return GeneralSicPovm::from_elements(d, t, doc["a"].get<double>(),
                                       std::move(elements));
}

DensityMatrix state_from_json(std::string_view text) {
  const json doc = parse(text);
  require_kind(doc, "state");
  const std::size_t dim = require_count(doc, "dim");
  std::optional<Split> split;
  if (doc.contains("split") && !doc["split"].is_null()) {
    const auto& s = doc["split"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
        !s[1].is_number_unsigned()) {
      throw ValidationError("state: field \"split\" must be [dA, dB] or null");
    }
    split = Split{s[0].get<std::size_t>(), s[1].get<std::size_t>()};
  }
  if (!doc.contains("matrix")) {
    throw ValidationError("state: missing field \"matrix\"");
  }
  ComplexMatrix m = matrix_from_json(doc["matrix"], dim, dim, "state matrix");
  try {
    return DensityMatrix(std::move(m), split);
  } catch (const DimensionError& e) {
    throw ValidationError(e.what());
  }
}

std::string json_kind(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw ValidationError("document has no \"kind\" tag");
  }
  return doc["kind"].get<std::string>();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace gsic
