#pragma once

// JSON containers shared by POVMs, states, bases and criterion reports.
// Every document carries a "kind" tag. Matrices are lists of [re, im] pairs
// in row-major order. Doubles are written with round-trip precision, so
// serialize -> parse reproduces every entry bit for bit.
//
//   {"kind": "povm",  "d": 3, "t": 0.01, "a": ..., "elements": [[[re, im], ...], ...]}
//   {"kind": "state", "dim": 9, "split": [3, 3], "matrix": [[re, im], ...]}
//   {"kind": "basis", "d": 3, "elements": [...], "sum": [...]}
//   {"kind": "report", "criterion": ..., "value": ..., "threshold": ...,
//    "margin": ..., "detected": ..., "params": {...}}
//
// "t" is null for POVMs that do not come from the Gell-Mann construction and
// "split" is null for states without a bipartite split.

#include <string>
#include <string_view>

#include "gsic/criteria.hpp"
#include "gsic/gellmann.hpp"
#include "gsic/povm.hpp"
#include "gsic/states.hpp"

namespace gsic {

std::string to_json(const GeneralSicPovm& povm, int indent = -1);
std::string to_json(const DensityMatrix& rho, int indent = -1);
std::string to_json(const HermitianBasis& basis, int indent = -1);
std::string to_json(const CriterionReport& report, int indent = -1);

/// Parses a POVM document. The elements are not checked; run validate().
/// Throws ValidationError on malformed JSON or a wrong kind.
GeneralSicPovm povm_from_json(std::string_view text);

/// Parses a state document and validates it as a DensityMatrix. Throws
/// ValidationError on malformed JSON, a wrong kind, or a failed invariant.
DensityMatrix state_from_json(std::string_view text);

/// The "kind" tag of a document, or ValidationError.
std::string json_kind(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace gsic
