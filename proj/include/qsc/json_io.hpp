// Copyright 2026 The qsc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qsc/bell.hpp"
#include "qsc/states.hpp"

// JSON file formats (shared by the library and the CLI):
//   complex scalar   [re, im]
//   PureState        {"n": int, "vec": [[re,im], ...]}        (length n^2,
//                    ket |j,l> at position (j-1)*n + (l-1), 1-based labels)
//   DensityMatrix    {"n": int, "rho": [[[re,im], ...], ...]} (n^2 x n^2)
//   Ensemble         {"probs": [...], "states": [PureState, ...]}
//   Hadamard         {"n": int, "H": [[[re,im], ...], ...]}
//                    (optionally with angle form {"theta": [[rad, ...], ...]})
//   BellBasis        {"n": int, "hadamards": [Hadamard, ...]}
namespace qsc::io {

using nlohmann::json;

json to_json(const Complex& z);
json to_json(const ComplexMatrix& m);
json to_json(const PureState& psi);
json to_json(const DensityMatrix& rho);
json to_json(const Ensemble& ens);
json hadamard_to_json(const ComplexMatrix& h, bool with_angles = false);
json to_json(const bell::BellBasis& basis);

Complex complex_from_json(const json& j);
ComplexMatrix matrix_from_json(const json& j);
PureState pure_state_from_json(const json& j, const Tolerance& tol = {});
DensityMatrix density_from_json(const json& j, const Tolerance& tol = {});
Ensemble ensemble_from_json(const json& j, const Tolerance& tol = {});
ComplexMatrix hadamard_from_json(const json& j);
bell::BellBasis bell_basis_from_json(const json& j, const Tolerance& tol = {});

/// Parses a file; throws ParseError on I/O or syntax problems.
json load_file(const std::string& path);

/// Deterministic serialization: object keys sorted, floating-point numbers
/// printed with 17 significant digits (%.17g). Identical values give
/// byte-identical output.
std::string dump_json(const json& j, bool pretty = false);
void write_json(std::ostream& os, const json& j, bool pretty = false);

}  // namespace qsc::io
