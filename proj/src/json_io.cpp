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

#include "qsc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qsc::io {

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PureState& psi) {
  json vec = json::array();
  for (const auto& z : psi.amplitudes()) vec.push_back(to_json(z));
  return json{{"n", psi.dim()}, {"vec", std::move(vec)}};
}

json to_json(const DensityMatrix& rho) {
  return json{{"n", rho.dim()}, {"rho", to_json(rho.matrix())}};
}

json to_json(const Ensemble& ens) {
  json states = json::array();
  for (const auto& s : ens.states()) states.push_back(to_json(s));
  return json{{"probs", ens.probs()}, {"states", std::move(states)}};
}

json hadamard_to_json(const ComplexMatrix& h, bool with_angles) {
  json out{{"n", h.rows()}, {"H", to_json(h)}};
  if (with_angles) {
    json theta = json::array();
    for (std::size_t i = 0; i < h.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < h.cols(); ++j) row.push_back(std::arg(h(i, j)));
      theta.push_back(std::move(row));
    }
    out["theta"] = std::move(theta);
  }
  return out;
}

json to_json(const bell::BellBasis& basis) {
  json hs = json::array();
  for (const auto& h : basis.hadamards) hs.push_back(hadamard_to_json(h));
  return json{{"n", basis.n}, {"hadamards", std::move(hs)}};
}

namespace {

double number_from_json(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !j.is_number_integer())
    throw ParseError(std::string(what) + ": expected a nonnegative integer");
  const auto v = j.get<long long>();
  if (v < 0) throw ParseError(std::string(what) + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex scalar: expected [re, im]");
  return Complex(number_from_json(j[0], "complex scalar"), number_from_json(j[1], "complex scalar"));
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix: rows must be nonempty arrays");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  if (!m.all_finite()) throw ParseError("matrix: non-finite entry");
  return m;
}

PureState pure_state_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("n") || !j.contains("vec"))
    throw ParseError("pure state: expected {\"n\", \"vec\"}");
  const std::size_t n = count_from_json(j["n"], "pure state n");
  const json& vec = j["vec"];
  if (!vec.is_array()) throw ParseError("pure state: vec must be an array");
  std::vector<Complex> amps;
  amps.reserve(vec.size());
  for (const auto& e : vec) amps.push_back(complex_from_json(e));
  return PureState(n, std::move(amps), tol);
}

DensityMatrix density_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rho"))
    throw ParseError("density matrix: expected {\"n\", \"rho\"}");
  const std::size_t n = count_from_json(j["n"], "density matrix n");
  return DensityMatrix(n, matrix_from_json(j["rho"]), tol);
}

Ensemble ensemble_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("probs") || !j.contains("states"))
    throw ParseError("ensemble: expected {\"probs\", \"states\"}");
  const json& jp = j["probs"];
  const json& js = j["states"];
  if (!jp.is_array() || !js.is_array() || jp.size() != js.size())
    throw ParseError("ensemble: probs and states must be arrays of equal length");
  std::vector<double> probs;
  std::vector<PureState> states;
  for (std::size_t k = 0; k < jp.size(); ++k) {
    probs.push_back(number_from_json(jp[k], "ensemble probability"));
    states.push_back(pure_state_from_json(js[k], tol));
  }
  return Ensemble(std::move(probs), std::move(states), tol);
}

ComplexMatrix hadamard_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("H"))
    throw ParseError("hadamard: expected {\"n\", \"H\"}");
  const std::size_t n = count_from_json(j["n"], "hadamard n");
  ComplexMatrix h = matrix_from_json(j["H"]);
  if (h.rows() != n || h.cols() != n) throw ParseError("hadamard: H must be n x n");
  return h;
}

bell::BellBasis bell_basis_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("n") || !j.contains("hadamards"))
    throw ParseError("bell basis: expected {\"n\", \"hadamards\"}");
  const std::size_t n = count_from_json(j["n"], "bell basis n");
  const json& hs = j["hadamards"];
  if (!hs.is_array()) throw ParseError("bell basis: hadamards must be an array");
  std::vector<ComplexMatrix> mats;
  mats.reserve(hs.size());
  for (const auto& e : hs) mats.push_back(hadamard_from_json(e));
  if (mats.size() != n) throw ParseError("bell basis: need exactly n Hadamard matrices");
  return bell::make_basis(std::move(mats), tol);
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in file: " + path);
  return j;
}

namespace {

void append_double(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_rec(std::string& out, const json& j, bool pretty, int indent) {
  const std::string pad(pretty ? 2 * (indent + 1) : 0, ' ');
  const std::string closing_pad(pretty ? 2 * indent : 0, ' ');
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); break;
    case json::value_t::number_float: append_double(out, j.get<double>()); break;
    case json::value_t::string: append_escaped(out, j.get<std::string>()); break;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        dump_rec(out, e, pretty, indent + 1);
      }
      if (pretty) out += '\n' + closing_pad;
      out += ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        append_escaped(out, it.key());
        out += pretty ? ": " : ":";
        dump_rec(out, it.value(), pretty, indent + 1);
      }
      if (pretty) out += '\n' + closing_pad;
      out += '}';
      break;
    }
    default: out += "null"; break;
  }
}

}  // namespace

std::string dump_json(const json& j, bool pretty) {
  std::string out;
  dump_rec(out, j, pretty, 0);
  return out;
}

void write_json(std::ostream& os, const json& j, bool pretty) {
  os << dump_json(j, pretty) << '\n';
}

}  // namespace qsc::io
