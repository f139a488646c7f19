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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsc/json_io.hpp"
#include "qsc/schmidt_correlated.hpp"

namespace {

using qsc::io::json;

struct RunConfig {
  double tol_eps = 1e-9;
  std::uint64_t seed = 0;
  std::string output = "json";

  qsc::Tolerance tolerance() const { return qsc::Tolerance(tol_eps); }
  bool pretty() const { return output == "pretty"; }
};

json config_json(const RunConfig& cfg) {
  return json{{"tol", cfg.tol_eps}, {"seed", cfg.seed}, {"output", cfg.output}};
}

void emit(const RunConfig& cfg, const std::string& command, json result, json residuals) {
  const json envelope{{"command", command},
                      {"config", config_json(cfg)},
                      {"result", std::move(result)},
                      {"residuals", std::move(residuals)}};
  qsc::io::write_json(std::cout, envelope, cfg.pretty());
}

json witness_pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& w) {
  if (!w) return nullptr;
  return json::array({w->first + 1, w->second + 1});  // 1-based labels in the file formats
}

void run_schmidt(const RunConfig& cfg, const std::string& file) {
  const qsc::Tolerance tol = cfg.tolerance();
  const qsc::PureState psi = qsc::io::pure_state_from_json(qsc::io::load_file(file), tol);
  const qsc::SchmidtForm form = qsc::schmidt_decompose(psi, tol);

  double residual = 0.0;
  const qsc::PureState rebuilt = qsc::schmidt_reconstruct(form, tol);
  for (std::size_t i = 0; i < psi.amplitudes().size(); ++i)
    residual += std::norm(rebuilt.amplitudes()[i] - psi.amplitudes()[i]);
  residual = std::sqrt(residual);

  emit(cfg, "schmidt",
       json{{"coefficients", form.coefficients},
            {"basis_A", qsc::io::to_json(form.basis_a)},
            {"basis_B", qsc::io::to_json(form.basis_b)}},
       json{{"reconstruction", residual}});
}

json detect_result(const RunConfig& cfg, const qsc::DensityMatrix& rho,
                   std::optional<qsc::SchmidtCorrelatedForm>& form, json& residuals) {
  const qsc::Tolerance tol = cfg.tolerance();
  form = qsc::detect_schmidt_correlated(rho, tol, cfg.seed);
  if (!form) {
    const qsc::Ensemble ens = qsc::spectral_ensemble(rho, tol);
    std::vector<qsc::ComplexMatrix> reps;
    for (const auto& s : ens.states()) reps.push_back(qsc::matrix_rep(s));
    const auto violation = qsc::weak_svd::first_weak_violation(reps, tol);
    residuals = json::object();
    if (violation) {
      residuals["weak_criterion_violation"] = violation->violation;
      residuals["violating_triple"] =
          json::array({violation->triple[0] + 1, violation->triple[1] + 1, violation->triple[2] + 1});
    }
    return json{{"schmidt_correlated", false}, {"U", nullptr}, {"V", nullptr}, {"C", nullptr}};
  }

  const qsc::Ensemble ens = qsc::spectral_ensemble(rho, tol);
  std::vector<qsc::ComplexMatrix> reps;
  for (const auto& s : ens.states()) reps.push_back(qsc::matrix_rep(s));
  qsc::weak_svd::WeakSvdResult witness;
  witness.u = form->u;
  witness.v = form->v;
  const double diag_residual = qsc::weak_svd::residual(reps, witness);
  const double rebuild_residual =
      qsc::distance(qsc::to_density_matrix(*form).matrix(), rho.matrix());
  residuals = json{{"weak_svd", diag_residual}, {"reconstruction", rebuild_residual}};
  return json{{"schmidt_correlated", true},
              {"U", qsc::io::to_json(form->u)},
              {"V", qsc::io::to_json(form->v)},
              {"C", qsc::io::to_json(form->c)}};
}

void run_detect(const RunConfig& cfg, const std::string& file) {
  const qsc::DensityMatrix rho =
      qsc::io::density_from_json(qsc::io::load_file(file), cfg.tolerance());
  std::optional<qsc::SchmidtCorrelatedForm> form;
  json residuals = json::object();
  json result = detect_result(cfg, rho, form, residuals);
  emit(cfg, "detect", std::move(result), std::move(residuals));
}

void run_separable(const RunConfig& cfg, const std::string& file) {
  const qsc::Tolerance tol = cfg.tolerance();
  const qsc::DensityMatrix rho = qsc::io::density_from_json(qsc::io::load_file(file), tol);
  std::optional<qsc::SchmidtCorrelatedForm> form;
  json residuals = json::object();
  json result = detect_result(cfg, rho, form, residuals);

  const qsc::PptVerdict ppt = qsc::is_ppt(rho, tol);
  result["ppt"] = json{{"verdict", ppt.ppt}, {"min_eigenvalue", ppt.min_eigenvalue}};

  if (!form) {
    // Without the Schmidt-correlated structure PPT is only necessary.
    result["separable"] = nullptr;
    result["necessary_condition_only"] = true;
    if (!ppt.ppt) result["separable"] = false;
    emit(cfg, "separable", std::move(result), std::move(residuals));
    return;
  }

  const qsc::ScSeparability sep = qsc::is_separable_sc(*form, tol);
  const bool ortho = qsc::orthogonality_check(qsc::spectral_ensemble(rho, tol), form->u, form->v, tol);
  result["separable"] = sep.separable;
  result["witness"] = witness_pair_json(sep.witness);
  result["orthogonality"] = ortho;
  result["criteria_agree"] = (sep.separable == ppt.ppt) && (sep.separable == ortho);
  residuals["max_off_diagonal"] = sep.max_off_diagonal;
  emit(cfg, "separable", std::move(result), std::move(residuals));
}

void run_weak_svd(const RunConfig& cfg, const std::string& file) {
  const qsc::Tolerance tol = cfg.tolerance();
  const qsc::Ensemble ens = qsc::io::ensemble_from_json(qsc::io::load_file(file), tol);
  std::vector<qsc::ComplexMatrix> reps;
  for (const auto& s : ens.states()) reps.push_back(qsc::matrix_rep(s));

  json result{{"strong", qsc::weak_svd::check_strong(reps, tol)},
              {"weak", qsc::weak_svd::check_weak(reps, tol)},
              {"weak_alt", qsc::weak_svd::check_weak_alt(reps, tol)},
              {"diagonalization", nullptr}};
  json residuals = json::object();
  if (result["weak"].get<bool>()) {
    const qsc::weak_svd::WeakSvdResult dec = qsc::weak_svd::diagonalize(reps, tol, cfg.seed);
    json diagonals = json::array();
    for (const auto& d : dec.diagonals) {
      json row = json::array();
      for (const auto& z : d) row.push_back(qsc::io::to_json(z));
      diagonals.push_back(std::move(row));
    }
    result["diagonalization"] = json{{"U", qsc::io::to_json(dec.u)},
                                     {"V", qsc::io::to_json(dec.v)},
                                     {"diagonals", std::move(diagonals)}};
    residuals["weak_svd"] = qsc::weak_svd::residual(reps, dec);
  } else {
    const auto violation = qsc::weak_svd::first_weak_violation(reps, tol);
    if (violation) {
      residuals["weak_criterion_violation"] = violation->violation;
      residuals["violating_triple"] =
          json::array({violation->triple[0] + 1, violation->triple[1] + 1, violation->triple[2] + 1});
    }
  }
  emit(cfg, "weak-svd", std::move(result), std::move(residuals));
}

json hadamard_residuals(const qsc::ComplexMatrix& h) {
  const std::size_t n = h.rows();
  qsc::ComplexMatrix gram = h * h.adjoint();
  for (std::size_t i = 0; i < n; ++i) gram(i, i) -= static_cast<double>(n);
  double dev = 0.0;
  for (const auto& z : h.entries()) dev = std::max(dev, std::abs(std::abs(z) - 1.0));
  return json{{"gram", gram.frobenius_norm()}, {"max_modulus_deviation", dev}};
}

void run_hadamard_verify(const RunConfig& cfg, const std::string& file) {
  const qsc::ComplexMatrix h = qsc::io::hadamard_from_json(qsc::io::load_file(file));
  emit(cfg, "hadamard verify",
       json{{"n", h.rows()}, {"hadamard", qsc::hadamard::is_hadamard(h, cfg.tolerance())}},
       hadamard_residuals(h));
}

void run_hadamard_fourier(const RunConfig& cfg, std::size_t n, bool angles) {
  const qsc::ComplexMatrix h = qsc::hadamard::fourier(n);
  emit(cfg, "hadamard fourier", qsc::io::hadamard_to_json(h, angles), hadamard_residuals(h));
}

void run_hadamard_family(const RunConfig& cfg, double a, bool angles) {
  const qsc::ComplexMatrix h = qsc::hadamard::family_n4(a);
  emit(cfg, "hadamard family-n4", qsc::io::hadamard_to_json(h, angles), hadamard_residuals(h));
}

void run_hadamard_equiv(const RunConfig& cfg, const std::string& f1, const std::string& f2) {
  const qsc::ComplexMatrix h1 = qsc::io::hadamard_from_json(qsc::io::load_file(f1));
  const qsc::ComplexMatrix h2 = qsc::io::hadamard_from_json(qsc::io::load_file(f2));
  const qsc::hadamard::EquivalenceResult r = qsc::hadamard::equivalent(h1, h2, cfg.tolerance());

  json result{{"witness", nullptr}};
  json residuals = json::object();
  switch (r.verdict) {
    case qsc::hadamard::EquivalenceVerdict::yes: result["verdict"] = "YES"; break;
    case qsc::hadamard::EquivalenceVerdict::no: result["verdict"] = "NO"; break;
    case qsc::hadamard::EquivalenceVerdict::unknown: result["verdict"] = "UNKNOWN"; break;
  }
  if (r.witness) {
    result["witness"] = json{{"D1", qsc::io::to_json(r.witness->d1)},
                             {"P1", qsc::io::to_json(r.witness->p1)},
                             {"P2", qsc::io::to_json(r.witness->p2)},
                             {"D2", qsc::io::to_json(r.witness->d2)}};
    residuals["witness"] = r.witness_residual;
  }
  emit(cfg, "hadamard equiv", std::move(result), std::move(residuals));
}

void emit_bell(const RunConfig& cfg, const std::string& command, const qsc::bell::BellBasis& basis) {
  json result = qsc::io::to_json(basis);
  json states = json::array();
  for (const auto& s : basis.states) states.push_back(qsc::io::to_json(s));
  result["states"] = std::move(states);
  emit(cfg, command, std::move(result),
       json{{"gram", qsc::bell::gram_residual(basis)},
            {"max_entanglement", qsc::bell::max_entanglement_residual(basis)}});
}

void run_bell_gen(const RunConfig& cfg, const std::string& file) {
  const qsc::bell::BellBasis basis =
      qsc::io::bell_basis_from_json(qsc::io::load_file(file), cfg.tolerance());
  emit_bell(cfg, "bell gen", basis);
}

void run_bell_weyl(const RunConfig& cfg, std::size_t n) {
  emit_bell(cfg, "bell weyl", qsc::bell::weyl_basis(n));
}

void run_bell_decompose(const RunConfig& cfg, const std::string& rho_file,
                        const std::string& basis_file) {
  const qsc::Tolerance tol = cfg.tolerance();
  const qsc::DensityMatrix rho = qsc::io::density_from_json(qsc::io::load_file(rho_file), tol);
  const qsc::bell::BellBasis basis =
      qsc::io::bell_basis_from_json(qsc::io::load_file(basis_file), tol);
  const qsc::bell::BellDecomposition dec = qsc::bell::decompose(rho, basis);

  const std::size_t n = basis.n;
  json table = json::array();
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      table.push_back(json{{"l", a % n + 1},
                           {"k", a / n + 1},
                           {"m", b % n + 1},
                           {"j", b / n + 1},
                           {"value", qsc::io::to_json(dec.coefficients(a, b))}});
  const double residual = qsc::distance(qsc::bell::reconstruct(dec, basis).matrix(), rho.matrix());
  emit(cfg, "bell decompose", json{{"n", n}, {"coefficients", std::move(table)}},
       json{{"reconstruction", residual}});
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Structural analysis of bipartite quantum states: weak-SVD simultaneous "
               "diagonalization, Schmidt-correlated detection, separability, complex Hadamard "
               "matrices and generalized Bell bases."};
  app.require_subcommand(1);
  app.add_option("--tol", cfg.tol_eps, "absolute tolerance floor (Frobenius-relative policy)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all randomized constructions")
      ->capture_default_str();
  app.add_option("--output", cfg.output, "output style")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();

  std::string state_file, rho_file, ens_file, h1_file, h2_file, basis_file;
  std::size_t order = 0;
  double family_a = 0.0;
  bool angles = false;

  CLI::App* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition of a pure state");
  schmidt->add_option("state-file", state_file)->required();

  CLI::App* detect = app.add_subcommand("detect", "Schmidt-correlated detection for a mixed state");
  detect->add_option("rho-file", rho_file)->required();

  CLI::App* separable = app.add_subcommand("separable", "separability analysis of a mixed state");
  separable->add_option("rho-file", rho_file)->required();

  CLI::App* weak = app.add_subcommand("weak-svd", "simultaneous diagonalization of an ensemble");
  weak->add_option("ensemble-file", ens_file)->required();

  CLI::App* had = app.add_subcommand("hadamard", "complex Hadamard matrix tools");
  had->require_subcommand(1);
  CLI::App* had_verify = had->add_subcommand("verify", "test a matrix file");
  had_verify->add_option("file", h1_file)->required();
  CLI::App* had_fourier = had->add_subcommand("fourier", "emit the Fourier matrix F_n");
  had_fourier->add_option("n", order)->required()->check(CLI::PositiveNumber);
  had_fourier->add_flag("--angles", angles, "also emit the phase-angle form");
  CLI::App* had_family = had->add_subcommand("family-n4", "emit the order-4 family member");
  had_family->add_option("a", family_a)->required();
  had_family->add_flag("--angles", angles, "also emit the phase-angle form");
  CLI::App* had_equiv = had->add_subcommand("equiv", "equivalence of two Hadamard files");
  had_equiv->add_option("file1", h1_file)->required();
  had_equiv->add_option("file2", h2_file)->required();

  CLI::App* bell_cmd = app.add_subcommand("bell", "generalized Bell basis tools");
  bell_cmd->require_subcommand(1);
  CLI::App* bell_gen = bell_cmd->add_subcommand("gen", "build a basis from a Hadamard list file");
  bell_gen->add_option("basis-file", basis_file)->required();
  CLI::App* bell_weyl = bell_cmd->add_subcommand("weyl", "the Weyl basis of order n");
  bell_weyl->add_option("n", order)->required()->check(CLI::PositiveNumber);
  CLI::App* bell_dec = bell_cmd->add_subcommand("decompose", "expand a state in a Bell basis");
  bell_dec->add_option("rho-file", rho_file)->required();
  bell_dec->add_option("basis-file", basis_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*schmidt) run_schmidt(cfg, state_file);
    else if (*detect) run_detect(cfg, rho_file);
    else if (*separable) run_separable(cfg, rho_file);
    else if (*weak) run_weak_svd(cfg, ens_file);
    else if (*had_verify) run_hadamard_verify(cfg, h1_file);
    else if (*had_fourier) run_hadamard_fourier(cfg, order, angles);
    else if (*had_family) run_hadamard_family(cfg, family_a, angles);
    else if (*had_equiv) run_hadamard_equiv(cfg, h1_file, h2_file);
    else if (*bell_gen) run_bell_gen(cfg, basis_file);
    else if (*bell_weyl) run_bell_weyl(cfg, order);
    else if (*bell_dec) run_bell_decompose(cfg, rho_file, basis_file);
  } catch (const qsc::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const qsc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
