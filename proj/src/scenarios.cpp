// Copyright 2025-2026 The ovm developers
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

#include "ovm/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "ovm/generators.hpp"
#include "ovm/parallel.hpp"

namespace ovm {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
Report timed_report(const std::string& scenario, int trial, std::uint64_t seed,
                    Fn&& body) {
  Report report;
  report.scenario = scenario;
  report.trial = trial;
  report.seed = seed;
  report.pass = true;
  const auto start = Clock::now();
  try {
    body(report);
  } catch (const Error& e) {
    add_check(report, "exception", 1.0, 0.0,
              nlohmann::json{{"message", e.what()}, {"seed", seed}});
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

MatrixAlgebra random_small_algebra(Rng& rng, int max_ambient) {
  const int ambient = 1 + static_cast<int>(rng.integer(max_ambient));
  std::vector<int> blocks;
  int remaining = ambient;
  while (remaining > 0) {
    const int b = 1 + static_cast<int>(rng.integer(remaining));
    blocks.push_back(b);
    remaining -= b;
  }
  return MatrixAlgebra(blocks);
}

OperatorFunction random_unit_function(const FiniteMeasurableSpace& space,
                                      const MatrixAlgebra& algebra, Rng& rng) {
  std::vector<AlgebraElement> values;
  for (int x = 0; x < space.atom_count(); ++x) {
    values.push_back(sample_element(algebra, rng));
  }
  OperatorFunction f(space, algebra, std::move(values));
  const double sup = f.sup_norm();
  if (sup > 0.0) f = Complex(1.0 / sup, 0.0) * f;
  return f;
}

OperatorFunction random_psd_function(const FiniteMeasurableSpace& space,
                                     const MatrixAlgebra& algebra, Rng& rng) {
  std::vector<AlgebraElement> values;
  for (int x = 0; x < space.atom_count(); ++x) {
    values.push_back(sample_positive(algebra, rng));
  }
  return OperatorFunction(space, algebra, std::move(values));
}

double measure_basis_defect(const NonNegativeMeasure& a,
                            const NonNegativeMeasure& b) {
  double worst = 0.0;
  for (int x = 0; x < a.space().atom_count(); ++x) {
    for (int u = 0; u < a.domain().unit_count(); ++u) {
      worst = std::max(worst, operator_norm(a.basis_value(x, u) -
                                            b.basis_value(x, u)));
    }
  }
  return worst;
}

NonNegativeSpectralMeasure perturb_basis_entry(
    const NonNegativeSpectralMeasure& m, double bump) {
  std::vector<std::vector<AlgebraElement>> maps(m.space().atom_count());
  for (int x = 0; x < m.space().atom_count(); ++x) {
    for (int u = 0; u < m.domain().unit_count(); ++u) {
      AlgebraElement v = m.basis_value(x, u);
      if (x == 0 && u == 0) {
        ComplexMatrix noisy = v.matrix();
        noisy(0, 0) += Complex(bump, 0.0);
        v = element_unchecked(m.codomain(), std::move(noisy));
      }
      maps[x].push_back(v);
    }
  }
  return NonNegativeSpectralMeasure(NonNegativeMeasure(
      m.space(), m.domain(), m.codomain(), std::move(maps)));
}

}  // namespace

std::vector<Report> scenario_roundtrip(const ScenarioOptions& options) {
  const int trials = options.trials > 0 ? options.trials : 100;
  const Tolerance tol{options.tol_abs, options.tol_abs};
  return run_indexed<Report>(trials, options.workers, [&](int t) {
    const std::uint64_t seed = mix_seed(options.seed, t);
    return timed_report("roundtrip", t, seed, [&](Report& r) {
      const RoundTripDefects d = roundtrip_defect(seed, {}, tol);
      add_check(r, "rep-side-defect", d.rep_side, options.tol_roundtrip);
      add_check(r, "measure-side-defect", d.measure_side,
                options.tol_roundtrip);
    });
  });
}

std::vector<Report> scenario_multiplicativity(const ScenarioOptions& options) {
  const int pairs = options.trials > 0 ? options.trials : 200;
  const int measures = std::max(1, pairs / 10);
  const int pairs_per_measure = (pairs + measures - 1) / measures;
  const Tolerance tol{options.tol_abs, options.tol_abs};

  return run_indexed<Report>(measures, options.workers, [&](int j) {
    const std::uint64_t seed = mix_seed(options.seed, 7000 + j);
    return timed_report("multiplicativity", j, seed, [&](Report& r) {
      const Representation rho =
          generate_representation(random_blueprint(seed));
      const NonNegativeSpectralMeasure m = rep_to_measure(rho, tol);
      Rng rng(mix_seed(seed, 1));
      for (int i = 0; i < pairs_per_measure; ++i) {
        const OperatorFunction f =
            random_unit_function(m.space(), m.domain(), rng);
        const OperatorFunction g =
            random_unit_function(m.space(), m.domain(), rng);
        add_check(r, "multiplicativity", multiplicativity_defect(f, g, m),
                  options.tol_roundtrip);
      }
    });
  });
}

std::vector<Report> scenario_positivity(const ScenarioOptions& options) {
  const int functions = options.trials > 0 ? options.trials : 200;
  const int measures = std::max(2, functions / 10);
  const int functions_per_measure = (functions + measures - 1) / measures;
  const Tolerance tol{options.tol_abs, options.tol_abs};

  return run_indexed<Report>(measures, options.workers, [&](int j) {
    const std::uint64_t seed = mix_seed(options.seed, 9000 + j);
    return timed_report("positivity", j, seed, [&](Report& r) {
      Rng rng(seed);
      const MatrixAlgebra domain = random_small_algebra(rng, 3);
      const int atoms = 1 + static_cast<int>(rng.integer(3));
      // Alternate CP-generated and transpose-composed measures; the latter
      // are positive but not completely positive.
      const NonNegativeMeasure m =
          (j % 2 == 0)
              ? make_cp_measure(atoms, domain,
                                MatrixAlgebra::full(domain.ambient_dim() + 1),
                                2, seed)
              : make_transpose_measure(atoms, domain, seed);
      RankOneOptions search;
      search.seed = seed;
      const PositivityReport validation =
          validate_nonneg(m, PositivityPolicy::ChoiThenRankOne, tol, search);
      add_check(r, "validate-nonneg", validation.pass ? 0.0 : 1.0, 0.5,
                validation.pass
                    ? nlohmann::json(nullptr)
                    : nlohmann::json{{"worst_margin", validation.worst_margin}});

      for (int i = 0; i < functions_per_measure; ++i) {
        const OperatorFunction f =
            random_psd_function(m.space(), m.domain(), rng);
        const double margin = is_psd(integrate(f, m).matrix(), tol).margin;
        add_check(r, "integral-psd-margin", -margin, options.tol_abs);
      }
    });
  });
}

std::vector<Report> scenario_positive_family(const ScenarioOptions& options) {
  const int trials = options.trials > 0 ? options.trials : 50;
  const Tolerance tol{options.tol_abs, options.tol_abs};

  std::vector<Report> reports =
      run_indexed<Report>(trials, options.workers, [&](int t) {
        const std::uint64_t seed = mix_seed(options.seed, 4000 + t);
        return timed_report("positive-family-reconstruction", t, seed, [&](Report& r) {
          Rng rng(seed);
          const MatrixAlgebra domain = random_small_algebra(rng, 3);
          const int atoms = 1 + static_cast<int>(rng.integer(4));
          const NonNegativeMeasure m = make_cp_measure(
              atoms, domain, MatrixAlgebra::full(domain.ambient_dim()), 2,
              seed);
          const NonNegativeMeasure rebuilt = build_from_positive_family(
              family_from_measure(m), FamilyCheckOptions{8, seed}, tol);
          add_check(r, "rebuild-defect", measure_basis_defect(m, rebuilt),
                    1e-10);
        });
      });

  // Negative control: non-additive families must be rejected with witnesses.
  reports.push_back(timed_report(
      "positive-family-reconstruction", trials, mix_seed(options.seed, 4999),
      [&](Report& r) {
        const FiniteMeasurableSpace space(2);
        const MatrixAlgebra alg({2});
        const PositiveFamily quadratic{
            space, alg, alg, [space, alg](const AlgebraElement& a) {
              const AlgebraElement v = Complex(0.5, 0.0) * (a + a * a);
              return PovMeasure(
                  space, alg,
                  std::vector<AlgebraElement>(space.atom_count(), v));
            }};
        const CompatibilityReport check = check_positive_family(
            quadratic, FamilyCheckOptions{8, r.seed}, tol);
        add_check(r, "reject-non-additive", check.pass ? 1.0 : 0.0, 0.5,
                  nlohmann::json{{"additivity_defect",
                                  check.additivity_defect}});
        add_check(r, "witness-present",
                  check.witnesses.empty() ? 1.0 : 0.0, 0.5);
        bool threw = false;
        try {
          build_from_positive_family(quadratic, FamilyCheckOptions{8, r.seed},
                                     tol);
        } catch (const IncompatibleFamily&) {
          threw = true;
        }
        add_check(r, "build-throws", threw ? 0.0 : 1.0, 0.5);
      }));
  return reports;
}

std::vector<Report> scenario_projection_family(const ScenarioOptions& options) {
  const int trials = options.trials > 0 ? options.trials : 50;
  const Tolerance tol{options.tol_abs, options.tol_abs};

  return run_indexed<Report>(trials, options.workers, [&](int t) {
    const std::uint64_t seed = mix_seed(options.seed, 8000 + t);
    return timed_report("projection-family-reconstruction", t, seed, [&](Report& r) {
      const Representation rho =
          generate_representation(random_blueprint(seed));
      const NonNegativeSpectralMeasure m = rep_to_measure(rho, tol);
      const ProjectionFamily fam = projection_family_from_measure(m);
      const FamilyCheckOptions probe{6, seed};
      const NonNegativeSpectralMeasure rebuilt =
          build_from_projection_family(fam, probe, tol);
      add_check(r, "rebuild-defect", measure_basis_defect(m, rebuilt), 1e-9);

      const AlgebraElement a = sample_positive(m.domain(), mix_seed(seed, 3));
      const RiemannPathReport path =
          riemann_path_check(fam, a, {1, 10, 100, 1000}, probe, tol);
      for (const RiemannPathPoint& pt : path.points) {
        add_check(r, "riemann-defect-l" + std::to_string(pt.level), pt.defect,
                  pt.bound + options.tol_abs);
      }
    });
  });
}

std::vector<Report> scenario_jordan(const ScenarioOptions& options) {
  const int pairs = options.trials > 0 ? options.trials : 1000;
  const int batch = 100;
  const int batches = (pairs + batch - 1) / batch;
  const Tolerance tol{options.tol_abs, options.tol_abs};

  return run_indexed<Report>(batches, options.workers, [&](int b) {
    const std::uint64_t seed = mix_seed(options.seed, 600 + b);
    return timed_report("jordan-identity", b, seed, [&](Report& r) {
      Rng rng(seed);
      double worst = 0.0;
      std::uint64_t worst_index = 0;
      const int count = std::min(batch, pairs - b * batch);
      for (int i = 0; i < count; ++i) {
        const MatrixAlgebra alg = random_small_algebra(rng, 6);
        const AlgebraElement x = sample_hermitian(alg, rng);
        const AlgebraElement y = sample_hermitian(alg, rng);
        const auto [xp, xm] = jordan_parts(x, tol);
        const auto [yp, ym] = jordan_parts(y, tol);
        const auto [sp, sm] = jordan_parts(x + y, tol);
        const double defect =
            operator_norm((sp + xm + ym) - (sm + xp + yp));
        if (defect > worst) {
          worst = defect;
          worst_index = static_cast<std::uint64_t>(i);
        }
      }
      add_check(r, "jordan-identity-worst", worst, options.tol_abs,
                worst > options.tol_abs
                    ? nlohmann::json{{"pair_index", worst_index},
                                     {"seed", seed}}
                    : nlohmann::json(nullptr));
    });
  });
}

std::vector<Report> scenario_semivariation(const ScenarioOptions& options) {
  std::vector<Report> reports;

  for (int k = 1; k <= 3; ++k) {
    reports.push_back(timed_report(
        "semivariation", k - 1, mix_seed(options.seed, 300 + k),
        [&](Report& r) {
          const NonNegativeMeasure m =
              make_identity_measure(k, MatrixAlgebra({2}));
          const SemivariationBounds b = semivariation(m, {});
          add_check(r, "identity-lower-bound",
                    static_cast<double>(k) - b.lower, 1e-6);
          add_check(r, "identity-upper-exact",
                    std::abs(b.upper - 4.0 * k), 1e-12);
          add_check(r, "order", b.lower - b.upper, 1e-6);
        }));
  }

  const int random_instances = options.trials > 0 ? options.trials : 20;
  std::vector<Report> random_reports =
      run_indexed<Report>(random_instances, options.workers, [&](int t) {
        const std::uint64_t seed = mix_seed(options.seed, 350 + t);
        return timed_report("semivariation", 3 + t, seed, [&](Report& r) {
          Rng rng(seed);
          const MatrixAlgebra domain = random_small_algebra(rng, 2);
          const int atoms = 1 + static_cast<int>(rng.integer(3));
          const NonNegativeMeasure m = make_cp_measure(
              atoms, domain, MatrixAlgebra::full(domain.ambient_dim()), 2,
              seed);
          SemivariationOptions sv;
          sv.seed = seed;
          const SemivariationBounds b = semivariation(m, sv);
          add_check(r, "order", b.lower - b.upper, 1e-6,
                    nlohmann::json{{"lower", b.lower}, {"upper", b.upper}});
        });
      });
  reports.insert(reports.end(), random_reports.begin(), random_reports.end());
  return reports;
}

std::vector<Report> scenario_convergence(const ScenarioOptions& options) {
  const int trials = options.trials > 0 ? options.trials : 50;
  const Tolerance tol{options.tol_abs, options.tol_abs};

  return run_indexed<Report>(trials, options.workers, [&](int t) {
    const std::uint64_t seed = mix_seed(options.seed, 500 + t);
    return timed_report("convergence", t, seed, [&](Report& r) {
      Rng rng(seed);
      const int atoms = 2 + static_cast<int>(rng.integer(3));
      const FiniteMeasurableSpace space(atoms);
      const MatrixAlgebra cod = random_small_algebra(rng, 3);
      std::vector<AlgebraElement> values;
      for (int x = 0; x < atoms; ++x) {
        values.push_back(sample_positive(cod, rng));
      }
      const PovMeasure e(space, cod, values);

      std::vector<Complex> fv;
      for (int x = 0; x < atoms; ++x) {
        fv.push_back(Complex(2.0 * rng.uniform(), 0.0));
      }
      const ScalarFunction f(space, fv);
      const int steps = 4 + t % 5;
      std::vector<ScalarFunction> seq;
      for (int n = 1; n <= steps; ++n) {
        seq.push_back(Complex(1.0 - 1.0 / n, 0.0) * f);
      }
      const AlgebraElement bound = integrate_scalar_pov(f, e);
      const MonotoneReport m =
          monotone_convergence_check(seq, e, bound, f, tol);
      // Exact linear-extension prediction: || int f dE || / n_final.
      const double predicted = operator_norm(bound) / steps;
      add_check(r, "deviation-vs-prediction",
                std::abs(m.final_deviation - predicted), options.tol_abs);
    });
  });
}

std::vector<Report> scenario_negative_controls(const ScenarioOptions& options) {
  const Tolerance tol{options.tol_abs, options.tol_abs};
  std::vector<Report> reports;

  reports.push_back(timed_report(
      "negative-controls", 0, mix_seed(options.seed, 900), [&](Report& r) {
        // Spectral measure with a non-projection atom value.
        const NonNegativeSpectralMeasure good(
            make_embedding_spectral_measure(2, MatrixAlgebra({2}), r.seed));
        const NonNegativeSpectralMeasure bad = perturb_basis_entry(good, 0.2);
        const NonNegSpectralReport v = validate_nonneg_spectral(bad, {}, tol);
        add_check(r, "reject-non-projection-atom", v.pass ? 1.0 : 0.0, 0.5,
                  nlohmann::json{{"spectral_defect", v.spectral_defect},
                                 {"witness_atom", v.spectral_witness_atom}});
        add_check(r, "witness-present",
                  v.spectral_witness_atom >= 0 ? 0.0 : 1.0, 0.5);
      }));

  reports.push_back(timed_report(
      "negative-controls", 1, mix_seed(options.seed, 901), [&](Report& r) {
        const FiniteMeasurableSpace space(2);
        const MatrixAlgebra alg({2});
        const PositiveFamily quadratic{
            space, alg, alg, [space, alg](const AlgebraElement& a) {
              const AlgebraElement v = Complex(0.5, 0.0) * (a + a * a);
              return PovMeasure(
                  space, alg,
                  std::vector<AlgebraElement>(space.atom_count(), v));
            }};
        const CompatibilityReport check = check_positive_family(
            quadratic, FamilyCheckOptions{8, r.seed}, tol);
        add_check(r, "reject-non-additive-family", check.pass ? 1.0 : 0.0,
                  0.5,
                  nlohmann::json{{"additivity_defect",
                                  check.additivity_defect}});
        add_check(r, "witness-present",
                  check.witnesses.empty() ? 1.0 : 0.0, 0.5);
      }));

  reports.push_back(timed_report(
      "negative-controls", 2, mix_seed(options.seed, 902), [&](Report& r) {
        Representation rho =
            generate_representation(random_blueprint(r.seed));
        std::vector<std::vector<AlgebraElement>> action(
            rho.space().atom_count());
        for (int x = 0; x < rho.space().atom_count(); ++x) {
          for (int u = 0; u < rho.domain().unit_count(); ++u) {
            action[x].push_back(Complex(2.0, 0.0) * rho.basis_action(x, u));
          }
        }
        Representation doubled(rho.space(), rho.domain(), rho.codomain(),
                               std::move(action));
        const CertificationReport c = certify_representation(doubled);
        add_check(r, "reject-scaled-representation", c.pass ? 1.0 : 0.0, 0.5,
                  nlohmann::json{{"unitality_defect", c.unitality_defect}});
      }));

  reports.push_back(timed_report(
      "negative-controls", 3, mix_seed(options.seed, 903), [&](Report& r) {
        const FiniteMeasurableSpace space(1);
        const MatrixAlgebra domain = MatrixAlgebra::full(2);
        RepresentationBlueprint bp = identity_blueprint(space, domain);
        Rng rng(r.seed);
        bp.intertwiner = random_unitary(rng, bp.total_dim());
        const Representation rho = generate_representation(bp);
        std::vector<std::vector<AlgebraElement>> action(1);
        for (int u = 0; u < domain.unit_count(); ++u) {
          action[0].push_back(element_unchecked(
              rho.codomain(), rho.basis_action(0, u).matrix().transpose()));
        }
        Representation transposed(space, domain, rho.codomain(),
                                  std::move(action));
        const CertificationReport c = certify_representation(transposed);
        add_check(r, "reject-transposed-representation", c.pass ? 1.0 : 0.0,
                  0.5,
                  nlohmann::json{
                      {"multiplicativity_defect", c.multiplicativity_defect}});
      }));

  reports.push_back(timed_report(
      "negative-controls", 4, mix_seed(options.seed, 904), [&](Report& r) {
        const NonNegativeSpectralMeasure good(
            make_embedding_spectral_measure(2, MatrixAlgebra({2}), r.seed));
        const NonNegativeSpectralMeasure noisy =
            perturb_basis_entry(good, 1e-3);
        const NonNegSpectralReport v = validate_nonneg_spectral(noisy, {}, tol);
        add_check(r, "reject-perturbed-measure", v.pass ? 1.0 : 0.0, 0.5,
                  nlohmann::json{{"spectral_defect", v.spectral_defect}});
        bool threw = false;
        try {
          measure_to_rep(noisy, tol);
        } catch (const InvalidMeasure&) {
          threw = true;
        }
        add_check(r, "measure-to-rep-throws", threw ? 0.0 : 1.0, 0.5);
      }));

  return reports;
}

std::vector<Report> scenario_full_suite(const ScenarioOptions& options) {
  std::vector<Report> all;
  const auto append = [&all](std::vector<Report> batch) {
    all.insert(all.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  };
  append(scenario_roundtrip(options));
  ScenarioOptions defaults = options;
  defaults.trials = 0;  // scenario-default sizes for the remaining batches
  append(scenario_multiplicativity(defaults));
  append(scenario_positivity(defaults));
  append(scenario_positive_family(defaults));
  append(scenario_projection_family(defaults));
  append(scenario_jordan(defaults));
  append(scenario_semivariation(defaults));
  append(scenario_convergence(defaults));
  append(scenario_negative_controls(defaults));
  return all;
}

namespace {

void check_positivity_report(Report& r, const PositivityReport& validation,
                             double tol_abs) {
  double hermiticity = 0.0;
  for (const AtomPositivity& atom : validation.atoms) {
    hermiticity = std::max(hermiticity, atom.hermiticity_defect);
  }
  add_check(r, "hermiticity-preservation", hermiticity, tol_abs);
  nlohmann::json witness(nullptr);
  if (!validation.pass) {
    for (const AtomPositivity& atom : validation.atoms) {
      if (atom.status == AtomPositivityStatus::Fail ||
          atom.status == AtomPositivityStatus::Inconclusive) {
        witness = nlohmann::json{{"atom", atom.atom}};
        if (atom.witness.has_value()) {
          nlohmann::json vec = nlohmann::json::array();
          for (Eigen::Index i = 0; i < atom.witness->vector.size(); ++i) {
            vec.push_back({atom.witness->vector[i].real(),
                           atom.witness->vector[i].imag()});
          }
          witness["block"] = atom.witness->block;
          witness["vector"] = vec;
          witness["margin"] = atom.witness->margin;
        }
        break;
      }
    }
  }
  add_check(r, "positivity",
            validation.pass ? 0.0 : std::max(1e-300, -validation.worst_margin),
            0.0, witness);
}

}  // namespace

std::vector<Report> scenario_validate_file(const std::string& path,
                                           const ScenarioOptions& options) {
  const Tolerance tol{options.tol_abs, options.tol_abs};
  const InstanceFile instance = load_instance(resolve_input_path(path));

  Report report = timed_report(
      "validate", 0, options.seed, [&](Report& r) {
        switch (instance.kind) {
          case InstanceKind::Measure: {
            RankOneOptions search;
            search.seed = options.seed;
            search.workers = options.workers;
            const PositivityReport v = validate_nonneg(
                *instance.measure, PositivityPolicy::ChoiThenRankOne, tol,
                search);
            check_positivity_report(r, v, options.tol_abs);
            break;
          }
          case InstanceKind::SpectralMeasure: {
            const NonNegativeSpectralMeasure m(*instance.measure);
            NonNegSpectralOptions opts;
            opts.seed = options.seed;
            const NonNegSpectralReport v =
                validate_nonneg_spectral(m, opts, tol);
            add_check(r, "spectral-defect", v.spectral_defect,
                      tol.threshold(1.0),
                      v.spectral_defect > tol.threshold(1.0)
                          ? nlohmann::json{{"atom", v.spectral_witness_atom}}
                          : nlohmann::json(nullptr));
            add_check(r, "product-law-defect", v.product_defect,
                      tol.threshold(1.0));
            check_positivity_report(r, v.positivity, options.tol_abs);
            break;
          }
          case InstanceKind::Representation: {
            Representation rho = *instance.representation;
            const CertificationReport c =
                certify_representation(rho, 8, options.seed, tol);
            add_check(r, "unitality", c.unitality_defect, tol.threshold(1.0));
            add_check(r, "multiplicativity", c.multiplicativity_defect,
                      tol.threshold(1.0));
            add_check(r, "star-preservation", c.star_defect,
                      tol.threshold(1.0));
            break;
          }
          case InstanceKind::FamilyProbeSet: {
            const FamilyProbeInstance& probe = *instance.probe;
            const FamilyCheckOptions opts{probe.samples, options.seed};
            CompatibilityReport c;
            if (probe.is_projection_side()) {
              c = check_projection_family(probe.projection_family(), opts,
                                          tol);
              add_check(r, "linear-relation-defect", c.linear_relation_defect,
                        tol.threshold(1.0));
              add_check(r, "product-law-defect", c.product_law_defect,
                        tol.threshold(1.0));
            } else {
              c = check_positive_family(probe.positive_family(), opts, tol);
              add_check(r, "additivity-defect", c.additivity_defect,
                        tol.threshold(1.0));
              add_check(r, "homogeneity-defect", c.homogeneity_defect,
                        tol.threshold(1.0));
            }
            add_check(r, "measure-validity-defect", c.measure_defect,
                      tol.threshold(1.0));
            break;
          }
        }
      });
  return {std::move(report)};
}

std::vector<Report> scenario_build_from_family_file(
    const std::string& path, const ScenarioOptions& options) {
  const Tolerance tol{options.tol_abs, options.tol_abs};
  const InstanceFile instance = load_instance(resolve_input_path(path));

  Report report = timed_report(
      "build-from-family", 0, options.seed, [&](Report& r) {
        switch (instance.kind) {
          case InstanceKind::Measure: {
            const NonNegativeMeasure& m = *instance.measure;
            const NonNegativeMeasure rebuilt = build_from_positive_family(
                family_from_measure(m), FamilyCheckOptions{8, options.seed},
                tol);
            add_check(r, "rebuild-defect", measure_basis_defect(m, rebuilt),
                      1e-10);
            break;
          }
          case InstanceKind::SpectralMeasure: {
            const NonNegativeSpectralMeasure m(*instance.measure);
            const NonNegativeSpectralMeasure rebuilt =
                build_from_projection_family(
                    projection_family_from_measure(m),
                    FamilyCheckOptions{6, options.seed}, tol);
            add_check(r, "rebuild-defect", measure_basis_defect(m, rebuilt),
                      options.tol_roundtrip);
            break;
          }
          case InstanceKind::FamilyProbeSet: {
            const FamilyProbeInstance& probe = *instance.probe;
            const FamilyCheckOptions opts{probe.samples, options.seed};
            if (probe.is_projection_side()) {
              const NonNegativeSpectralMeasure built =
                  build_from_projection_family(probe.projection_family(),
                                               opts, tol);
              const NonNegSpectralReport v =
                  validate_nonneg_spectral(built, {}, tol);
              add_check(r, "built-measure-valid", v.pass ? 0.0 : 1.0, 0.5);
            } else {
              const NonNegativeMeasure built = build_from_positive_family(
                  probe.positive_family(), opts, tol);
              RankOneOptions search;
              search.seed = options.seed;
              const PositivityReport v = validate_nonneg(
                  built, PositivityPolicy::ChoiThenRankOne, tol, search);
              add_check(r, "built-measure-valid", v.pass ? 0.0 : 1.0, 0.5);
            }
            break;
          }
          case InstanceKind::Representation:
            throw BadConfig("build-from-family expects a measure or "
                            "family-probe-set instance");
        }
      });
  return {std::move(report)};
}

std::vector<Report> scenario_semivariation_file(
    const std::string& path, const ScenarioOptions& options) {
  const InstanceFile instance = load_instance(resolve_input_path(path));
  if (!instance.measure.has_value()) {
    throw BadConfig("semivariation expects a measure instance");
  }
  Report report = timed_report(
      "semivariation", 0, options.seed, [&](Report& r) {
        SemivariationOptions sv;
        sv.seed = options.seed;
        const SemivariationBounds b = semivariation(*instance.measure, sv);
        add_check(r, "order", b.lower - b.upper, 1e-6,
                  nlohmann::json{{"lower", b.lower}, {"upper", b.upper}});
      });
  return {std::move(report)};
}

InstanceFile generate_instance(const GenerateConfig& config) {
  InstanceFile out;
  out.kind = config.kind;
  out.seed = config.seed;

  const MatrixAlgebra domain(config.domain_blocks);
  const FiniteMeasurableSpace space(config.atoms);

  switch (config.kind) {
    case InstanceKind::Representation: {
      std::vector<int> multiplicities = config.multiplicities;
      if (multiplicities.empty()) multiplicities.assign(config.atoms, 1);
      if (static_cast<int>(multiplicities.size()) != config.atoms) {
        throw BadConfig("generate: one multiplicity per atom required");
      }
      RepresentationBlueprint bp{space, domain, multiplicities,
                                 ComplexMatrix()};
      Rng rng(config.seed);
      bp.intertwiner = random_unitary(rng, bp.total_dim());
      out.representation = generate_representation(bp);
      out.description = "seeded representation";
      break;
    }
    case InstanceKind::Measure: {
      const MatrixAlgebra codomain =
          config.codomain_blocks.empty()
              ? MatrixAlgebra::full(domain.ambient_dim())
              : MatrixAlgebra(config.codomain_blocks);
      out.measure = make_cp_measure(config.atoms, domain, codomain,
                                    config.kraus_terms, config.seed);
      out.description = "seeded completely positive measure";
      break;
    }
    case InstanceKind::SpectralMeasure: {
      std::vector<int> multiplicities = config.multiplicities;
      if (multiplicities.empty()) multiplicities.assign(config.atoms, 1);
      RepresentationBlueprint bp{space, domain, multiplicities,
                                 ComplexMatrix()};
      Rng rng(config.seed);
      bp.intertwiner = random_unitary(rng, bp.total_dim());
      out.measure =
          NonNegativeMeasure(rep_to_measure(generate_representation(bp)));
      out.description = "seeded representation-generated spectral measure";
      break;
    }
    case InstanceKind::FamilyProbeSet: {
      MatrixAlgebra codomain = domain;
      if (!config.codomain_blocks.empty()) {
        codomain = MatrixAlgebra(config.codomain_blocks);
      } else if (config.family == "conjugation") {
        codomain = MatrixAlgebra::full(domain.ambient_dim());
      } else if (config.family == "embedding") {
        codomain = MatrixAlgebra::full(config.atoms * domain.ambient_dim());
      }
      out.probe = FamilyProbeInstance{space,  domain,        codomain,
                                      config.family, config.seed,
                                      config.samples};
      out.description = "family probe set";
      break;
    }
  }
  return out;
}

}  // namespace ovm
