#include "hbarkit/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hbarkit/bargmann.hpp"
#include "hbarkit/classical.hpp"
#include "hbarkit/cli.hpp"
#include "hbarkit/henon_heiles.hpp"
#include "hbarkit/normal_form.hpp"
#include "hbarkit/parser.hpp"
#include "hbarkit/perturbation.hpp"
#include "hbarkit/random_ops.hpp"

namespace hbarkit {

namespace {

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  // Records a failed sub-check; the first few are kept in the detail text.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail << what;
    else if (failures_ < 3) detail << "; " << what;
    passed = false;
    ++failures_;
  }

 private:
  int failures_ = 0;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 = none
  std::function<void(Verdict&)> body;
};

const QOperator& quartic() {
  static const QOperator q = parse_operator_expr("(a+ad)^4");
  return q;
}

void trace_borel(Verdict& v) {
  const BorelTrace b = borel_hbar(trace_series(QOperator::number(), 14));
  for (int k = 1; k <= 12; ++k)
    v.require(b.transform.value.coefficient(k) == k, "coefficient of h^" + std::to_string(k));
  v.detail << "B Tr(a^+a) = h + 2h^2 + ... + 12h^12 + ...";
}

void pairing_norm(Verdict& v) {
  for (unsigned j = 0; j <= 15; ++j) {
    const auto zj = BargmannVector::basis(j);
    v.require(inner_product(zj, zj) == HbarScalar::monomial(Rational(factorial(j)), static_cast<int>(j)),
              "<z^" + std::to_string(j) + ", z^" + std::to_string(j) + ">");
  }
}

void harmonic_spectrum(Verdict& v) {
  for (unsigned n = 0; n <= 50; ++n)
    v.require(apply_operator(QOperator::number(), BargmannVector::basis(n)) ==
                  BargmannVector::basis(n, HbarScalar::monomial(static_cast<long>(n), 1)),
              "level " + std::to_string(n));
}

void solvable_perturbation(Verdict& v) {
  const QOperator p = parse_operator_expr("a+ad");
  for (unsigned n = 0; n <= 5; ++n) {
    const EigenJet jet = rs_expand(p, n, 6);
    const std::string at = " at n=" + std::to_string(n);
    v.require(jet.energy[0] == HbarScalar::monomial(static_cast<long>(n), 1), "E0" + at);
    for (unsigned k = 1; k <= 6; ++k) v.require(jet.energy[k] == (k == 2 ? HbarScalar(-1) : HbarScalar{}), "E" + std::to_string(k) + at);
    const EigenJet rel = relative_substitute(jet);
    v.require(rel.energy[2] == HbarScalar::monomial(-1, 2), "relative E2" + at);
    v.require(rel.is_hbar_nonnegative(), "relative jet hbar-nonnegative" + at);
  }
}

std::vector<QOperator> oracle_corpus() {
  std::vector<QOperator> corpus;
  for (unsigned d = 0; d <= 4; ++d)
    for (unsigned i = 0; i <= d; ++i)
      for (int l = 0; l <= 1; ++l) corpus.push_back(QOperator::monomial(i, d - i, HbarScalar::hbar(l)));
  corpus.push_back(parse_operator_expr("(a+ad)^3"));
  corpus.push_back(quartic());
  RandomAlgebra rng(20261018);
  for (int r = 0; r < 30; ++r) corpus.push_back(rng.hbar_operator(4, 1, 4));
  return corpus;
}

void quartic_oscillator(Verdict& v) {
  const EigenJet jet = rs_expand(quartic(), 0, 2);
  v.require(jet.energy[1] == HbarScalar::monomial(3, 2), "E1 = 3h^2");
  v.require(jet.energy[2] == HbarScalar::monomial(-42, 3), "E2 = -42h^3");
  v.require(matrix_oracle(quartic(), 0, 2) == jet, "oracle at (a+ad)^4");
  std::size_t compared = 0;
  for (const auto& p : oracle_corpus())
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned k = 1; k <= 4; ++k) {
        v.require(rs_expand(p, n, k) == matrix_oracle(p, n, k),
                  "oracle mismatch for P = " + p.to_string() + ", n=" + std::to_string(n) + ", K=" + std::to_string(k));
        ++compared;
      }
  v.detail << compared << " (P, n, K) cases compared";
}

void normal_form_consistency(Verdict& v) {
  const NormalFormResult nf = quantum_birkhoff(quartic(), 3);
  UPoly first;
  first.add_term(2, 6);
  first.add_term(1, HbarScalar::monomial(6, 1));
  first.add_term(0, HbarScalar::monomial(3, 2));
  v.require(nf.psi[1] == first, "psi_1 = 6u^2 + 6hu + 3h^2");
  v.require(nf.residual.is_zero(), "residual vanishes");
  for (unsigned n = 0; n <= 3; ++n) {
    const EigenJet jet = rs_expand(quartic(), n, 3);
    v.require(nf.evaluate(HbarScalar::monomial(static_cast<long>(n), 1)) == jet.energy,
              "psi(t, nh) = E_n(t) at n=" + std::to_string(n));
  }
  v.detail << "psi_2 = " << nf.psi[2].to_string();
}

void symbol_compatibility(Verdict& v) {
  RandomAlgebra rng(7);
  for (int i = 0; i < 100; ++i) {
    const QOperator f = rng.hbar_operator(4), g = rng.hbar_operator(4);
    v.require(principal_symbol(scaled_commutator(f, g)) ==
                  poisson_bracket_xy(principal_symbol(f), principal_symbol(g)),
              "pair " + std::to_string(i));
  }
}

void singularity_invariants(Verdict& v) {
  const std::vector<std::string> xy{"x", "y"};
  struct Case {
    std::string f;
    unsigned mu;
  };
  std::vector<Case> corpus{{"x^2+y^2", 1}, {"x^3+y^3", 4}};
  for (unsigned k = 1; k <= 6; ++k) corpus.push_back({"x^" + std::to_string(k + 1) + "+y^2", k});
  unsigned worst = 0;
  for (const auto& c : corpus) {
    const MultiPoly f = parse_commutative_poly(c.f, xy);
    const auto mu = milnor_number(f);
    const auto h1 = lagrange_h1_dim(f);
    v.require(mu.value == c.mu, "milnor(" + c.f + ") = " + std::to_string(mu.value));
    v.require(h1.value == c.mu, "h1dim(" + c.f + ") = " + std::to_string(h1.value));
    worst = std::max({worst, mu.stabilized_at + 1, h1.stabilized_at + 1});
  }
  v.require(worst <= 12, "stabilization needed N = " + std::to_string(worst));
  v.detail << "largest jet order used N = " << worst;
}

void henon_heiles_criterion(Verdict& v) {
  const HenonHeilesReport r = henon_heiles_suite();
  v.require(r.commuting(), "{H1,H2} != 0");
  v.require(r.lax_identity(), "Lax residual nonzero");
  v.require(r.stated.factorization.has_value(),
            "discriminant " + r.discriminant.to_string() + " is not unit*l2^a*(l2^3 - 27*l1^4)^b");
  v.require(r.reduced_multiplicity == 4u, "reduced multiplicity != 4");
  v.require(r.betti == 4u, "Betti claim != 4");
  v.require(r.torus_bracket.is_zero() && r.torus_multiplicity == 2 && r.torus_betti == 2, "torus example");
  if (v.passed) v.detail << "b1 = 4, torus b1 = 2";
}

void gevrey_calibration(Verdict& v) {
  std::vector<Rational> fact, geom, inv;
  for (unsigned k = 0; k < 25; ++k) {
    fact.emplace_back(factorial(k));
    geom.emplace_back(Integer(1) << k);
    inv.push_back(Rational(1) / Rational(factorial(k)));
  }
  const double s1 = gevrey_estimate(fact).order, s2 = gevrey_estimate(geom).order, s3 = gevrey_estimate(inv).order;
  v.require(s1 >= 0.85 && s1 <= 1.15, "s(k!) out of range");
  v.require(s2 >= -0.15 && s2 <= 0.15, "s(2^k) out of range");
  v.require(s3 >= -1.15 && s3 <= -0.85, "s(1/k!) out of range");
  v.detail << std::setprecision(4) << "s(k!) = " << s1 << ", s(2^k) = " << s2 << ", s(1/k!) = " << s3;
}

void hbar_positivity(Verdict& v) {
  RandomAlgebra rng(1729);
  for (int i = 0; i < 20; ++i) {
    const QOperator p = rng.hbar_operator(4, 1, 4);
    const unsigned order = rng.uniform(1, 4), level = rng.uniform(0, 2);
    v.require(relative_substitute(rs_expand(p, level, order)).is_hbar_nonnegative(),
              "P = " + p.to_string() + ", n=" + std::to_string(level));
  }
}

void determinism(Verdict& v) {
  for (const char* format : {"json", "text"}) {
    std::vector<std::string> base{"hbarkit", "spectrum-table", "--P", "(a+ad)^4 + ad^3 + 1/2*h*a", "--levels", "6",
                                  "--order", "3", "--format", format, "--jobs"};
    std::ostringstream one, four, err;
    auto a = base, b = base;
    a.push_back("1");
    b.push_back("4");
    const int c1 = run_command(a, one, err), c4 = run_command(b, four, err);
    v.require(c1 == 0 && c4 == 0, std::string("spectrum-table failed: ") + err.str());
    v.require(one.str() == four.str(), std::string(format) + " output differs between --jobs 1 and --jobs 4");
    v.require(!one.str().empty(), "empty output");
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& log) {
  const std::vector<Criterion> criteria{
      {1, "Trace/Borel identity", 1.0, trace_borel},
      {2, "Pairing norm", 1.0, pairing_norm},
      {3, "Harmonic spectrum", 0, harmonic_spectrum},
      {4, "Exactly solvable perturbation", 0, solvable_perturbation},
      {5, "Quartic oscillator and matrix oracle", 30.0, quartic_oscillator},
      {6, "Normal-form/spectrum consistency", 0, normal_form_consistency},
      {7, "Symbol compatibility", 0, symbol_compatibility},
      {8, "Singularity invariants", 10.0, singularity_invariants},
      {9, "Henon-Heiles suite", 10.0, henon_heiles_criterion},
      {10, "Gevrey estimator calibration", 1.0, gevrey_calibration},
      {11, "hbar-positivity property suite", 0, hbar_positivity},
      {12, "Determinism of spectrum-table", 0, determinism},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) v.require(false, "time limit exceeded");
    CriterionResult r{c.id, c.title, v.passed, v.detail.str(), seconds};
    log << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << " " << r.title << " (" << std::fixed
        << std::setprecision(3) << r.seconds << " s)" << std::defaultfloat;
    if (!r.detail.empty()) log << ": " << r.detail;
    log << "\n";
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hbarkit
