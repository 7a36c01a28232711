#include "hbarkit/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "hbarkit/acceptance.hpp"
#include "hbarkit/bargmann.hpp"
#include "hbarkit/classical.hpp"
#include "hbarkit/henon_heiles.hpp"
#include "hbarkit/normal_form.hpp"
#include "hbarkit/parser.hpp"
#include "hbarkit/perturbation.hpp"
#include "hbarkit/report.hpp"

namespace hbarkit {

namespace {

using nlohmann::json;

struct Outcome {
  Report report;
  std::vector<std::string> text;
  int exit_code = kExitOk;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<Rational> parse_sequence(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_names(text)) out.push_back(parse_rational(item));
  return out;
}

json eigen_jet_json(const EigenJet& jet) {
  json energy = json::array(), vecs = json::array();
  for (const auto& e : jet.energy) energy.push_back(hbar_json(e));
  for (const auto& v : jet.vector) vecs.push_back(vector_json(v));
  return json{{"level", jet.level}, {"order", jet.order}, {"energy", energy}, {"eigenvector", vecs}};
}

std::string energy_text(const EigenJet& jet) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < jet.energy.size(); ++k)
    parts.push_back("E" + std::to_string(k) + " = " + jet.energy[k].to_string());
  return join(parts, ", ");
}

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

// Spectrum of a^+a + tP at one level, with its property checks.
struct LevelResult {
  json payload;
  std::vector<Check> checks;
  std::string line;
};

LevelResult spectrum_level(const QOperator& p, unsigned level, unsigned order) {
  LevelResult r;
  const EigenJet jet = rs_expand(p, level, order);
  const EigenJet relative = relative_substitute(jet);
  const EigenJet oracle = matrix_oracle(p, level, order);
  const auto defect = eigen_defect(p, jet);
  const bool defect_zero = std::all_of(defect.begin(), defect.end(), [](const auto& d) { return d.is_zero(); });
  r.payload = eigen_jet_json(jet);
  r.payload["relative"] = eigen_jet_json(relative);
  r.checks.push_back(make_check("oracle_equality[n=" + std::to_string(level) + "]", jet == oracle));
  r.checks.push_back(make_check("defect_vanishes[n=" + std::to_string(level) + "]", defect_zero));
  r.checks.push_back(make_check("relative_hbar_nonnegative[n=" + std::to_string(level) + "]",
                                relative.is_hbar_nonnegative()));
  r.line = "n=" + std::to_string(level) + ": " + energy_text(jet);
  return r;
}

void add_stabilized(Outcome& o, const StabilizedDimension& d, const std::string& label) {
  o.report.result["value"] = d.value;
  o.report.result["stabilized_at"] = d.stabilized_at;
  o.report.result["sequence"] = d.sequence;
  o.text.push_back(std::to_string(d.value));
  o.text.push_back(label + " stabilized at N = " + std::to_string(d.stabilized_at));
}

json factor_check_json(const FactorCheck& c) {
  json cands = json::array();
  for (const auto& p : c.candidates) cands.push_back(p.to_string());
  json out{{"candidates", cands}, {"success", c.factorization.has_value()}};
  if (c.factorization) {
    out["unit"] = rational_json(c.factorization->unit);
    out["exponents"] = c.factorization->exponents;
  }
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for the hbar-Heisenberg algebra and its semi-classical limit", "hbarkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Outcome outcome;
  std::function<void()> action;

  std::string expr_f, expr_g, expr_p, seq, preset, vars = "x,y", var = "x", params;
  unsigned order = 4, hbar_order = 8, level = 0, levels = 3, jobs = 1, terms = 25, cap = kDefaultJetCap;
  bool relative = false;

  auto* normal = app.add_subcommand("normal-order", "Normal-order an operator expression");
  normal->add_option("--expr,--F", expr_f, "Operator expression in a, ad, h")->required();
  normal->callback([&] {
    action = [&] {
      const QOperator q = parse_operator_expr(expr_f);
      outcome.report.result["operator"] = operator_json(q);
      outcome.text.push_back(q.to_string());
    };
  });

  auto* comm = app.add_subcommand("commutator", "Scaled commutator (FG - GF)/h");
  comm->add_option("--F", expr_f)->required();
  comm->add_option("--G", expr_g)->required();
  comm->callback([&] {
    action = [&] {
      const QOperator f = parse_operator_expr(expr_f), g = parse_operator_expr(expr_g);
      const QOperator c = scaled_commutator(f, g);
      outcome.report.result["commutator"] = operator_json(c);
      outcome.text.push_back(c.to_string());
      if (f.is_hbar_nonnegative() && g.is_hbar_nonnegative()) {
        const bool ok = principal_symbol(c) == poisson_bracket_xy(principal_symbol(f), principal_symbol(g));
        outcome.report.checks.push_back(make_check("symbol_compatibility", ok));
      }
    };
  });

  auto* dag = app.add_subcommand("dagger", "Hermitian conjugate");
  dag->add_option("--F", expr_f)->required();
  dag->callback([&] {
    action = [&] {
      const QOperator d = dagger(parse_operator_expr(expr_f));
      outcome.report.result["dagger"] = operator_json(d);
      outcome.text.push_back(d.to_string());
    };
  });

  auto* sym = app.add_subcommand("symbol", "Total and principal symbols");
  sym->add_option("--F", expr_f)->required();
  sym->callback([&] {
    action = [&] {
      const QOperator f = parse_operator_expr(expr_f);
      const SymbolPoly s = total_symbol(f);
      const MultiPoly p = principal_symbol(f);
      outcome.report.result["total_symbol"] = symbol_json(s);
      outcome.report.result["principal_symbol"] = poly_json(p);
      outcome.text.push_back("total: " + s.to_string());
      outcome.text.push_back("principal: " + p.to_string());
    };
  });

  auto* borel = app.add_subcommand("borel", "Borel transform of an operator symbol or a coefficient sequence");
  auto* borel_f = borel->add_option("--F", expr_f, "Operator expression");
  auto* borel_seq = borel->add_option("--seq", seq, "Comma-separated rationals c0,c1,...");
  borel_f->excludes(borel_seq);
  borel->callback([&] {
    action = [&] {
      if (!expr_f.empty()) {
        const BorelSymbol b = borel_symbol(parse_operator_expr(expr_f));
        outcome.report.result["transform"] = symbol_json(b.transform);
        outcome.report.result["constant_part"] = poly_json(b.constant_part);
        outcome.text.push_back("transform: " + b.transform.to_string());
        outcome.text.push_back("constant part: " + b.constant_part.to_string());
        return;
      }
      if (seq.empty()) throw CLI::ValidationError("borel", "one of --F or --seq is required");
      const BorelSequence b = borel_sequence(parse_sequence(seq));
      json coeffs = json::array();
      std::vector<std::string> parts;
      for (const auto& c : b.transform) {
        coeffs.push_back(rational_json(c));
        parts.push_back(c.get_str());
      }
      outcome.report.result["transform"] = coeffs;
      outcome.report.result["constant"] = rational_json(b.constant);
      outcome.text.push_back("transform: " + join(parts, ", "));
      outcome.text.push_back("constant: " + b.constant.get_str());
    };
  });

  auto* ev = app.add_subcommand("ev", "Pairing ev(F, G) = s(F^+ G) at x = y = 0");
  ev->add_option("--F", expr_f)->required();
  ev->add_option("--G", expr_g)->required();
  ev->callback([&] {
    action = [&] {
      const HbarScalar v = ev_pairing(parse_operator_expr(expr_f), parse_operator_expr(expr_g));
      outcome.report.result["value"] = hbar_json(v);
      outcome.text.push_back(v.to_string());
    };
  });

  auto* trace = app.add_subcommand("trace", "Trace sum_n <n|F|n> as an hbar-series");
  trace->add_option("--F", expr_f)->required();
  trace->add_option("--hbar-order", hbar_order, "Truncation order N")->check(CLI::PositiveNumber);
  trace->callback([&] {
    action = [&] {
      const TraceSeries t = trace_series(parse_operator_expr(expr_f), hbar_order);
      const BorelTrace b = borel_hbar(t);
      outcome.report.result["trace"] = hbar_json(t.value);
      outcome.report.result["order"] = t.order;
      outcome.report.result["borel"] = hbar_json(b.transform.value);
      outcome.report.result["borel_constant"] = rational_json(b.constant);
      outcome.text.push_back("trace: " + t.value.to_string() + " + O(h^" + std::to_string(t.order) + ")");
      outcome.text.push_back("borel: " + b.transform.value.to_string());
    };
  });

  auto* spectrum = app.add_subcommand("spectrum", "Rayleigh-Schroedinger jet of a^+a + tP at one level");
  spectrum->add_option("--P", expr_p, "Perturbation")->required();
  spectrum->add_option("--n", level, "Level");
  spectrum->add_option("--K,--order", order, "Order in t");
  spectrum->add_flag("--relative", relative, "Print the t -> h t substituted jet");
  spectrum->callback([&] {
    action = [&] {
      const QOperator p = parse_operator_expr(expr_p);
      if (!p.is_hbar_nonnegative()) throw ComputationError("perturbation has a negative power of hbar");
      LevelResult r = spectrum_level(p, level, order);
      outcome.report.result = r.payload;
      outcome.report.checks = r.checks;
      const EigenJet jet = rs_expand(p, level, order);
      outcome.text.push_back(energy_text(relative ? relative_substitute(jet) : jet));
      const auto& shown = relative ? relative_substitute(jet).vector : jet.vector;
      for (std::size_t k = 0; k < shown.size(); ++k)
        outcome.text.push_back("psi" + std::to_string(k) + " = " + shown[k].to_string());
    };
  });

  auto* table = app.add_subcommand("spectrum-table", "Spectrum jets for levels 0..L");
  table->add_option("--P", expr_p, "Perturbation")->required();
  table->add_option("--levels", levels, "Highest level L");
  table->add_option("--K,--order", order, "Order in t");
  table->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  table->callback([&] {
    action = [&] {
      const QOperator p = parse_operator_expr(expr_p);
      if (!p.is_hbar_nonnegative()) throw ComputationError("perturbation has a negative power of hbar");
      std::vector<LevelResult> rows(levels + 1);
      std::vector<std::string> errors(levels + 1);
      std::atomic<unsigned> next{0};
      auto worker = [&] {
        for (unsigned n = next++; n <= levels; n = next++) {
          try {
            rows[n] = spectrum_level(p, n, order);
          } catch (const std::exception& e) {
            errors[n] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < std::min(jobs, levels + 1); ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      for (const auto& e : errors)
        if (!e.empty()) throw ComputationError(e);
      json table_json = json::array();
      for (auto& r : rows) {
        table_json.push_back(r.payload);
        for (auto& c : r.checks) outcome.report.checks.push_back(c);
        outcome.text.push_back(r.line);
      }
      outcome.report.result["levels"] = table_json;
    };
  });

  auto* nf = app.add_subcommand("normal-form", "Quantum Birkhoff normal form of a^+a + tP");
  nf->add_option("--P", expr_p, "Perturbation")->required();
  nf->add_option("--K,--order", order, "Order in t");
  nf->callback([&] {
    action = [&] {
      const NormalFormResult r = quantum_birkhoff(parse_operator_expr(expr_p), order);
      json psi = json::array(), gens = json::array();
      for (const auto& p : r.psi) psi.push_back(upoly_json(p));
      for (const auto& g : r.generators) gens.push_back(operator_json(g));
      outcome.report.result["psi"] = psi;
      outcome.report.result["generators"] = gens;
      outcome.report.checks.push_back(make_check("residual_vanishes", r.residual.is_zero()));
      for (std::size_t k = 0; k < r.psi.size(); ++k)
        outcome.text.push_back("psi" + std::to_string(k) + "(u) = " + r.psi[k].to_string());
      for (std::size_t k = 0; k < r.generators.size(); ++k)
        outcome.text.push_back("G" + std::to_string(k + 1) + " = " + r.generators[k].to_string());
    };
  });

  auto* gevrey = app.add_subcommand("gevrey", "Gevrey-order estimate of a coefficient sequence");
  auto* gevrey_seq = gevrey->add_option("--seq", seq, "Comma-separated rationals");
  auto* gevrey_preset = gevrey->add_option("--preset", preset, "Synthetic sequence")
                            ->check(CLI::IsMember({"factorial", "geometric", "inverse-factorial"}));
  gevrey_seq->excludes(gevrey_preset);
  gevrey->add_option("--terms", terms, "Number of synthetic terms");
  gevrey->callback([&] {
    action = [&] {
      std::vector<Rational> c;
      if (!preset.empty()) {
        for (unsigned k = 0; k < terms; ++k) {
          if (preset == "factorial") c.emplace_back(factorial(k));
          if (preset == "geometric") c.emplace_back(Integer(1) << k);
          if (preset == "inverse-factorial") c.push_back(Rational(1) / Rational(factorial(k)));
        }
      } else {
        if (seq.empty()) throw CLI::ValidationError("gevrey", "one of --seq or --preset is required");
        c = parse_sequence(seq);
      }
      const GevreyFit fit = gevrey_estimate(c);
      outcome.report.result["gevrey_order"] = fit.order;
      outcome.report.result["residual"] = fit.residual;
      outcome.report.result["floating_point"] = true;
      std::ostringstream os;
      os << "s = " << fit.order << " (residual " << fit.residual << ")";
      outcome.text.push_back(os.str());
    };
  });

  auto* poisson = app.add_subcommand("poisson", "Poisson bracket {f, g}");
  poisson->add_option("--f", expr_f)->required();
  poisson->add_option("--g", expr_g)->required();
  poisson->add_option("--vars", vars, "Variables, paired consecutively (x1,y1,x2,y2,...)");
  poisson->callback([&] {
    action = [&] {
      const auto names = split_names(vars);
      const auto f = SymplecticPoly::consecutive(parse_commutative_poly(expr_f, names));
      const auto g = SymplecticPoly::consecutive(parse_commutative_poly(expr_g, names));
      const MultiPoly b = poisson_bracket(f, g).poly;
      outcome.report.result["bracket"] = poly_json(b);
      outcome.text.push_back(b.to_string());
    };
  });

  auto* milnor = app.add_subcommand("milnor", "Milnor number of a plane curve germ");
  milnor->add_option("--f", expr_f)->required();
  milnor->add_option("--vars", vars, "Two variable names");
  milnor->add_option("--cap", cap, "Largest jet order tried");
  milnor->callback([&] {
    action = [&] { add_stabilized(outcome, milnor_number(parse_commutative_poly(expr_f, split_names(vars)), cap), "D_N"); };
  });

  auto* h1 = app.add_subcommand("h1dim", "Dimension of H^1 of the n = 1 Lagrange complex");
  h1->add_option("--f", expr_f)->required();
  h1->add_option("--vars", vars, "Two variable names");
  h1->add_option("--cap", cap, "Largest jet order tried");
  h1->callback([&] {
    action = [&] {
      add_stabilized(outcome, lagrange_h1_dim(parse_commutative_poly(expr_f, split_names(vars)), cap), "D_N");
    };
  });

  auto* disc = app.add_subcommand("discriminant", "Resultant of p and dp/dx");
  disc->add_option("--p", expr_p)->required();
  disc->add_option("--var", var, "Distinguished variable");
  disc->add_option("--params", params, "Parameter names");
  disc->callback([&] {
    action = [&] {
      auto names = split_names(params);
      names.push_back(var);
      const MultiPoly d = polynomial_discriminant(UniPoly::from_multi(parse_commutative_poly(expr_p, names), var));
      outcome.report.result["discriminant"] = poly_json(d);
      outcome.text.push_back(d.to_string());
    };
  });

  auto* mult = app.add_subcommand("multiplicity", "Multiplicity at the origin");
  mult->add_option("--p", expr_p)->required();
  mult->add_option("--vars", vars, "Variable names");
  mult->callback([&] {
    action = [&] {
      const unsigned m = multiplicity_at_origin(parse_commutative_poly(expr_p, split_names(vars)));
      outcome.report.result["value"] = m;
      outcome.text.push_back(std::to_string(m));
    };
  });

  auto* hh = app.add_subcommand("henon-heiles", "Henon-Heiles verification suite");
  hh->callback([&] {
    action = [&] {
      const HenonHeilesReport r = henon_heiles_suite();
      auto& res = outcome.report.result;
      res["bracket"] = poly_json(r.bracket);
      res["lax_residual"] = poly_json(r.lax_residual);
      res["discriminant"] = poly_json(r.discriminant);
      res["stated_factors"] = factor_check_json(r.stated);
      res["corrected_factors"] = factor_check_json(r.corrected);
      res["raw_multiplicity"] = r.raw_multiplicity;
      res["reduced_multiplicity"] = r.reduced_multiplicity ? json(*r.reduced_multiplicity) : json(nullptr);
      res["betti"] = r.betti ? json(*r.betti) : json(nullptr);
      res["torus"] = json{{"bracket", poly_json(r.torus_bracket)},
                          {"discriminant", poly_json(r.torus_discriminant)},
                          {"multiplicity", r.torus_multiplicity},
                          {"betti", r.torus_betti}};
      auto& checks = outcome.report.checks;
      checks.push_back(make_check("poisson_commuting", r.commuting()));
      checks.push_back(make_check("lax_identity", r.lax_identity(), "residual " + r.lax_residual.to_string()));
      checks.push_back(make_check("discriminant_factors_l2_and_l2^3-27*l1^4", r.stated.factorization.has_value()));
      checks.push_back(make_check("discriminant_factors_l2_and_l2^3+27*l1^4", r.corrected.factorization.has_value()));
      checks.push_back(make_check("reduced_multiplicity_4", r.reduced_multiplicity == 4u));
      checks.push_back(make_check("torus_multiplicity_2", r.torus_multiplicity == 2 && r.torus_bracket.is_zero()));
      outcome.text.push_back("{H1,H2} = " + r.bracket.to_string());
      outcome.text.push_back("Lax residual = " + r.lax_residual.to_string());
      outcome.text.push_back("discriminant = " + r.discriminant.to_string());
      outcome.text.push_back(std::string("factors {l2, l2^3 - 27 l1^4}: ") +
                             (r.stated.factorization ? "certified" : "not a factorization"));
      outcome.text.push_back(std::string("factors {l2, l2^3 + 27 l1^4}: ") +
                             (r.corrected.factorization ? "certified" : "not a factorization"));
      outcome.text.push_back("raw multiplicity = " + std::to_string(r.raw_multiplicity));
      outcome.text.push_back("Betti b1 = " + (r.betti ? std::to_string(*r.betti) : std::string("unknown")));
      outcome.text.push_back("torus: discriminant l1*l2, multiplicity " + std::to_string(r.torus_multiplicity) +
                             ", Betti b1 = " + std::to_string(r.torus_betti));
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->callback([&] {
    action = [&] {
      std::ostringstream log;
      const auto results = run_acceptance(log);
      json rows = json::array();
      for (const auto& r : results) {
        rows.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        outcome.report.checks.push_back(make_check("criterion_" + std::to_string(r.id), r.passed, r.detail));
      }
      outcome.report.result["criteria"] = rows;
      std::istringstream lines(log.str());
      for (std::string line; std::getline(lines, line);) outcome.text.push_back(line);
    };
  });

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }

  // --jobs never changes a result, so it is left out of the echo.
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--jobs") {
      ++i;
      continue;
    }
    if (argv[i].rfind("--jobs=", 0) == 0) continue;
    outcome.report.command.push_back(argv[i]);
  }
  if (format == "json") {
    out << json(outcome.report).dump(2) << "\n";
  } else {
    for (const auto& line : outcome.text) out << line << "\n";
    for (const auto& c : outcome.report.checks)
      out << "[" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
          << "\n";
  }
  // Verdicts are report content; only the acceptance run turns them into an exit status.
  if (verify->parsed() && !outcome.report.all_passed()) return kExitComputation;
  return kExitOk;
}

}  // namespace hbarkit
