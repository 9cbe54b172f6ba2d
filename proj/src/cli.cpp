#include "hecke/cli.hpp"

#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hecke/distinction.hpp"
#include "hecke/gelfand.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/json_io.hpp"
#include "hecke/spherical.hpp"
#include "hecke/tensor_ops.hpp"

namespace hecke::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Row = std::vector<std::string>;

struct CommandResult {
  bool pass = true;
  Json json;
  std::vector<Row> csv;  // first row is the header
  std::vector<std::string> text;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

SphericalParams numeric_params(const RunConfig& c) {
  SphericalParams p;
  p.e = c.e;
  p.f = c.f;
  p.q0 = Rational(c.q0);
  p.chi_pi = Rational::parse(c.chi_pi);
  return p;
}

ExtendedWeylElement random_element(int e, int max_len, std::mt19937_64& rng) {
  const int len = static_cast<int>(rng() % (max_len + 1));
  Word word;
  for (int j = 0; j < len; ++j) word.push_back(static_cast<int>(rng() % e));
  const auto k = static_cast<std::int64_t>(rng() % 3) - 1;
  return multiply(pi_power(e, k), word_to_element(e, word));
}

HeckeElement<LaurentPoly> random_hecke(int e, std::mt19937_64& rng) {
  HeckeElement<LaurentPoly> h(e);
  for (int t = 0; t < 2; ++t) {
    const Rational c(static_cast<long>(rng() % 7) - 3);
    const int exponent = static_cast<int>(rng() % 3) - 1;
    h.add_term(random_element(e, 4, rng), LaurentPoly::monomial(c.is_zero() ? Rational(1) : c, exponent));
  }
  return h;
}

// ---------------------------------------------------------------------------

CommandResult cmd_presentation(const RunConfig& c) {
  CommandResult r;
  const PresentationReport rep = verify_presentation(c.e);
  r.pass = rep.all_passed();

  std::mt19937_64 rng(c.seed);
  const HeckeAlgebra<LaurentPoly> alg(c.e, LaurentPoly::variable());
  int assoc_ok = 0;
  for (int s = 0; s < c.samples; ++s) {
    const auto a = random_hecke(c.e, rng), b = random_hecke(c.e, rng), d = random_hecke(c.e, rng);
    if (alg.product(alg.product(a, b), d) == alg.product(a, alg.product(b, d))) ++assoc_ok;
  }
  r.pass = r.pass && assoc_ok == c.samples;

  r.json = to_json(rep);
  r.json["associativity_samples"] = c.samples;
  r.json["associativity_passed"] = assoc_ok;
  r.csv.push_back({"relation", "instances", "passed", "ok"});
  for (const auto& rc : rep.relations) {
    r.csv.push_back({rc.name, std::to_string(rc.instances), std::to_string(rc.passed), yes_no(rc.ok())});
    r.text.push_back(rc.name + " " + rc.description + ": " + std::to_string(rc.passed) + "/" +
                     std::to_string(rc.instances) + (rc.ok() ? " ok" : " FAIL"));
  }
  r.csv.push_back({"associativity", std::to_string(c.samples), std::to_string(assoc_ok),
                   yes_no(assoc_ok == c.samples)});
  r.text.push_back("associativity on random triples: " + std::to_string(assoc_ok) + "/" + std::to_string(c.samples));
  return r;
}

CommandResult cmd_eigen(const RunConfig& c) {
  CommandResult r;
  if (c.L < 1) throw UsageError("eigen requires L >= 1");
  const SphericalParams sp = numeric_params(c);
  const auto generic = generic_q1_params(c.e, sp.chi_pi);
  const auto symbolic = symbolic_chi_params(c.e, sp.q1());

  std::vector<std::pair<std::string, EigenReport>> reports;
  for (int i = 0; i < c.e; ++i) reports.emplace_back("generic q1", verify_eigen_generator(i, c.L, generic));
  for (int d : {1, -1}) {
    reports.emplace_back("generic q1", verify_eigen_pi(c.L, generic, 2, d));
    reports.emplace_back("symbolic chi_pi", verify_eigen_pi(c.L, symbolic, 2, d));
  }
  reports.emplace_back("generic q1", verify_two_sided(c.L, generic));

  const auto sol = solve_eigen_recurrence(c.L, generic);
  int unique_checked = 0, unique_passed = 0;
  for (const auto& [w0, coeff] : sol.coefficients) {
    if (w0.length() > c.L - 1) continue;
    ++unique_checked;
    if (coeff == psi0_coefficient(ExtendedWeylElement(0, w0), generic)) ++unique_passed;
  }
  const bool unique_ok = sol.consistent && unique_checked == unique_passed;

  Json arr = Json::array();
  r.csv.push_back({"operator", "mode", "checked", "passed", "boundary_skipped", "ok"});
  for (const auto& [mode, rep] : reports) {
    r.pass = r.pass && rep.ok();
    Json j = to_json(rep);
    j["mode"] = mode;
    arr.push_back(j);
    r.csv.push_back({rep.op, mode, std::to_string(rep.checked), std::to_string(rep.passed),
                     std::to_string(rep.boundary_skipped), yes_no(rep.ok())});
    r.text.push_back(rep.op + " (" + mode + "): " + std::to_string(rep.passed) + "/" + std::to_string(rep.checked) +
                     " interior coefficients, " + std::to_string(rep.boundary_skipped) + " boundary unchecked" +
                     (rep.ok() ? "" : " FAIL"));
  }
  r.pass = r.pass && unique_ok;
  r.csv.push_back({"uniqueness", "generic q1", std::to_string(unique_checked), std::to_string(unique_passed), "0",
                   yes_no(unique_ok)});
  r.text.push_back("uniqueness of the recurrence solution: " + std::to_string(unique_passed) + "/" +
                   std::to_string(unique_checked) + (unique_ok ? "" : " FAIL"));
  r.json = {{"e", c.e},
            {"L", c.L},
            {"chi_pi", to_json(sp.chi_pi)},
            {"q1_for_symbolic_chi", to_json(sp.q1())},
            {"checks", arr},
            {"uniqueness", {{"checked", unique_checked}, {"passed", unique_passed}, {"consistent", sol.consistent}}},
            {"all_passed", r.pass}};
  return r;
}

CommandResult cmd_coefficient(const RunConfig& c) {
  CommandResult r;
  const SphericalParams sp = numeric_params(c);
  if (!sp.chi_pi.is_one()) throw UsageError("RequiresTrivialChiPi: coefficient needs --chi-pi 1");
  const Rational minus_inv_q1 = -sp.q1().inverse();
  const TensorVector v = TensorVector::pure_power({Rational(1), Rational(2)}, c.e);
  const TensorVector vt = TensorVector::pure_power({Rational(1), Rational(1)}, c.e);
  const Rational base_pair = pair(v, vt);

  std::uint64_t elements = 0, value_ok = 0, words_checked = 0, words_ok = 0, proj_ok = 0, pair_ok = 0;
  std::vector<std::uint64_t> per_length(c.L + 1, 0);
  const Layers layers = enumerate_by_length(c.e, c.L);
  for (const auto& layer : layers)
    for (const auto& w0 : layer) {
      const ExtendedWeylElement w0e(0, w0);
      bool all_k = true;
      for (int k = 0; k < c.e; ++k) {
        const ExtendedWeylElement g = multiply(w0e, pi_power(c.e, k));
        const PlaceOperator op = ev(g, sp);
        const Rational expected = matrix_coefficient_scalar(w0, k, sp);
        all_k = all_k && (minus_inv_q1.pow(w0.length()) * op.scale == expected);
        proj_ok += op.perm == project_to_finite(g);
        pair_ok += minus_inv_q1.pow(w0.length()) * pair(apply(op, v), vt) == expected * base_pair;
      }
      ++elements;
      value_ok += all_k;
      per_length[w0.length()] += all_k;
      const PlaceOperator reference = ev(w0e, sp);
      for (const auto& word : all_reduced_words(w0e)) {
        ++words_checked;
        words_ok += ev_word(c.e, 0, word, sp) == reference;
      }
    }
  const std::uint64_t k_checks = elements * c.e;
  r.pass = value_ok == elements && words_ok == words_checked && proj_ok == k_checks && pair_ok == k_checks;
  r.json = {{"e", c.e},
            {"f", c.f},
            {"q0", to_json(sp.q0)},
            {"L", c.L},
            {"elements", elements},
            {"value_matches", value_ok},
            {"reduced_words_checked", words_checked},
            {"reduced_words_agree", words_ok},
            {"projection_matches", proj_ok},
            {"pairing_matches", pair_ok},
            {"all_passed", r.pass}};
  r.csv.push_back({"length", "elements", "value_matches"});
  for (int ell = 0; ell <= c.L; ++ell) {
    r.csv.push_back({std::to_string(ell), std::to_string(layers[ell].size()), std::to_string(per_length[ell])});
  }
  r.text.push_back("operator model vs closed form: " + std::to_string(value_ok) + "/" + std::to_string(elements));
  r.text.push_back("reduced-word independence: " + std::to_string(words_ok) + "/" + std::to_string(words_checked));
  r.text.push_back("projection and pairing: " + std::to_string(proj_ok) + "/" + std::to_string(k_checks) + ", " +
                   std::to_string(pair_ok) + "/" + std::to_string(k_checks));
  return r;
}

CommandResult cmd_growth(const RunConfig& c) {
  CommandResult r;
  const GrowthSeries bfs = growth_bfs(c.e, c.L);
  const GrowthSeries closed = growth_closed_form(c.e, c.L);
  r.pass = bfs.counts == closed.counts;
  const RationalFunction pf = poincare_closed_form(c.e);
  r.json = {{"e", c.e},
            {"L", c.L},
            {"bfs", to_json(bfs)},
            {"closed_form", to_json(closed)},
            {"numerator", to_json(pf.numerator)},
            {"denominator", to_json(pf.denominator)},
            {"equal", r.pass}};
  r.csv.push_back({"length", "count_bfs", "count_closed_form", "equal"});
  for (int ell = 0; ell <= c.L; ++ell) {
    r.csv.push_back({std::to_string(ell), std::to_string(bfs.counts[ell]), std::to_string(closed.counts[ell]),
                     yes_no(bfs.counts[ell] == closed.counts[ell])});
    r.text.push_back("N(" + std::to_string(ell) + ") = " + std::to_string(bfs.counts[ell]) +
                     " (closed form " + std::to_string(closed.counts[ell]) + ")");
  }
  return r;
}

CommandResult cmd_poincare(const RunConfig& c) {
  CommandResult r;
  const RationalFunction pf = poincare_closed_form(c.e);
  const Rational x0 = -Rational(c.q0).pow(c.f).inverse();
  std::vector<Rational> samples = {x0, Rational(-9, 10), Rational(-1, 2), Rational(0), Rational(1, 2),
                                   Rational(9, 10)};
  std::mt19937_64 rng(c.seed);
  for (int s = 0; s < c.samples; ++s) {
    const long den = static_cast<long>(rng() % 999) + 2;
    const long num = static_cast<long>(rng() % (2 * den - 1)) - (den - 1);
    samples.emplace_back(num, den);
  }
  const NonvanishingReport rep = nonvanishing_scan(c.e, samples);
  r.pass = rep.all_positive();
  r.json = {{"e", c.e},
            {"numerator", to_json(pf.numerator)},
            {"denominator", to_json(pf.denominator)},
            {"x", to_json(x0)},
            {"value", to_json(rep.samples[0].value)},
            {"scan", to_json(rep)}};
  r.csv.push_back({"x", "value", "positive"});
  for (const auto& s : rep.samples) r.csv.push_back({s.x.to_string(), s.value.to_string(), yes_no(s.positive)});
  r.text.push_back("P(X) = (" + pf.numerator.to_string() + ") / (" + pf.denominator.to_string() + ")");
  r.text.push_back("P(" + x0.to_string() + ") = " + rep.samples[0].value.to_string());
  r.text.push_back(std::string("positive at all ") + std::to_string(rep.samples.size()) +
                   " samples: " + yes_no(rep.all_positive()));
  return r;
}

CommandResult cmd_distinction(const RunConfig& c) {
  CommandResult r;
  if (c.e % 2 == 0) throw UsageError("RequiresOddE: distinction needs odd e, got " + std::to_string(c.e));
  if (!Rational::parse(c.chi_pi).is_one()) throw UsageError("RequiresTrivialChiPi: distinction needs --chi-pi 1");
  const IntegralReport rep = distinction_integral(c.e, c.f, Rational(c.q0), c.L);
  r.pass = rep.per_term_ok && rep.within_tail_bound();
  r.json = to_json(rep);
  r.csv.push_back({"e", "f", "q0", "L", "partial_sum", "closed_form", "abs_error", "tail_bound", "per_term_ok"});
  r.csv.push_back({std::to_string(rep.e), std::to_string(rep.f), rep.q0.to_string(), std::to_string(rep.L),
                   rep.partial_sum.to_string(), rep.closed_form.to_string(), rep.abs_error.to_string(),
                   rep.tail_bound.to_string(), yes_no(rep.per_term_ok)});
  std::ostringstream os;
  os << "e*P(-1/q0^f) = " << rep.closed_form << "; partial sum over l <= " << rep.L << " differs by "
     << rep.abs_error.to_double() << " (tail bound " << rep.tail_bound.to_double() << ")";
  r.text.push_back(os.str());
  r.text.push_back("per-term identity measure*coefficient = (-1/q0^f)^l: " + yes_no(rep.per_term_ok));
  return r;
}

CommandResult cmd_gelfand(const RunConfig& c) {
  CommandResult r;
  std::vector<FiniteRep> reps;
  if (!c.rep_file.empty()) {
    try {
      reps.push_back(load_finite_rep(c.rep_file));
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& ex) {
      throw UsageError(std::string("--rep: ") + ex.what());
    }
  } else {
    reps = shipped_catalog();
  }
  Json arr = Json::array();
  r.csv.push_back({"group", "representation", "dim_fixed_V", "dim_fixed_Vdual", "irreducible", "pairing"});
  for (const auto& rep : reps) {
    rep.validate();
    const GelfandReport g = check_pairing(rep);
    if (g.gelfand_multiplicity_ok && g.irreducible) r.pass = r.pass && g.pairing_nonzero();
    if (rep.gelfand_pair_declared && g.irreducible && g.dim_fixed_V > 1) r.pass = false;
    arr.push_back(to_json(g));
    r.csv.push_back({g.group, g.name, std::to_string(g.dim_fixed_V), std::to_string(g.dim_fixed_Vdual),
                     yes_no(g.irreducible), g.pairing ? g.pairing->to_string() : ""});
    r.text.push_back(g.name + ": fixed dims (" + std::to_string(g.dim_fixed_V) + "," +
                     std::to_string(g.dim_fixed_Vdual) + "), pairing " +
                     (g.pairing ? g.pairing->to_string() : std::string("n/a")));
  }
  r.json = {{"reports", arr}, {"all_passed", r.pass}};
  return r;
}

CommandResult dispatch(const std::string& cmd, const RunConfig& c) {
  if (cmd == "presentation") return cmd_presentation(c);
  if (cmd == "eigen") return cmd_eigen(c);
  if (cmd == "coefficient") return cmd_coefficient(c);
  if (cmd == "growth") return cmd_growth(c);
  if (cmd == "poincare") return cmd_poincare(c);
  if (cmd == "distinction") return cmd_distinction(c);
  if (cmd == "gelfand") return cmd_gelfand(c);
  throw UsageError("unknown command '" + cmd + "'");
}

void validate(const RunConfig& c) {
  if (c.e < 2) throw UsageError("--e must be >= 2");
  if (c.f < 1) throw UsageError("--f must be >= 1");
  if (c.L < 0) throw UsageError("--L must be >= 0");
  if (c.samples < 0) throw UsageError("--samples must be >= 0");
  if (!is_prime_power(Rational(c.q0))) throw UsageError("--q0 must be a prime power >= 2");
  Rational chi;
  try {
    chi = Rational::parse(c.chi_pi);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("--chi-pi: ") + ex.what());
  }
  if (chi.is_zero()) throw UsageError("--chi-pi must be nonzero");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit_csv(const std::vector<Row>& rows, std::ostream& out) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << "\n";
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::vector<std::string> commands;
    if (config.command == "all") {
      commands = {"presentation", "eigen", "coefficient", "growth", "poincare", "gelfand"};
      if (config.e % 2 == 1 && Rational::parse(config.chi_pi).is_one()) commands.push_back("distinction");
      if (!Rational::parse(config.chi_pi).is_one()) std::erase(commands, std::string("coefficient"));
    } else {
      commands = {config.command};
    }

    bool pass = true;
    Json combined = Json::object();
    std::vector<std::pair<std::string, CommandResult>> results;
    for (const auto& cmd : commands) {
      CommandResult res = dispatch(cmd, config);
      pass = pass && res.pass;
      results.emplace_back(cmd, std::move(res));
    }

    const bool single = results.size() == 1 && config.command != "all";
    switch (config.output) {
      case Output::Json: {
        if (single) {
          Json j = results[0].second.json;
          j["pass"] = pass;
          out << j.dump(2) << "\n";
        } else {
          for (auto& [cmd, res] : results) combined[cmd] = res.json;
          combined["pass"] = pass;
          out << combined.dump(2) << "\n";
        }
        break;
      }
      case Output::Csv:
        for (const auto& [cmd, res] : results) {
          if (!single) out << "# " << cmd << "\n";
          emit_csv(res.csv, out);
        }
        break;
      case Output::Text:
        for (const auto& [cmd, res] : results) {
          out << "== " << cmd << (res.pass ? " PASS" : " FAIL") << "\n";
          for (const auto& line : res.text) out << "  " << line << "\n";
        }
        break;
    }
    return pass ? kExitPass : kExitFail;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the affine Hecke algebra H(e, q1), its spherical function and the "
               "distinction integral", "hecke"};
  RunConfig config;
  std::string output = "json";
  app.add_option("command", config.command, "presentation|eigen|coefficient|growth|poincare|distinction|gelfand|all")
      ->required()
      ->check(CLI::IsMember(
          {"presentation", "eigen", "coefficient", "growth", "poincare", "distinction", "gelfand", "all"}));
  app.add_option("--e", config.e, "rank e >= 2")->capture_default_str();
  app.add_option("--f", config.f, "block size f >= 1")->capture_default_str();
  app.add_option("--q0", config.q0, "residue field size of F0 (prime power)")->capture_default_str();
  app.add_option("--L", config.L, "truncation length")->capture_default_str();
  app.add_option("--chi-pi", config.chi_pi, "chi(phi_Pi) as a rational")->capture_default_str();
  app.add_option("--output", output, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--samples", config.samples, "number of random samples")->capture_default_str();
  app.add_option("--rep", config.rep_file, "gelfand: catalog JSON file to check instead of the shipped pairs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n" << app.help();
    return kExitUsage;
  }
  config.output = output == "csv" ? Output::Csv : (output == "text" ? Output::Text : Output::Json);
  return run(config, out, err);
}

}  // namespace hecke::cli
