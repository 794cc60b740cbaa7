#include "mackey/io.hpp"
#include "suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace mackey;
using io::Json;

namespace {

struct Options {
  std::string ring = "Z";
  long n = 1;
  std::string output = "table";
  bool json = false;
  std::size_t max_degree = 3;
  std::string input = "norm";
  bool chains = false;
  std::size_t search_limit = 81;
  long p = 2;
  std::size_t stages = 3;
  std::size_t degree = 0;
  std::string suite = "all";
  std::uint64_t seed = 2024;
  std::string file;
  std::string builtin;
  std::string base = "Z";
};

bool as_json(const Options& o) { return o.json || o.output == "json"; }

void require(bool cond, const std::string& why) {
  if (!cond) throw InvalidArgument(why);
}

void validate_order(long n) {
  require(n >= 1, "--n must be a positive group order");
  require(n <= 64, "--n is limited to 64");
}

Json header(const std::string& command) { return Json{{"schema", io::schema}, {"command", command}}; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ' ';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

void print_functor(std::ostream& os, const MackeyFunctor& input, const std::string& title) {
  MackeyFunctor m = input.is_canonical() ? input : input.canonicalized();
  os << title << " over C_" << m.n() << '\n';
  for (long d : m.divisors()) os << "  C_" << m.n() << "/C_" << std::left << std::setw(4) << d << std::right << m.level(d).str() << '\n';
  for (auto [d, e] : m.edges()) {
    os << "  res " << e << "->" << d << "  " << matrix_text(m.res_step(e, d)) << '\n';
    os << "  tr  " << d << "->" << e << "  " << matrix_text(m.tr_step(d, e)) << '\n';
  }
  for (long d : m.divisors())
    if (m.weyl(d) != Matrix::identity(m.gens(d))) os << "  weyl " << d << "  " << matrix_text(m.weyl(d)) << '\n';
}

void print_report(std::ostream& os, const AxiomReport& r, const std::string& what) {
  os << what << ": " << r.str() << '\n';
}

GreenFunctor hh_input(const Options& o) {
  const BaseRing ring = BaseRing::parse(o.ring);
  const Int ch = ring.has_torsion() ? Int(ring.modulus()) : Int(0);
  if (o.input == "norm") return NormFunctor(ring, o.n).green();
  if (o.input == "fixed") return fixed_point_green(trivial_ring(o.n, ch));
  if (o.input == "burnside") return burnside(o.n);
  require(o.n % 2 == 0, "--input " + o.input + " needs an even --n");
  if (o.input == "gaussian") return fixed_point_green(gaussian_integers_conjugation(o.n));
  return fixed_point_green(function_ring(GSet::orbit(o.n, o.n / 2), ch));
}

int run_norm(const Options& o) {
  validate_order(o.n);
  NormFunctor nf(BaseRing::parse(o.ring), o.n);
  if (as_json(o)) {
    Json j = header("norm");
    j["ring"] = o.ring;
    j["functor"] = io::mackey_functor(nf.mackey());
    emit(j);
  } else {
    print_functor(std::cout, nf.mackey(), "norm of " + o.ring);
  }
  return 0;
}

int run_hh(const Options& o) {
  validate_order(o.n);
  require(o.max_degree <= 6, "--max-degree is limited to 6");
  GreenFunctor r = hh_input(o);
  CyclicNerve nv = twisted_cyclic_nerve(r, o.max_degree + 1);
  MackeyComplex c = moore_complex(nv.simplicial);
  std::vector<MackeyHomology> hs;
  for (std::size_t k = 0; k <= o.max_degree; ++k) hs.push_back(homology(c, k));
  if (as_json(o)) {
    Json j = header("hh");
    j["ring"] = o.ring;
    j["input"] = o.input;
    j["n"] = o.n;
    Json degrees = Json::array();
    for (const auto& h : hs) degrees.push_back(Json{{"degree", h.degree}, {"homology", io::mackey_functor(h.functor)}});
    j["degrees"] = degrees;
    if (o.chains) {
      Json chains = Json::array(), bd = Json::array();
      for (std::size_t k = 0; k < c.chains.size(); ++k) chains.push_back(io::presentation(c.chains[k]));
      for (std::size_t k = 1; k < c.boundary.size(); ++k) {
        Json b = Json::object();
        for (const auto& [d, m] : c.boundary[k].maps) b[std::to_string(d)] = io::matrix(m);
        bd.push_back(Json{{"degree", k}, {"levels", b}});
      }
      j["complex"] = Json{{"chains", chains}, {"boundary", bd}};
    }
    emit(j);
  } else {
    const bool uses_ring = o.input == "norm" || o.input == "fixed" || o.input == "swap";
    const std::string what = o.input + (uses_ring ? " " + o.ring : "");
    for (const auto& h : hs) print_functor(std::cout, h.functor, "HH_" + std::to_string(h.degree) + " of " + what);
  }
  return 0;
}

int run_witt(const Options& o) {
  validate_order(o.n);
  const BaseRing ring = BaseRing::parse(o.ring);
  require(o.search_limit <= 4096, "--search-limit is limited to 4096");
  ClassicalComparison c = compare_with_classical(ring, o.n, o.search_limit);
  GreenWittVectors w = witt_green(ring, o.n);
  const MackeyFunctor& top = w.underlying();
  const std::string verdict = c.report.ok() ? "isomorphic" : "not isomorphic";
  std::vector<WittVector> gens;
  for (std::size_t i = 0; i < top.gens(o.n); ++i) gens.push_back(to_classical(w, o.n, unit_vec(top.gens(o.n), i)));
  if (as_json(o)) {
    Json j = header("witt");
    j["ring"] = o.ring;
    j["n"] = o.n;
    j["verdict"] = verdict;
    j["green"] = io::mackey_functor(top);
    Json images = Json::array();
    for (const auto& g : gens) images.push_back(io::witt_vector(g));
    j["classical"] = Json{{"group", c.classical_group}, {"generator_images", images}};
    if (c.search) j["search"] = Json{{"found", c.search->map.has_value()}, {"nodes", c.search->nodes}, {"exhausted", c.search->exhausted}};
    j["checks"] = io::report(c.report);
    emit(j);
  } else {
    print_functor(std::cout, top, "HH_0 of the norm of " + o.ring);
    std::cout << "classical W_<" << o.n << ">(" << o.ring << "): " << c.classical_group << '\n';
    for (std::size_t i = 0; i < gens.size(); ++i) std::cout << "  generator " << i << " -> " << gens[i] << '\n';
    if (c.search)
      std::cout << "ring isomorphism search: " << (c.search->map ? "found" : "none") << " after " << c.search->nodes << " nodes\n";
    print_report(std::cout, c.report, "comparison");
    std::cout << "verdict: " << verdict << '\n';
  }
  return c.report.ok() ? 0 : 1;
}

int run_tr(const Options& o) {
  require(is_prime(o.p), "tr requires a prime --p");
  require(o.stages >= 1 && o.stages <= 5, "--stages must be between 1 and 5");
  require(o.degree <= 3, "--degree is limited to 3");
  const std::string ring = o.ring.empty() ? "F_" + std::to_string(o.p) : o.ring;
  TrTower t = tr_tower(BaseRing::parse(ring), o.p, o.stages, o.degree);
  if (as_json(o)) {
    Json j = header("tr");
    j["ring"] = ring;
    j["p"] = o.p;
    j["degree"] = o.degree;
    Json tower = io::tower(t);
    for (auto& [k, v] : tower.items()) j[k] = v;
    emit(j);
  } else {
    long n = 1;
    std::cout << "TR_" << o.degree << " of " << ring << " at p = " << o.p << '\n';
    for (std::size_t i = 0; i < t.stages.size(); ++i, n *= o.p) {
      std::cout << "  C_" << std::left << std::setw(5) << n << std::right << t.stages[i].str();
      if (i > 0) std::cout << "  -> " << matrix_text(t.maps[i - 1]);
      std::cout << '\n';
    }
    std::cout << "limit: " << t.limit << " (precision " << t.precision << ")\n";
  }
  return 0;
}

int run_check(const Options& o) {
  std::vector<const suites::Suite*> chosen;
  if (o.suite == "all") {
    for (const auto& s : suites::all()) chosen.push_back(&s);
  } else {
    const suites::Suite* s = suites::find(o.suite);
    require(s != nullptr, "unknown suite " + o.suite);
    chosen.push_back(s);
  }
  bool ok = true;
  Json results = Json::array();
  for (const auto* s : chosen) {
    suites::Outcome out = suites::run(*s, o.seed);
    ok = ok && out.report.ok();
    std::cerr << out.name << ": " << std::fixed << std::setprecision(2) << out.seconds << " s\n";
    if (as_json(o)) {
      Json r = io::report(out.report);
      r["suite"] = out.name;
      r["cases"] = out.cases;
      results.push_back(r);
    } else {
      std::cout << (out.report.ok() ? "PASS " : "FAIL ") << out.name << "  " << out.cases << " cases, " << out.report.checks
                << " checks\n";
      for (const auto& f : out.report.failures) std::cout << "    " << f << '\n';
    }
  }
  if (as_json(o)) {
    Json j = header("check");
    j["seed"] = o.seed;
    j["suites"] = results;
    j["ok"] = ok;
    emit(j);
  }
  return ok ? 0 : 1;
}

PointedGMonoid load_monoid(const Options& o) {
  require(o.file.empty() != o.builtin.empty(), "monoid needs exactly one of --file and --builtin");
  if (!o.builtin.empty()) {
    if (o.builtin == "unit") return unit_monoid(o.n);
    if (o.builtin == "dual") return dual_number_monoid(o.n);
    require(o.n % 2 == 0, "--builtin swap needs an even --n");
    return swapped_idempotents(o.n);
  }
  std::ifstream in(o.file);
  require(static_cast<bool>(in), "cannot read " + o.file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(o.file + " is not valid JSON");
  }
  return io::monoid(j, o.n);
}

int run_monoid(const Options& o) {
  validate_order(o.n);
  require(o.n <= 12, "monoid computations are limited to --n 12");
  require(o.max_degree <= 2, "--max-degree is limited to 2 for monoids");
  PointedGMonoid m = load_monoid(o);
  GreenFunctor r = o.base == "burnside" ? burnside(o.n) : [&] {
    BaseRing ring = BaseRing::parse(o.base);
    return fixed_point_green(trivial_ring(o.n, ring.has_torsion() ? Int(ring.modulus()) : Int(0)));
  }();
  GreenFunctor alg = monoid_algebra(r, m);
  AxiomReport forms = compare_monoid_algebras(r, m);
  SplittingReport s = splitting_check(r, m, o.max_degree);
  if (as_json(o)) {
    Json j = header("monoid");
    j["base"] = o.base;
    j["n"] = o.n;
    j["elements"] = m.names;
    j["algebra"] = io::mackey_functor(alg.mackey());
    j["constructions_agree"] = io::report(forms);
    Json degrees = Json::array();
    for (std::size_t k = 0; k < s.left.size(); ++k)
      degrees.push_back(Json{{"degree", k}, {"hochschild", io::mackey_functor(s.left[k])}, {"cellular", io::mackey_functor(s.right[k])}});
    j["splitting"] = Json{{"degrees", degrees}, {"checks", io::report(s.report)}};
    emit(j);
  } else {
    print_functor(std::cout, alg.mackey(), o.base + "[M]");
    print_report(std::cout, forms, "direct and box constructions");
    for (std::size_t k = 0; k < s.left.size(); ++k) {
      print_functor(std::cout, s.left[k], "HH_" + std::to_string(k) + " of " + o.base + "[M]");
      print_functor(std::cout, s.right[k], "H_" + std::to_string(k) + " of the cellular side");
    }
    print_report(std::cout, s.report, "splitting");
  }
  return forms.ok() && s.report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Hochschild homology of Green functors over cyclic groups"};
  app.require_subcommand(1);
  Options o;

  auto output_flags = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "emit JSON");
    c->add_option("--output", o.output, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto ring_flags = [&](CLI::App* c, bool required) {
    c->add_option("--ring", o.ring, "Z, Z/m or F_p")->required(required);
    c->add_option("--n", o.n, "order of the cyclic group")->required(required);
  };

  CLI::App* norm = app.add_subcommand("norm", "norm of a commutative ring to C_n");
  ring_flags(norm, true);
  output_flags(norm);

  CLI::App* hh = app.add_subcommand("hh", "twisted Hochschild homology");
  ring_flags(hh, true);
  hh->add_option("--max-degree", o.max_degree, "largest homological degree");
  hh->add_option("--input", o.input, "norm, fixed, burnside, gaussian or swap")
      ->check(CLI::IsMember({"norm", "fixed", "burnside", "gaussian", "swap"}));
  hh->add_flag("--chains", o.chains, "include the chain complex in JSON output");
  output_flags(hh);

  CLI::App* witt = app.add_subcommand("witt", "compare with classical Witt vectors");
  ring_flags(witt, true);
  witt->add_option("--search-limit", o.search_limit, "largest ring searched for an isomorphism");
  output_flags(witt);

  CLI::App* tr = app.add_subcommand("tr", "algebraic TR tower");
  o.ring.clear();
  tr->add_option("--ring", o.ring, "base ring, F_p by default");
  tr->add_option("--p", o.p, "prime")->required();
  tr->add_option("--stages", o.stages, "number of stages");
  tr->add_option("--degree", o.degree, "homological degree");
  output_flags(tr);

  CLI::App* check = app.add_subcommand("check", "run property suites");
  check->add_option("--suite", o.suite, "all or a suite name");
  check->add_option("--seed", o.seed, "seed for randomized suites");
  output_flags(check);

  CLI::App* monoid = app.add_subcommand("monoid", "monoid algebras and the cyclic nerve splitting");
  monoid->add_option("--file", o.file, "monoid JSON");
  monoid->add_option("--builtin", o.builtin, "unit, dual or swap")->check(CLI::IsMember({"unit", "dual", "swap"}));
  monoid->add_option("--base", o.base, "burnside or a ring with trivial action");
  monoid->add_option("--n", o.n, "order of the cyclic group")->required();
  monoid->add_option("--max-degree", o.max_degree, "largest homological degree");
  output_flags(monoid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (!tr->parsed() && o.ring.empty()) o.ring = "Z";
  if (monoid->parsed() && !monoid->count("--max-degree")) o.max_degree = 1;

  try {
    if (norm->parsed()) return run_norm(o);
    if (hh->parsed()) return run_hh(o);
    if (witt->parsed()) return run_witt(o);
    if (tr->parsed()) return run_tr(o);
    if (check->parsed()) return run_check(o);
    return run_monoid(o);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
