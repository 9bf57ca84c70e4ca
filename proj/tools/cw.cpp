// Command-line front end: Bell tables, relation checks, braid images.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cw/algebra/serialize.hpp"
#include "cw/checks.hpp"
#include "cw/exact/prime_field.hpp"
#include "cw/exact/rational_function.hpp"
#include "cw/lattice/cache.hpp"
#include "cw/specializations/ishii.hpp"
#include "cw/specializations/psi.hpp"
#include "cw/specializations/semisimple.hpp"
#include "cw/specializations/spectrum.hpp"
#include "cw/yokonuma/yokonuma.hpp"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kBudget = 2, kCheckFailed = 3, kBadConfig = 4 };

struct Globals {
  std::string format = "json";
  std::string cache_dir;
  int jobs = 1;
  int prime = 31;
  std::size_t max_dim = 0;  // 0: the command's own default
  std::size_t max_states = 5'000'000;
  bool reproducible = false;
  std::uint64_t seed = 1;
};

/// One emitted record: flat columns for csv/text, nested json for json.
struct Record {
  std::string command;
  std::string type;
  json params = json::object();
  json result = json::object();
  long elapsed_ms = 0;
  bool cache_hit = false;
};

std::size_t cap(const Globals& g, std::size_t fallback) { return g.max_dim ? g.max_dim : fallback; }

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void emit(const Globals& g, const std::vector<Record>& records) {
  if (g.format == "json") {
    json out = json::array();
    for (const auto& r : records) {
      out.push_back({{"command", r.command},
                     {"type", r.type},
                     {"params", r.params},
                     {"result", r.result},
                     {"elapsed_ms", r.elapsed_ms},
                     {"cache_hit", r.cache_hit}});
    }
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return;
  }
  // result keys in sorted order; values that are arrays/objects are dumped as json
  if (g.format == "csv") {
    bool header = false;
    for (const auto& r : records) {
      if (!header) {
        std::cout << "command,type";
        for (const auto& [k, v] : r.result.items()) std::cout << "," << k;
        std::cout << ",elapsed_ms,cache_hit\n";
        header = true;
      }
      std::cout << r.command << "," << r.type;
      for (const auto& [k, v] : r.result.items()) {
        std::string cell = scalar_text(v);
        if (cell.find_first_of(",\"\n") != std::string::npos) {
          std::string quoted = "\"";
          for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
          cell = quoted + "\"";
        }
        std::cout << "," << cell;
      }
      std::cout << "," << r.elapsed_ms << "," << (r.cache_hit ? "true" : "false") << "\n";
    }
    return;
  }
  for (const auto& r : records) {
    std::cout << r.command << " " << r.type << "\n";
    for (const auto& [k, v] : r.result.items()) std::cout << "  " << k << ": " << scalar_text(v) << "\n";
  }
}

std::optional<std::filesystem::path> cache_dir(const Globals& g) {
  if (g.reproducible) return std::nullopt;
  if (!g.cache_dir.empty()) return std::filesystem::path(g.cache_dir);
  if (const char* env = std::getenv("CW_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

class Timer {
 public:
  long ms(const Globals& g) const {
    if (g.reproducible) return 0;
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Loaded {
  cw::CoxeterSystem sys;
  std::optional<cw::SubgroupLattice> lattice;
  bool cache_hit = false;
};

/// The system and its lattice; the lattice refers to `sys`, so the pair is
/// heap-allocated and never moved.
std::unique_ptr<Loaded> load(const Globals& g, const std::string& type_text, cw::BuildMode mode) {
  const auto type = cw::CoxeterType::parse(type_text);
  auto out = std::make_unique<Loaded>(Loaded{cw::CoxeterSystem::build(type, mode), std::nullopt, false});
  cw::LatticeOptions opts;
  opts.state_cap = g.max_states;
  out->lattice.emplace(cw::cached_lattice(cache_dir(g), out->sys, opts, &out->cache_hit));
  return out;
}

cw::Flavor parse_flavor(const std::string& s) {
  if (s == "full") return cw::Flavor::full;
  if (s == "parabolic") return cw::Flavor::parabolic;
  if (s == "closed") return cw::Flavor::closed;
  throw cw::BadConfig("unknown flavor '" + s + "' (full, parabolic, closed)");
}

std::vector<cw::Rational> parse_list(const std::string& text) {
  std::vector<cw::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(cw::Rational::parse(item));
  if (out.empty()) throw cw::BadConfig("empty parameter list");
  return out;
}

json suite_json(const cw::CheckSuite& suite) {
  json checks = json::array();
  for (const auto& r : suite.results)
    checks.push_back({{"name", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"detail", r.detail}});
  return {{"status", suite.ok() ? "pass" : "fail"}, {"checks", checks}};
}

// ---- commands

int cmd_bell(const Globals& g, const std::vector<std::string>& types) {
  std::vector<Record> records(types.size());
  auto run = [&](std::size_t i) {
    Timer t;
    auto loaded = load(g, types[i], cw::BuildMode::lattice_only);
    const auto rep = cw::bell_report(*loaded->lattice);
    Record& r = records[i];
    r.command = "bell";
    r.type = rep.type.name();
    r.result = {{"group_order", loaded->sys.group_order()},
                {"bell_full", rep.bell_full},
                {"bell_parabolic", rep.bell_parabolic},
                {"bell_closed", rep.bell_closed ? json(*rep.bell_closed) : json(nullptr)},
                {"algebra_rank", rep.algebra_rank}};
    r.cache_hit = loaded->cache_hit;
    r.elapsed_ms = t.ms(g);
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, g.jobs));
  for (std::size_t base = 0; base < types.size(); base += jobs) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = base; i < std::min(types.size(), base + jobs); ++i)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run, i));
    for (auto& f : batch) f.get();
  }
  emit(g, records);
  return kOk;
}

int finish_check(const Globals& g, Record r, const cw::CheckSuite& suite, const Timer& t) {
  r.result = suite_json(suite);
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return suite.ok() ? kOk : kCheckFailed;
}

int cmd_check(const Globals& g, const std::string& what, const std::vector<std::string>& args,
              const std::string& flavor, const std::string& u, std::size_t samples) {
  Timer t;
  Record r;
  r.command = "check " + what;
  if (what == "y") {
    if (args.size() != 2) throw cw::BadConfig("usage: check y D N");
    const int d = std::stoi(args[0]), n = std::stoi(args[1]);
    r.type = "Y(" + args[0] + "," + args[1] + ")";
    r.params = {{"d", d}, {"n", n}};
    return finish_check(g, r, cw::check_yokonuma(d, n), t);
  }
  if (args.size() != 1) throw cw::BadConfig("usage: check " + what + " TYPE");
  auto loaded = load(g, args[0], cw::BuildMode::full);
  r.type = loaded->sys.type().name();
  r.cache_hit = loaded->cache_hit;
  const auto& lat = *loaded->lattice;
  if (what == "cw") {
    std::optional<std::vector<cw::Rational>> values;
    if (u != "symbolic") values = parse_list(u);
    r.params = {{"flavor", flavor}, {"u", u}};
    return finish_check(g, r, cw::check_cw_relations(lat, parse_flavor(flavor), values), t);
  }
  r.params = {{"samples", samples}, {"seed", g.seed}};
  if (what == "hecke") return finish_check(g, r, cw::check_hecke(lat, samples, g.seed), t);
  if (what == "bar") return finish_check(g, r, cw::check_bar(lat, samples, g.seed), t);
  throw cw::BadConfig("unknown check '" + what + "' (cw, hecke, bar, y)");
}

template <cw::FieldScalar F>
std::size_t dim_over(const cw::FlavorView& view, const cw::Parameters<F>& u, const cw::LambdaParams<F>& lambda,
                     cw::InverseMode inverses, std::size_t max_dim) {
  cw::CwAlgebra<F> alg(view, u);
  return cw::braid_image_dimension(alg, lambda, {inverses, max_dim});
}

template <cw::FieldScalar F>
cw::Parameters<F> per_class(const cw::CoxeterSystem& sys, const std::vector<cw::Rational>& values) {
  const auto nc = static_cast<std::size_t>(sys.num_simple_classes());
  if (values.size() != 1 && values.size() != nc)
    throw cw::BadConfig("expected 1 or " + std::to_string(nc) + " values");
  cw::Parameters<F> p;
  for (std::size_t c = 0; c < nc; ++c) {
    const cw::Rational& v = values.size() == 1 ? values.front() : values[c];
    if constexpr (std::is_same_v<F, cw::Rational>) {
      p.per_class.push_back(v);
    } else if constexpr (std::is_same_v<F, cw::RationalFunction>) {
      p.per_class.push_back(cw::RationalFunction(v));
    } else {
      p.per_class.push_back(F::from_rational(v));
    }
  }
  return p;
}

int cmd_dim(const Globals& g, const std::string& type_text, const std::string& lambda_text, const std::string& u,
            bool mod_p, const std::string& inverses_text) {
  Timer t;
  auto loaded = load(g, type_text, cw::BuildMode::full);
  const auto& sys = loaded->sys;
  cw::FlavorView view(*loaded->lattice, cw::Flavor::full);
  const auto lambda = parse_list(lambda_text);
  cw::InverseMode inverses = cw::InverseMode::automatic;
  if (inverses_text == "include") inverses = cw::InverseMode::include;
  else if (inverses_text == "omit") inverses = cw::InverseMode::omit;
  else if (inverses_text != "auto") throw cw::BadConfig("--inverses must be auto, include or omit");
  std::string scalar;
  std::size_t dim = 0;
  if (u == "symbolic") {
    if (mod_p) throw cw::BadConfig("--mod-p needs a numeric --u");
    scalar = "Q(u)";
    dim = dim_over(view, cw::Parameters<cw::RationalFunction>::uniform(sys, cw::RationalFunction::u()),
                   per_class<cw::RationalFunction>(sys, lambda), inverses, cap(g, 100000));
  } else if (mod_p && g.prime == 31) {
    scalar = "F_p, p = " + std::to_string(cw::kDefaultPrime);
    dim = dim_over(view, per_class<cw::Fp31>(sys, parse_list(u)), per_class<cw::Fp31>(sys, lambda), inverses,
                   cap(g, 100000));
  } else if (mod_p) {
    scalar = "F_p, p = " + std::to_string(cw::kConfirmationPrime);
    dim = dim_over(view, per_class<cw::Fp61>(sys, parse_list(u)), per_class<cw::Fp61>(sys, lambda), inverses,
                   cap(g, 100000));
  } else {
    scalar = "Q";
    dim = dim_over(view, per_class<cw::Rational>(sys, parse_list(u)), per_class<cw::Rational>(sys, lambda),
                   inverses, cap(g, 100000));
  }
  Record r;
  r.command = "dim";
  r.type = sys.type().name();
  r.params = {{"lambda", lambda_text}, {"u", u}, {"scalar", scalar}, {"inverses", inverses_text}};
  r.result = {{"dimension", dim}, {"scalar", scalar}};
  r.cache_hit = loaded->cache_hit;
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return kOk;
}

/// "u" stands for the parameter itself, anything else is a rational literal.
template <class S>
S ishii_parameter(const std::string& text, const S& u) {
  if (text == "u") return u;
  return S(cw::Rational::parse(text));
}

int cmd_ishii(const Globals& g, const std::string& u, const std::string& t0, const std::string& t1) {
  Timer t;
  auto loaded = load(g, "A2", cw::BuildMode::full);
  cw::FlavorView view(*loaded->lattice, cw::Flavor::full);
  cw::IshiiReport rep;
  if (u == "symbolic") {
    const auto uf = cw::RationalFunction::u();
    cw::CwAlgebra<cw::RationalFunction> alg(view, cw::Parameters<cw::RationalFunction>::uniform(loaded->sys, uf));
    rep = cw::ishii_relations(alg, ishii_parameter(t0, uf), ishii_parameter(t1, uf));
  } else {
    cw::CwAlgebra<cw::Rational> alg(view, per_class<cw::Rational>(loaded->sys, parse_list(u)));
    rep = cw::ishii_relations(alg, ishii_parameter(t0, alg.u(0)), ishii_parameter(t1, alg.u(0)));
  }
  Record r;
  r.command = "ishii";
  r.type = "A2";
  r.params = {{"u", u}, {"t0", t0}, {"t1", t1}};
  r.result = {{"first_relation", rep.first}, {"second_relation", rep.second}, {"cubic", rep.cubic},
              {"status", rep.all() ? "pass" : "fail"}};
  r.cache_hit = loaded->cache_hit;
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return rep.all() ? kOk : kCheckFailed;
}

int cmd_monoid(const Globals& g, const std::string& type_text, std::size_t words) {
  Timer t;
  auto loaded = load(g, type_text, cw::BuildMode::full);
  Record r;
  r.command = "monoid";
  r.type = loaded->sys.type().name();
  r.params = {{"words", words}, {"seed", g.seed}};
  r.cache_hit = loaded->cache_hit;
  return finish_check(g, r, cw::check_monoid(*loaded->lattice, words, g.seed), t);
}

int cmd_ss(const Globals& g, const std::string& type_text, const std::string& flavor) {
  Timer t;
  auto loaded = load(g, type_text, cw::BuildMode::full);
  cw::FlavorView view(*loaded->lattice, parse_flavor(flavor));
  const auto rep = cw::semisimplicity_u1(view, cap(g, 512));
  Record r;
  r.command = "ss";
  r.type = loaded->sys.type().name();
  r.params = {{"flavor", flavor}, {"u", "1"}};
  r.result = {{"dimension", rep.dimension}, {"gram_rank", rep.gram_rank}, {"semisimple", rep.semisimple},
              {"block_sum", cw::block_dimension_sum(*loaded->lattice)}};
  r.cache_hit = loaded->cache_hit;
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return kOk;
}

int cmd_spectrum(const Globals& g) {
  Timer t;
  auto sys = cw::CoxeterSystem::build(cw::CoxeterType::A(1));
  auto lat = cw::SubgroupLattice::build(sys);
  cw::FlavorView view(lat, cw::Flavor::full);
  cw::CwAlgebra<cw::Laurent> alg(view, cw::Parameters<cw::Laurent>::uniform(sys, cw::Laurent::var(0)));
  const auto sp = cw::a1_spectrum(alg, cw::Laurent::var(1));
  const auto disc = cw::a1_discriminant();
  const std::vector<std::string> names = {"u", "lambda", "X"};
  json eig = json::array();
  for (const auto& e : sp.eigenvalues) eig.push_back(e.to_string(names));
  Record r;
  r.command = "spectrum";
  r.type = "A1";
  r.result = {{"eigenvalues", eig},
              {"eigen_equations", sp.all_verified()},
              {"characteristic_polynomial", disc.characteristic_polynomial.to_string(names)},
              {"discriminant_matches", disc.matches},
              {"normalization", disc.normalization.to_string()},
              {"status", sp.all_verified() && disc.matches ? "pass" : "fail"}};
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return sp.all_verified() && disc.matches ? kOk : kCheckFailed;
}

int cmd_elem(const Globals& g, const std::string& type_text, const std::vector<int>& word, const std::string& lambda,
             const std::string& u, const std::string& flavor) {
  Timer t;
  auto loaded = load(g, type_text, cw::BuildMode::full);
  const auto& sys = loaded->sys;
  for (int s : word)
    if (s < 0 || s >= sys.rank()) throw cw::BadConfig("generator index out of range: " + std::to_string(s));
  cw::FlavorView view(*loaded->lattice, parse_flavor(flavor));
  json terms = json::array();
  auto dump = [&](const auto& alg, const auto& lam) {
    for (const auto& term : cw::serialize(alg, cw::psi_word(alg, word, lam)))
      terms.push_back({term.class_bits, term.element, term.coefficient});
  };
  if (u == "symbolic") {
    cw::CwAlgebra<cw::RationalFunction> alg(
        view, cw::Parameters<cw::RationalFunction>::uniform(sys, cw::RationalFunction::u()));
    dump(alg, per_class<cw::RationalFunction>(sys, parse_list(lambda)));
  } else {
    cw::CwAlgebra<cw::Rational> alg(view, per_class<cw::Rational>(sys, parse_list(u)));
    dump(alg, per_class<cw::Rational>(sys, parse_list(lambda)));
  }
  Record r;
  r.command = "elem";
  r.type = sys.type().name();
  r.params = {{"word", word}, {"lambda", lambda}, {"u", u}, {"flavor", flavor}};
  r.result = {{"terms", terms}, {"size", terms.size()}};
  r.cache_hit = loaded->cache_hit;
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return kOk;
}

int cmd_ytdim(const Globals& g, int d, int n, const std::string& u) {
  Timer t;
  std::size_t dim = 0;
  if (u == "symbolic") {
    cw::YokonumaAlgebra<cw::RationalFunction> y(d, n, cw::RationalFunction::u());
    dim = cw::braids_ties_dimension(y, cap(g, 100000));
  } else {
    cw::YokonumaAlgebra<cw::Rational> y(d, n, cw::Rational::parse(u));
    dim = cw::braids_ties_dimension(y, cap(g, 100000));
  }
  Record r;
  r.command = "ytdim";
  r.type = "Y(" + std::to_string(d) + "," + std::to_string(n) + ")";
  r.params = {{"d", d}, {"n", n}, {"u", u}};
  r.result = {{"dimension", dim}};
  r.elapsed_ms = t.ms(g);
  emit(g, {r});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the extended Hecke algebras C_W(u)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", g.cache_dir, "Lattice cache directory (default: $CW_CACHE_DIR)");
  app.add_option("--jobs", g.jobs, "Worker threads for multi-type jobs")->check(CLI::PositiveNumber);
  app.add_option("--prime", g.prime, "Prime for --mod-p: 31 (2^31-1) or 61 (2^61-1)")->check(CLI::IsMember({31, 61}));
  app.add_option("--max-dim", g.max_dim, "Dimension cap for span computations");
  app.add_option("--max-states", g.max_states, "Cap on reflection subgroup classes");
  app.add_option("--seed", g.seed, "Seed for random samples");
  app.add_flag("--reproducible", g.reproducible, "Zero timings and bypass the cache");

  std::vector<std::string> bell_types;
  auto* bell = app.add_subcommand("bell", "Bell numbers of reflection subgroups");
  bell->add_option("types", bell_types, "Coxeter types, e.g. A3 B4 I2:7 H3")->required();

  std::string check_what, flavor = "full", u = "symbolic";
  std::string ishii_t0 = "1", ishii_t1 = "u";
  std::vector<std::string> check_args;
  std::size_t samples = 100;
  auto* check = app.add_subcommand("check", "Relation and compatibility checks (cw, hecke, bar, y)");
  check->add_option("what", check_what, "cw | hecke | bar | y")->required();
  check->add_option("args", check_args, "TYPE, or D N for y")->required();
  check->add_option("--flavor", flavor, "full | parabolic | closed");
  check->add_option("--u", u, "'symbolic' or comma-separated values per class");
  check->add_option("--samples", samples, "Random samples for hecke/bar");

  std::string dim_type, lambda = "0", inverses = "auto";
  bool mod_p = false;
  auto* dim = app.add_subcommand("dim", "Dimension of the braid group image");
  dim->add_option("type", dim_type)->required();
  dim->add_option("--lambda", lambda, "lambda per class");
  dim->add_option("--u", u, "'symbolic' or values per class");
  dim->add_flag("--mod-p", mod_p, "Work over F_p (see --prime)");
  dim->add_option("--inverses", inverses, "auto | include | omit");

  auto* ishii = app.add_subcommand("ishii", "Ishii's three-strand relations in C_{A2}(u)");
  ishii->add_option("--u", u, "'symbolic' or a value");
  ishii->add_option("--t0", ishii_t0, "t0 in the second relation: 'u' or a value");
  ishii->add_option("--t1", ishii_t1, "t1 in the second relation: 'u' or a value");

  std::string monoid_type;
  std::size_t words = 500;
  auto* monoid = app.add_subcommand("monoid", "The lambda = -1 monoid representation");
  monoid->add_option("type", monoid_type)->required();
  monoid->add_option("--words", words, "Random positive words");

  std::string ss_type;
  auto* ss = app.add_subcommand("ss", "Semisimplicity of C_W(1) via the trace form");
  ss->add_option("type", ss_type)->required();
  ss->add_option("--flavor", flavor, "full | parabolic | closed");

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of g + lambda g e in C_{A1}(u)");

  std::string elem_type;
  std::vector<int> elem_word;
  auto* elem = app.add_subcommand("elem", "Image of a positive braid word, serialized");
  elem->add_option("type", elem_type)->required();
  elem->add_option("--word", elem_word, "Generator indices")->delimiter(',');
  elem->add_option("--lambda", lambda, "lambda per class");
  elem->add_option("--u", u, "'symbolic' or values per class");
  elem->add_option("--flavor", flavor, "full | parabolic | closed");

  int yd = 0, yn = 0;
  auto* ytdim = app.add_subcommand("ytdim", "Dimension of the braids-and-ties subalgebra of Y_{d,n}(u)");
  ytdim->add_option("d", yd)->required();
  ytdim->add_option("n", yn)->required();
  ytdim->add_option("--u", u, "'symbolic' or a value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadConfig;
  }

  try {
    if (*bell) return cmd_bell(g, bell_types);
    if (*check) return cmd_check(g, check_what, check_args, flavor, u, samples);
    if (*dim) return cmd_dim(g, dim_type, lambda, u, mod_p, inverses);
    if (*ishii) return cmd_ishii(g, u, ishii_t0, ishii_t1);
    if (*monoid) return cmd_monoid(g, monoid_type, words);
    if (*ss) return cmd_ss(g, ss_type, flavor);
    if (*spectrum) return cmd_spectrum(g);
    if (*elem) return cmd_elem(g, elem_type, elem_word, lambda, u, flavor);
    if (*ytdim) return cmd_ytdim(g, yd, yn, u);
  } catch (const cw::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const cw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  }
  return kBadConfig;
}
