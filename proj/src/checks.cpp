#include "cw/checks.hpp"

#include <random>

#include "cw/algebra/bar.hpp"
#include "cw/algebra/hecke.hpp"
#include "cw/algebra/random.hpp"
#include "cw/algebra/relations.hpp"
#include "cw/exact/rational_function.hpp"
#include "cw/specializations/monoid.hpp"
#include "cw/yokonuma/yokonuma.hpp"

namespace cw {

namespace {

CheckResult from_report(std::string name, const RelationReport& r) {
  return {std::move(name), r.ok, r.checks, r.first_failure};
}

struct Counter {
  CheckResult result;
  explicit Counter(std::string name) { result.name = std::move(name); result.ok = true; }
  void record(bool holds, const std::string& what) {
    ++result.cases;
    if (!holds && result.ok) {
      result.ok = false;
      result.detail = what;
    }
  }
};

}  // namespace

CheckSuite check_cw_relations(const SubgroupLattice& lattice, Flavor flavor,
                              const std::optional<std::vector<Rational>>& u) {
  const CoxeterSystem& sys = lattice.system();
  FlavorView view(lattice, flavor);
  const auto nc = static_cast<std::size_t>(sys.num_simple_classes());
  CheckSuite suite;
  Parameters<Rational> numeric;
  if (u) {
    if (u->size() != 1 && u->size() != nc)
      throw BadConfig("expected 1 or " + std::to_string(nc) + " parameter values");
    for (std::size_t c = 0; c < nc; ++c) numeric.per_class.push_back(u->size() == 1 ? u->front() : (*u)[c]);
    CwAlgebra<Rational> alg(view, numeric);
    suite.results.push_back(from_report("defining relations", check_defining_relations(alg)));
  } else {
    Parameters<Laurent> p;
    for (std::size_t c = 0; c < nc; ++c) p.per_class.push_back(Laurent::var(static_cast<int>(c)));
    CwAlgebra<Laurent> alg(view, p);
    suite.results.push_back(from_report("defining relations", check_defining_relations(alg)));
    for (std::size_t c = 0; c < nc; ++c) numeric.per_class.push_back(Rational(static_cast<long>(3 + 2 * c)));
  }
  CwAlgebra<Rational> alg(view, numeric);
  const std::size_t rank = certify_rank(alg);
  suite.results.push_back({"rank of the regular module", rank == alg.dimension(), 1,
                           rank == alg.dimension() ? "" : "rank " + std::to_string(rank) + " of " +
                                                                std::to_string(alg.dimension())});
  return suite;
}

CheckSuite check_hecke(const SubgroupLattice& lattice, std::size_t pairs, std::uint64_t seed) {
  const CoxeterSystem& sys = lattice.system();
  std::mt19937_64 rng(seed);
  const int nc = sys.num_simple_classes();
  Parameters<Laurent> p;
  for (int c = 0; c < nc; ++c) p.per_class.push_back(Laurent::var(c));
  FlavorView full(lattice, Flavor::full);
  CwAlgebra<Laurent> alg(full, p);
  HeckeAlgebra<Laurent> hecke(sys, p);
  CheckSuite suite;

  Counter hom("projection is multiplicative");
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto x = random_element(alg, rng, 3), y = random_element(alg, rng, 3);
    hom.record(hecke_project(alg, alg.mul(x, y)) == hecke.mul(hecke_project(alg, x), hecke_project(alg, y)),
               "pair " + std::to_string(i));
  }
  suite.results.push_back(hom.result);

  Counter split("projection splits");
  for (Element w = 0; w < sys.size(); ++w)
    split.record(hecke_project(alg, hecke_split(alg, w)) == hecke.T(w), "T_" + std::to_string(w));
  suite.results.push_back(split.result);

  Counter kernel("e_J x - x lies in the kernel");
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto x = random_element(alg, rng, 3);
    const std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(0, full.size() - 1)(rng);
    kernel.record(hecke_project(alg, alg.left_e_class(k, x) - x).is_zero(), "sample " + std::to_string(i));
  }
  suite.results.push_back(kernel.result);

  if (lattice.has_root_closure()) {
    FlavorView closed(lattice, Flavor::closed), parab(lattice, Flavor::parabolic);
    CwAlgebra<Laurent> ac(closed, p), ap(parab, p);
    Counter tower("flavor tower commutes");
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto x = random_element(alg, rng, 3), y = random_element(alg, rng, 3);
      const auto xc = change_flavor(alg, ac, x), yc = change_flavor(alg, ac, y);
      const auto xy = alg.mul(x, y);
      const bool to_closed = change_flavor(alg, ac, xy) == ac.mul(xc, yc);
      const bool to_parab = change_flavor(ac, ap, ac.mul(xc, yc)) ==
                            ap.mul(change_flavor(ac, ap, xc), change_flavor(ac, ap, yc));
      const bool composite = change_flavor(ac, ap, xc) == change_flavor(alg, ap, x);
      const bool to_hecke = hecke_project(ap, change_flavor(alg, ap, xy)) == hecke_project(alg, xy);
      tower.record(to_closed && to_parab && composite && to_hecke, "pair " + std::to_string(i));
    }
    suite.results.push_back(tower.result);
  }
  return suite;
}

CheckSuite check_bar(const SubgroupLattice& lattice, std::size_t samples, std::uint64_t seed) {
  const CoxeterSystem& sys = lattice.system();
  std::mt19937_64 rng(seed);
  const int nc = sys.num_simple_classes();
  FlavorView view(lattice, Flavor::full);
  CwAlgebra<Laurent> alg(view, bar_parameters(sys));
  HeckeAlgebra<Laurent> hecke(sys, bar_parameters(sys));
  CheckSuite suite;
  auto bar = [&](const auto& x) { return bar_involution(alg, x); };

  Counter inv("bar is an involution"), mult("bar is multiplicative"), square("bar commutes with projection");
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = random_element(alg, rng, 3, nc), y = random_element(alg, rng, 3, nc);
    const std::string at = "sample " + std::to_string(i);
    inv.record(bar(bar(x)) == x, at);
    mult.record(bar(alg.mul(x, y)) == alg.mul(bar(x), bar(y)), at);
    square.record(hecke_project(alg, bar(x)) == hecke_bar(hecke, hecke_project(alg, x)), at);
  }
  suite.results.push_back(inv.result);
  suite.results.push_back(mult.result);
  suite.results.push_back(square.result);

  // H_s = -v^{-1} g_s
  Counter formulas("H_s^{-1} and H_s^2 formulas");
  for (int s = 0; s < sys.rank(); ++s) {
    const Laurent v = Laurent::var(sys.simple_class(s));
    const Laurent vi = *v.try_inverse();
    const auto one = alg.one(), e = alg.e_simple(s);
    const auto h = (-vi) * alg.g(s);
    const auto h_inv = (-v) * alg.g_inverse(s);
    auto rhs_inv = (v * v) * h;
    rhs_inv += (v - vi) * alg.mul(e, one - v * h);
    formulas.record(h_inv == rhs_inv, "H_s^{-1} for s=" + std::to_string(s));
    auto rhs_sq = (vi * vi) * one;
    rhs_sq += (v - vi) * alg.mul(e, vi * one - h);
    formulas.record(alg.mul(h, h) == rhs_sq, "H_s^2 for s=" + std::to_string(s));
    formulas.record(bar(h) == h_inv, "bar(H_s) = H_s^{-1} for s=" + std::to_string(s));
    formulas.record(bar(e) == e, "bar(e_s) = e_s for s=" + std::to_string(s));
  }
  suite.results.push_back(formulas.result);
  return suite;
}

CheckSuite check_monoid(const SubgroupLattice& lattice, std::size_t words, std::uint64_t seed) {
  using Vec = SparseVector<Rational>;
  const CoxeterSystem& sys = lattice.system();
  std::mt19937_64 rng(seed);
  FlavorView full(lattice, Flavor::full), parab(lattice, Flavor::parabolic);
  const auto ones = Parameters<Rational>::uniform(sys, Rational(1));
  // b_s does not depend on u; a generic value keeps g_s - g_s e_s honest
  CwAlgebra<Rational> alg(full, Parameters<Rational>::uniform(sys, Rational(7)));
  CwAlgebra<Rational> ap(parab, ones);
  CheckSuite suite;

  Counter cube("b_s^3 = b_s"), derived("b_s = g_s - g_s e_s");
  for (std::uint32_t i = 0; i < alg.dimension(); ++i) {
    const Vec x = Vec::unit(i);
    for (int s = 0; s < sys.rank(); ++s) {
      const Vec b = monoid_b(alg, s, x);
      cube.record(monoid_word(alg, {s, s, s}, x) == b, "basis " + std::to_string(i));
      derived.record(alg.left_g(s, x - alg.left_e(sys.simple_reflection(s), x)) == b, "basis " + std::to_string(i));
    }
  }
  suite.results.push_back(cube.result);
  suite.results.push_back(derived.result);

  if (sys.rank() >= 2 && sys.coxeter_matrix(0, 1) == 3) {
    Counter ce("b_s^2 b_t^3 b_s^2 = b_s b_t b_s b_t b_s");
    for (std::uint32_t i = 0; i < alg.dimension(); ++i) {
      const Vec x = Vec::unit(i);
      ce.record(monoid_word(alg, {0, 0, 1, 1, 1, 0, 0}, x) == monoid_word(alg, {0, 1, 0, 1, 0}, x),
                "basis " + std::to_string(i));
    }
    suite.results.push_back(ce.result);
  }

  Counter conj("x/y sign conjugation");
  for (std::uint32_t i = 0; i < ap.dimension(); ++i) {
    const Vec y = Vec::unit(i);
    for (int s = 0; s < sys.rank(); ++s)
      conj.record(sign_normalize(ap, monoid_b(ap, s, sign_normalize(ap, y))) == positive_b(ap, s, y),
                  "basis " + std::to_string(i));
  }
  suite.results.push_back(conj.result);

  Counter pos("positive coefficients on random words");
  for (std::size_t i = 0; i < words; ++i) {
    const auto word = random_word(rng, sys.rank(), 16);
    const Vec y = positive_form(ap, word, ap.one());
    bool nonneg = true;
    for (const auto& [idx, c] : y) nonneg = nonneg && Rational(0) < c;
    const bool agrees = sign_normalize(ap, monoid_word(ap, word, ap.one())) == y;
    pos.record(nonneg && agrees, "word " + std::to_string(i));
  }
  suite.results.push_back(pos.result);
  return suite;
}

CheckSuite check_yokonuma(int d, int n) {
  YokonumaAlgebra<RationalFunction> y(d, n, RationalFunction::u());
  CheckSuite suite;
  suite.results.push_back(from_report("Y relations", y_check_relations(y)));
  suite.results.push_back(from_report("C_A relations on Y", y_check_cw_relations(y)));
  return suite;
}

}  // namespace cw
