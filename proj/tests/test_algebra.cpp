#include <doctest.h>

#include <bit>
#include <map>
#include <random>

#include "cw/algebra/bar.hpp"
#include "cw/algebra/cw_algebra.hpp"
#include "cw/algebra/hecke.hpp"
#include "cw/algebra/random.hpp"
#include "cw/algebra/relations.hpp"
#include "cw/algebra/serialize.hpp"
#include "cw/checks.hpp"
#include "cw/exact/prime_field.hpp"
#include "cw/exact/rational_function.hpp"
#include "models.hpp"

using namespace cw;

namespace {

struct Setup {
  CoxeterSystem sys;
  SubgroupLattice lat;
  FlavorView view;
  explicit Setup(CoxeterType t, Flavor f = Flavor::full)
      : sys(CoxeterSystem::build(t)), lat(SubgroupLattice::build(sys)), view(lat, f) {}
  Setup(const Setup&) = delete;
};

/// 4x4 (or any) inverse by Gauss-Jordan.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational f = Rational(1) / a[c][c];
    for (std::size_t k = 0; k < n; ++k) a[c][k] *= f, inv[c][k] *= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational g = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= g * a[c][k], inv[r][k] -= g * inv[c][k];
    }
  }
  return inv;
}

}  // namespace

TEST_CASE("A1 multiplication table") {
  Setup a1(CoxeterType::A(1));
  const RationalFunction u = RationalFunction::u();
  const CwAlgebra<RationalFunction> alg(a1.view, Parameters<RationalFunction>::uniform(a1.sys, u));
  REQUIRE(alg.dimension() == 4);
  const Element s = a1.sys.simple_element(0);
  const auto g = alg.g(0), e = alg.e_simple(0);
  // g^2 = 1 + (u - 1) e + (u - 1) e g
  auto expected = alg.one() + alg.basis(1, 0, u - 1) + alg.basis(1, s, u - 1);
  CHECK(alg.mul(g, g) == expected);
  CHECK(alg.mul(g, e) == alg.basis(1, s));
  CHECK(alg.mul(e, g) == alg.basis(1, s));
  CHECK(alg.mul(e, e) == e);
  // on the e-part g acts as a Hecke generator: g (e g) = u e + (u - 1) e g
  CHECK(alg.left_g(0, alg.basis(1, s)) == alg.basis(1, 0, u) + alg.basis(1, s, u - 1));
  CHECK(alg.mul(g, alg.g_inverse(0)) == alg.one());
  CHECK(alg.mul(alg.g_inverse(0), g) == alg.one());
}

TEST_CASE("A1 inverse against a direct matrix inverse") {
  Setup a1(CoxeterType::A(1));
  const CwAlgebra<Rational> alg(a1.view, Parameters<Rational>::uniform(a1.sys, Rational(3)));
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4, Rational(0)));
  for (std::uint32_t j = 0; j < 4; ++j)
    for (const auto& [i, c] : alg.left_g(0, SparseVector<Rational>::unit(j))) m[i][j] = c;
  const auto inv = invert(m);
  for (std::uint32_t j = 0; j < 4; ++j) {
    const auto col = alg.left_g_inverse(0, SparseVector<Rational>::unit(j));
    std::vector<Rational> dense(4, Rational(0));
    for (const auto& [i, c] : col) dense[i] = c;
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(dense[i] == inv[i][j]);
  }
  // u = 3: g^{-1} = g + (1/3 - 1) e + (1/3 - 1) e g
  const Rational a = Rational(1, 3) - Rational(1);
  CHECK(alg.g_inverse(0) == alg.g(0) + alg.basis(1, 0, a) + alg.basis(1, a1.sys.simple_element(0), a));
}

TEST_CASE("left and right operators commute") {
  Setup a3(CoxeterType::A(3));
  const CwAlgebra<Rational> alg(a3.view, Parameters<Rational>::uniform(a3.sys, Rational(5)));
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<std::uint32_t> refl(0, 5);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_element(alg, rng, 4);
    const int s = gen(rng), t = gen(rng);
    const std::uint32_t r1 = refl(rng), r2 = refl(rng);
    CHECK(alg.left_g(s, alg.right_g(x, t)) == alg.right_g(alg.left_g(s, x), t));
    CHECK(alg.left_e(r1, alg.right_g(x, t)) == alg.right_g(alg.left_e(r1, x), t));
    CHECK(alg.left_g(s, alg.right_e(x, r2)) == alg.right_e(alg.left_g(s, x), r2));
    CHECK(alg.left_e(r1, alg.right_e(x, r2)) == alg.right_e(alg.left_e(r1, x), r2));
  }
}

TEST_CASE("product agrees with the operators and is associative") {
  Setup b2(CoxeterType::B(2));
  const CwAlgebra<Rational> alg(b2.view, Parameters<Rational>{{Rational(2), Rational(-3)}});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(alg, rng, 3), y = random_element(alg, rng, 3), z = random_element(alg, rng, 2);
    CHECK(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
    const int s = static_cast<int>(rng() % 2);
    const auto t = static_cast<std::uint32_t>(rng() % 4);
    CHECK(alg.mul(alg.g(s), x) == alg.left_g(s, x));
    CHECK(alg.mul(x, alg.g(s)) == alg.right_g(x, s));
    CHECK(alg.mul(alg.e(t), x) == alg.left_e(t, x));
    CHECK(alg.mul(x, alg.e(t)) == alg.right_e(x, t));
    CHECK(alg.mul(alg.one(), x) == x);
    CHECK(alg.mul(x, alg.one()) == x);
  }
}

TEST_CASE("two reduced words of the A2 longest element") {
  Setup a2(CoxeterType::A(2));
  const RationalFunction u = RationalFunction::u();
  const CwAlgebra<RationalFunction> alg(a2.view, Parameters<RationalFunction>::uniform(a2.sys, u));
  const auto one = alg.one();
  const auto w010 = alg.left_g(0, alg.left_g(1, alg.left_g(0, one)));
  const auto w101 = alg.left_g(1, alg.left_g(0, alg.left_g(1, one)));
  CHECK(w010 == w101);
  CHECK(w010 == alg.g_element(a2.sys.longest()));
  CHECK(w010.size() == 1);
}

TEST_CASE("defining relations and rank") {
  const Flavor flavors[] = {Flavor::full, Flavor::parabolic, Flavor::closed};
  for (const auto& type : {CoxeterType::A(1), CoxeterType::A(2), CoxeterType::A(3), CoxeterType::B(2),
                           CoxeterType::G2(), CoxeterType::I2(5)}) {
    for (Flavor f : flavors) {
      if (f == Flavor::closed && !type.crystallographic()) continue;
      CAPTURE(type.name());
      CAPTURE(static_cast<int>(f));
      Setup st(type, f);
      const CwAlgebra<Laurent> alg(st.view, bar_parameters(st.sys));
      const auto rep = check_defining_relations(alg);
      CHECK_MESSAGE(rep.ok, rep.first_failure);
      CHECK(rep.checks > 0);
      const CwAlgebra<Fp31> modp(st.view, Parameters<Fp31>::uniform(st.sys, Fp31(1234567)));
      CHECK(certify_rank(modp) == modp.dimension());
    }
  }
}

TEST_CASE("parameter count is validated") {
  Setup a2(CoxeterType::A(2));
  CHECK_THROWS_AS(CwAlgebra<Rational>(a2.view, Parameters<Rational>{{Rational(2), Rational(3)}}), BadConfig);
}

TEST_CASE("check suites") {
  Setup g2(CoxeterType::G2());
  const auto cw = check_cw_relations(g2.lat, Flavor::closed, std::vector<Rational>{Rational(2), Rational(3)});
  CHECK(cw.ok());
  CHECK(check_hecke(g2.lat, 20, 1).ok());
  CHECK(check_bar(g2.lat, 10, 1).ok());
}

TEST_CASE("Hecke algebra against an independent permutation model") {
  for (const model::Model& m : {model::a(2), model::a(3), model::b(2), model::b(3), model::i2(6)}) {
    CAPTURE(m.type.name());
    Setup st(m.type);
    const auto gens = model::matched_generators(st.sys, m);
    REQUIRE(!gens.empty());
    const Rational u(7, 2);
    const HeckeAlgebra<Rational> hecke(st.sys, Parameters<Rational>::uniform(st.sys, u));
    const oracle::HeckeModel<Rational> oracle(gens, u);
    REQUIRE(oracle.length.size() == st.sys.size());
    auto to_oracle = [&](const SparseVector<Rational>& h) {
      oracle::HeckeModel<Rational>::Elem out;
      for (const auto& [w, c] : h) out[model::image(st.sys, gens, w)] += c;
      return out;
    };
    for (Element w = 0; w < st.sys.size(); ++w) CHECK(oracle.length.at(model::image(st.sys, gens, w)) == st.sys.length(w));
    std::mt19937_64 rng(static_cast<std::uint64_t>(st.sys.size()));
    for (int i = 0; i < 60; ++i) {
      SparseVector<Rational> x, y;
      for (int k = 0; k < 3; ++k) {
        x += SparseVector<Rational>::unit(static_cast<std::uint32_t>(rng() % st.sys.size()), Rational(random_nonzero(rng, 4)));
        y += SparseVector<Rational>::unit(static_cast<std::uint32_t>(rng() % st.sys.size()), Rational(random_nonzero(rng, 4)));
      }
      CHECK(to_oracle(hecke.mul(x, y)) == oracle.mul(to_oracle(x), to_oracle(y)));
    }
    // the projection e_J g_w -> T_w is an algebra map, and T_w -> g_w e_W splits it
    const CwAlgebra<Rational> alg(st.view, Parameters<Rational>::uniform(st.sys, u));
    for (int i = 0; i < 40; ++i) {
      const auto x = random_element(alg, rng, 3), y = random_element(alg, rng, 3);
      CHECK(to_oracle(hecke_project(alg, alg.mul(x, y))) ==
            oracle.mul(to_oracle(hecke_project(alg, x)), to_oracle(hecke_project(alg, y))));
      const auto a = static_cast<Element>(rng() % st.sys.size()), b = static_cast<Element>(rng() % st.sys.size());
      CHECK(alg.mul(hecke_split(alg, a), hecke_split(alg, b)) == hecke_split(alg, hecke.mul(hecke.T(a), hecke.T(b))));
    }
    for (Element w = 0; w < st.sys.size(); ++w) CHECK(hecke_project(alg, hecke_split(alg, w)) == hecke.T(w));
  }
}

TEST_CASE("flavor quotients are algebra maps") {
  Setup full(CoxeterType::B(2));
  const FlavorView par(full.lat, Flavor::parabolic), closed(full.lat, Flavor::closed);
  const Parameters<Rational> p{{Rational(3), Rational(-2)}};
  const CwAlgebra<Rational> a(full.view, p), b(par, p), c(closed, p);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const auto x = random_element(a, rng, 3), y = random_element(a, rng, 3);
    CHECK(change_flavor(a, b, a.mul(x, y)) == b.mul(change_flavor(a, b, x), change_flavor(a, b, y)));
    CHECK(change_flavor(a, c, a.mul(x, y)) == c.mul(change_flavor(a, c, x), change_flavor(a, c, y)));
    CHECK(change_flavor(c, b, change_flavor(a, c, x)) == change_flavor(a, b, x));
  }
  CHECK(b.dimension() < c.dimension());
  CHECK(c.dimension() < a.dimension());
}

TEST_CASE("bar involution") {
  for (const auto& type : {CoxeterType::A(2), CoxeterType::B(2)}) {
    CAPTURE(type.name());
    Setup st(type);
    const CwAlgebra<Laurent> alg(st.view, bar_parameters(st.sys));
    const auto mask = static_cast<int>(bar_variable_mask(st.sys));
    std::mt19937_64 rng(31);
    for (int s = 0; s < st.sys.rank(); ++s) {
      CHECK(bar_involution(alg, alg.g(s)) == alg.g_inverse(s));
      CHECK(bar_involution(alg, alg.e_simple(s)) == alg.e_simple(s));
    }
    for (int i = 0; i < 25; ++i) {
      const auto x = random_element(alg, rng, 3, std::popcount(static_cast<unsigned>(mask)));
      const auto y = random_element(alg, rng, 2, std::popcount(static_cast<unsigned>(mask)));
      CHECK(bar_involution(alg, bar_involution(alg, x)) == x);
      CHECK(bar_involution(alg, alg.mul(x, y)) == alg.mul(bar_involution(alg, x), bar_involution(alg, y)));
    }
  }
}

TEST_CASE("non-simple e_t are conjugates of simple ones") {
  Setup b3(CoxeterType::B(3));
  const CwAlgebra<Laurent> alg(b3.view, bar_parameters(b3.sys));
  std::size_t checked = 0;
  for (std::uint32_t t = 0; t < b3.sys.num_reflections(); ++t) {
    if (b3.sys.simple_index_of(t) >= 0) continue;
    for (Element w = 0; w < b3.sys.size(); ++w)
      for (int s = 0; s < b3.sys.rank(); ++s) {
        if (b3.sys.conjugate_reflection(w, b3.sys.simple_reflection(s)) != t) continue;
        // g_w^{-1} = g_{s_k}^{-1} ... g_{s_1}^{-1}
        auto ginv = alg.one();
        for (int r : b3.sys.reduced_word(w)) ginv = alg.left_g_inverse(r, ginv);
        CHECK(alg.mul(alg.mul(alg.g_element(w), alg.e_simple(s)), ginv) == alg.e(t));
        ++checked;
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("serialization") {
  Setup a1(CoxeterType::A(1));
  const CwAlgebra<Rational> alg(a1.view, Parameters<Rational>::uniform(a1.sys, Rational(2)));
  const auto terms = serialize(alg, alg.mul(alg.g(0), alg.g(0)));
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].class_bits == "0");
  CHECK(terms[0].coefficient == "1");
  CHECK(terms[1].class_bits == "1");
  CHECK(terms[2].element == a1.sys.simple_element(0));
}
