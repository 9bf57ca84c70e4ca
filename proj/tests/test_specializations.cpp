#include <doctest.h>

#include <random>

#include "cw/algebra/cw_algebra.hpp"
#include "cw/algebra/random.hpp"
#include "cw/errors.hpp"
#include "cw/exact/prime_field.hpp"
#include "cw/exact/rational_function.hpp"
#include "cw/specializations/ishii.hpp"
#include "cw/specializations/monoid.hpp"
#include "cw/specializations/psi.hpp"
#include "cw/specializations/semisimple.hpp"
#include "cw/specializations/spectrum.hpp"

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

template <Scalar S>
LambdaParams<S> uniform_lambda(const CoxeterSystem& sys, const S& l) {
  return LambdaParams<S>::uniform(sys, l);
}

}  // namespace

TEST_CASE("Psi satisfies the braid relations") {
  for (const auto& type : {CoxeterType::A(2), CoxeterType::B(2), CoxeterType::G2()}) {
    CAPTURE(type.name());
    Setup st(type);
    // one u variable per class (x0, x1), lambda = x2 on every class
    Parameters<Laurent> u;
    for (int c = 0; c < st.sys.num_simple_classes(); ++c) u.per_class.push_back(Laurent::var(c));
    const CwAlgebra<Laurent> alg(st.view, u);
    const auto lambda = uniform_lambda(st.sys, Laurent::var(2));
    const int m = st.sys.coxeter_matrix(0, 1);
    std::vector<int> w01, w10;
    for (int i = 0; i < m; ++i) w01.push_back(i % 2), w10.push_back(1 - i % 2);
    CHECK(psi_word(alg, w01, lambda) == psi_word(alg, w10, lambda));
    // lambda = 0 gives back g_s
    for (int s = 0; s < 2; ++s) CHECK(psi_generator(alg, s, uniform_lambda(st.sys, Laurent(0))) == alg.g(s));
  }
}

TEST_CASE("Psi is multiplicative on words") {
  for (const auto& type : {CoxeterType::A(2), CoxeterType::B(2)}) {
    CAPTURE(type.name());
    Setup st(type);
    const CwAlgebra<Rational> alg(st.view, Parameters<Rational>::uniform(st.sys, Rational(5, 3)));
    const auto lambda = uniform_lambda(st.sys, Rational(-2, 7));
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_word(rng, 2, 6), b = random_word(rng, 2, 6);
      std::vector<int> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      CHECK(psi_word(alg, ab, lambda) == alg.mul(psi_word(alg, a, lambda), psi_word(alg, b, lambda)));
    }
  }
}

TEST_CASE("Psi inverses") {
  Setup a2(CoxeterType::A(2));
  // lambda = 3/2, -5/7 and lambda = u
  const RationalFunction u = RationalFunction::u();
  const CwAlgebra<RationalFunction> alg(a2.view, Parameters<RationalFunction>::uniform(a2.sys, u));
  for (const RationalFunction l : {RationalFunction(Rational(3, 2)), RationalFunction(Rational(-5, 7)), u}) {
    const auto lambda = uniform_lambda(a2.sys, l);
    for (int s = 0; s < 2; ++s) {
      CHECK(alg.mul(psi_inverse(alg, s, lambda), psi_generator(alg, s, lambda)) == alg.one());
      CHECK(alg.mul(psi_generator(alg, s, lambda), psi_inverse(alg, s, lambda)) == alg.one());
    }
  }
  CHECK_THROWS_AS(psi_inverse(alg, 0, uniform_lambda(a2.sys, RationalFunction(-1))), NonInvertibleLambda);

  Setup a1(CoxeterType::A(1));
  const CwAlgebra<RationalFunction> one(a1.view, Parameters<RationalFunction>::uniform(a1.sys, u));
  const auto inv = psi_inverse(one, 0, uniform_lambda(a1.sys, RationalFunction(0)));
  const RationalFunction c = RationalFunction::one() / u - 1;
  CHECK(inv == one.g(0) + one.basis(1, 0, c) + one.basis(1, a1.sys.simple_element(0), c));
}

TEST_CASE("A1 spectrum") {
  Setup a1(CoxeterType::A(1));
  Parameters<Laurent> p{{Laurent::var(0)}};
  const CwAlgebra<Laurent> alg(a1.view, p);
  const Laurent u = Laurent::var(0), l = Laurent::var(1);
  // fully symbolic: u = x0, lambda = x1
  const auto sym = a1_spectrum(alg, l);
  CHECK(sym.all_verified());
  CHECK(sym.eigenvalues[1] == u * (Laurent(1) + l));
  CHECK(psi_apply(alg, 0, l, sym.vectors[3]) == (Laurent(-1) - l) * sym.vectors[3]);

  const CwAlgebra<Rational> bad(a1.view, Parameters<Rational>::uniform(a1.sys, Rational(-1)));
  CHECK_THROWS_AS(a1_spectrum(bad, Rational(0)), DegenerateParameters);

  const RationalFunction uf = RationalFunction::u();
  const CwAlgebra<RationalFunction> q(a1.view, Parameters<RationalFunction>::uniform(a1.sys, uf));
  for (const RationalFunction lam : {RationalFunction(0), RationalFunction(Rational(2, 5)), uf * uf}) {
    const auto sp = a1_spectrum(q, lam);
    CHECK(sp.all_verified());
    CHECK(sp.eigenvalues[1] == uf * (RationalFunction::one() + lam));
    CHECK(sp.eigenvalues[3] == -RationalFunction::one() - lam);
  }
  const auto zero = a1_spectrum(q, RationalFunction(0));
  CHECK(zero.eigenvalues[0] == RationalFunction(1));
  CHECK(zero.eigenvalues[1] == uf);
  CHECK(zero.eigenvalues[2] == RationalFunction(-1));
  CHECK(zero.eigenvalues[3] == RationalFunction(-1));
  CHECK(q.left_g(0, zero.vectors[1]) == uf * zero.vectors[1]);
  // the four vectors form a basis
  RowEchelonBasis<RationalFunction> b(q.dimension());
  for (const auto& v : zero.vectors) b.reduce_insert(v);
  CHECK(b.rank() == 4);
}

TEST_CASE("A1 discriminant against the product of squared root differences") {
  const auto d = a1_discriminant();
  const Laurent u = Laurent::var(0), l = Laurent::var(1), X = Laurent::var(2);
  const Laurent one(1);
  const Laurent roots[] = {one, u * (one + l), -one, -one - l};
  Laurent charpoly = one, disc = one;
  for (int i = 0; i < 4; ++i) {
    charpoly *= X - roots[i];
    for (int j = i + 1; j < 4; ++j) disc *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  }
  CHECK(d.characteristic_polynomial == charpoly);
  CHECK(d.discriminant == disc);
  const Laurent two(2);
  const Laurent closed = Laurent(4) * (l + two).pow(2) * (l * u + u - one).pow(2) * (one + u).pow(2) * (one + l).pow(2) *
                         (l * u + one + u).pow(2) * l.pow(2);
  CHECK(d.closed_form == closed);
  CHECK(d.matches);
  CHECK(d.normalization == Rational(1));
}

TEST_CASE("braid image dimensions") {
  Setup a1(CoxeterType::A(1)), a2(CoxeterType::A(2)), a3(CoxeterType::A(3));
  const RationalFunction u = RationalFunction::u();
  {
    const CwAlgebra<RationalFunction> alg(a1.view, Parameters<RationalFunction>::uniform(a1.sys, u));
    CHECK(braid_image_dimension(alg, uniform_lambda(a1.sys, RationalFunction(0))) == 3);
    const CwAlgebra<Fp31> modp(a1.view, Parameters<Fp31>::uniform(a1.sys, Fp31(17)));
    CHECK(braid_image_dimension(modp, uniform_lambda(a1.sys, Fp31(0))) == 3);
  }
  {
    const CwAlgebra<RationalFunction> alg(a2.view, Parameters<RationalFunction>::uniform(a2.sys, u));
    CHECK(braid_image_dimension(alg, uniform_lambda(a2.sys, RationalFunction(0))) == 20);
    BraidImageOptions omit;
    omit.inverses = InverseMode::omit;
    CHECK(braid_image_dimension(alg, uniform_lambda(a2.sys, RationalFunction(0)), omit) == 20);
    BraidImageOptions tight;
    tight.max_dim = 10;
    CHECK_THROWS_AS(braid_image_dimension(alg, uniform_lambda(a2.sys, RationalFunction(0)), tight), BudgetExceeded);
  }
  for (long uv : {17L, 127L}) {
    CAPTURE(uv);
    const CwAlgebra<Fp31> alg(a3.view, Parameters<Fp31>::uniform(a3.sys, Fp31(uv)));
    CHECK(braid_image_dimension(alg, uniform_lambda(a3.sys, Fp31(0))) == 217);
  }
  const CwAlgebra<Fp61> big(a3.view, Parameters<Fp61>::uniform(a3.sys, Fp61(127)));
  CHECK(braid_image_dimension(big, uniform_lambda(a3.sys, Fp61(0))) == 217);
}

TEST_CASE("Ishii relations") {
  Setup a2(CoxeterType::A(2));
  const RationalFunction u = RationalFunction::u();
  const CwAlgebra<RationalFunction> alg(a2.view, Parameters<RationalFunction>::uniform(a2.sys, u));
  const auto rep = ishii_check(alg);
  CHECK(rep.first);
  CHECK(rep.second);
  CHECK(rep.cubic);
  CHECK(rep.all());
  CHECK(ishii_relations(alg, u, RationalFunction(1)).second);
  CHECK_FALSE(ishii_relations(alg, RationalFunction(2), u).second);
  Setup a3(CoxeterType::A(3));
  const CwAlgebra<RationalFunction> other(a3.view, Parameters<RationalFunction>::uniform(a3.sys, u));
  CHECK_THROWS_AS(ishii_check(other), BadConfig);
}

TEST_CASE("monoid representation") {
  Setup a2(CoxeterType::A(2)), a2p(CoxeterType::A(2), Flavor::parabolic);
  const CwAlgebra<Rational> alg(a2.view, Parameters<Rational>::uniform(a2.sys, Rational(11)));
  using Vec = SparseVector<Rational>;
  for (std::uint32_t i = 0; i < alg.dimension(); ++i) {
    const Vec x = Vec::unit(i);
    for (int s = 0; s < 2; ++s) {
      CHECK(monoid_word(alg, {s, s, s}, x) == monoid_b(alg, s, x));
      // b_s is Psi at lambda = -1
      CHECK(monoid_b(alg, s, x) == psi_apply(alg, s, Rational(-1), x));
    }
    CHECK(monoid_word(alg, {0, 0, 1, 1, 1, 0, 0}, x) == monoid_word(alg, {0, 1, 0, 1, 0}, x));
    CHECK(monoid_word(alg, {1, 1, 0, 0, 0, 1, 1}, x) == monoid_word(alg, {1, 0, 1, 0, 1}, x));
  }
  // the braid relation itself holds for the b_s
  for (std::uint32_t i = 0; i < alg.dimension(); ++i)
    CHECK(monoid_word(alg, {0, 1, 0}, Vec::unit(i)) == monoid_word(alg, {1, 0, 1}, Vec::unit(i)));

  const CwAlgebra<Rational> par(a2p.view, Parameters<Rational>::uniform(a2p.sys, Rational(1)));
  for (std::uint32_t i = 0; i < par.dimension(); ++i)
    for (int s = 0; s < 2; ++s)
      CHECK(sign_normalize(par, monoid_b(par, s, sign_normalize(par, Vec::unit(i)))) == positive_b(par, s, Vec::unit(i)));
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const auto word = random_word(rng, 2, 16);
    const Vec y = positive_form(par, word, par.one());
    for (const auto& [idx, c] : y) CHECK(Rational(0) < c);
    CHECK(sign_normalize(par, monoid_word(par, word, par.one())) == y);
  }
  CHECK_THROWS_AS(positive_b(alg, 0, alg.one()), BadConfig);
}

TEST_CASE("semisimplicity at u = 1") {
  Setup a1(CoxeterType::A(1)), a2(CoxeterType::A(2)), b2(CoxeterType::B(2));
  const auto r1 = semisimplicity_u1(a1.view);
  CHECK(r1.dimension == 4);
  CHECK(r1.gram_rank == 4);
  const auto r2 = semisimplicity_u1(a2.view);
  CHECK(r2.dimension == 30);
  CHECK(r2.gram_rank == 30);
  CHECK(r2.semisimple);
  const auto rb = semisimplicity_u1(b2.view);
  CHECK(rb.dimension == 64);
  CHECK(rb.gram_rank == 64);
  CHECK_THROWS_AS(semisimplicity_u1(b2.view, 10), BudgetExceeded);
  for (const auto& type : {CoxeterType::A(3), CoxeterType::B(3), CoxeterType::G2(), CoxeterType::H3()}) {
    const auto sys = CoxeterSystem::build(type);
    const auto lat = SubgroupLattice::build(sys);
    CHECK(block_dimension_sum(lat) == lat.size() * sys.size());
  }
}
