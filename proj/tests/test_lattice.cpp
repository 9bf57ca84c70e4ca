#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <unistd.h>

#include "cw/algebra/flavor.hpp"
#include "cw/coxeter/system.hpp"
#include "cw/errors.hpp"
#include "cw/lattice/cache.hpp"
#include "cw/lattice/lattice.hpp"
#include "models.hpp"

using namespace cw;
namespace fs = std::filesystem;

namespace {

using model::Model;

std::vector<oracle::Perm> reflection_images(const CoxeterSystem& sys, const Model& m) {
  const auto gens = model::matched_generators(sys, m);
  REQUIRE(!gens.empty());
  return model::reflection_images(sys, gens);
}

std::vector<Model> models() {
  return {model::a(2), model::a(3), model::a(4), model::b(2), model::b(3), model::b(4),
          model::d(3), model::d(4), model::i2(5), model::i2(6), model::i2(8)};
}

}  // namespace

TEST_CASE("subgroup lattice equals the brute-force reflection subgroups") {
  for (const Model& m : models()) {
    CAPTURE(m.type.name());
    const auto sys = CoxeterSystem::build(m.type);
    const auto lat = SubgroupLattice::build(sys);
    const auto images = reflection_images(sys, m);
    std::set<std::set<std::size_t>> lib, ref;
    for (ClassId c = 0; c < lat.size(); ++c) lib.insert(model::to_model(lat.bits(c), images, m));
    const auto subgroups = oracle::reflection_subgroups(m.reflections, m.degree);
    for (const auto& h : subgroups) ref.insert(oracle::reflections_in(h, m.reflections));
    CHECK(lib.size() == lat.size());
    CHECK(lib == ref);
    CHECK(lat.bits(lat.bottom()) == 0);
    CHECK(lat.bits(lat.top()) == (reflection_bit(static_cast<std::uint32_t>(sys.num_reflections())) - 1));
  }
}

TEST_CASE("dyer closure equals the reflections of the generated subgroup") {
  std::mt19937_64 rng(2);
  for (const Model& m : {model::a(4), model::b(4), model::d(4), model::i2(12)}) {
    CAPTURE(m.type.name());
    const auto sys = CoxeterSystem::build(m.type);
    const auto images = reflection_images(sys, m);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(sys.num_reflections() - 1));
    for (int trial = 0; trial < 60; ++trial) {
      ReflectionSet j = 0;
      std::vector<oracle::Perm> gens;
      for (int k = trial % 4; k >= 0; --k) {
        const auto t = pick(rng);
        j |= reflection_bit(t);
        gens.push_back(images[t]);
      }
      const auto h = oracle::generate(gens, m.degree);
      CHECK(model::to_model(dyer_closure(sys, j), images, m) == oracle::reflections_in(h, m.reflections));
    }
  }
}

TEST_CASE("parabolic classes agree with fixers of fixed spaces") {
  for (int n = 2; n <= 4; ++n) {
    for (bool d : {false, true}) {
      if (d && n < 3) continue;
      const Model m = d ? model::d(n) : model::b(n);
      CAPTURE(m.type.name());
      const auto sys = CoxeterSystem::build(m.type);
      const auto lat = SubgroupLattice::build(sys);
      const auto whole = oracle::generate(m.reflections, m.degree);
      const auto subgroups = oracle::reflection_subgroups(m.reflections, m.degree);
      CHECK(lat.bell_parabolic() == oracle::count_parabolics(oracle::SignedModel{n}, whole, subgroups));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto sys = CoxeterSystem::build(CoxeterType::A(n));
    const auto lat = SubgroupLattice::build(sys);
    CHECK(lat.bell_parabolic() == lat.bell_full());
  }
}

TEST_CASE("closed subsystems") {
  const std::size_t b_expected[] = {0, 0, 7, 31, 164};
  for (int n = 2; n <= 4; ++n) {
    const auto sys = CoxeterSystem::build(CoxeterType::B(n));
    const auto lat = SubgroupLattice::build(sys);
    const auto count = oracle::count_closed_subsystems(oracle::roots_b(n));
    CHECK(count == b_expected[n]);
    CHECK(lat.bell_closed() == count);
    // the C-convention (dual roots) gives the same number
    LatticeOptions opts;
    opts.convention = RootConvention::coroots;
    CHECK(SubgroupLattice::build(sys, opts).bell_closed() == count);
  }
  const auto g2 = CoxeterSystem::build(CoxeterType::G2());
  CHECK(SubgroupLattice::build(g2).bell_closed() == oracle::count_closed_subsystems(oracle::roots_g2()));
  CHECK(oracle::count_closed_subsystems(oracle::roots_g2()) == 12);
  const auto h3 = CoxeterSystem::build(CoxeterType::H3());
  const auto lat = SubgroupLattice::build(h3);
  CHECK_FALSE(lat.bell_closed().has_value());
  CHECK_THROWS_AS(lat.root_closure(0), UnsupportedType);
}

TEST_CASE("Bell numbers of type A and D") {
  const auto bell = oracle::bell_triangle(8);
  CHECK(bell == std::vector<std::uint64_t>{1, 1, 2, 5, 15, 52, 203, 877, 4140});
  for (int n = 1; n <= 7; ++n) {
    const auto sys = CoxeterSystem::build(CoxeterType::A(n), BuildMode::lattice_only);
    CHECK(SubgroupLattice::build(sys).bell_full() == bell[static_cast<std::size_t>(n + 1)]);
  }
  for (int n = 2; n <= 5; ++n) {
    const auto sys = CoxeterSystem::build(CoxeterType::D(n), BuildMode::lattice_only);
    CHECK(SubgroupLattice::build(sys).bell_full() == oracle::symmetric_partitions_d(n));
  }
  CHECK(oracle::symmetric_partitions_d(4) == 75);
}

TEST_CASE("dihedral counts are 1 + sigma(m)") {
  for (int m = 3; m <= 50; ++m) {
    CAPTURE(m);
    const auto sys = CoxeterSystem::build(CoxeterType::I2(m));
    const auto lat = SubgroupLattice::build(sys);
    CHECK(lat.bell_full() == 1 + oracle::sigma(m));
    CHECK(lat.bell_parabolic() == static_cast<std::size_t>(m + 2));
  }
}

TEST_CASE("normalizer orders") {
  const auto sys = CoxeterSystem::build(CoxeterType::A(3));
  const auto lat = SubgroupLattice::build(sys);
  const ClassId s3 = lat.find(dyer_closure(sys, reflection_bit(sys.simple_reflection(0)) | reflection_bit(sys.simple_reflection(1))));
  CHECK(lat.normalizer_order(s3) == 6);

  const auto s4 = oracle::generate(oracle::reflections_a(3), 4);
  const auto s3_oracle = oracle::generate({oracle::transposition(4, 0, 1), oracle::transposition(4, 1, 2)}, 4);
  CHECK(oracle::normalizer_order(s4, s3_oracle) == 6);
  CHECK(lat.normalizer_order(lat.top()) == 24);
  CHECK(lat.normalizer_order(lat.bottom()) == 24);

  // orbit sizes times normalizer orders give |W|, and orbits partition the classes
  for (const Model& m : {model::b(3), model::d(4)}) {
    const auto sys2 = CoxeterSystem::build(m.type);
    const auto lat2 = SubgroupLattice::build(sys2);
    const auto images = reflection_images(sys2, m);
    const auto whole = oracle::generate(m.reflections, m.degree);
    std::size_t total = 0;
    for (std::size_t o = 0; o < lat2.num_orbits(); ++o) {
      total += lat2.orbit_size(o);
      const ClassId rep = lat2.orbit_rep(o);
      std::vector<oracle::Perm> gens;
      for (std::uint32_t t = 0; t < sys2.num_reflections(); ++t)
        if (lat2.bits(rep) & reflection_bit(t)) gens.push_back(images[t]);
      CHECK(lat2.normalizer_order(rep) == oracle::normalizer_order(whole, oracle::generate(gens, m.degree)));
    }
    CHECK(total == lat2.size());
  }
}

TEST_CASE("flavor closures form a tower and are equivariant") {
  for (const auto& type : {CoxeterType::A(3), CoxeterType::B(3), CoxeterType::D(4), CoxeterType::G2(), CoxeterType::H3()}) {
    CAPTURE(type.name());
    const auto sys = CoxeterSystem::build(type);
    const auto lat = SubgroupLattice::build(sys);
    std::vector<Flavor> flavors{Flavor::full, Flavor::parabolic};
    if (lat.has_root_closure()) flavors.push_back(Flavor::closed);
    for (ClassId c = 0; c < lat.size(); ++c) {
      for (Flavor f : flavors) {
        const ClassId k = lat.flavor_closure(f, c);
        CHECK(lat.flavor_closure(f, k) == k);
        CHECK(lat.contains(k, c));
        for (int s = 0; s < sys.rank(); ++s) CHECK(lat.flavor_closure(f, lat.conj_simple(s, c)) == lat.conj_simple(s, k));
      }
      CHECK(lat.flavor_closure(Flavor::full, c) == c);
      if (lat.has_root_closure()) CHECK(lat.contains(lat.parabolic_closure(c), lat.root_closure(c)));
    }
    for (Flavor f : flavors) {
      const FlavorView view(lat, f);
      for (std::uint32_t k = 0; k < view.size(); ++k) {
        CHECK(view.from_full(view.full_id(k)) == k);
        for (std::uint32_t t = 0; t < sys.num_reflections(); ++t)
          CHECK(lat.contains(view.full_id(view.join_reflection(k, t)), view.full_id(k)));
      }
    }
  }
}

TEST_CASE("lattice joins and conjugation") {
  const auto sys = CoxeterSystem::build(CoxeterType::B(3));
  const auto lat = SubgroupLattice::build(sys);
  for (ClassId a = 0; a < lat.size(); ++a) {
    for (std::uint32_t t = 0; t < sys.num_reflections(); ++t)
      CHECK(lat.bits(lat.join_reflection(a, t)) == dyer_closure(sys, lat.bits(a) | reflection_bit(t)));
    for (int s = 0; s < sys.rank(); ++s) {
      CHECK(lat.bits(lat.conj_simple(s, a)) == conjugate_set(sys, sys.simple_reflection(s), lat.bits(a)));
      CHECK(lat.conj_simple(s, lat.conj_simple(s, a)) == a);
    }
  }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<ClassId> pick(0, lat.top());
  for (int i = 0; i < 200; ++i) {
    const ClassId a = pick(rng), b = pick(rng);
    CHECK(lat.bits(lat.join(a, b)) == dyer_closure(sys, lat.bits(a) | lat.bits(b)));
    const Element w = static_cast<Element>(rng() % sys.size());
    ReflectionSet conj = 0;
    for (std::uint32_t t = 0; t < sys.num_reflections(); ++t)
      if (lat.bits(a) & reflection_bit(t)) conj |= reflection_bit(sys.conjugate_reflection(w, t));
    CHECK(lat.bits(lat.conj_element(w, a)) == conj);
  }
}

TEST_CASE("cache round trip and corruption") {
  const fs::path dir = fs::temp_directory_path() / ("cw-lattice-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto sys = CoxeterSystem::build(CoxeterType::B(3));
  bool hit = true;
  const auto built = cached_lattice(dir, sys, {}, &hit);
  CHECK_FALSE(hit);
  const fs::path file = lattice_cache_path(dir, sys.type(), RootConvention::roots);
  REQUIRE(fs::exists(file));
  CHECK(file.filename() == "lattice-B3-roots.txt");

  const auto again = cached_lattice(dir, sys, {}, &hit);
  CHECK(hit);
  CHECK(again.size() == built.size());
  for (ClassId c = 0; c < built.size(); ++c) {
    CHECK(again.bits(c) == built.bits(c));
    CHECK(again.parabolic_closure(c) == built.parabolic_closure(c));
    CHECK(again.root_closure(c) == built.root_closure(c));
  }

  {  // flip one digit in the body
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(60);
    f.put('7');
  }
  CHECK_FALSE(load_cached_lattice(dir, sys).has_value());
  const auto rebuilt = cached_lattice(dir, sys, {}, &hit);
  CHECK_FALSE(hit);
  CHECK(rebuilt.size() == built.size());
  CHECK(load_cached_lattice(dir, sys).has_value());

  std::ofstream(file, std::ios::trunc) << "garbage";
  CHECK_FALSE(load_cached_lattice(dir, sys).has_value());

  // a cache for another type is never picked up
  store_lattice(dir, built);
  fs::copy_file(file, lattice_cache_path(dir, CoxeterType::A(3), RootConvention::roots));
  const auto a3 = CoxeterSystem::build(CoxeterType::A(3));
  CHECK_FALSE(load_cached_lattice(dir, a3).has_value());

  const auto snap = built.snapshot();
  CHECK(SubgroupLattice::from_snapshot(sys, snap).size() == built.size());
  auto bad = snap;
  std::swap(bad.bits[1], bad.bits[2]);
  bad.bits[1] |= reflection_bit(0) | reflection_bit(1);
  CHECK_THROWS_AS(SubgroupLattice::from_snapshot(sys, bad), BadConfig);
  fs::remove_all(dir);
}
