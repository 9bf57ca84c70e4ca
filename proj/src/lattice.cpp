#include "cw/lattice/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cw/errors.hpp"

namespace cw {

namespace {

template <class F>
void for_each_bit(ReflectionSet b, F&& f) {
  while (b) {
    f(static_cast<std::uint32_t>(std::countr_zero(b)));
    b &= b - 1;
  }
}

/// Root-sum lookup tables: for positive p, q, the positive root r with
/// alpha_p + alpha_q = alpha_r, and the r with alpha_p - alpha_q = ±alpha_r.
class RootSums {
 public:
  RootSums(const CoxeterSystem& sys, RootConvention conv) : n_(sys.num_reflections()) {
    if (!sys.type().crystallographic() || !sys.has_root_coordinates())
      throw UnsupportedType("root closure needs a crystallographic type, not " + sys.type().name());
    const int rank = sys.rank();
    std::vector<std::vector<std::int64_t>> vec(n_);
    for (std::uint32_t p = 0; p < n_; ++p) {
      const auto& c = sys.root_coordinates(p);
      vec[p].resize(static_cast<std::size_t>(rank));
      for (int j = 0; j < rank; ++j) {
        std::int64_t x = c[static_cast<std::size_t>(j)].a;
        if (conv == RootConvention::coroots) {
          // beta^vee = sum beta_j (|alpha_j|^2 / |beta|^2) alpha_j^vee
          x *= sys.root_norm(sys.simple_reflection(j));
          if (x % sys.root_norm(p) != 0) throw Error("non-integral coroot coordinates");
          x /= sys.root_norm(p);
        }
        vec[p][static_cast<std::size_t>(j)] = x;
      }
    }
    std::map<std::vector<std::int64_t>, std::uint32_t> index;
    for (std::uint32_t p = 0; p < n_; ++p) index.emplace(vec[p], p);
    plus_.assign(n_ * n_, -1);
    minus_.assign(n_ * n_, -1);
    std::vector<std::int64_t> v(static_cast<std::size_t>(rank));
    for (std::uint32_t p = 0; p < n_; ++p) {
      for (std::uint32_t q = 0; q < n_; ++q) {
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = vec[p][j] + vec[q][j];
        if (auto it = index.find(v); it != index.end()) plus_[p * n_ + q] = static_cast<int>(it->second);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = vec[p][j] - vec[q][j];
        if (auto it = index.find(v); it != index.end()) minus_[p * n_ + q] = static_cast<int>(it->second);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = -v[j];
        if (auto it = index.find(v); it != index.end()) minus_[p * n_ + q] = static_cast<int>(it->second);
      }
    }
  }

  ReflectionSet close(const CoxeterSystem& sys, ReflectionSet j) const {
    while (true) {
      ReflectionSet prev;
      do {
        prev = j;
        ReflectionSet add = 0;
        for_each_bit(j, [&](std::uint32_t p) {
          for_each_bit(j, [&](std::uint32_t q) {
            int a = plus_[p * n_ + q], b = minus_[p * n_ + q];
            if (a >= 0) add |= reflection_bit(static_cast<std::uint32_t>(a));
            if (b >= 0) add |= reflection_bit(static_cast<std::uint32_t>(b));
          });
        });
        j |= add;
      } while (j != prev);
      ReflectionSet d = dyer_closure(sys, j);
      if (d == j) return j;
      j = d;
    }
  }

 private:
  std::size_t n_;
  std::vector<int> plus_;
  std::vector<int> minus_;
};

}  // namespace

ReflectionSet dyer_closure(const CoxeterSystem& sys, ReflectionSet closed, ReflectionSet extra) {
  ReflectionSet d = closed;
  ReflectionSet pending = extra & ~d;
  while (pending) {
    const auto x = static_cast<std::uint32_t>(std::countr_zero(pending));
    pending &= pending - 1;
    if (d & reflection_bit(x)) continue;
    d |= reflection_bit(x);
    for_each_bit(d, [&](std::uint32_t y) {
      ReflectionSet z = reflection_bit(sys.conj(x, y)) | reflection_bit(sys.conj(y, x));
      pending |= z & ~d;
    });
  }
  return d;
}

ReflectionSet dyer_closure(const CoxeterSystem& sys, ReflectionSet j) { return dyer_closure(sys, 0, j); }

ReflectionSet conjugate_set(const CoxeterSystem& sys, std::uint32_t r, ReflectionSet j) {
  ReflectionSet out = 0;
  for_each_bit(j, [&](std::uint32_t t) { out |= reflection_bit(sys.conj(r, t)); });
  return out;
}

ReflectionSet root_subsystem_closure(const CoxeterSystem& sys, ReflectionSet j, RootConvention convention) {
  return RootSums(sys, convention).close(sys, j);
}

SubgroupLattice SubgroupLattice::build(const CoxeterSystem& sys, const LatticeOptions& options) {
  if (sys.num_reflections() > 64)
    throw UnsupportedType(sys.type().name() + " has more than 64 reflections");
  const std::size_t n = sys.num_reflections();
  SubgroupLattice lat;
  lat.sys_ = &sys;
  lat.nrefl_ = n;
  lat.rank_ = static_cast<std::size_t>(sys.rank());
  lat.convention_ = options.convention;

  std::unordered_map<ReflectionSet, ClassId> tmp_id;
  std::vector<ReflectionSet> tmp_bits{0};
  std::vector<ClassId> tmp_join;
  tmp_id.emplace(0, 0);
  for (std::size_t c = 0; c < tmp_bits.size(); ++c) {
    const ReflectionSet cur = tmp_bits[c];
    tmp_join.resize((c + 1) * n);
    for (std::uint32_t t = 0; t < n; ++t) {
      ReflectionSet d = (cur & reflection_bit(t)) ? cur : dyer_closure(sys, cur, reflection_bit(t));
      auto [it, inserted] = tmp_id.emplace(d, static_cast<ClassId>(tmp_bits.size()));
      if (inserted) {
        if (tmp_bits.size() >= options.state_cap)
          throw BudgetExceeded("subgroup enumeration for " + sys.type().name() + " passed the state cap of " +
                               std::to_string(options.state_cap));
        tmp_bits.push_back(d);
      }
      tmp_join[c * n + t] = it->second;
    }
  }
  // deterministic ids: sort by bitset value
  std::vector<ClassId> order(tmp_bits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ClassId a, ClassId b) { return tmp_bits[a] < tmp_bits[b]; });
  std::vector<ClassId> new_id(tmp_bits.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<ClassId>(i);
  lat.bits_.resize(tmp_bits.size());
  for (std::size_t i = 0; i < order.size(); ++i) lat.bits_[i] = tmp_bits[order[i]];
  lat.join_ = std::make_shared<JoinCache>();
  std::call_once(lat.join_->once, [&] {
    auto& table = lat.join_->table;
    table.resize(tmp_join.size());
    for (std::size_t old = 0; old < tmp_bits.size(); ++old)
      for (std::size_t t = 0; t < n; ++t) table[new_id[old] * n + t] = new_id[tmp_join[old * n + t]];
  });
  lat.finish(options, false);
  lat.check_flavor_compatibility();
  return lat;
}

SubgroupLattice SubgroupLattice::from_snapshot(const CoxeterSystem& sys, Snapshot snap, const LatticeOptions& options) {
  SubgroupLattice lat;
  lat.sys_ = &sys;
  lat.nrefl_ = sys.num_reflections();
  lat.rank_ = static_cast<std::size_t>(sys.rank());
  lat.convention_ = options.convention;
  const std::size_t m = snap.bits.size();
  auto bad = [](const std::string& why) { return BadConfig("inconsistent lattice data: " + why); };
  if (m == 0 || snap.parabolic_closure.size() != m || snap.parabolic_rank.size() != m) throw bad("sizes");
  if (!std::is_sorted(snap.bits.begin(), snap.bits.end()) ||
      std::adjacent_find(snap.bits.begin(), snap.bits.end()) != snap.bits.end())
    throw bad("class order");
  const ReflectionSet all = lat.nrefl_ == 64 ? ~ReflectionSet{0} : (reflection_bit(static_cast<std::uint32_t>(lat.nrefl_)) - 1);
  if (snap.bits.front() != 0 || snap.bits.back() != all) throw bad("bottom/top");
  for (auto b : snap.bits)
    if (dyer_closure(sys, b) != b) throw bad("class not closed");
  for (std::size_t c = 0; c < m; ++c) {
    if (snap.parabolic_closure[c] >= m) throw bad("parabolic map range");
    if (!snap.root_closure.empty() && snap.root_closure[c] >= m) throw bad("root map range");
  }
  lat.bits_ = std::move(snap.bits);
  lat.parabolic_closure_ = std::move(snap.parabolic_closure);
  lat.parabolic_rank_ = std::move(snap.parabolic_rank);
  lat.root_closure_ = std::move(snap.root_closure);
  lat.join_ = std::make_shared<JoinCache>();
  if (lat.root_closure_.empty() && sys.type().crystallographic()) throw bad("missing root closure");
  lat.finish(options, true);
  return lat;
}

SubgroupLattice::Snapshot SubgroupLattice::snapshot() const {
  return Snapshot{bits_, parabolic_closure_, parabolic_rank_, root_closure_};
}

void SubgroupLattice::finish(const LatticeOptions&, bool have_flavors) {
  const std::size_t m = bits_.size();
  conj_simple_.resize(m * rank_);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t s = 0; s < rank_; ++s)
      conj_simple_[c * rank_ + s] = find(conjugate_set(*sys_, sys_->simple_reflection(static_cast<int>(s)), bits_[c]));
  compute_orbits();
  if (!have_flavors) compute_flavors();
}

ClassId SubgroupLattice::find(ReflectionSet b) const {
  auto id = try_find(b);
  if (!id) throw std::out_of_range("reflection set is not a closed class");
  return *id;
}

std::optional<ClassId> SubgroupLattice::try_find(ReflectionSet b) const {
  auto it = std::lower_bound(bits_.begin(), bits_.end(), b);
  if (it == bits_.end() || *it != b) return std::nullopt;
  return static_cast<ClassId>(it - bits_.begin());
}

const std::vector<ClassId>& SubgroupLattice::join_table() const {
  std::call_once(join_->once, [this] {
    auto& table = join_->table;
    table.resize(bits_.size() * nrefl_);
    for (std::size_t c = 0; c < bits_.size(); ++c)
      for (std::uint32_t t = 0; t < nrefl_; ++t)
        table[c * nrefl_ + t] = (bits_[c] & reflection_bit(t)) ? static_cast<ClassId>(c)
                                                               : find(dyer_closure(*sys_, bits_[c], reflection_bit(t)));
  });
  return join_->table;
}

ClassId SubgroupLattice::join(ClassId a, ClassId b) const {
  ReflectionSet extra = bits_[b] & ~bits_[a];
  for_each_bit(extra, [&](std::uint32_t t) {
    if (!(bits_[a] & reflection_bit(t))) a = join_reflection(a, t);
  });
  return a;
}

ClassId SubgroupLattice::conj_element(Element w, ClassId c) const {
  ReflectionSet out = 0;
  for_each_bit(bits_[c], [&](std::uint32_t t) { out |= reflection_bit(sys_->conjugate_reflection(w, t)); });
  return find(out);
}

void SubgroupLattice::compute_orbits() {
  const std::size_t m = bits_.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  orbit_of_.assign(m, kNone);
  tree_parent_.assign(m, 0);
  tree_gen_.assign(m, -1);
  orbit_reps_.clear();
  orbit_sizes_.clear();
  bfs_order_.clear();
  bfs_order_.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (orbit_of_[c] != kNone) continue;
    const std::size_t orbit = orbit_reps_.size();
    orbit_reps_.push_back(static_cast<ClassId>(c));
    std::size_t start = bfs_order_.size();
    orbit_of_[c] = orbit;
    bfs_order_.push_back(static_cast<ClassId>(c));
    for (std::size_t i = start; i < bfs_order_.size(); ++i) {
      ClassId x = bfs_order_[i];
      for (std::size_t s = 0; s < rank_; ++s) {
        ClassId y = conj_simple_[x * rank_ + s];
        if (orbit_of_[y] != kNone) continue;
        orbit_of_[y] = orbit;
        tree_parent_[y] = x;
        tree_gen_[y] = static_cast<int>(s);
        bfs_order_.push_back(y);
      }
    }
    orbit_sizes_.push_back(bfs_order_.size() - start);
  }
}

template <class F>
std::vector<ClassId> SubgroupLattice::transport_from_reps(F&& rep_value) const {
  // value(c) = s value(parent) s along the orbit BFS trees
  std::vector<ReflectionSet> val(bits_.size(), 0);
  std::vector<ClassId> out(bits_.size(), 0);
  for (ClassId c : bfs_order_) {
    if (tree_gen_[c] < 0) {
      val[c] = rep_value(c);
    } else {
      val[c] = conjugate_set(*sys_, sys_->simple_reflection(tree_gen_[c]), val[tree_parent_[c]]);
    }
    out[c] = find(val[c]);
  }
  return out;
}

void SubgroupLattice::compute_flavors() {
  const int rank = sys_->rank();
  parabolic_rank_.assign(bits_.size(), -1);
  std::vector<ClassId> parabolics;
  for (std::uint32_t mask = 0; mask < (1U << rank); ++mask) {
    ReflectionSet gens = 0;
    for (int s = 0; s < rank; ++s)
      if (mask & (1U << s)) gens |= reflection_bit(sys_->simple_reflection(s));
    ClassId c = find(dyer_closure(*sys_, gens));
    parabolic_rank_[c] = std::popcount(mask);
  }
  // every conjugate of a standard parabolic is parabolic of the same rank
  std::vector<int> orbit_rank(orbit_reps_.size(), -1);
  for (std::size_t c = 0; c < bits_.size(); ++c)
    if (parabolic_rank_[c] >= 0) orbit_rank[orbit_of_[c]] = parabolic_rank_[c];
  for (std::size_t c = 0; c < bits_.size(); ++c) parabolic_rank_[c] = orbit_rank[orbit_of_[c]];
  for (std::size_t c = 0; c < bits_.size(); ++c)
    if (parabolic_rank_[c] >= 0) parabolics.push_back(static_cast<ClassId>(c));
  std::stable_sort(parabolics.begin(), parabolics.end(),
                   [&](ClassId a, ClassId b) { return std::popcount(bits_[a]) < std::popcount(bits_[b]); });
  parabolic_closure_ = transport_from_reps([&](ClassId rep) {
    for (ClassId p : parabolics)
      if ((bits_[rep] & ~bits_[p]) == 0) return bits_[p];
    throw Error("no parabolic closure found");
  });
  for (std::size_t c = 0; c < bits_.size(); ++c) parabolic_rank_[c] = parabolic_rank_[parabolic_closure_[c]];

  root_closure_.clear();
  if (sys_->type().crystallographic()) {
    RootSums sums(*sys_, convention_);
    root_closure_ = transport_from_reps([&](ClassId rep) { return sums.close(*sys_, bits_[rep]); });
  }
}

void SubgroupLattice::check_flavor_compatibility() const {
  // p(<J, t>) must only depend on p(J), otherwise the quotient is not well defined
  for (ClassId c = 0; c < bits_.size(); ++c) {
    for (std::uint32_t t = 0; t < nrefl_; ++t) {
      ClassId j = join_reflection(c, t);
      if (parabolic_closure_[j] != parabolic_closure_[join_reflection(parabolic_closure_[c], t)])
        throw Error("parabolic closure is not compatible with joins in " + sys_->type().name());
      if (!root_closure_.empty() && root_closure_[j] != root_closure_[join_reflection(root_closure_[c], t)])
        throw Error("root closure is not compatible with joins in " + sys_->type().name());
    }
  }
}

std::uint64_t SubgroupLattice::normalizer_order(ClassId c) const {
  return sys_->group_order() / orbit_sizes_[orbit_of_[c]];
}

ClassId SubgroupLattice::root_closure(ClassId c) const {
  if (root_closure_.empty()) throw UnsupportedType("root closure is undefined for " + sys_->type().name());
  return root_closure_[c];
}

ClassId SubgroupLattice::flavor_closure(Flavor f, ClassId c) const {
  switch (f) {
    case Flavor::full: return c;
    case Flavor::parabolic: return parabolic_closure(c);
    case Flavor::closed: return root_closure(c);
  }
  return c;
}

std::size_t SubgroupLattice::bell_parabolic() const {
  std::size_t n = 0;
  for (ClassId c = 0; c < bits_.size(); ++c) n += is_parabolic(c) ? 1 : 0;
  return n;
}

std::optional<std::size_t> SubgroupLattice::bell_closed() const {
  if (root_closure_.empty()) return std::nullopt;
  std::size_t n = 0;
  for (ClassId c = 0; c < bits_.size(); ++c) n += root_closure_[c] == c ? 1 : 0;
  return n;
}

BellReport bell_report(const SubgroupLattice& lattice) {
  BellReport r;
  r.type = lattice.system().type();
  r.bell_full = lattice.bell_full();
  r.bell_parabolic = lattice.bell_parabolic();
  if (auto c = lattice.bell_closed()) r.bell_closed = *c;
  r.algebra_rank = lattice.system().group_order() * r.bell_full;
  return r;
}

}  // namespace cw
