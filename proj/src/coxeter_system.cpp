#include "cw/coxeter/system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string_view>
#include <unordered_map>

#include "cw/errors.hpp"

namespace cw {

namespace {

using Matrix = std::vector<std::vector<GoldenInt>>;

struct CartanData {
  Matrix a;                // a[i][j] = <alpha_i^vee, alpha_j>
  std::vector<int> norms;  // squared lengths of simple roots
};

void link(Matrix& a, int i, int j, GoldenInt aij = -1, GoldenInt aji = -1) {
  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
  a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

CartanData cartan(const CoxeterType& t) {
  const int n = t.rank;
  CartanData d;
  d.a.assign(static_cast<std::size_t>(n), std::vector<GoldenInt>(static_cast<std::size_t>(n), 0));
  d.norms.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) d.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  const GoldenInt mphi = -GoldenInt::phi();
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(d.a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(d.a, i, i + 1);
      link(d.a, n - 2, n - 1, -1, -2);  // alpha_{n-1} = e_n short
      for (int i = 0; i + 1 < n; ++i) d.norms[static_cast<std::size_t>(i)] = 2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(d.a, i, i + 1);
      if (n >= 3) link(d.a, n - 3, n - 1);
      break;
    case Family::E6:
    case Family::E7:
      link(d.a, 0, 2);
      link(d.a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(d.a, i, i + 1);
      break;
    case Family::F4:
      link(d.a, 0, 1);
      link(d.a, 1, 2, -1, -2);
      link(d.a, 2, 3);
      d.norms = {2, 2, 1, 1};
      break;
    case Family::H3:
    case Family::H4:
      link(d.a, 0, 1, mphi, mphi);
      for (int i = 1; i + 1 < n; ++i) link(d.a, i, i + 1);
      break;
    case Family::I2:
      // only G2 reaches here: alpha_0 short at angle 0, alpha_1 long at 5pi/6
      link(d.a, 0, 1, -3, -1);
      d.norms = {1, 3};
      break;
  }
  return d;
}

bool positive(const std::vector<GoldenInt>& v) {
  bool any = false;
  for (const auto& c : v) {
    int s = c.sign();
    if (s < 0) return false;
    any = any || s > 0;
  }
  return any;
}

std::vector<GoldenInt> reflect(const Matrix& a, int i, std::vector<GoldenInt> beta) {
  GoldenInt c = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) c += a[static_cast<std::size_t>(i)][j] * beta[j];
  beta[static_cast<std::size_t>(i)] -= c;
  return beta;
}

struct SpanHash {
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

}  // namespace

CoxeterSystem CoxeterSystem::build(const CoxeterType& type, BuildMode mode, std::size_t element_cap) {
  type.validate();
  CoxeterSystem sys;
  sys.type_ = type;
  sys.rank_ = type.rank;
  sys.build_roots();
  sys.build_reflections();
  if (mode == BuildMode::full) sys.build_elements(element_cap);
  return sys;
}

void CoxeterSystem::build_roots() {
  const int n = rank_;
  if (type_.family == Family::I2) {
    // roots at angles k*pi/m, k in [0, 2m); positive ones k < m
    const int m = type_.m;
    npos_ = static_cast<std::size_t>(m);
    simple_ = {0, static_cast<std::uint32_t>(m - 1)};
    gen_action_.resize(2 * npos_);
    for (int s = 0; s < 2; ++s) {
      const int j = static_cast<int>(simple_[static_cast<std::size_t>(s)]);
      for (int k = 0; k < m; ++k) {
        int img = ((2 * j + m - k) % (2 * m) + 2 * m) % (2 * m);
        gen_action_[static_cast<std::size_t>(s) * npos_ + static_cast<std::size_t>(k)] =
            img >= m ? SignedRoot::make(static_cast<std::uint32_t>(img - m), true)
                     : SignedRoot::make(static_cast<std::uint32_t>(img), false);
      }
    }
  } else {
    const CartanData cd = cartan(type_);
    std::map<std::vector<GoldenInt>, std::uint32_t> index;
    for (int i = 0; i < n; ++i) {
      std::vector<GoldenInt> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      index.emplace(e, static_cast<std::uint32_t>(coords_.size()));
      coords_.push_back(std::move(e));
      simple_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t p = 0; p < coords_.size(); ++p) {
      for (int i = 0; i < n; ++i) {
        auto g = reflect(cd.a, i, coords_[p]);
        if (!positive(g) || index.count(g)) continue;
        index.emplace(g, static_cast<std::uint32_t>(coords_.size()));
        coords_.push_back(std::move(g));
      }
    }
    npos_ = coords_.size();
    gen_action_.resize(static_cast<std::size_t>(n) * npos_);
    for (int i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < npos_; ++p) {
        auto g = reflect(cd.a, i, coords_[p]);
        bool neg = !positive(g);
        if (neg)
          for (auto& c : g) c = -c;
        auto it = index.find(g);
        if (it == index.end()) throw Error("root system construction failed for " + type_.name());
        gen_action_[static_cast<std::size_t>(i) * npos_ + p] = SignedRoot::make(it->second, neg);
      }
    }
    norms_.assign(npos_, 0);
    for (int i = 0; i < n; ++i) norms_[static_cast<std::size_t>(i)] = cd.norms[static_cast<std::size_t>(i)];
  }
  if (npos_ != static_cast<std::size_t>(type_.num_reflections()))
    throw Error("wrong number of positive roots for " + type_.name());

  simple_of_.assign(npos_, -1);
  for (int s = 0; s < n; ++s) simple_of_[simple_[static_cast<std::size_t>(s)]] = s;

  // BFS spanning tree of positive roots from the simple ones
  root_parent_.assign(npos_, static_cast<std::uint32_t>(npos_));
  root_parent_gen_.assign(npos_, -1);
  std::vector<char> seen(npos_, 0);
  std::deque<std::uint32_t> queue;
  for (auto r : simple_) {
    seen[r] = 1;
    queue.push_back(r);
  }
  std::vector<std::uint32_t> order;
  while (!queue.empty()) {
    std::uint32_t p = queue.front();
    queue.pop_front();
    order.push_back(p);
    for (int s = 0; s < n; ++s) {
      SignedRoot img = generator_action(s, p);
      if (img.negative() || seen[img.index()]) continue;
      seen[img.index()] = 1;
      root_parent_[img.index()] = p;
      root_parent_gen_[img.index()] = s;
      queue.push_back(img.index());
    }
  }
  if (order.size() != npos_) throw Error("positive roots not connected for " + type_.name());

  if (type_.family == Family::I2 && type_.m == 6) {
    const CartanData cd = cartan(type_);
    coords_.assign(npos_, {});
    norms_.assign(npos_, 0);
    for (int s = 0; s < 2; ++s) {
      std::vector<GoldenInt> e(2, 0);
      e[static_cast<std::size_t>(s)] = 1;
      coords_[simple_[static_cast<std::size_t>(s)]] = e;
      norms_[simple_[static_cast<std::size_t>(s)]] = cd.norms[static_cast<std::size_t>(s)];
    }
    for (auto p : order) {
      if (root_parent_gen_[p] < 0) continue;
      coords_[p] = reflect(cd.a, root_parent_gen_[p], coords_[root_parent_[p]]);
      norms_[p] = norms_[root_parent_[p]];
    }
  } else if (type_.family == Family::I2) {
    norms_.assign(npos_, 1);
  } else {
    for (auto p : order)
      if (root_parent_gen_[p] >= 0) norms_[p] = norms_[root_parent_[p]];
  }
  root_order_ = std::move(order);
}

void CoxeterSystem::build_reflections() {
  const int n = rank_;
  refl_perm_.resize(npos_ * npos_);
  for (const std::uint32_t p : root_order_) {
    SignedRoot* out = refl_perm_.data() + static_cast<std::size_t>(p) * npos_;
    const int s = root_parent_gen_[p];
    if (s < 0) {
      int g = simple_of_[p];
      for (std::size_t x = 0; x < npos_; ++x) out[x] = generator_action(g, static_cast<std::uint32_t>(x));
      continue;
    }
    // t_p = s t_q s
    const SignedRoot* q = refl_perm_.data() + static_cast<std::size_t>(root_parent_[p]) * npos_;
    for (std::size_t x = 0; x < npos_; ++x) {
      SignedRoot y = generator_action(s, static_cast<std::uint32_t>(x));
      SignedRoot z = q[y.index()].flipped(y.negative());
      out[x] = generator_action(s, z.index()).flipped(z.negative());
    }
  }
  conj_.resize(npos_ * npos_);
  for (std::size_t r = 0; r < npos_; ++r)
    for (std::size_t t = 0; t < npos_; ++t) conj_[r * npos_ + t] = refl_perm_[r * npos_ + t].index();

  // m_st = order of s*t acting on roots
  coxeter_.assign(static_cast<std::size_t>(n * n), 1);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      std::vector<SignedRoot> cur(npos_);
      for (std::size_t x = 0; x < npos_; ++x) cur[x] = SignedRoot::make(static_cast<std::uint32_t>(x), false);
      int k = 0;
      bool ident = false;
      while (!ident) {
        for (auto& y : cur) {
          SignedRoot z = generator_action(t, y.index()).flipped(y.negative());
          y = generator_action(s, z.index()).flipped(z.negative());
        }
        ++k;
        ident = true;
        for (std::size_t x = 0; x < npos_ && ident; ++x) ident = cur[x] == SignedRoot::make(static_cast<std::uint32_t>(x), false);
      }
      coxeter_[static_cast<std::size_t>(s * n + t)] = coxeter_[static_cast<std::size_t>(t * n + s)] = k;
    }
  }

  // conjugacy classes of simple reflections: joined along odd m_st
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (coxeter_matrix(s, t) % 2 == 1) parent[static_cast<std::size_t>(find(s))] = find(t);
  simple_class_.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  num_simple_classes_ = 0;
  for (int s = 0; s < n; ++s) {
    int r = find(s);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = num_simple_classes_++;
    simple_class_[static_cast<std::size_t>(s)] = label[static_cast<std::size_t>(r)];
  }
  refl_class_.assign(npos_, -1);
  for (const std::uint32_t p : root_order_) {
    refl_class_[p] = root_parent_gen_[p] < 0 ? simple_class_[static_cast<std::size_t>(simple_of_[p])]
                                              : refl_class_[root_parent_[p]];
  }
}

void CoxeterSystem::build_elements(std::size_t element_cap) {
  const std::uint64_t order = type_.group_order();
  if (order > element_cap)
    throw UnsupportedType(type_.name() + " has " + std::to_string(order) + " elements, above the cap of " +
                          std::to_string(element_cap));
  if (order * npos_ > kStorageCap)
    throw UnsupportedType(type_.name() + " is too large for full element storage; use lattice-only mode");
  const std::size_t N = static_cast<std::size_t>(order);
  const std::size_t R = static_cast<std::size_t>(rank_);
  perm_.reserve(N * npos_);
  length_.reserve(N);
  right_.assign(N * R, 0);

  auto key = [&](std::size_t id) {
    return std::string_view(reinterpret_cast<const char*>(perm_.data() + id * npos_), npos_ * sizeof(SignedRoot));
  };
  std::unordered_map<std::string_view, Element, SpanHash> index;
  index.reserve(N * 2);
  for (std::size_t x = 0; x < npos_; ++x) perm_.push_back(SignedRoot::make(static_cast<std::uint32_t>(x), false));
  length_.push_back(0);
  index.emplace(key(0), 0);

  for (std::size_t w = 0; w < length_.size(); ++w) {
    for (int s = 0; s < rank_; ++s) {
      // (w s)(x) = w(s(x))
      const std::size_t id = length_.size();
      if (id >= N) {
        // group complete; remaining products already exist
        std::vector<SignedRoot> tmp(npos_);
        for (std::size_t x = 0; x < npos_; ++x) {
          SignedRoot y = generator_action(s, static_cast<std::uint32_t>(x));
          tmp[x] = perm_[w * npos_ + y.index()].flipped(y.negative());
        }
        auto it = index.find(std::string_view(reinterpret_cast<const char*>(tmp.data()), npos_ * sizeof(SignedRoot)));
        if (it == index.end()) throw Error("element enumeration overflow for " + type_.name());
        right_[w * R + static_cast<std::size_t>(s)] = it->second;
        continue;
      }
      int len = 0;
      for (std::size_t x = 0; x < npos_; ++x) {
        SignedRoot y = generator_action(s, static_cast<std::uint32_t>(x));
        SignedRoot z = perm_[w * npos_ + y.index()].flipped(y.negative());
        perm_.push_back(z);
        len += z.negative() ? 1 : 0;
      }
      auto [it, inserted] = index.emplace(key(id), static_cast<Element>(id));
      if (inserted) {
        length_.push_back(len);
      } else {
        perm_.resize(id * npos_);
      }
      right_[w * R + static_cast<std::size_t>(s)] = it->second;
    }
  }
  if (length_.size() != N) throw Error("element count mismatch for " + type_.name());

  inverse_.assign(N, 0);
  std::vector<SignedRoot> inv(npos_);
  for (std::size_t w = 0; w < N; ++w) {
    for (std::size_t x = 0; x < npos_; ++x) {
      SignedRoot y = perm_[w * npos_ + x];
      inv[y.index()] = SignedRoot::make(static_cast<std::uint32_t>(x), y.negative());
    }
    auto it = index.find(std::string_view(reinterpret_cast<const char*>(inv.data()), npos_ * sizeof(SignedRoot)));
    inverse_[w] = it->second;
  }
  left_.assign(R * N, 0);
  for (std::size_t s = 0; s < R; ++s)
    for (std::size_t w = 0; w < N; ++w) left_[s * N + w] = inverse_[right_[inverse_[w] * R + s]];

  longest_ = static_cast<Element>(std::max_element(length_.begin(), length_.end()) - length_.begin());

  refl_elem_.assign(npos_, 0);
  for (const std::uint32_t p : root_order_) {
    const int s = root_parent_gen_[p];
    refl_elem_[p] = s < 0 ? simple_element(simple_of_[p])
                          : left_mul(s, right_mul(refl_elem_[root_parent_[p]], s));
  }
}

Element CoxeterSystem::multiply(Element a, Element b) const {
  for (int s : reduced_word(b)) a = right_mul(a, s);
  return a;
}

std::vector<int> CoxeterSystem::reduced_word(Element w) const {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(length(w)));
  while (w != identity()) {
    for (int s = 0; s < rank_; ++s) {
      Element v = left_mul(s, w);
      if (length(v) < length(w)) {
        word.push_back(s);
        w = v;
        break;
      }
    }
  }
  return word;
}

Element CoxeterSystem::from_word(std::span<const int> word) const {
  Element w = identity();
  for (int s : word) w = right_mul(w, s);
  return w;
}

}  // namespace cw
