#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cw/algebra/relations.hpp"
#include "cw/errors.hpp"
#include "cw/exact/echelon.hpp"
#include "cw/exact/sparse_vector.hpp"

namespace cw {

/// Permutations of {0, ..., n-1} in lexicographic order, with left
/// multiplication by the adjacent transpositions s_i = (i, i+1).
class SymmetricGroup {
 public:
  using Perm = std::vector<int>;

  explicit SymmetricGroup(int n);

  int degree() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Perm& perm(std::size_t w) const { return perms_[w]; }
  std::size_t index_of(const Perm& p) const { return index_.at(p); }
  int length(std::size_t w) const { return length_[w]; }
  /// s_i w, acting on values: (s_i w)(j) = s_i(w(j)).
  std::size_t left_mul(int i, std::size_t w) const { return left_[w * static_cast<std::size_t>(n_ - 1) + i]; }
  /// Left-greedy reduced word, smallest descent first.
  std::vector<int> reduced_word(std::size_t w) const;

 private:
  int n_;
  std::vector<Perm> perms_;
  std::map<Perm, std::size_t> index_;
  std::vector<int> length_;
  std::vector<std::size_t> left_;
};

/// Y_{d,n}(u) on its basis t^a g_w, a in (Z/d)^n, w in S_n.
/// Basis index = code(a) * n! + w with code(a) = sum a_j d^j.
template <Scalar S>
class YokonumaAlgebra {
 public:
  using Vec = SparseVector<S>;

  YokonumaAlgebra(int d, int n, S u) : d_(d), n_(n), sn_(n), u_(std::move(u)) {
    if (d < 1 || n < 1) throw BadConfig("Y_{d,n} needs d >= 1 and n >= 1");
    auto inv = S::from_int(d).try_inverse();
    if (!inv) throw DNotInvertible("d = " + std::to_string(d) + " is not invertible in the scalar ring");
    inv_d_ = *inv;
    torus_ = 1;
    for (int j = 0; j < n; ++j) torus_ *= static_cast<std::size_t>(d);
    pow_.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pow_[static_cast<std::size_t>(j)] = j == 0 ? 1 : pow_[static_cast<std::size_t>(j - 1)] * static_cast<std::size_t>(d);
  }

  int d() const { return d_; }
  int n() const { return n_; }
  const S& u() const { return u_; }
  const SymmetricGroup& group() const { return sn_; }
  std::size_t dimension() const { return torus_ * sn_.size(); }
  std::uint32_t index(std::size_t code, std::size_t w) const { return static_cast<std::uint32_t>(code * sn_.size() + w); }
  std::size_t torus_code(std::uint32_t idx) const { return idx / sn_.size(); }
  std::size_t perm_of(std::uint32_t idx) const { return idx % sn_.size(); }
  int exponent(std::size_t code, int j) const {
    return static_cast<int>((code / pow_[static_cast<std::size_t>(j)]) % static_cast<std::size_t>(d_));
  }

  Vec one() const { return Vec::unit(index(0, 0)); }
  Vec g(int i) const { return left_g(i, one()); }
  Vec t(int j) const { return left_t(j, one()); }
  Vec e(int i, int j) const { return left_e(i, j, one()); }

  /// t_j^power x.
  Vec left_t(int j, const Vec& x, int power = 1) const {
    SparseAccumulator<S> acc;
    for (const auto& [idx, c] : x) acc.push(index(shift(torus_code(idx), j, power), perm_of(idx)), c);
    return acc.take();
  }

  /// e_{i,j} x = (1/d) sum_k t_i^k t_j^{-k} x.
  Vec left_e(int i, int j, const Vec& x) const {
    SparseAccumulator<S> acc;
    for (const auto& [idx, c] : x) {
      const S cd = c * inv_d_;
      for (int k = 0; k < d_; ++k)
        acc.push(index(shift(shift(torus_code(idx), i, k), j, -k), perm_of(idx)), cd);
    }
    return acc.take();
  }

  Vec left_g(int i, const Vec& x) const {
    SparseAccumulator<S> acc;
    const S um1d = (u_ - S::one()) * inv_d_;
    for (const auto& [idx, c] : x) {
      const std::size_t a = swap_exponents(torus_code(idx), i);
      const std::size_t w = perm_of(idx);
      const std::size_t sw = sn_.left_mul(i, w);
      acc.push(index(a, sw), c);
      if (sn_.length(sw) < sn_.length(w)) {
        // g_i g_w = g_{s_i w} + (u - 1) e_i (g_{s_i w} + g_w)
        const S cd = c * um1d;
        for (int k = 0; k < d_; ++k) {
          const std::size_t b = shift(shift(a, i, k), i + 1, -k);
          acc.push(index(b, sw), cd);
          acc.push(index(b, w), cd);
        }
      }
    }
    return acc.take();
  }

  /// g_i^{-1} = g_i + (u^{-1} - 1) e_i + (u^{-1} - 1) e_i g_i.
  Vec left_g_inverse(int i, const Vec& x) const {
    auto inv = u_.try_inverse();
    if (!inv) throw DegenerateParameters("u is not invertible");
    const Vec gx = left_g(i, x);
    Vec out = gx;
    out.axpy(*inv - S::one(), left_e(i, i + 1, x + gx));
    return out;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    std::map<std::size_t, std::vector<std::pair<std::size_t, S>>> by_w;
    for (const auto& [idx, c] : x) by_w[perm_of(idx)].emplace_back(torus_code(idx), c);
    SparseAccumulator<S> acc;
    for (const auto& [w, terms] : by_w) {
      Vec gy = y;
      const auto word = sn_.reduced_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) gy = left_g(*it, gy);
      for (const auto& [a, c] : terms) {
        SparseAccumulator<S> shifted;
        for (const auto& [idx, cc] : gy) shifted.push(index(add_codes(a, torus_code(idx)), perm_of(idx)), cc);
        acc.push_scaled(c, shifted.take());
      }
    }
    return acc.take();
  }

 private:
  std::size_t shift(std::size_t code, int j, int power) const {
    const int a = exponent(code, j);
    const int b = ((a + power) % d_ + d_) % d_;
    return code + static_cast<std::size_t>(b) * pow_[static_cast<std::size_t>(j)] -
           static_cast<std::size_t>(a) * pow_[static_cast<std::size_t>(j)];
  }
  std::size_t swap_exponents(std::size_t code, int i) const {
    const int a = exponent(code, i), b = exponent(code, i + 1);
    return shift(shift(code, i, b - a), i + 1, a - b);
  }
  std::size_t add_codes(std::size_t a, std::size_t b) const {
    for (int j = 0; j < n_; ++j) a = shift(a, j, exponent(b, j));
    return a;
  }

  int d_;
  int n_;
  SymmetricGroup sn_;
  S u_;
  S inv_d_;
  std::size_t torus_ = 1;
  std::vector<std::size_t> pow_;
};

/// The defining relations and the derived e-relations of Y_{d,n}(u), as
/// operator identities on every basis vector:
///   braid relations; t_i t_j = t_j t_i and g_i t_j = t_{s_i(j)} g_i; t_i^d = 1;
///   g_i^2 = 1 + (u-1) e_i (1 + g_i); e_ij = e_ji; e_ij e_kl = e_kl e_ij;
///   g_i e_jk = e_{s_i(j) s_i(k)} g_i; e_ij^2 = e_ij; and g_i^{-1} g_i = 1.
template <Scalar S>
RelationReport y_check_relations(const YokonumaAlgebra<S>& y) {
  using Vec = SparseVector<S>;
  const int n = y.n();
  auto si = [](int i, int j) { return j == i ? i + 1 : j == i + 1 ? i : j; };
  RelationReport rep;
  for (std::uint32_t idx = 0; idx < y.dimension(); ++idx) {
    const Vec v = Vec::unit(idx);
    const std::string at = " on basis vector " + std::to_string(idx);
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = i + 1; j + 1 < n; ++j) {
        if (j == i + 1) {
          rep.record(y.left_g(i, y.left_g(j, y.left_g(i, v))) == y.left_g(j, y.left_g(i, y.left_g(j, v))),
                     "braid relation g" + std::to_string(i) + " g" + std::to_string(j) + at);
        } else {
          rep.record(y.left_g(i, y.left_g(j, v)) == y.left_g(j, y.left_g(i, v)),
                     "far commutation g" + std::to_string(i) + " g" + std::to_string(j) + at);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        rep.record(y.left_t(i, y.left_t(j, v)) == y.left_t(j, y.left_t(i, v)), "t_i t_j = t_j t_i" + at);
      rep.record(y.left_t(i, v, y.d()) == v, "t_i^d = 1" + at);
    }
    for (int i = 0; i + 1 < n; ++i) {
      const Vec gv = y.left_g(i, v);
      for (int j = 0; j < n; ++j)
        rep.record(y.left_g(i, y.left_t(j, v)) == y.left_t(si(i, j), gv), "g_i t_j = t_{s_i(j)} g_i" + at);
      Vec rhs = v;
      rhs.axpy(y.u() - S::one(), y.left_e(i, i + 1, v + gv));
      rep.record(y.left_g(i, gv) == rhs, "quadratic relation for g" + std::to_string(i) + at);
      rep.record(y.left_g_inverse(i, gv) == v, "g_i^{-1} g_i = 1" + at);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (j != k)
            rep.record(y.left_g(i, y.left_e(j, k, v)) == y.left_e(si(i, j), si(i, k), gv),
                       "g_i e_jk = e_{s_i(j)s_i(k)} g_i" + at);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Vec eij = y.left_e(i, j, v);
        rep.record(eij == y.left_e(j, i, v), "e_ij = e_ji" + at);
        rep.record(y.left_e(i, j, eij) == eij, "e_ij^2 = e_ij" + at);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            if (k != l) rep.record(y.left_e(k, l, eij) == y.left_e(i, j, y.left_e(k, l, v)), "e_ij e_kl = e_kl e_ij" + at);
      }
    }
  }
  return rep;
}

/// The defining relations of C_{A_{n-1}}(u), checked on the elements g_i and
/// e_{(j,k)} = e_{j,k} of Y_{d,n}(u) (reflections are the transpositions).
template <Scalar S>
RelationReport y_check_cw_relations(const YokonumaAlgebra<S>& y) {
  using Vec = SparseVector<S>;
  const int n = y.n();
  std::vector<std::pair<int, int>> refl;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) refl.emplace_back(j, k);
  auto conj = [](std::pair<int, int> t, std::pair<int, int> r) {
    auto f = [&](int x) { return x == t.first ? t.second : x == t.second ? t.first : x; };
    return std::pair<int, int>{f(r.first), f(r.second)};
  };
  RelationReport rep;
  for (std::uint32_t idx = 0; idx < y.dimension(); ++idx) {
    const Vec v = Vec::unit(idx);
    const std::string at = " on basis vector " + std::to_string(idx);
    for (const auto& t : refl) {
      const Vec et = y.left_e(t.first, t.second, v);
      rep.record(y.left_e(t.first, t.second, et) == et, "e_t idempotent" + at);
      for (const auto& t1 : refl) {
        const Vec et1 = y.left_e(t1.first, t1.second, v);
        const auto c = conj(t, t1);
        rep.record(y.left_e(t.first, t.second, et1) == y.left_e(t1.first, t1.second, et), "e commute" + at);
        rep.record(y.left_e(t.first, t.second, et1) == y.left_e(t.first, t.second, y.left_e(c.first, c.second, v)),
                   "e_t e_t' = e_t e_{tt't}" + at);
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      const Vec gv = y.left_g(i, v);
      for (const auto& t : refl) {
        const auto c = conj({i, i + 1}, t);
        rep.record(y.left_g(i, y.left_e(t.first, t.second, v)) == y.left_e(c.first, c.second, gv),
                   "g_s e_t = e_{sts} g_s" + at);
      }
    }
  }
  // braid and quadratic relations are shared with y_check_relations
  return rep;
}

/// Dimension of the unital subalgebra generated by the g_i and e_i.
template <FieldScalar F>
std::size_t braids_ties_dimension(const YokonumaAlgebra<F>& y, std::size_t max_dim = 100000) {
  RowEchelonBasis<F> basis(y.dimension());
  std::deque<SparseVector<F>> queue;
  auto offer = [&](SparseVector<F> v) {
    if (v.is_zero() || !basis.reduce_insert(v)) return;
    if (basis.rank() > max_dim) throw BudgetExceeded("braids-and-ties algebra exceeds the dimension cap");
    queue.push_back(std::move(v));
  };
  offer(y.one());
  while (!queue.empty()) {
    SparseVector<F> v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i + 1 < y.n(); ++i) {
      offer(y.left_g(i, v));
      offer(y.left_e(i, i + 1, v));
    }
  }
  return basis.rank();
}

}  // namespace cw
