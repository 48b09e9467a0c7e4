#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bbk/monomial.hpp"

namespace bbk {

inline constexpr int kDefaultGotzmannCap = 200;

/// Exact binomial coefficient; throws Overflow beyond 2^62.
inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i);
    r /= static_cast<unsigned __int128>(i);
    if (r > (static_cast<unsigned __int128>(1) << 62))
      throw Overflow("binomial coefficient exceeds 2^62");
  }
  return static_cast<long long>(r);
}

/// The d-th Macaulay representation of a: the unique expansion
/// a = C(k_d,d) + C(k_{d-1},d-1) + ... + C(k_delta,delta) with
/// k_d > ... > k_delta >= delta >= 1. Returned as the k_i from i = d
/// downwards (shorter when the expansion stops early).
inline std::vector<long long> macaulay_representation(long long a, int d) {
  if (a < 0) throw Error("Macaulay representation needs a >= 0");
  if (d < 1) throw Error("Macaulay representation needs d >= 1");
  std::vector<long long> ks;
  long long rem = a;
  for (int i = d; i >= 1 && rem > 0; --i) {
    long long k = i;
    while (binomial(k + 1, i) <= rem) ++k;
    ks.push_back(k);
    rem -= binomial(k, i);
  }
  return ks;
}

/// The d-th Macaulay transformation a^{<d>}.
inline long long macaulay_transform(long long a, int d) {
  auto ks = macaulay_representation(a, d);
  long long out = 0;
  int i = d;
  for (long long k : ks) {
    out += binomial(k + 1, i + 1);
    --i;
  }
  return out;
}

struct HilbertData {
  std::vector<long long> values;  // h_0 .. h_D
  std::optional<int> gotzmann_t;  // empty when the capped scan gave up
};

/// An infinite (or finite) order ideal O in n_vars variables, encoded by the
/// minimal generators of the complement monomial ideal I with O = T \ I.
///
/// The object behaves as immutable; per-degree slice, border and index
/// tables are computed lazily behind an internal lock, so concurrent reads
/// are safe. Copies share the caches.
class OrderIdeal {
 public:
  OrderIdeal(int n_vars, std::vector<Term> complement_gens)
      : n_vars_(n_vars), cache_(std::make_shared<Cache>()) {
    if (n_vars < 1) throw Error("order ideal needs at least one variable");
    for (const auto& g : complement_gens) {
      if (g.n_vars() != n_vars)
        throw DimensionMismatch("complement generator has wrong ambient");
      if (g.is_unit()) throw Error("complement contains 1, so O would be empty");
    }
    gens_ = minimalize(std::move(complement_gens));

    infinite_ = false;
    for (int j = 0; j < n_vars && !infinite_; ++j) {
      bool pure_power = false;
      for (const auto& g : gens_) {
        bool only_j = g.exponent(j) > 0;
        for (int i = 0; i < n_vars && only_j; ++i)
          if (i != j && g.exponent(i) > 0) only_j = false;
        if (only_j) pure_power = true;
      }
      if (!pure_power) infinite_ = true;
    }

    // (border of O) generates I: every minimal generator must sit in the
    // first border. This holds for any minimal generating set; the check is
    // a construction-time tripwire.
    for (const auto& g : gens_)
      if (index(g) != 1)
        throw InternalInconsistency("minimal complement generator not in the border");
  }

  int n_vars() const { return n_vars_; }
  const std::vector<Term>& complement_generators() const { return gens_; }
  bool infinite() const { return infinite_; }

  bool contains(const Term& t) const {
    if (t.n_vars() != n_vars_) throw DimensionMismatch("term has wrong ambient");
    for (const auto& g : gens_)
      if (divides(g, t)) return false;
    return true;
  }

  /// O_d in canonical order.
  std::vector<Term> slice(int d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->slices.find(d);
    if (it != cache_->slices.end()) return it->second;
    std::vector<Term> out;
    for (const auto& t : terms_of_degree(n_vars_, d))
      if (contains(t)) out.push_back(t);
    cache_->slices.emplace(d, out);
    return out;
  }

  /// First-border terms of degree d, canonical order.
  std::vector<Term> border_slice(int d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->borders.find(d);
    if (it != cache_->borders.end()) return it->second;
    std::vector<Term> out;
    for (const auto& t : terms_of_degree(n_vars_, d)) {
      if (contains(t)) continue;
      for (int j = 0; j < n_vars_; ++j) {
        if (t.exponent(j) == 0) continue;
        if (contains(quotient(t, Term::variable(n_vars_, j)))) {
          out.push_back(t);
          break;
        }
      }
    }
    cache_->borders.emplace(d, out);
    return out;
  }

  /// Smallest degree carrying border terms; empty when I = (0).
  std::optional<int> border_min_degree() const {
    if (gens_.empty()) return std::nullopt;
    int d = gens_[0].degree();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
  }

  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// Index of a term: the smallest k such that t = t' t'' with deg(t') = k
  /// and t'' in O; equivalently the border stratum containing t.
  int index(const Term& t) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return index_locked(t);
  }

  /// |O_d| via inclusion–exclusion over lcms of generator subsets. The
  /// enumerating route is slice(d).size(); the two are cross-checked in the
  /// test suite.
  long long hilbert(int d) const {
    if (d < 0) throw Error("degree must be nonnegative");
    long long total = 0;
    Term unit = Term::unit(n_vars_);
    hilbert_rec(0, unit, +1, d, total);
    return total;
  }

  /// L(d) = |O_{<= d}|.
  long long cumulative(int d) const {
    long long s = 0;
    for (int i = 0; i <= d; ++i) s += hilbert(i);
    return s;
  }

  /// Least t >= max(1, maxdeg(gens) - 1) with h_{t+1} = h_t^{<t>}. The scan
  /// is capped; exceeding the cap raises ScanCapExceeded naming it.
  int gotzmann_bound(int cap = kDefaultGotzmannCap) const {
    int start = std::max(1, max_generator_degree() - 1);
    for (int t = start; t <= cap; ++t)
      if (hilbert(t + 1) == macaulay_transform(hilbert(t), t)) return t;
    throw ScanCapExceeded("no stabilization degree t found below the scan cap " +
                          std::to_string(cap));
  }

  HilbertData hilbert_data(int through, int cap = kDefaultGotzmannCap) const {
    HilbertData hd;
    for (int d = 0; d <= through; ++d) hd.values.push_back(hilbert(d));
    try {
      hd.gotzmann_t = gotzmann_bound(cap);
    } catch (const ScanCapExceeded&) {
      hd.gotzmann_t = std::nullopt;
    }
    return hd;
  }

  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
    return a.n_vars_ == b.n_vars_ && a.gens_ == b.gens_;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::vector<Term>> slices;
    std::map<int, std::vector<Term>> borders;
    std::map<Term, int> index;
  };

  static std::vector<Term> minimalize(std::vector<Term> gens) {
    std::vector<Term> out;
    for (size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (i == j) continue;
        if (divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i))
          redundant = true;
      }
      if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a > b;  // canonical within degree
    });
    return out;
  }

  int index_locked(const Term& t) const {
    auto it = cache_->index.find(t);
    if (it != cache_->index.end()) return it->second;
    int result;
    if (contains(t)) {
      result = 0;
    } else {
      int best = -1;
      for (int j = 0; j < n_vars_; ++j) {
        if (t.exponent(j) == 0) continue;
        int sub = index_locked(quotient(t, Term::variable(n_vars_, j)));
        if (best == -1 || sub < best) best = sub;
      }
      result = best + 1;  // t is not 1 here, so some variable divides it
    }
    cache_->index.emplace(t, result);
    return result;
  }

  void hilbert_rec(size_t i, const Term& cur, int sign, int d,
                   long long& total) const {
    if (i == gens_.size()) {
      int dl = cur.degree();
      total += sign * binomial(n_vars_ - 1 + d - dl, n_vars_ - 1);
      return;
    }
    hilbert_rec(i + 1, cur, sign, d, total);
    Term l = lcm(cur, gens_[i]);
    if (l.degree() <= d) hilbert_rec(i + 1, l, -sign, d, total);
  }

  int n_vars_;
  std::vector<Term> gens_;
  bool infinite_ = false;
  std::shared_ptr<Cache> cache_;
};

}  // namespace bbk
