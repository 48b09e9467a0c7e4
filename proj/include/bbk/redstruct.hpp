#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "bbk/orderideal.hpp"

namespace bbk {

enum class TieBreak { kLexAsc, kLexDesc };

/// A border reduction structure: a degree-increasing labeling of the border
/// terms. Labels compare by degree first, then by a within-degree tie-break,
/// which is what guarantees a Noetherian reduction relation. The tie-break
/// is lexicographic (ascending by default) or an explicit permutation of a
/// degree's border terms; degrees without an explicit list fall back to the
/// lexicographic default.
///
/// Multiplicative sets are derived from cone ownership: the owner of a term
/// beta outside O is its border divisor of maximal label, and eta is
/// multiplicative for sigma exactly when sigma owns eta*sigma. This turns
/// the infinite quantifier in the multiplicative-set definition into a
/// finite, cacheable test.
class ReductionStructure {
 public:
  explicit ReductionStructure(std::shared_ptr<const OrderIdeal> oi,
                              TieBreak tie_break = TieBreak::kLexAsc,
                              std::map<int, std::vector<Term>> explicit_orders = {})
      : oi_(std::move(oi)),
        tie_break_(tie_break),
        explicit_(std::move(explicit_orders)),
        cache_(std::make_shared<Cache>()) {
    if (!oi_) throw Error("reduction structure needs an order ideal");
    for (const auto& [d, labels] : explicit_) {
      auto expect = oi_->border_slice(d);
      if (labels.size() != expect.size())
        throw Error("explicit label list at degree " + std::to_string(d) +
                    " does not enumerate the border slice");
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end(), std::greater<Term>());
      if (sorted != expect)
        throw Error("explicit label list at degree " + std::to_string(d) +
                    " is not a permutation of the border slice");
    }
  }

  const OrderIdeal& order_ideal() const { return *oi_; }
  const std::shared_ptr<const OrderIdeal>& order_ideal_ptr() const { return oi_; }

  bool in_border(const Term& t) const { return oi_->index(t) == 1; }

  /// Border terms of degree d in label order (smallest label first).
  std::vector<Term> labels_at(int d) const {
    auto it = explicit_.find(d);
    if (it != explicit_.end()) return it->second;
    auto out = oi_->border_slice(d);  // canonical = lex descending
    if (tie_break_ == TieBreak::kLexAsc) std::reverse(out.begin(), out.end());
    return out;
  }

  /// Position of a border term within its degree's label order.
  int position(const Term& sigma) const {
    if (!in_border(sigma))
      throw NotInBorder("term " + sigma.str() + " is not a border term");
    auto labels = labels_at(sigma.degree());
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == sigma) return static_cast<int>(i);
    throw InternalInconsistency("border term missing from its label slice");
  }

  /// Strict total label order on border terms: degree, then tie-break.
  std::strong_ordering label_compare(const Term& a, const Term& b) const {
    if (!in_border(a)) throw NotInBorder("term " + a.str() + " is not a border term");
    if (!in_border(b)) throw NotInBorder("term " + b.str() + " is not a border term");
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return position(a) <=> position(b);
  }

  /// The border divisor of beta with maximal label (beta's cone owner), or
  /// nothing when beta lies in O.
  std::optional<Term> cone_owner(const Term& beta) const {
    if (oi_->contains(beta)) return std::nullopt;
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->owner.find(beta);
      if (it != cache_->owner.end()) return it->second;
    }
    auto mindeg = oi_->border_min_degree();
    Term found;
    bool have = false;
    for (int d = beta.degree(); d >= *mindeg && !have; --d) {
      auto labels = labels_at(d);
      for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        if (divides(*it, beta)) {
          found = *it;  // maximal position at the top occupied degree
          have = true;
          break;
        }
      }
    }
    if (!have)
      throw InternalInconsistency("term outside O has no border divisor");
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->owner.emplace(beta, found);
    return found;
  }

  bool is_multiplicative(const Term& eta, const Term& sigma) const {
    if (!in_border(sigma))
      throw NotInBorder("term " + sigma.str() + " is not a border term");
    auto owner = cone_owner(mul(eta, sigma));
    return owner.has_value() && *owner == sigma;
  }

  /// Degree-k window onto the (generally infinite) multiplicative set.
  std::vector<Term> multiplicative_slice(const Term& sigma, int k) const {
    if (!in_border(sigma))
      throw NotInBorder("term " + sigma.str() + " is not a border term");
    if (k < 0) throw Error("degree must be nonnegative");
    std::vector<Term> out;
    for (const auto& eta : terms_of_degree(oi_->n_vars(), k))
      if (is_multiplicative(eta, sigma)) out.push_back(eta);
    return out;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<Term, std::optional<Term>> owner;
  };

  std::shared_ptr<const OrderIdeal> oi_;
  TieBreak tie_break_;
  std::map<int, std::vector<Term>> explicit_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace bbk
