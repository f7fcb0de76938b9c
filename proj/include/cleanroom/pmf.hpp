#pragma once

// Finite probability mass functions over works, with the divergences the
// NAF machinery needs: max-KL (bits, base 2) and total variation.
//
// Backend T is Rat (exact, default for verifiers) or double (Monte Carlo).
// Exact theorem checks avoid logarithms entirely: the max-KL comparisons are
// phrased on likelihood ratios, which stay rational.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cleanroom/kernels.hpp"
#include "cleanroom/numeric.hpp"
#include "cleanroom/seed.hpp"
#include "cleanroom/work.hpp"

namespace cleanroom {

template <class T>
class Pmf {
 public:
  Pmf() = default;

  /// Build from (work, probability) pairs. Zero entries are dropped,
  /// duplicates rejected, the sum must be 1 up to the backend's slack.
  static Pmf from_pairs(std::vector<std::pair<WorkId, T>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Pmf p;
    T sum = NumTraits<T>::zero();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [w, prob] = pairs[i];
      if (prob < NumTraits<T>::zero()) {
        throw std::invalid_argument("negative probability");
      }
      if (i > 0 && pairs[i - 1].first == w) {
        throw std::invalid_argument("duplicate support entry");
      }
      sum += prob;
      if (prob > NumTraits<T>::zero()) {
        p.ids_.push_back(w);
        p.probs_.push_back(prob);
      }
    }
    if (!NumTraits<T>::is_normalized(sum)) {
      throw std::invalid_argument("probabilities do not sum to 1");
    }
    return p;
  }

  static Pmf point_mass(WorkId w) {
    return from_pairs({{w, NumTraits<T>::one()}});
  }

  /// Uniform over a nonempty set of works.
  static Pmf uniform(const WorkSet& works) {
    if (works.empty()) throw std::invalid_argument("uniform over empty set");
    std::vector<std::pair<WorkId, T>> pairs;
    pairs.reserve(works.size());
    T w = NumTraits<T>::one();
    w /= T(static_cast<long>(works.size()));
    for (WorkId id : works) pairs.emplace_back(id, w);
    return from_pairs(std::move(pairs));
  }

  bool empty() const { return ids_.empty(); }
  std::size_t support_size() const { return ids_.size(); }
  const std::vector<WorkId>& support() const { return ids_; }
  const std::vector<T>& probs() const { return probs_; }

  T prob(WorkId w) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), w);
    if (it == ids_.end() || *it != w) return NumTraits<T>::zero();
    return probs_[static_cast<std::size_t>(it - ids_.begin())];
  }

  bool operator==(const Pmf& o) const {
    return ids_ == o.ids_ && probs_ == o.probs_;
  }

  /// Probability of an event (sorted set of works).
  T event_prob(const WorkSet& event) const;

  /// Inverse-CDF draw over the ordered support; deterministic given stream.
  WorkId sample(RngStream& rng) const;

 private:
  std::vector<WorkId> ids_;
  std::vector<T> probs_;
};

// --- event probability ---

template <>
inline Rat Pmf<Rat>::event_prob(const WorkSet& event) const {
  Rat total = 0;
  std::size_t i = 0, j = 0;
  while (i < ids_.size() && j < event.size()) {
    if (ids_[i] < event[j]) {
      ++i;
    } else if (event[j] < ids_[i]) {
      ++j;
    } else {
      total += probs_[i];
      ++i;
      ++j;
    }
  }
  return total;
}

template <>
inline double Pmf<double>::event_prob(const WorkSet& event) const {
  std::vector<std::uint8_t> mask(ids_.size(), 0);
  std::size_t i = 0, j = 0;
  while (i < ids_.size() && j < event.size()) {
    if (ids_[i] < event[j]) {
      ++i;
    } else if (event[j] < ids_[i]) {
      ++j;
    } else {
      mask[i] = 1;
      ++i;
      ++j;
    }
  }
  return kernels::masked_sum(probs_.data(), mask.data(), probs_.size());
}

// --- sampling ---

template <>
inline WorkId Pmf<Rat>::sample(RngStream& rng) const {
  if (ids_.empty()) throw std::logic_error("sampling from empty pmf");
  const std::uint64_t u = rng.next_u64();
  // Return the first index with cumulative * 2^64 > u (exact compare).
  Rat scale;
  mpz_ui_pow_ui(scale.get_num_mpz_t(), 2, 64);
  Rat target(u);
  Rat cum = 0;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    cum += probs_[i];
    if (cum * scale > target) return ids_[i];
  }
  return ids_.back();
}

template <>
inline WorkId Pmf<double>::sample(RngStream& rng) const {
  if (ids_.empty()) throw std::logic_error("sampling from empty pmf");
  const double u = rng.next_unit();
  double cum = 0.0;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    cum += probs_[i];
    if (u < cum) return ids_[i];
  }
  return ids_.back();
}

// --- divergences ---

/// max_{y in Supp(p)} p(y)/q(y); nullopt encodes +infinity (some y has
/// p(y) > 0 with q(y) = 0). The exact carrier of max-KL.
template <class T>
std::optional<T> max_likelihood_ratio(const Pmf<T>& p, const Pmf<T>& q) {
  std::optional<T> best;
  for (std::size_t i = 0; i < p.support().size(); ++i) {
    const T qy = q.prob(p.support()[i]);
    if (qy <= NumTraits<T>::zero()) return std::nullopt;
    T ratio = p.probs()[i];
    ratio /= qy;
    if (!best || ratio > *best) best = ratio;
  }
  if (!best) best = NumTraits<T>::one();  // empty support; degenerate but total
  return best;
}

/// Max KL divergence in bits; +inf when support escapes q.
template <class T>
double max_kl(const Pmf<T>& p, const Pmf<T>& q) {
  auto ratio = max_likelihood_ratio(p, q);
  if (!ratio) return kInf;
  if constexpr (NumTraits<T>::exact) {
    return rat_log2(*ratio);
  } else {
    return std::log2(*ratio);
  }
}

/// Total variation distance, (1/2) sum |p - q|.
template <class T>
T tv_distance(const Pmf<T>& p, const Pmf<T>& q) {
  if constexpr (!NumTraits<T>::exact) {
    if (p.support() == q.support()) {
      return 0.5 * kernels::abs_diff_sum(p.probs().data(), q.probs().data(),
                                         p.probs().size());
    }
  }
  T total = NumTraits<T>::zero();
  std::size_t i = 0, j = 0;
  const auto& pi = p.support();
  const auto& qi = q.support();
  while (i < pi.size() || j < qi.size()) {
    if (j >= qi.size() || (i < pi.size() && pi[i] < qi[j])) {
      total += p.probs()[i];
      ++i;
    } else if (i >= pi.size() || qi[j] < pi[i]) {
      total += q.probs()[j];
      ++j;
    } else {
      T d = p.probs()[i];
      d -= q.probs()[j];
      if (d < NumTraits<T>::zero()) d = -d;
      total += d;
      ++i;
      ++j;
    }
  }
  total /= T(2);
  return total;
}

/// All subsets of the union support of p (exhaustive event-bound checks).
/// Guarded against blowups: support must stay at or below max_bits.
template <class T>
std::vector<WorkSet> all_events(const Pmf<T>& p, int max_bits = 12) {
  const auto& ids = p.support();
  if (ids.size() > static_cast<std::size_t>(max_bits)) {
    throw std::length_error("support too large for exhaustive event enumeration");
  }
  const std::size_t n = ids.size();
  std::vector<WorkSet> events;
  events.reserve(1u << n);
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    WorkSet e;
    for (std::size_t k = 0; k < n; ++k) {
      if (bits & (1ull << k)) e.push_back(ids[k]);
    }
    events.push_back(std::move(e));
  }
  return events;
}

}  // namespace cleanroom
