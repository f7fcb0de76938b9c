#pragma once

// Conditional generative models and trainers.
//
// A model is an explicit table prompt -> Pmf over a declared finite prompt
// space. Trainers expose both faces required of them: a seeded sampler and
// an exact finite mixture of models. Mixtures are canonicalized (equal
// models merged) so that output events over models are well-defined for the
// DP checks.

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cleanroom/oracles.hpp"
#include "cleanroom/pmf.hpp"
#include "cleanroom/seed.hpp"
#include "cleanroom/work.hpp"

namespace cleanroom {

template <class T>
class Model {
 public:
  Model() = default;
  Model(WorkSpace space, std::map<Prompt, Pmf<T>> conditionals,
        bool full_support = false)
      : space_(std::move(space)),
        table_(std::move(conditionals)),
        full_support_(full_support) {
    if (table_.empty()) throw std::invalid_argument("model has no prompts");
    if (full_support_) {
      for (const auto& [x, pmf] : table_) {
        if (pmf.support_size() != space_.size()) {
          throw std::invalid_argument("full_support model misses mass at prompt " +
                                      x.str());
        }
      }
    }
  }

  const WorkSpace& space() const { return space_; }
  bool full_support() const { return full_support_; }

  bool has_prompt(const Prompt& x) const { return table_.count(x) != 0; }

  const Pmf<T>& conditional(const Prompt& x) const {
    auto it = table_.find(x);
    if (it == table_.end()) {
      throw std::out_of_range("prompt outside declared space: " + x.str());
    }
    return it->second;
  }

  std::vector<Prompt> prompts() const {
    std::vector<Prompt> out;
    out.reserve(table_.size());
    for (const auto& [x, pmf] : table_) out.push_back(x);
    return out;
  }

  const std::map<Prompt, Pmf<T>>& conditionals() const { return table_; }

  bool operator==(const Model& o) const {
    return space_ == o.space_ && table_ == o.table_;
  }

  /// Stable serialization used as the mixture-atom identity.
  std::string canonical_key() const {
    std::ostringstream os;
    for (const auto& [x, pmf] : table_) {
      os << x.str() << '{';
      for (std::size_t i = 0; i < pmf.support_size(); ++i) {
        os << pmf.support()[i] << ':' << key_of(pmf.probs()[i]) << ';';
      }
      os << '}';
    }
    return os.str();
  }

 private:
  static std::string key_of(const Rat& v) { return v.get_str(); }
  static std::string key_of(double v) {
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof v);
    __builtin_memcpy(&bits, &v, sizeof bits);
    std::ostringstream os;
    os << std::hex << bits;
    return os.str();
  }

  WorkSpace space_;
  std::map<Prompt, Pmf<T>> table_;
  bool full_support_ = false;
};

/// Exact finite mixture: (model, weight) with weights summing to 1.
template <class T>
using Mixture = std::vector<std::pair<Model<T>, T>>;

/// Merge equal models and order atoms deterministically.
template <class T>
Mixture<T> canonicalize_mixture(Mixture<T> mix) {
  std::map<std::string, std::pair<Model<T>, T>> atoms;
  for (auto& [model, weight] : mix) {
    std::string key = model.canonical_key();
    auto it = atoms.find(key);
    if (it == atoms.end()) {
      atoms.emplace(std::move(key), std::make_pair(std::move(model), weight));
    } else {
      it->second.second += weight;
    }
  }
  Mixture<T> out;
  out.reserve(atoms.size());
  for (auto& [key, atom] : atoms) out.push_back(std::move(atom));
  return out;
}

template <class T>
void check_mixture_weights(const Mixture<T>& mix) {
  T sum = NumTraits<T>::zero();
  for (const auto& [m, w] : mix) {
    if (w < NumTraits<T>::zero()) throw std::invalid_argument("negative mixture weight");
    sum += w;
  }
  if (!NumTraits<T>::is_normalized(sum)) {
    throw std::invalid_argument("mixture weights do not sum to 1");
  }
}

/// A training algorithm: dataset -> distribution over models, exposed as an
/// exact mixture and as a sampler. Both faces must agree (unit-tested by
/// frequency on small cases).
template <class T>
class Trainer {
 public:
  using MixtureFn = std::function<Mixture<T>(const Dataset&)>;
  using SamplerFn = std::function<Model<T>(const Dataset&, RngStream&)>;

  Trainer() = default;
  Trainer(std::string name, MixtureFn mixture_fn, SamplerFn sampler_fn = nullptr)
      : name_(std::move(name)),
        mixture_fn_(std::move(mixture_fn)),
        sampler_fn_(std::move(sampler_fn)) {}

  const std::string& name() const { return name_; }
  bool valid() const { return static_cast<bool>(mixture_fn_); }

  Mixture<T> mixture(const Dataset& data) const {
    Mixture<T> mix = canonicalize_mixture(mixture_fn_(data));
    check_mixture_weights(mix);
    return mix;
  }

  /// Draw a model. Falls back to sampling the exact mixture when the
  /// trainer has no native sampler.
  Model<T> sample(const Dataset& data, RngStream& rng) const {
    if (sampler_fn_) return sampler_fn_(data, rng);
    Mixture<T> mix = mixture(data);
    const double u = rng.next_unit();
    double cum = 0.0;
    for (const auto& [model, weight] : mix) {
      cum += NumTraits<T>::to_double(weight);
      if (u < cum) return model;
    }
    return mix.back().first;
  }

 private:
  std::string name_;
  MixtureFn mixture_fn_;
  SamplerFn sampler_fn_;
};

/// safe: C -> models trained without access to the argument work.
template <class T>
struct SafeFunction {
  std::function<Model<T>(WorkId)> fn;
  Model<T> operator()(WorkId c) const { return fn(c); }
};

}  // namespace cleanroom
