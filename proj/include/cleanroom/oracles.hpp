#pragma once

// Prompts, auxiliary inputs, and the two legal-interface oracles.
//
// SubSim maps a work to the finite set of works deemed substantially similar
// to it (always including itself). The ideas oracle projects a work to its
// unprotectable idea label, possibly bot. Both are explicit tables or simple
// pure functions; nothing is learned.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cleanroom/work.hpp"

namespace cleanroom {

/// A prompt (also reused for idea labels and aux inputs): bot, an integer,
/// or a label string.
class Prompt {
 public:
  enum class Kind : std::uint8_t { kBot = 0, kInt = 1, kLabel = 2 };

  Prompt() = default;  // bot
  static Prompt bot() { return Prompt(); }
  static Prompt of(std::int64_t i) {
    Prompt p;
    p.kind_ = Kind::kInt;
    p.int_ = i;
    return p;
  }
  static Prompt of(std::string label) {
    Prompt p;
    p.kind_ = Kind::kLabel;
    p.label_ = std::move(label);
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_bot() const { return kind_ == Kind::kBot; }
  std::int64_t int_value() const { return int_; }
  const std::string& label() const { return label_; }

  /// Round-trippable string form: "bot", "int:7", "str:abc".
  std::string str() const;
  static Prompt parse(const std::string& s);

  friend bool operator==(const Prompt& a, const Prompt& b) {
    return a.kind_ == b.kind_ && a.int_ == b.int_ && a.label_ == b.label_;
  }
  friend std::strong_ordering operator<=>(const Prompt& a, const Prompt& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.int_ <=> b.int_; c != 0) return c;
    return a.label_ <=> b.label_;
  }

 private:
  Kind kind_ = Kind::kBot;
  std::int64_t int_ = 0;
  std::string label_;
};

/// Idea labels are bot-or-string prompts.
using IdeaLabel = Prompt;

class SubSimOracle {
 public:
  /// SubSim(w) = {w}.
  static SubSimOracle identity();
  /// Works sharing a token prefix of at least `min_overlap` symbols are
  /// similar (reflexivity still guaranteed).
  static SubSimOracle prefix(int min_overlap);
  /// Explicit table, keyed by work tokens; w itself is inserted into every
  /// image on construction. Works absent from the table map to {w}.
  static SubSimOracle table(std::map<std::string, std::vector<std::string>> t);

  /// Image of one work; sorted, always contains w.
  WorkSet of(WorkId w, const WorkSpace& space) const;
  /// Union over a set of works.
  WorkSet of_set(const WorkSet& targets, const WorkSpace& space) const;

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
  int min_overlap_ = 0;
  std::map<std::string, std::vector<std::string>> table_;
};

class IdeasOracle {
 public:
  /// ideas(w) = bot for every work.
  static IdeasOracle bot();
  /// ideas(w) = the first `len` tokens of w (whole work if shorter).
  static IdeasOracle prefix(int len);
  /// Explicit table keyed by tokens; absent works map to bot.
  static IdeasOracle table(std::map<std::string, std::string> t);

  IdeaLabel of(WorkId w, const WorkSpace& space) const;

  /// ideas(SubSim(c)) as a sorted label list, for the targeted union bound.
  std::vector<IdeaLabel> of_set(const WorkSet& works, const WorkSpace& space) const;

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
  int prefix_len_ = 0;
  std::map<std::string, std::string> table_;
};

}  // namespace cleanroom
