#pragma once

// Works, work spaces, datasets.
//
// A work is a nonempty token string over a small alphabet. Work spaces are
// finite and enumerable in shortlex order (length first, then lexicographic
// by alphabet position), which gives every work a stable integer code usable
// as a key without materializing the enumeration. Codes fit in 64 bits for
// every accepted space, so binary datasets up to dozens of bits work even
// though exhaustive engines only ever touch small spaces.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cleanroom {

using WorkId = std::uint64_t;

class WorkSpace {
 public:
  WorkSpace() = default;
  WorkSpace(std::string alphabet, int max_len);

  const std::string& alphabet() const { return alphabet_; }
  int max_len() const { return max_len_; }
  bool is_binary() const { return alphabet_ == "01"; }

  /// Number of works: |A| + |A|^2 + ... + |A|^max_len.
  std::uint64_t size() const { return size_; }

  bool contains(std::string_view tokens) const;

  /// Shortlex code of a token string; throws if not in the space.
  WorkId encode(std::string_view tokens) const;
  std::optional<WorkId> try_encode(std::string_view tokens) const;

  /// Token string for a code; throws on out-of-range codes.
  std::string decode(WorkId id) const;

  /// All works in shortlex order. Guarded: refuses spaces larger than
  /// `limit` so exhaustive engines stay desk-scale.
  std::vector<WorkId> enumerate(std::uint64_t limit = kEnumLimit) const;

  /// Codes of the works of exactly `len` tokens (a contiguous id range).
  WorkId first_id_of_length(int len) const;
  std::uint64_t count_of_length(int len) const;
  std::vector<WorkId> ids_of_length(int len, std::uint64_t limit = kEnumLimit) const;

  bool operator==(const WorkSpace& o) const {
    return alphabet_ == o.alphabet_ && max_len_ == o.max_len_;
  }

  static constexpr std::uint64_t kEnumLimit = 1u << 20;

 private:
  std::string alphabet_;
  int max_len_ = 0;
  std::uint64_t size_ = 0;
  // offset_[n] = count of works shorter than n+1 tokens.
  std::vector<std::uint64_t> offset_;
  int sym_index(char c) const;
};

/// Ordered list of works, multiplicities allowed.
struct Dataset {
  std::vector<WorkId> items;

  bool empty() const { return items.empty(); }
  std::size_t count() const { return items.size(); }
  bool contains(WorkId w) const;

  /// Total length in bits when every item is over the {0,1} alphabet.
  /// Throws for non-binary spaces (coin trainers reject those).
  std::size_t bit_length(const WorkSpace& space) const;

  /// Item tokens concatenated in order, for bit-string parsing.
  std::string concat_tokens(const WorkSpace& space) const;
};

/// Sorted, duplicate-free set of works. Used for copyright sets, SubSim
/// images, and event arguments.
using WorkSet = std::vector<WorkId>;

WorkSet make_work_set(std::vector<WorkId> items);
bool work_set_contains(const WorkSet& s, WorkId w);
WorkSet work_set_union(const WorkSet& a, const WorkSet& b);
bool work_set_subset(const WorkSet& a, const WorkSet& b);

}  // namespace cleanroom
