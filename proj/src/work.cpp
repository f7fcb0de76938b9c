#include "cleanroom/work.hpp"

#include <algorithm>
#include <stdexcept>

namespace cleanroom {

WorkSpace::WorkSpace(std::string alphabet, int max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {
  if (alphabet_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (max_len_ < 1) throw std::invalid_argument("max_len must be >= 1");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    for (std::size_t j = i + 1; j < alphabet_.size(); ++j) {
      if (alphabet_[i] == alphabet_[j]) {
        throw std::invalid_argument("alphabet symbols must be distinct");
      }
    }
  }
  const std::uint64_t a = alphabet_.size();
  offset_.assign(static_cast<std::size_t>(max_len_) + 1, 0);
  std::uint64_t pow = 1;
  for (int n = 1; n <= max_len_; ++n) {
    if (pow > (UINT64_MAX / 4) / a) {
      throw std::invalid_argument("work space too large for 64-bit codes");
    }
    pow *= a;
    offset_[static_cast<std::size_t>(n)] =
        offset_[static_cast<std::size_t>(n) - 1] + pow;
  }
  size_ = offset_[static_cast<std::size_t>(max_len_)];
}

int WorkSpace::sym_index(char c) const {
  auto pos = alphabet_.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

bool WorkSpace::contains(std::string_view tokens) const {
  if (tokens.empty() || tokens.size() > static_cast<std::size_t>(max_len_)) return false;
  for (char c : tokens) {
    if (sym_index(c) < 0) return false;
  }
  return true;
}

std::optional<WorkId> WorkSpace::try_encode(std::string_view tokens) const {
  if (!contains(tokens)) return std::nullopt;
  const std::uint64_t a = alphabet_.size();
  std::uint64_t value = 0;
  for (char c : tokens) {
    value = value * a + static_cast<std::uint64_t>(sym_index(c));
  }
  return offset_[tokens.size() - 1] + value;
}

WorkId WorkSpace::encode(std::string_view tokens) const {
  auto id = try_encode(tokens);
  if (!id) {
    throw std::out_of_range("work not in space: \"" + std::string(tokens) + "\"");
  }
  return *id;
}

std::string WorkSpace::decode(WorkId id) const {
  if (id >= size_) throw std::out_of_range("work code out of range");
  std::size_t len = 1;
  while (id >= offset_[len]) ++len;
  std::uint64_t value = id - offset_[len - 1];
  const std::uint64_t a = alphabet_.size();
  std::string out(len, alphabet_[0]);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = alphabet_[static_cast<std::size_t>(value % a)];
    value /= a;
  }
  return out;
}

std::vector<WorkId> WorkSpace::enumerate(std::uint64_t limit) const {
  if (size_ > limit) {
    throw std::length_error("work space enumeration exceeds configured bound");
  }
  std::vector<WorkId> all(static_cast<std::size_t>(size_));
  for (std::uint64_t i = 0; i < size_; ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

bool Dataset::contains(WorkId w) const {
  return std::find(items.begin(), items.end(), w) != items.end();
}

std::size_t Dataset::bit_length(const WorkSpace& space) const {
  if (!space.is_binary()) {
    throw std::invalid_argument("bit length requires the {0,1} alphabet");
  }
  std::size_t total = 0;
  for (WorkId w : items) total += space.decode(w).size();
  return total;
}

std::string Dataset::concat_tokens(const WorkSpace& space) const {
  std::string out;
  for (WorkId w : items) out += space.decode(w);
  return out;
}

WorkSet make_work_set(std::vector<WorkId> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool work_set_contains(const WorkSet& s, WorkId w) {
  return std::binary_search(s.begin(), s.end(), w);
}

WorkSet work_set_union(const WorkSet& a, const WorkSet& b) {
  WorkSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool work_set_subset(const WorkSet& a, const WorkSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace cleanroom
