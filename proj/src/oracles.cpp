#include "cleanroom/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace cleanroom {

std::string Prompt::str() const {
  switch (kind_) {
    case Kind::kBot:
      return "bot";
    case Kind::kInt:
      return "int:" + std::to_string(int_);
    case Kind::kLabel:
      return "str:" + label_;
  }
  return "bot";
}

Prompt Prompt::parse(const std::string& s) {
  if (s == "bot") return bot();
  if (s.rfind("int:", 0) == 0) return of(std::stoll(s.substr(4)));
  if (s.rfind("str:", 0) == 0) return of(s.substr(4));
  throw std::invalid_argument("bad prompt literal: " + s);
}

SubSimOracle SubSimOracle::identity() {
  SubSimOracle o;
  o.kind_ = "identity";
  return o;
}

SubSimOracle SubSimOracle::prefix(int min_overlap) {
  if (min_overlap < 1) throw std::invalid_argument("prefix overlap must be >= 1");
  SubSimOracle o;
  o.kind_ = "prefix";
  o.min_overlap_ = min_overlap;
  return o;
}

SubSimOracle SubSimOracle::table(std::map<std::string, std::vector<std::string>> t) {
  SubSimOracle o;
  o.kind_ = "table";
  o.table_ = std::move(t);
  return o;
}

WorkSet SubSimOracle::of(WorkId w, const WorkSpace& space) const {
  std::vector<WorkId> image{w};
  if (kind_ == "prefix") {
    const std::string tokens = space.decode(w);
    if (static_cast<int>(tokens.size()) >= min_overlap_) {
      const std::string need = tokens.substr(0, static_cast<std::size_t>(min_overlap_));
      for (WorkId v : space.enumerate()) {
        const std::string other = space.decode(v);
        if (other.size() >= need.size() && other.compare(0, need.size(), need) == 0) {
          image.push_back(v);
        }
      }
    }
  } else if (kind_ == "table") {
    auto it = table_.find(space.decode(w));
    if (it != table_.end()) {
      for (const std::string& tokens : it->second) {
        image.push_back(space.encode(tokens));
      }
    }
  }
  return make_work_set(std::move(image));
}

WorkSet SubSimOracle::of_set(const WorkSet& targets, const WorkSpace& space) const {
  WorkSet out;
  for (WorkId w : targets) out = work_set_union(out, of(w, space));
  return out;
}

IdeasOracle IdeasOracle::bot() {
  IdeasOracle o;
  o.kind_ = "bot";
  return o;
}

IdeasOracle IdeasOracle::prefix(int len) {
  if (len < 1) throw std::invalid_argument("ideas prefix length must be >= 1");
  IdeasOracle o;
  o.kind_ = "prefix";
  o.prefix_len_ = len;
  return o;
}

IdeasOracle IdeasOracle::table(std::map<std::string, std::string> t) {
  IdeasOracle o;
  o.kind_ = "table";
  o.table_ = std::move(t);
  return o;
}

IdeaLabel IdeasOracle::of(WorkId w, const WorkSpace& space) const {
  if (kind_ == "bot") return Prompt::bot();
  const std::string tokens = space.decode(w);
  if (kind_ == "prefix") {
    return Prompt::of(tokens.substr(
        0, std::min(tokens.size(), static_cast<std::size_t>(prefix_len_))));
  }
  auto it = table_.find(tokens);
  if (it == table_.end()) return Prompt::bot();
  return Prompt::of(it->second);
}

std::vector<IdeaLabel> IdeasOracle::of_set(const WorkSet& works,
                                           const WorkSpace& space) const {
  std::vector<IdeaLabel> labels;
  labels.reserve(works.size());
  for (WorkId w : works) labels.push_back(of(w, space));
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace cleanroom
