#include "poset.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace poset {

namespace {

bool test_bit(const std::vector<uint64_t>& bits, int i) {
  return (bits[static_cast<size_t>(i) / 64] >> (static_cast<size_t>(i) % 64)) & 1u;
}

void set_bit(std::vector<uint64_t>& bits, int i) {
  bits[static_cast<size_t>(i) / 64] |= uint64_t{1} << (static_cast<size_t>(i) % 64);
}

}  // namespace

GradedPoset GradedPoset::build(const std::vector<std::pair<std::string, int>>& elements,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
  if (elements.size() > kMaxElements)
    pp::fail("TooLarge", "poset has " + std::to_string(elements.size()) + " elements, cap is " +
                             std::to_string(kMaxElements));
  GradedPoset p;
  for (const auto& [id, rank] : elements) {
    if (rank < 0) pp::fail("RankViolation", "negative rank for '" + id + "'");
    if (!p.lookup_.emplace(id, static_cast<int>(p.ids_.size())).second)
      pp::fail("DuplicateId", "duplicate element id '" + id + "'");
    p.ids_.push_back(id);
    p.ranks_.push_back(rank);
  }
  p.down_.resize(p.ids_.size());
  p.up_.resize(p.ids_.size());
  for (const auto& [u, l] : covers) {
    int a = p.index(u), b = p.index(l);
    if (a == b) pp::fail("CycleDetected", "self-cover on '" + u + "'");
    if (p.ranks_[static_cast<size_t>(a)] != p.ranks_[static_cast<size_t>(b)] + 1)
      pp::fail("RankViolation", "cover ('" + u + "', '" + l + "') does not drop rank by one");
    if (p.cover_index(a, b)) continue;
    int c = static_cast<int>(p.covers_.size());
    p.covers_.push_back({a, b});
    p.down_[static_cast<size_t>(a)].push_back(c);
    p.up_[static_cast<size_t>(b)].push_back(c);
  }
  p.compute_closure();
  return p;
}

void GradedPoset::compute_closure() {
  const size_t n = ids_.size(), words = (n + 63) / 64;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ranks_[static_cast<size_t>(a)] < ranks_[static_cast<size_t>(b)]; });
  below_.assign(n, std::vector<uint64_t>(words, 0));
  for (int v : order) {
    auto& bits = below_[static_cast<size_t>(v)];
    set_bit(bits, v);
    for (int c : down_[static_cast<size_t>(v)]) {
      const auto& lower = below_[static_cast<size_t>(covers_[static_cast<size_t>(c)].lower)];
      for (size_t w = 0; w < words; ++w) bits[w] |= lower[w];
    }
  }
}

int GradedPoset::max_rank() const {
  return ranks_.empty() ? -1 : *std::max_element(ranks_.begin(), ranks_.end());
}

std::optional<int> GradedPoset::find(const std::string& id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int GradedPoset::index(const std::string& id) const {
  auto i = find(id);
  if (!i) pp::fail("UnknownId", "unknown element id '" + id + "'");
  return *i;
}

std::optional<int> GradedPoset::cover_index(int upper, int lower) const {
  for (int c : down_[static_cast<size_t>(upper)])
    if (covers_[static_cast<size_t>(c)].lower == lower) return c;
  return std::nullopt;
}

bool GradedPoset::leq(int a, int b) const { return test_bit(below_[static_cast<size_t>(b)], a); }

std::vector<int> GradedPoset::principal_ideal(int i) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(size()); ++a)
    if (leq(a, i)) out.push_back(a);
  return out;
}

std::vector<int> GradedPoset::principal_filter(int i) const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(size()); ++b)
    if (leq(i, b)) out.push_back(b);
  return out;
}

std::vector<int> GradedPoset::linear_extension(const std::vector<int>& subset) const {
  std::vector<int> out = subset;
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return id(a) < id(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GradedPoset::is_linear_extension(const std::vector<int>& order) const {
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j)
      if (order[i] == order[j] || leq(order[j], order[i])) return false;
  return true;
}

bool GradedPoset::is_union_of_principal_ideals(const std::vector<int>& subset) const {
  std::vector<char> in(size(), 0);
  for (int i : subset) in[static_cast<size_t>(i)] = 1;
  for (int i : subset)
    for (int a : principal_ideal(i))
      if (!in[static_cast<size_t>(a)]) return false;
  return true;
}

GradedPoset GradedPoset::induced(const std::vector<int>& subset) const {
  GradedPoset p;
  for (int i : subset) {
    if (!p.lookup_.emplace(id(i), static_cast<int>(p.ids_.size())).second)
      pp::fail("DuplicateId", "duplicate element '" + id(i) + "' in subset");
    p.ids_.push_back(id(i));
    p.ranks_.push_back(rank(i));
  }
  const size_t n = subset.size();
  p.down_.resize(n);
  p.up_.resize(n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (a == b || !leq(subset[b], subset[a])) continue;
      bool direct = true;
      for (size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq(subset[b], subset[c]) && leq(subset[c], subset[a])) direct = false;
      if (!direct) continue;
      int ci = static_cast<int>(p.covers_.size());
      p.covers_.push_back({static_cast<int>(a), static_cast<int>(b)});
      p.down_[a].push_back(ci);
      p.up_[b].push_back(ci);
    }
  }
  p.compute_closure();
  return p;
}

}  // namespace poset
