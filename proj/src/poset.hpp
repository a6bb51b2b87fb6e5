#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace poset {

constexpr size_t kMaxElements = 10000;

struct Cover {
  int upper;
  int lower;
};

// Finite graded poset given by its Hasse diagram. Elements are addressed by
// dense indices; ids are the external names.
class GradedPoset {
 public:
  GradedPoset() = default;

  // Throws pp::Error with kind DuplicateId, UnknownId, RankViolation,
  // CycleDetected or TooLarge.
  static GradedPoset build(const std::vector<std::pair<std::string, int>>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  size_t size() const { return ids_.size(); }
  const std::string& id(int i) const { return ids_[static_cast<size_t>(i)]; }
  int rank(int i) const { return ranks_[static_cast<size_t>(i)]; }
  int max_rank() const;
  std::optional<int> find(const std::string& id) const;
  int index(const std::string& id) const;  // throws UnknownId

  const std::vector<Cover>& covers() const { return covers_; }
  // Cover indices with the element as upper (edges leaving it downward).
  const std::vector<int>& down_edges(int i) const { return down_[static_cast<size_t>(i)]; }
  // Cover indices with the element as lower (edges arriving into it).
  const std::vector<int>& up_edges(int i) const { return up_[static_cast<size_t>(i)]; }
  std::optional<int> cover_index(int upper, int lower) const;

  bool leq(int a, int b) const;
  bool leq(const std::string& a, const std::string& b) const { return leq(index(a), index(b)); }
  std::vector<int> principal_ideal(int i) const;
  std::vector<int> principal_filter(int i) const;

  // Sorted by (rank, id); any rank-sorted order refines a graded order.
  std::vector<int> linear_extension(const std::vector<int>& subset) const;
  bool is_linear_extension(const std::vector<int>& order) const;
  bool is_union_of_principal_ideals(const std::vector<int>& subset) const;

  // Subposet on the given elements with ambient ranks kept. Its covers are the
  // covering pairs of the induced order, so ranks may jump by more than one;
  // such posets are index sets only and are not built through build().
  GradedPoset induced(const std::vector<int>& subset) const;

 private:
  void compute_closure();

  std::vector<std::string> ids_;
  std::vector<int> ranks_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> down_, up_;
  std::unordered_map<std::string, int> lookup_;
  // below_[b] has bit a set iff a <= b.
  std::vector<std::vector<uint64_t>> below_;
};

}  // namespace poset
