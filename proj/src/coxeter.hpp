#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "poset.hpp"

namespace coxeter {

enum class LieType { A, B, C, D };

LieType parse_type(const std::string& s);  // throws UnsupportedType
char type_letter(LieType t);

constexpr size_t kMaxOrder = 1000000;

using Elem = int;             // dense index into the group table; 0 is the identity
using Vec = std::vector<int>;  // ambient coordinates
using Word = std::vector<int>; // simple reflection indices, 1-based

// Classical Weyl group realised as signed permutations of the ambient
// coordinates. For A_n the ambient space has n+1 coordinates.
class WeylGroup {
 public:
  // rank is the Lie rank: A3 is S4, B2 has 8 elements.
  static std::shared_ptr<const WeylGroup> make(LieType type, int rank);
  static size_t order_of(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  size_t size() const { return lengths_.size(); }
  std::string name() const;

  Elem identity() const { return 0; }
  Elem simple(int i) const { return right_[static_cast<size_t>(i - 1)][0]; }
  // One-line notation: entry k is w(k+1), signed for B/C/D.
  const std::vector<int>& one_line(Elem w) const { return one_line_[static_cast<size_t>(w)]; }
  std::optional<Elem> find(const std::vector<int>& one_line) const;

  Elem rmul(Elem w, int i) const { return right_[static_cast<size_t>(i - 1)][static_cast<size_t>(w)]; }
  Elem lmul(int i, Elem w) const { return left_[static_cast<size_t>(i - 1)][static_cast<size_t>(w)]; }
  Elem mul(Elem u, Elem v) const;
  Elem inverse(Elem w) const { return inverse_[static_cast<size_t>(w)]; }
  Elem from_word(const Word& word) const;

  int length(Elem w) const { return lengths_[static_cast<size_t>(w)]; }
  std::vector<int> right_descents(Elem w) const;
  std::vector<int> left_descents(Elem w) const;
  // Strip the smallest right descent until the identity is reached.
  Word reduced_word(Elem w) const;
  std::vector<Word> all_reduced_words(Elem w) const;

  const std::vector<Vec>& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }
  bool is_root(const Vec& v) const;
  bool is_positive_root(const Vec& v) const;
  // Coefficients of v in the simple-root basis (v must lie in the root lattice span).
  std::vector<int> simple_coordinates(const Vec& v) const;
  Vec from_simple_coordinates(const std::vector<int>& c) const;
  // Throws NotARoot when r is not in the root system.
  Vec act(Elem w, const Vec& r) const;
  Vec act_vector(Elem w, const Vec& v) const;
  // The reflection t_alpha as a group element.
  Elem reflection(const Vec& alpha) const;
  const std::vector<Elem>& reflections() const { return reflections_; }

  bool bruhat_leq(Elem u, Elem w) const;
  Elem max_parabolic(const std::vector<int>& J) const;

  // "e", "s2.s1.s3" (canonical reduced word) and bracket one-line "[2,1,4,3]".
  std::string word_string(Elem w) const;
  std::string one_line_string(Elem w) const;
  // Accepts "e", dotted words (need not be reduced), and one-line notation.
  Elem parse(const std::string& text) const;

  // Bruhat poset on all of W (rank = length), ids = word_string. Poset
  // indices coincide with group indices.
  poset::GradedPoset to_poset() const;

 private:
  WeylGroup(LieType type, int rank);
  void build_roots();
  void enumerate();
  std::vector<int> apply_simple_right(const std::vector<int>& ol, int i) const;
  bool bruhat_rec(Elem u, Elem w) const;

  LieType type_;
  int rank_, dim_;
  std::vector<Vec> simple_roots_, positive_roots_;
  std::vector<std::vector<int>> one_line_;
  std::unordered_map<std::string, Elem> lookup_;
  std::vector<std::vector<Elem>> right_, left_;
  std::vector<Elem> inverse_;
  std::vector<int> lengths_;
  std::vector<Elem> reflections_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<uint64_t, bool> bruhat_memo_;
};

using WeylPtr = std::shared_ptr<const WeylGroup>;

}  // namespace coxeter
