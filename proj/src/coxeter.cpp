#include "coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace coxeter {

namespace {

std::string key_of(const std::vector<int>& ol) {
  std::string k(ol.size(), '\0');
  for (size_t i = 0; i < ol.size(); ++i) k[i] = static_cast<char>(ol[i]);
  return k;
}

int sgn(int x) { return x < 0 ? -1 : 1; }

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

LieType parse_type(const std::string& s) {
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  pp::fail("UnsupportedType", "unsupported Lie type '" + s + "' (A, B, C, D only)");
}

char type_letter(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

size_t WeylGroup::order_of(LieType type, int rank) {
  // Saturates just past the cap so huge ranks cannot overflow.
  const size_t limit = kMaxOrder * 64;
  size_t fact = 1;
  const int letters = type == LieType::A ? rank + 1 : rank;
  for (int k = 2; k <= letters; ++k) {
    fact *= static_cast<size_t>(k);
    if (fact > limit) return limit;
  }
  if (type == LieType::A) return fact;
  for (int k = 0; k < rank - (type == LieType::D ? 1 : 0); ++k) {
    fact *= 2;
    if (fact > limit) return limit;
  }
  return fact;
}

std::shared_ptr<const WeylGroup> WeylGroup::make(LieType type, int rank) {
  if (rank < 1) pp::fail("InvalidRank", "rank must be at least 1");
  if (type == LieType::D && rank < 2) pp::fail("InvalidRank", "type D needs rank at least 2");
  if (order_of(type, rank) > kMaxOrder)
    pp::fail("RankTooLarge", std::string(1, type_letter(type)) + std::to_string(rank) +
                                 " exceeds the group order cap of " + std::to_string(kMaxOrder));
  return std::shared_ptr<const WeylGroup>(new WeylGroup(type, rank));
}

WeylGroup::WeylGroup(LieType type, int rank)
    : type_(type), rank_(rank), dim_(type == LieType::A ? rank + 1 : rank) {
  build_roots();
  enumerate();
}

std::string WeylGroup::name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

void WeylGroup::build_roots() {
  auto e = [&](int i) {
    Vec v(static_cast<size_t>(dim_), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  auto add = [](Vec a, const Vec& b, int c) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += c * b[k];
    return a;
  };
  const int n = rank_;
  for (int i = 0; i < n; ++i) {
    if (type_ == LieType::A || i < n - 1) {
      simple_roots_.push_back(add(e(i), e(i + 1), -1));
    } else if (type_ == LieType::B) {
      simple_roots_.push_back(e(n - 1));
    } else if (type_ == LieType::C) {
      simple_roots_.push_back(add(e(n - 1), e(n - 1), 1));
    } else {
      simple_roots_.push_back(add(e(n - 2), e(n - 1), 1));
    }
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      positive_roots_.push_back(add(e(i), e(j), -1));
      if (type_ != LieType::A) positive_roots_.push_back(add(e(i), e(j), 1));
    }
    if (type_ == LieType::B) positive_roots_.push_back(e(i));
    if (type_ == LieType::C) positive_roots_.push_back(add(e(i), e(i), 1));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [&](const Vec& a, const Vec& b) {
    auto ca = simple_coordinates(a), cb = simple_coordinates(b);
    int ha = 0, hb = 0;
    for (int x : ca) ha += x;
    for (int x : cb) hb += x;
    if (ha != hb) return ha < hb;
    return ca > cb;
  });
}

std::vector<int> WeylGroup::simple_coordinates(const Vec& v) const {
  const int n = rank_;
  std::vector<int> c(static_cast<size_t>(n), 0);
  int prefix = 0;
  for (int k = 0; k < n; ++k) {
    prefix += v[static_cast<size_t>(k)];
    c[static_cast<size_t>(k)] = prefix;
  }
  if (type_ == LieType::C) {
    c[static_cast<size_t>(n - 1)] = prefix / 2;
  } else if (type_ == LieType::D) {
    int before = prefix - v[static_cast<size_t>(n - 1)];
    c[static_cast<size_t>(n - 2)] = (before - v[static_cast<size_t>(n - 1)]) / 2;
    c[static_cast<size_t>(n - 1)] = prefix / 2;
  }
  return c;
}

Vec WeylGroup::from_simple_coordinates(const std::vector<int>& c) const {
  Vec v(static_cast<size_t>(dim_), 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t k = 0; k < v.size(); ++k) v[k] += c[i] * simple_roots_[i][k];
  return v;
}

bool WeylGroup::is_positive_root(const Vec& v) const {
  return std::find(positive_roots_.begin(), positive_roots_.end(), v) != positive_roots_.end();
}

bool WeylGroup::is_root(const Vec& v) const {
  if (is_positive_root(v)) return true;
  Vec neg = v;
  for (auto& x : neg) x = -x;
  return is_positive_root(neg);
}

std::vector<int> WeylGroup::apply_simple_right(const std::vector<int>& ol, int i) const {
  std::vector<int> out = ol;
  const int n = rank_;
  if (type_ == LieType::A || i < n) {
    std::swap(out[static_cast<size_t>(i - 1)], out[static_cast<size_t>(i)]);
  } else if (type_ == LieType::B || type_ == LieType::C) {
    out[static_cast<size_t>(n - 1)] = -out[static_cast<size_t>(n - 1)];
  } else {
    out[static_cast<size_t>(n - 2)] = -ol[static_cast<size_t>(n - 1)];
    out[static_cast<size_t>(n - 1)] = -ol[static_cast<size_t>(n - 2)];
  }
  return out;
}

void WeylGroup::enumerate() {
  std::vector<int> id(static_cast<size_t>(dim_));
  for (int k = 0; k < dim_; ++k) id[static_cast<size_t>(k)] = k + 1;
  one_line_.push_back(id);
  lengths_.push_back(0);
  lookup_.emplace(key_of(id), 0);
  right_.assign(static_cast<size_t>(rank_), {});
  for (size_t w = 0; w < one_line_.size(); ++w) {
    for (int i = 1; i <= rank_; ++i) {
      auto next = apply_simple_right(one_line_[w], i);
      auto [it, inserted] = lookup_.emplace(key_of(next), static_cast<Elem>(one_line_.size()));
      if (inserted) {
        one_line_.push_back(std::move(next));
        lengths_.push_back(lengths_[w] + 1);
      }
      right_[static_cast<size_t>(i - 1)].push_back(it->second);
    }
  }
  const size_t N = one_line_.size();
  inverse_.resize(N);
  for (size_t w = 0; w < N; ++w) {
    std::vector<int> inv(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) {
      int x = one_line_[w][static_cast<size_t>(k)];
      inv[static_cast<size_t>(std::abs(x) - 1)] = sgn(x) * (k + 1);
    }
    inverse_[w] = lookup_.at(key_of(inv));
  }
  left_.assign(static_cast<size_t>(rank_), std::vector<Elem>(N));
  for (int i = 1; i <= rank_; ++i)
    for (size_t w = 0; w < N; ++w)
      left_[static_cast<size_t>(i - 1)][w] = inverse_[static_cast<size_t>(rmul(inverse_[w], i))];
  for (const auto& r : positive_roots_) reflections_.push_back(reflection(r));
}

std::optional<Elem> WeylGroup::find(const std::vector<int>& ol) const {
  if (static_cast<int>(ol.size()) != dim_) return std::nullopt;
  auto it = lookup_.find(key_of(ol));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Elem WeylGroup::mul(Elem u, Elem v) const {
  const auto& a = one_line(u);
  const auto& b = one_line(v);
  std::vector<int> out(b.size());
  for (size_t k = 0; k < b.size(); ++k) out[k] = sgn(b[k]) * a[static_cast<size_t>(std::abs(b[k]) - 1)];
  return *find(out);
}

Elem WeylGroup::from_word(const Word& word) const {
  Elem w = identity();
  for (int i : word) {
    if (i < 1 || i > rank_)
      pp::fail("UnknownGenerator", "generator s" + std::to_string(i) + " not in " + name());
    w = rmul(w, i);
  }
  return w;
}

std::vector<int> WeylGroup::right_descents(Elem w) const {
  std::vector<int> d;
  for (int i = 1; i <= rank_; ++i)
    if (length(rmul(w, i)) < length(w)) d.push_back(i);
  return d;
}

std::vector<int> WeylGroup::left_descents(Elem w) const {
  std::vector<int> d;
  for (int i = 1; i <= rank_; ++i)
    if (length(lmul(i, w)) < length(w)) d.push_back(i);
  return d;
}

Word WeylGroup::reduced_word(Elem w) const {
  Word word;
  while (w != identity()) {
    int i = right_descents(w).front();
    word.push_back(i);
    w = rmul(w, i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Word> WeylGroup::all_reduced_words(Elem w) const {
  if (w == identity()) return {Word{}};
  std::vector<Word> out;
  for (int i : right_descents(w)) {
    for (auto word : all_reduced_words(rmul(w, i))) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  return out;
}

Vec WeylGroup::act_vector(Elem w, const Vec& v) const {
  const auto& ol = one_line(w);
  Vec out(v.size(), 0);
  for (size_t k = 0; k < ol.size(); ++k) out[static_cast<size_t>(std::abs(ol[k]) - 1)] = sgn(ol[k]) * v[k];
  return out;
}

Vec WeylGroup::act(Elem w, const Vec& r) const {
  if (static_cast<int>(r.size()) != dim_ || !is_root(r)) pp::fail("NotARoot", "vector is not a root of " + name());
  return act_vector(w, r);
}

Elem WeylGroup::reflection(const Vec& alpha) const {
  if (!is_root(alpha)) pp::fail("NotARoot", "vector is not a root of " + name());
  int norm = 0;
  for (int x : alpha) norm += x * x;
  std::vector<int> ol(static_cast<size_t>(dim_));
  for (int k = 0; k < dim_; ++k) {
    // s(e_k) = e_k - (2 alpha_k / |alpha|^2) alpha, always a signed basis vector.
    std::vector<int> img(static_cast<size_t>(dim_));
    for (int m = 0; m < dim_; ++m)
      img[static_cast<size_t>(m)] = (m == k ? norm : 0) - 2 * alpha[static_cast<size_t>(k)] * alpha[static_cast<size_t>(m)];
    for (int m = 0; m < dim_; ++m)
      if (img[static_cast<size_t>(m)] != 0) ol[static_cast<size_t>(k)] = sgn(img[static_cast<size_t>(m)]) * (m + 1);
  }
  auto e = find(ol);
  if (!e) pp::fail("Internal", "reflection not in group");
  return *e;
}

bool WeylGroup::bruhat_leq(Elem u, Elem w) const { return bruhat_rec(u, w); }

bool WeylGroup::bruhat_rec(Elem u, Elem w) const {
  if (u == w) return true;
  const int lu = length(u), lw = length(w);
  if (lu >= lw) return false;
  if (lu == 0) return true;
  const uint64_t key = static_cast<uint64_t>(u) * size() + static_cast<uint64_t>(w);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
  }
  int s = right_descents(w).front();
  Elem ws = rmul(w, s), us = rmul(u, s);
  bool result = length(us) < lu ? bruhat_rec(us, ws) : bruhat_rec(u, ws);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  bruhat_memo_.emplace(key, result);
  return result;
}

Elem WeylGroup::max_parabolic(const std::vector<int>& J) const {
  Elem w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : J) {
      if (i < 1 || i > rank_) pp::fail("UnknownGenerator", "index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
      Elem next = rmul(w, i);
      if (length(next) > length(w)) {
        w = next;
        grew = true;
      }
    }
  }
  return w;
}

std::string WeylGroup::word_string(Elem w) const {
  Word word = reduced_word(w);
  if (word.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < word.size(); ++k) out += (k ? ".s" : "s") + std::to_string(word[k]);
  return out;
}

std::string WeylGroup::one_line_string(Elem w) const {
  std::string out = "[";
  const auto& ol = one_line(w);
  for (size_t k = 0; k < ol.size(); ++k) out += (k ? "," : "") + std::to_string(ol[k]);
  return out + "]";
}

Elem WeylGroup::parse(const std::string& raw) const {
  const std::string text = trim(raw);
  auto bad = [&]() -> Elem { pp::fail("ParseError", "cannot parse group element '" + raw + "'"); };
  if (text.empty()) return bad();
  if (text == "e" || text == "id") return identity();
  if (text.front() == '[') {
    if (text.back() != ']') return bad();
    std::vector<int> ol;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) return bad();
      try {
        size_t used = 0;
        ol.push_back(std::stoi(item, &used));
        if (used != item.size()) return bad();
      } catch (const std::exception&) {
        return bad();
      }
    }
    auto e = find(ol);
    if (!e) pp::fail("ParseError", "'" + raw + "' is not an element of " + name());
    return *e;
  }
  Word word;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    tok = trim(tok);
    if (tok.size() < 2 || tok[0] != 's') return bad();
    // Undotted "s2s1s3" is accepted while every index is a single digit.
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos < tok.size()) {
      if (tok[pos] != 's') return bad();
      size_t end = pos + 1;
      while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
      if (end == pos + 1) return bad();
      parts.push_back(tok.substr(pos + 1, end - pos - 1));
      pos = end;
    }
    if (parts.size() > 1 && rank_ >= 10) return bad();
    for (const auto& p : parts) word.push_back(std::stoi(p));
  }
  return from_word(word);
}

poset::GradedPoset WeylGroup::to_poset() const {
  if (size() > poset::kMaxElements)
    pp::fail("TooLarge", name() + " has " + std::to_string(size()) + " elements, poset cap is " +
                             std::to_string(poset::kMaxElements));
  std::vector<std::pair<std::string, int>> elems;
  std::vector<std::string> names(size());
  for (Elem w = 0; w < static_cast<Elem>(size()); ++w) {
    names[static_cast<size_t>(w)] = word_string(w);
    elems.emplace_back(names[static_cast<size_t>(w)], length(w));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (Elem w = 0; w < static_cast<Elem>(size()); ++w) {
    std::vector<Elem> below;
    for (Elem t : reflections_) {
      Elem u = mul(w, t);
      if (length(u) == length(w) - 1) below.push_back(u);
    }
    std::sort(below.begin(), below.end());
    for (Elem u : below) covers.emplace_back(names[static_cast<size_t>(w)], names[static_cast<size_t>(u)]);
  }
  return poset::GradedPoset::build(elems, covers);
}

}  // namespace coxeter
