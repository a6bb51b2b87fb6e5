#include "pinball.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <set>
#include <thread>

namespace pinball {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Basic: return "basic";
    case Variant::UpperTriangular: return "upper_triangular";
    case Variant::Betti: return "betti";
    case Variant::UpperTriangularBetti: return "upper_triangular_betti";
  }
  return "basic";
}

Variant parse_variant(const std::string& raw) {
  std::string s = raw;
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "basic") return Variant::Basic;
  if (s == "upper_triangular" || s == "ut") return Variant::UpperTriangular;
  if (s == "betti") return Variant::Betti;
  if (s == "upper_triangular_betti" || s == "ut_betti") return Variant::UpperTriangularBetti;
  pp::fail("UnknownVariant", "unknown pinball variant '" + raw + "'");
}

std::string wall_reason_name(WallReason r) {
  switch (r) {
    case WallReason::None: return "";
    case WallReason::Occupied: return "wall";
    case WallReason::Ideal: return "upper-triangular-wall";
    case WallReason::BettiRankFull: return "betti-rank-full";
  }
  return "";
}

void validate(const GameConfig& c) {
  if (!c.board) pp::fail("InvalidConfig", "game needs a board");
  const auto& b = *c.board;
  std::vector<char> seen(b.size(), 0);
  for (int j : c.initial) {
    if (j < 0 || static_cast<size_t>(j) >= b.size()) pp::fail("UnknownId", "initial element outside the board");
    if (seen[static_cast<size_t>(j)]) pp::fail("InvalidOrder", "initial subset lists '" + b.id(j) + "' twice");
    seen[static_cast<size_t>(j)] = 1;
  }
  for (size_t a = 0; a < c.initial.size(); ++a)
    for (size_t z = a + 1; z < c.initial.size(); ++z)
      if (b.leq(c.initial[z], c.initial[a]))
        pp::fail("InvalidOrder", "release order puts '" + b.id(c.initial[a]) + "' before the smaller '" +
                                     b.id(c.initial[z]) + "'");
  if (has_betti_walls(c.variant) && !c.targets) pp::fail("MissingTargets", "Betti variants need target Betti numbers");
  if (c.targets)
    for (int t : *c.targets)
      if (t < 0) pp::fail("InvalidConfig", "target Betti numbers must be nonnegative");
}

PinballState::PinballState(GameConfig config) : config_(std::move(config)) {
  validate(config_);
  const auto& b = board();
  occupied_.assign(b.size(), 0);
  walls_.assign(b.covers().size(), WallReason::None);
  rolldown_.assign(config_.initial.size(), -1);
  tally_.assign(static_cast<size_t>(std::max(b.max_rank(), 0)) + 1, 0);
  by_rank_.resize(tally_.size());
  for (int i = 0; i < static_cast<int>(b.size()); ++i) by_rank_[static_cast<size_t>(b.rank(i))].push_back(i);
  release_next();
}

std::optional<int> PinballState::ball() const {
  if (game_over()) return std::nullopt;
  return position_;
}

void PinballState::release_next() {
  if (game_over()) {
    position_ = -1;
    return;
  }
  position_ = config_.initial[k_];
  if (occupied_[static_cast<size_t>(position_)])
    pp::fail("SlotOccupiedAtRelease", "slot '" + board().id(position_) + "' is occupied at release");
}

std::vector<Edge> PinballState::legal_moves() const {
  if (game_over()) pp::fail("NoBallInPlay", "the game is over");
  std::vector<Edge> out;
  for (int c : board().down_edges(position_))
    if (walls_[static_cast<size_t>(c)] == WallReason::None) {
      const auto& cv = board().covers()[static_cast<size_t>(c)];
      out.push_back({cv.upper, cv.lower});
    }
  return out;
}

std::string PinballState::check_move(const Edge& e) const {
  if (game_over()) return "game-over";
  if (e.upper != position_) return "not-ball-position";
  auto c = board().cover_index(e.upper, e.lower);
  if (!c) return "not-a-cover";
  return wall_reason_name(walls_[static_cast<size_t>(*c)]);
}

void PinballState::apply_move(const Edge& e) {
  if (game_over()) pp::fail("NoBallInPlay", "the game is over");
  std::string why = check_move(e);
  if (!why.empty()) {
    auto name = [&](int i) {
      return i >= 0 && static_cast<size_t>(i) < board().size() ? board().id(i) : std::string("?");
    };
    throw IllegalMove(why, "illegal move " + name(e.upper) + " -> " + name(e.lower) + " (" + why + ")");
  }
  history_.push_back({static_cast<int>(k_), e});
  position_ = e.lower;
}

void PinballState::wall_into(int element, WallReason why) {
  for (int c : board().up_edges(element))
    if (walls_[static_cast<size_t>(c)] == WallReason::None) walls_[static_cast<size_t>(c)] = why;
}

void PinballState::finalize_current() {
  if (game_over()) pp::fail("NoBallInPlay", "the game is over");
  if (!legal_moves().empty()) pp::fail("MovesRemain", "the ball at '" + board().id(position_) + "' can still roll");
  const auto& b = board();
  const int r = position_;
  rolldown_[k_] = r;
  occupied_[static_cast<size_t>(r)] = 1;
  ++tally_[static_cast<size_t>(b.rank(r))];
  wall_into(r, WallReason::Occupied);
  if (has_ideal_walls(config_.variant))
    for (int a : b.principal_ideal(config_.initial[k_])) wall_into(a, WallReason::Ideal);
  if (has_betti_walls(config_.variant)) {
    // Ranks past the end of the target list get no walls.
    const auto& t = *config_.targets;
    for (size_t j = 0; j < t.size() && j < tally_.size(); ++j)
      if (tally_[j] >= t[j])
        for (int e : by_rank_[j]) wall_into(e, WallReason::BettiRankFull);
  }
  ++k_;
  release_next();
}

std::vector<int> PinballState::reachable_rests() const {
  if (game_over()) pp::fail("NoBallInPlay", "the game is over");
  const auto& b = board();
  std::vector<char> seen(b.size(), 0);
  std::deque<int> queue{position_};
  seen[static_cast<size_t>(position_)] = 1;
  std::vector<int> rests;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    bool moved = false;
    for (int c : b.down_edges(x)) {
      if (walls_[static_cast<size_t>(c)] != WallReason::None) continue;
      moved = true;
      int y = b.covers()[static_cast<size_t>(c)].lower;
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
    if (!moved) rests.push_back(x);
  }
  std::sort(rests.begin(), rests.end());
  return rests;
}

void PinballState::rest_at(int slot) {
  if (game_over()) pp::fail("NoBallInPlay", "the game is over");
  position_ = slot;
  finalize_current();
}

bool PinballState::success() const {
  if (!game_over()) return false;
  if (!has_betti_walls(config_.variant)) return true;
  const auto& t = *config_.targets;
  for (size_t j = 0; j < tally_.size(); ++j) {
    int want = j < t.size() ? t[j] : 0;
    if (tally_[j] != want) return false;
  }
  for (size_t j = tally_.size(); j < t.size(); ++j)
    if (t[j] != 0) return false;
  return true;
}

PinballState play(const GameConfig& config, const Strategy& strategy) {
  PinballState s(config);
  while (!s.game_over()) {
    auto moves = s.legal_moves();
    if (moves.empty()) {
      s.finalize_current();
      continue;
    }
    s.apply_move(strategy(s, moves));
  }
  return s;
}

PinballState play_script(const GameConfig& config, const std::vector<Edge>& script) {
  PinballState s(config);
  size_t idx = 0;
  while (!s.game_over()) {
    if (s.legal_moves().empty()) {
      s.finalize_current();
      continue;
    }
    if (idx >= script.size())
      pp::fail("ScriptExhausted", "script ended while the ball at '" + s.board().id(*s.ball()) + "' can still roll");
    const Edge& e = script[idx++];
    std::string why = s.check_move(e);
    if (!why.empty()) pp::fail("ScriptIllegalMove", "script move " + std::to_string(idx) + " is illegal (" + why + ")");
    s.apply_move(e);
  }
  if (idx < script.size()) pp::fail("ScriptIllegalMove", "script has moves after the game ended");
  return s;
}

size_t default_node_budget() {
  if (const char* env = std::getenv("PINBALL_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 10000000;
}

namespace {

struct Search {
  size_t budget;
  std::atomic<size_t>& nodes;
  std::atomic<bool>& exhausted;
  std::set<std::vector<int>> visited;
  std::set<Outcome> found;

  void dfs(const PinballState& s) {
    if (exhausted.load(std::memory_order_relaxed)) return;
    if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
      exhausted = true;
      return;
    }
    if (s.game_over()) {
      found.insert(outcome_of(s));
      return;
    }
    // Walls depend only on the rolldowns so far, so the prefix is the state.
    if (!visited.insert(s.rolldown()).second) return;
    for (int r : s.reachable_rests()) {
      PinballState next = s;
      next.rest_at(r);
      dfs(next);
    }
  }
};

}  // namespace

Enumeration enumerate_outcomes(const GameConfig& config, size_t node_budget, int threads) {
  if (node_budget == 0) pp::fail("InvalidBudget", "node budget must be positive");
  PinballState root(config);
  std::atomic<size_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::set<Outcome> merged;

  std::vector<int> first;
  if (!root.game_over()) first = root.reachable_rests();
  if (threads <= 1 || first.size() <= 1) {
    Search s{node_budget, nodes, exhausted, {}, {}};
    s.dfs(root);
    merged = std::move(s.found);
  } else {
    nodes = 1;
    const size_t workers = std::min(first.size(), static_cast<size_t>(threads));
    std::vector<Search> searches;
    for (size_t w = 0; w < workers; ++w) searches.push_back(Search{node_budget, nodes, exhausted, {}, {}});
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (size_t b = w; b < first.size(); b += workers) {
            PinballState next = root;
            next.rest_at(first[b]);
            searches[w].dfs(next);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          exhausted = true;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& s : searches) merged.insert(s.found.begin(), s.found.end());
  }
  Enumeration out;
  out.outcomes.assign(merged.begin(), merged.end());
  out.exhausted = exhausted.load();
  out.nodes = std::min(nodes.load(), node_budget);
  return out;
}

}  // namespace pinball
