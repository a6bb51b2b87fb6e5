#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace pinball {

enum class Variant { Basic, UpperTriangular, Betti, UpperTriangularBetti };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);
inline bool has_betti_walls(Variant v) { return v == Variant::Betti || v == Variant::UpperTriangularBetti; }
inline bool has_ideal_walls(Variant v) {
  return v == Variant::UpperTriangular || v == Variant::UpperTriangularBetti;
}

struct GameConfig {
  std::shared_ptr<const poset::GradedPoset> board;
  std::vector<int> initial;  // release order on the board
  Variant variant = Variant::Basic;
  std::optional<std::vector<int>> targets;  // b_j indexed by rank j
};

// Throws UnknownId, InvalidOrder or MissingTargets.
void validate(const GameConfig& c);

enum class WallReason : uint8_t { None, Occupied, Ideal, BettiRankFull };
std::string wall_reason_name(WallReason r);

struct Edge {
  int upper;
  int lower;
  friend bool operator==(const Edge& a, const Edge& b) { return a.upper == b.upper && a.lower == b.lower; }
};

class IllegalMove : public pp::Error {
 public:
  IllegalMove(std::string reason, const std::string& message)
      : pp::Error("IllegalMove", message), reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

struct MoveRecord {
  int ball;  // index into the release order
  Edge edge;
};

class PinballState {
 public:
  explicit PinballState(GameConfig config);

  const GameConfig& config() const { return config_; }
  const poset::GradedPoset& board() const { return *config_.board; }
  bool game_over() const { return k_ >= config_.initial.size(); }
  size_t current_index() const { return k_; }
  std::optional<int> ball() const;

  std::vector<Edge> legal_moves() const;  // throws NoBallInPlay
  // Empty when the edge is legal; otherwise a reason code.
  std::string check_move(const Edge& e) const;
  void apply_move(const Edge& e);  // throws IllegalMove / NoBallInPlay
  void finalize_current();         // throws MovesRemain / NoBallInPlay

  // Resting places reachable by the current ball, in board order.
  std::vector<int> reachable_rests() const;
  // Moves the current ball straight to a reachable rest and finalizes it.
  void rest_at(int slot);

  const std::vector<char>& occupied() const { return occupied_; }
  const std::vector<WallReason>& walls() const { return walls_; }  // by cover index
  const std::vector<int>& rolldown() const { return rolldown_; }   // by ball; -1 if pending
  const std::vector<int>& tally() const { return tally_; }         // rank -> count
  const std::vector<MoveRecord>& history() const { return history_; }
  bool success() const;

 private:
  void release_next();
  void wall_into(int element, WallReason why);

  GameConfig config_;
  size_t k_ = 0;
  int position_ = -1;
  std::vector<char> occupied_;
  std::vector<WallReason> walls_;
  std::vector<int> rolldown_;
  std::vector<int> tally_;
  std::vector<MoveRecord> history_;
  std::vector<std::vector<int>> by_rank_;
};

struct Outcome {
  std::vector<int> rolldown;  // aligned with config.initial
  bool success = false;
  friend bool operator<(const Outcome& a, const Outcome& b) { return a.rolldown < b.rolldown; }
  friend bool operator==(const Outcome& a, const Outcome& b) { return a.rolldown == b.rolldown; }
};

using Strategy = std::function<Edge(const PinballState&, const std::vector<Edge>&)>;

// Plays to the end, finalizing whenever no move remains.
PinballState play(const GameConfig& config, const Strategy& strategy);
// Scripted edges are consumed in order. Throws ScriptIllegalMove or ScriptExhausted.
PinballState play_script(const GameConfig& config, const std::vector<Edge>& script);
inline Outcome outcome_of(const PinballState& s) { return {s.rolldown(), s.success()}; }

struct Enumeration {
  std::vector<Outcome> outcomes;  // sorted, distinct
  bool exhausted = false;         // budget ran out; outcomes are partial
  size_t nodes = 0;
};

size_t default_node_budget();  // PINBALL_NODE_BUDGET or 10^7

Enumeration enumerate_outcomes(const GameConfig& config, size_t node_budget, int threads = 1);

}  // namespace pinball
