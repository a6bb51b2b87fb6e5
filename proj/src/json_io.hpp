#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxeter.hpp"
#include "flowup.hpp"
#include "pinball.hpp"
#include "poset.hpp"

namespace jio {

// Insertion-ordered so that emitted documents keep a stable, readable layout.
using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text);  // throws InvalidJson
std::string read_file(const std::string& path);

Json poset_to_json(const poset::GradedPoset& p);
poset::GradedPoset poset_from_json(const Json& doc);

// Bruhat poset of a group, shared between callers.
std::shared_ptr<const poset::GradedPoset> weyl_board(const coxeter::WeylPtr& g);

// Board ids first; for Weyl boards any parseable element spelling works too.
int resolve_id(const poset::GradedPoset& board, const coxeter::WeylGroup* g, const std::string& text);

struct LoadedConfig {
  pinball::GameConfig game;
  coxeter::WeylPtr group;  // null for inline boards
  bool auto_finalize = false;
  Json doc;  // normalized; load_config(doc) rebuilds the same game

  int resolve(const std::string& text) const { return resolve_id(*game.board, group.get(), text); }
};

// Inline {"board":{...},"initial":[...]} or {"builtin":"springer",...}.
// Throws InvalidConfig, MissingTargets, UnknownId, InvalidOrder, ...
LoadedConfig load_config(const Json& doc);

// Finalizes while the ball in play has nowhere to go (only when enabled).
void auto_finalize(const LoadedConfig& cfg, pinball::PinballState& s);

Json edge_json(const poset::GradedPoset& b, const pinball::Edge& e);
Json moves_json(const pinball::PinballState& s);
Json state_json(const pinball::PinballState& s);
Json transcript_json(const LoadedConfig& cfg, const pinball::PinballState& s);

struct Replay {
  LoadedConfig config;
  pinball::PinballState state;
};
// Rebuilds the state a transcript describes. Throws ReplayMismatch when the
// recorded rolldown or success flag disagrees with the replayed game.
Replay replay_transcript(const Json& transcript);

Json outcome_json(const pinball::GameConfig& c, const pinball::Outcome& o);
Json enumeration_json(const pinball::GameConfig& c, const pinball::Enumeration& e);

// Candidate basis document plus the optional extras used by `basis`.
struct Candidates {
  flowup::Family family;
  coxeter::WeylPtr group;  // set when the document names one
  std::optional<std::vector<int>> targets;
  std::optional<std::vector<int>> matching;  // group element per index element
  std::optional<std::vector<int>> matching_degrees;
};
Candidates candidates_from_json(const Json& doc);
Json family_to_json(const flowup::Family& f, const coxeter::WeylGroup* g = nullptr);
Json basis_report_json(const flowup::Family& f, const flowup::BasisReport& r);

std::vector<int> int_list(const std::string& text);  // "1,3,2"

}  // namespace jio
