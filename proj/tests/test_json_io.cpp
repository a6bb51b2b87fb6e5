#include <doctest.h>

#include "errors.hpp"
#include "json_io.hpp"
#include "repro.hpp"

using jio::Json;

namespace {

std::string kind_of(const Json& doc) {
  try {
    jio::load_config(doc);
  } catch (const pp::Error& e) {
    return e.kind();
  }
  return "";
}

pinball::PinballState play_fig(const std::string& name, jio::LoadedConfig& cfg) {
  cfg = jio::load_config(Json{{"builtin", name}});
  const auto& f = repro::figure(name);
  return pinball::play_script(cfg.game, repro::figure_script(f));
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("config loading") {
    auto cfg = jio::load_config(jio::parse_text(R"({"builtin":"springer","n":4,"lambda":[2,2],"variant":"betti","targets":[1,3,2]})"));
    CHECK(cfg.game.initial.size() == 6);
    CHECK(cfg.game.variant == pinball::Variant::Betti);
    CHECK(cfg.doc["initial"].size() == 6);
    // The normalized document rebuilds the same game.
    auto again = jio::load_config(cfg.doc);
    CHECK(again.game.initial == cfg.game.initial);
    CHECK(again.doc == cfg.doc);

    CHECK(kind_of(Json{{"builtin", "springer"}, {"n", 4}, {"lambda", {2, 2}}, {"variant", "betti"}}) == "MissingTargets");
    CHECK(kind_of(Json{{"builtin", "nope"}}) == "InvalidConfig");
    CHECK(kind_of(Json::object()) == "InvalidConfig");
    CHECK(kind_of(Json{{"builtin", "springer"}, {"n", 4}, {"lambda", {3, 2}}}) == "NotAPartition");
    // Subregular Betti games have default targets.
    auto sub = jio::load_config(Json{{"builtin", "springer"}, {"n", 4}, {"lambda", {3, 1}}, {"variant", "betti"}});
    CHECK(sub.game.targets == std::vector<int>({1, 3}));
  }

  TEST_CASE("inline boards and ids") {
    auto doc = jio::parse_text(R"({"board":{"elements":[{"id":"x","rank":0},{"id":"y","rank":1}],"covers":[["y","x"]]},
                                   "initial":["x","y"]})");
    auto cfg = jio::load_config(doc);
    CHECK(cfg.game.initial == std::vector<int>({0, 1}));
    CHECK(cfg.resolve("y") == 1);
    CHECK_THROWS(cfg.resolve("z"));
    auto w = jio::load_config(Json{{"builtin", "weyl"}, {"type", "A"}, {"rank", 2}, {"initial", {"s1", "[2,3,1]"}}});
    CHECK(w.game.board->id(w.game.initial[1]) == "s1.s2");
  }

  TEST_CASE("state documents") {
    jio::LoadedConfig cfg;
    auto s = play_fig("fig1", cfg);
    auto st = jio::state_json(s);
    CHECK(st["game_over"] == true);
    CHECK(st["success"] == true);
    CHECK(st["ball"].is_null());
    CHECK(st["rolldown"].size() == 6);
    CHECK(st["legal_moves"].empty());
  }

  TEST_CASE("transcripts replay to the same state") {
    for (const auto& name : repro::figure_names()) {
      jio::LoadedConfig cfg;
      auto s = play_fig(name, cfg);
      auto t = jio::transcript_json(cfg, s);
      auto r = jio::replay_transcript(jio::parse_text(t.dump()));
      CHECK(jio::state_json(r.state) == jio::state_json(s));
      CHECK(jio::transcript_json(r.config, r.state) == t);
    }
  }

  TEST_CASE("tampered transcripts are rejected") {
    jio::LoadedConfig cfg;
    auto s = play_fig("fig2", cfg);
    auto t = jio::transcript_json(cfg, s);
    auto bad = t;
    bad["success"] = false;
    CHECK_THROWS_AS(jio::replay_transcript(bad), pp::Error);
    auto swapped = t;
    std::swap(swapped["moves"][0], swapped["moves"][1]);
    CHECK_THROWS_AS(jio::replay_transcript(swapped), pp::Error);
  }

  TEST_CASE("candidate documents") {
    auto doc = jio::parse_text(R"({
      "index": ["0", "a", "b"],
      "classes": [
        {"label": "x", "degree": 0, "values": {"0": "1", "a": "1", "b": "1"}},
        {"label": "y", "degree": 2, "values": {"a": "t"}},
        {"label": "z", "degree": 2, "values": {"b": "2*t"}}
      ],
      "targets": [1, 2]
    })");
    auto c = jio::candidates_from_json(doc);
    CHECK(c.family.rows.size() == 3);
    CHECK(c.targets == std::vector<int>({1, 2}));
    CHECK(jio::int_list("1,3,2") == std::vector<int>({1, 3, 2}));
    CHECK_THROWS(jio::int_list("1,x"));
  }
}
