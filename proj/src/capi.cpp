#include "poset_pinball/pinball.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "billey.hpp"
#include "errors.hpp"
#include "flowup.hpp"
#include "game_server.hpp"
#include "hessenberg.hpp"
#include "json_io.hpp"
#include "repro.hpp"
#include "springer_rep.hpp"

using jio::Json;

struct pp_poset {
  poset::GradedPoset p;
};

struct pp_weyl {
  coxeter::WeylPtr g;
};

struct pp_game {
  jio::LoadedConfig config;
  pinball::PinballState state;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

void set_error(const std::string& kind, const std::string& msg) {
  last_kind = kind;
  last_error = msg;
}

pp_status status_for(const std::string& kind) {
  if (kind == "UnknownId" || kind == "UnknownGenerator" || kind == "UnknownTarget") return PP_ERR_UNKNOWN_ID;
  if (kind == "InvalidJson" || kind == "InvalidArgument" || kind == "InvalidConfig" || kind == "UnsupportedType" ||
      kind == "InvalidRank" || kind == "RankTooLarge" || kind == "FileNotFound" || kind == "BindFailed")
    return PP_ERR_INVALID_ARGUMENT;
  if (kind == "ScriptIllegalMove") return PP_ERR_ILLEGAL_MOVE;
  if (kind == "NoBallInPlay") return PP_ERR_GAME_OVER;
  if (kind == "Internal") return PP_ERR_INTERNAL;
  return PP_ERR_DOMAIN;
}

template <class F>
pp_status guard(F&& body) {
  try {
    pp_status s = body();
    if (s == PP_OK) set_error("", "");
    return s;
  } catch (const pinball::IllegalMove& e) {
    set_error(e.reason(), e.what());
    return PP_ERR_ILLEGAL_MOVE;
  } catch (const pp::Error& e) {
    set_error(e.kind(), e.what());
    return status_for(e.kind());
  } catch (const Json::exception& e) {
    set_error("InvalidJson", e.what());
    return PP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("OutOfMemory", "allocation failed");
    return PP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
    return PP_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) pp::fail("InvalidArgument", std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pp_status emit(const Json& doc, char** out) {
  *out = dup(doc.dump());
  return PP_OK;
}

Json element_json(const coxeter::WeylGroup& g, coxeter::Elem w) {
  return {{"id", g.word_string(w)},
          {"one_line", g.one_line_string(w)},
          {"word", g.reduced_word(w)},
          {"length", g.length(w)},
          {"right_descents", g.right_descents(w)},
          {"left_descents", g.left_descents(w)},
          {"inverse", g.word_string(g.inverse(w))}};
}

Json group_json(const coxeter::WeylGroup& g) {
  return {{"type", std::string(1, coxeter::type_letter(g.type()))}, {"rank", g.rank()}};
}

std::vector<int> subset_of(const poset::GradedPoset& p, const Json& list) {
  std::vector<int> out;
  for (const auto& x : list) out.push_back(p.index(x.get<std::string>()));
  return out;
}

Json ids_of(const poset::GradedPoset& p, const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(p.id(x));
  return out;
}

}  // namespace

extern "C" {

const char* pp_version(void) { return "0.1.0"; }
const char* pp_last_error(void) { return last_error.c_str(); }
const char* pp_last_error_kind(void) { return last_kind.c_str(); }
void pp_string_free(char* s) { std::free(s); }

pp_status pp_poset_from_json(const char* json, pp_poset** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new pp_poset{jio::poset_from_json(jio::parse_text(json))};
    return PP_OK;
  });
}

pp_status pp_poset_to_json(const pp_poset* p, char** out) {
  return guard([&] {
    need(p, "poset");
    need(out, "out");
    return emit(jio::poset_to_json(p->p), out);
  });
}

pp_status pp_poset_size(const pp_poset* p, size_t* out) {
  return guard([&] {
    need(p, "poset");
    need(out, "out");
    *out = p->p.size();
    return PP_OK;
  });
}

pp_status pp_poset_leq(const pp_poset* p, const char* a, const char* b, int* out) {
  return guard([&] {
    need(p, "poset");
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = p->p.leq(std::string(a), std::string(b)) ? 1 : 0;
    return PP_OK;
  });
}

pp_status pp_poset_query(const pp_poset* p, const char* request_json, char** out) {
  return guard([&] {
    need(p, "poset");
    need(request_json, "request");
    need(out, "out");
    Json req = jio::parse_text(request_json);
    const std::string op = req.value("op", std::string());
    const auto& P = p->p;
    Json res;
    if (op == "leq") {
      res = {{"leq", P.leq(req.at("a").get<std::string>(), req.at("b").get<std::string>())}};
    } else if (op == "ideal") {
      res = {{"ideal", ids_of(P, P.principal_ideal(P.index(req.at("id").get<std::string>())))}};
    } else if (op == "filter") {
      res = {{"filter", ids_of(P, P.principal_filter(P.index(req.at("id").get<std::string>())))}};
    } else if (op == "linear_extension") {
      std::vector<int> sub;
      if (req.contains("subset")) {
        sub = subset_of(P, req["subset"]);
      } else {
        for (size_t i = 0; i < P.size(); ++i) sub.push_back(static_cast<int>(i));
      }
      res = {{"order", ids_of(P, P.linear_extension(sub))}};
    } else if (op == "union_of_ideals") {
      res = {{"union_of_ideals", P.is_union_of_principal_ideals(subset_of(P, req.at("subset")))}};
    } else {
      pp::fail("InvalidArgument", "unknown poset query '" + op + "'");
    }
    return emit(res, out);
  });
}

void pp_poset_free(pp_poset* p) { delete p; }

pp_status pp_weyl_create(const char* type, int rank, pp_weyl** out) {
  return guard([&] {
    need(type, "type");
    need(out, "out");
    *out = new pp_weyl{coxeter::WeylGroup::make(coxeter::parse_type(type), rank)};
    return PP_OK;
  });
}

pp_status pp_weyl_describe(const pp_weyl* g, char** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    const auto& G = *g->g;
    Json d = group_json(G);
    d["name"] = G.name();
    d["order"] = G.size();
    d["simple_roots"] = G.simple_roots();
    d["positive_roots"] = G.positive_roots();
    d["reflections"] = G.reflections().size();
    coxeter::Elem w0 = 0;
    for (coxeter::Elem w = 0; w < static_cast<coxeter::Elem>(G.size()); ++w)
      if (G.length(w) > G.length(w0)) w0 = w;
    d["longest"] = element_json(G, w0);
    return emit(d, out);
  });
}

pp_status pp_weyl_element(const pp_weyl* g, const char* element, char** out) {
  return guard([&] {
    need(g, "group");
    need(element, "element");
    need(out, "out");
    return emit(element_json(*g->g, g->g->parse(element)), out);
  });
}

pp_status pp_weyl_bruhat_leq(const pp_weyl* g, const char* u, const char* w, int* out) {
  return guard([&] {
    need(g, "group");
    need(u, "u");
    need(w, "w");
    need(out, "out");
    *out = g->g->bruhat_leq(g->g->parse(u), g->g->parse(w)) ? 1 : 0;
    return PP_OK;
  });
}

pp_status pp_weyl_max_parabolic(const pp_weyl* g, const int* J, size_t count, char** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    if (count) need(J, "J");
    std::vector<int> js(J, J + count);
    for (int j : js)
      if (j < 1 || j > g->g->rank()) pp::fail("InvalidArgument", "simple reflection index out of range");
    return emit(element_json(*g->g, g->g->max_parabolic(js)), out);
  });
}

pp_status pp_weyl_act(const pp_weyl* g, const char* element, const int* root, size_t dim, int* out_root) {
  return guard([&] {
    need(g, "group");
    need(element, "element");
    need(root, "root");
    need(out_root, "out_root");
    if (dim != static_cast<size_t>(g->g->dim()))
      pp::fail("InvalidArgument", "root must have " + std::to_string(g->g->dim()) + " coordinates");
    auto img = g->g->act(g->g->parse(element), coxeter::Vec(root, root + dim));
    std::copy(img.begin(), img.end(), out_root);
    return PP_OK;
  });
}

pp_status pp_weyl_poset(const pp_weyl* g, pp_poset** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = new pp_poset{g->g->to_poset()};
    return PP_OK;
  });
}

void pp_weyl_free(pp_weyl* g) { delete g; }

pp_status pp_billey(const pp_weyl* g, const char* v, const char* w, int specialize, char** out) {
  return guard([&] {
    need(g, "group");
    need(v, "v");
    need(w, "w");
    need(out, "out");
    auto val = billey::billey_restrict(*g->g, g->g->parse(v), g->g->parse(w));
    *out = dup(specialize ? billey::specialize_to_t(val).str() : val.str());
    return PP_OK;
  });
}

pp_status pp_fixed_points(const char* request_json, char** out) {
  return guard([&] {
    need(request_json, "request");
    need(out, "out");
    Json req = jio::parse_text(request_json);
    auto g = coxeter::WeylGroup::make(coxeter::parse_type(req.value("type", std::string("A"))),
                                      req.value("rank", 3));
    const std::string family = req.value("family", std::string("hessenberg"));
    std::vector<coxeter::Elem> fp;
    Json res = group_json(*g);
    res["family"] = family;
    std::optional<hessenberg::HessenbergSpace> space;
    Json extra = Json::array();
    if (family == "peterson") {
      space = hessenberg::peterson_space(g);
      for (const auto& [J, w] : hessenberg::peterson_fixed_points(*g)) {
        fp.push_back(w);
        extra.push_back({{"J", J}, {"w", g->word_string(w)}, {"rolldown", g->word_string(hessenberg::peterson_rolldown(*g, J))},
                         {"degree", hessenberg::peterson_degree(J)}});
      }
      hessenberg::sort_by_length(*g, fp);
    } else if (family == "springer") {
      if (g->type() != coxeter::LieType::A) pp::fail("UnsupportedType", "Springer fibers need type A");
      std::vector<int> lambda;
      if (req.contains("lambda") && req["lambda"].is_string())
        lambda = hessenberg::parse_partition(req["lambda"].get<std::string>());
      else
        lambda = req.at("lambda").get<std::vector<int>>();
      hessenberg::check_partition(lambda, g->dim());
      res["lambda"] = lambda;
      fp = hessenberg::springer_fixed_points(*g, lambda);
      hessenberg::sort_by_length(*g, fp);
    } else if (family == "hessenberg") {
      if (req.contains("h")) {
        auto h = req["h"].is_string() ? jio::int_list(req["h"].get<std::string>()) : req["h"].get<std::vector<int>>();
        space = hessenberg::space_from_h(g, h);
        res["h"] = h;
      } else {
        space = hessenberg::space_from_string(g, req.at("mh").get<std::string>());
        res["mh"] = req["mh"];
      }
      fp = hessenberg::fixed_points(*space);
    } else {
      pp::fail("InvalidArgument", "unknown family '" + family + "'");
    }
    Json pts = Json::array();
    for (auto w : fp) {
      Json e = element_json(*g, w);
      if (space) e["dimension"] = hessenberg::paving_dimension(*space, w);
      pts.push_back(e);
    }
    res["count"] = fp.size();
    res["fixed_points"] = pts;
    if (space) res["betti"] = hessenberg::betti_numbers(*space);
    if (!extra.empty()) res["parabolic"] = extra;
    if (req.value("board", false)) {
      auto board = jio::weyl_board(g);
      res["config"] = {{"board", jio::poset_to_json(*board)}, {"initial", ids_of(*board, board->linear_extension(fp))}};
      res["induced"] = jio::poset_to_json(board->induced(board->linear_extension(fp)));
    }
    return emit(res, out);
  });
}

pp_status pp_game_new(const char* config_json, pp_game** out) {
  return guard([&] {
    need(config_json, "config");
    need(out, "out");
    auto cfg = jio::load_config(jio::parse_text(config_json));
    auto* game = new pp_game{cfg, pinball::PinballState(cfg.game)};
    try {
      jio::auto_finalize(game->config, game->state);
    } catch (...) {
      delete game;
      throw;
    }
    *out = game;
    return PP_OK;
  });
}

pp_status pp_game_replay(const char* transcript_json, pp_game** out) {
  return guard([&] {
    need(transcript_json, "transcript");
    need(out, "out");
    auto r = jio::replay_transcript(jio::parse_text(transcript_json));
    *out = new pp_game{std::move(r.config), std::move(r.state)};
    return PP_OK;
  });
}

pp_status pp_game_state(const pp_game* game, char** out) {
  return guard([&] {
    need(game, "game");
    need(out, "out");
    return emit(jio::state_json(game->state), out);
  });
}

pp_status pp_game_moves(const pp_game* game, char** out) {
  return guard([&] {
    need(game, "game");
    need(out, "out");
    return emit(jio::moves_json(game->state), out);
  });
}

pp_status pp_game_move(pp_game* game, const char* upper, const char* lower) {
  return guard([&] {
    need(game, "game");
    need(upper, "upper");
    need(lower, "lower");
    if (game->state.game_over()) pp::fail("NoBallInPlay", "the game is over");
    pinball::Edge e{game->config.resolve(upper), game->config.resolve(lower)};
    game->state.apply_move(e);
    jio::auto_finalize(game->config, game->state);
    return PP_OK;
  });
}

pp_status pp_game_finalize(pp_game* game) {
  return guard([&] {
    need(game, "game");
    game->state.finalize_current();
    jio::auto_finalize(game->config, game->state);
    return PP_OK;
  });
}

pp_status pp_game_transcript(const pp_game* game, char** out) {
  return guard([&] {
    need(game, "game");
    need(out, "out");
    return emit(jio::transcript_json(game->config, game->state), out);
  });
}

void pp_game_free(pp_game* game) { delete game; }

pp_status pp_enumerate(const char* config_json, unsigned long long budget, int threads, char** out) {
  return guard([&] {
    need(config_json, "config");
    need(out, "out");
    auto cfg = jio::load_config(jio::parse_text(config_json));
    size_t b = budget ? static_cast<size_t>(budget) : pinball::default_node_budget();
    auto e = pinball::enumerate_outcomes(cfg.game, b, threads < 1 ? 1 : threads);
    Json doc = jio::enumeration_json(cfg.game, e);
    doc["config"] = cfg.doc;
    emit(doc, out);
    if (e.exhausted) {
      set_error("BudgetExhausted", "node budget of " + std::to_string(b) + " exhausted; outcomes are partial");
      return PP_ERR_BUDGET;
    }
    return PP_OK;
  });
}

pp_status pp_basis_verify(const char* candidates_json, char** out) {
  return guard([&] {
    need(candidates_json, "candidates");
    need(out, "out");
    Json doc = jio::parse_text(candidates_json);
    auto c = jio::candidates_from_json(doc);
    const auto& f = c.family;
    Json res;
    res["candidates"] = f.rows.size();
    res["rank"] = flowup::rank(f.rows);
    res["independent"] = flowup::linearly_independent(f.rows);
    bool flow = true;
    Json minima = Json::array();
    for (const auto& row : f.rows) {
      std::optional<int> m = flowup::support(row).empty() ? std::nullopt : flowup::is_flowup(*f.index, row);
      minima.push_back(m ? Json(f.index->id(*m)) : Json(nullptr));
      flow = flow && m.has_value();
    }
    res["minima"] = minima;
    res["poset_upper_triangular"] = flow && flowup::is_poset_upper_triangular(*f.index, f.rows);
    auto search = flowup::find_triangular_order(*f.index, f.rows);
    res["triangular_order"] = search.order ? ids_of(*f.index, *search.order) : Json(nullptr);
    res["triangular_search"] = {{"nodes", search.nodes}, {"budget_hit", search.budget_hit}};
    bool ok = true;
    if (c.targets) {
      auto rep = flowup::verify_pinball_basis(f, *c.targets);
      res["pinball"] = jio::basis_report_json(f, rep);
      ok = ok && rep.ok;
    }
    if (c.matching && c.targets) {
      auto board = jio::weyl_board(c.group);
      auto rep = flowup::verify_matching_basis(f, *board, *c.matching, *c.matching_degrees, *c.targets);
      res["matching"] = jio::basis_report_json(f, rep);
      ok = ok && rep.ok;
    }
    if (doc.contains("construct")) {
      std::vector<int> order;
      if (doc["construct"].is_array()) {
        order = subset_of(*f.index, doc["construct"]);
      } else {
        std::vector<int> all(f.index->size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        order = f.index->linear_extension(all);
      }
      flowup::Family built;
      built.index = f.index;
      built.rows = flowup::construct_flowup_basis(f.rows, order);
      for (int pv : flowup::pivots(built.rows, order)) {
        built.labels.push_back(pv >= 0 ? f.index->id(pv) : "");
        int deg = 0;
        if (pv >= 0) deg = 2 * built.rows[built.labels.size() - 1][static_cast<size_t>(pv)].degree();
        built.degrees.push_back(deg);
      }
      res["constructed"] = jio::family_to_json(built, c.group.get());
    }
    res["ok"] = ok;
    return emit(res, out);
  });
}

pp_status pp_springer_characters(int n, char** out) {
  return guard([&] {
    need(out, "out");
    if (n < 2) pp::fail("InvalidArgument", "n must be at least 2");
    auto g = coxeter::WeylGroup::make(coxeter::LieType::A, n - 1);
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : springer::character_table(*g)) {
      rows.push_back({{"cycle_type", r.cycle_type},
                      {"representative", g->word_string(r.representative)},
                      {"fixed_points", r.fixed_points},
                      {"psi0", r.psi0},
                      {"psi1", r.psi1},
                      {"chi0", r.chi0},
                      {"chi1", r.chi1},
                      {"match", r.match}});
      all = all && r.match;
    }
    return emit({{"n", n}, {"rows", rows}, {"all_match", all}}, out);
  });
}

pp_status pp_kk_matrix(int n, const char* element, char** out) {
  return guard([&] {
    need(element, "element");
    need(out, "out");
    if (n < 2) pp::fail("InvalidArgument", "n must be at least 2");
    auto g = coxeter::WeylGroup::make(coxeter::LieType::A, n - 1);
    auto w = g->parse(element);
    auto m = springer::kk_matrix(*g, w);
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(r);
    }
    Json basis = Json::array({"e"});
    for (int j = 1; j < n; ++j) basis.push_back("s" + std::to_string(j));
    return emit({{"element", g->word_string(w)}, {"basis", basis}, {"matrix", rows}}, out);
  });
}

namespace {

Json report_json(const repro::Report& r) {
  Json table = Json::array();
  for (const auto& row : r.table) table.push_back({{"w", row[0]}, {"v", row[1]}});
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"target", r.target}, {"passed", r.passed()}, {"table", table}, {"checks", checks}};
}

}  // namespace

pp_status pp_reproduce(const char* target, int threads, char** out, int* passed) {
  return guard([&] {
    need(target, "target");
    need(out, "out");
    auto r = repro::reproduce(target, threads < 1 ? 1 : threads);
    if (passed) *passed = r.passed() ? 1 : 0;
    return emit(report_json(r), out);
  });
}

pp_status pp_reproduce_text(const char* target, int threads, char** out, int* passed) {
  return guard([&] {
    need(target, "target");
    need(out, "out");
    auto r = repro::reproduce(target, threads < 1 ? 1 : threads);
    if (passed) *passed = r.passed() ? 1 : 0;
    *out = dup(repro::format_report(r));
    return PP_OK;
  });
}

pp_status pp_server_run(const char* host, int port) {
  return guard([&] {
    need(host, "host");
    server::HttpServer srv;
    int bound = srv.bind(host, port);
    std::fprintf(stderr, "serving on http://%s:%d\n", host, bound);
    srv.listen();
    return PP_OK;
  });
}

}  // extern "C"
