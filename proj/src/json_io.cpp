#include "json_io.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "errors.hpp"
#include "hessenberg.hpp"
#include "repro.hpp"

namespace jio {

namespace {

[[noreturn]] void bad(const std::string& msg) { pp::fail("InvalidConfig", msg); }

const Json& need(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int get_int(const Json& doc, const char* key) {
  const Json& v = need(doc, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& doc, const char* key) {
  const Json& v = need(doc, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

// [2,2] or "2,2"
std::vector<int> get_ints(const Json& v, const char* key) {
  if (v.is_string()) return int_list(v.get<std::string>());
  if (!v.is_array()) bad(std::string("field '") + key + "' must be a list of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) bad(std::string("field '") + key + "' must be a list of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::string> id_list(const poset::GradedPoset& b, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(b.id(x));
  return out;
}

}  // namespace

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (item.empty() || pos != item.size()) pp::fail("InvalidArgument", "not an integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    pp::fail("InvalidJson", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) pp::fail("FileNotFound", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json poset_to_json(const poset::GradedPoset& p) {
  Json elements = Json::array();
  for (size_t i = 0; i < p.size(); ++i)
    elements.push_back({{"id", p.id(static_cast<int>(i))}, {"rank", p.rank(static_cast<int>(i))}});
  Json covers = Json::array();
  for (const auto& c : p.covers()) covers.push_back({p.id(c.upper), p.id(c.lower)});
  return {{"elements", elements}, {"covers", covers}};
}

poset::GradedPoset poset_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    pp::fail("InvalidJson", "poset needs an 'elements' array");
  std::vector<std::pair<std::string, int>> elems;
  for (const auto& e : doc["elements"]) {
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string() || !e.contains("rank") ||
        !e["rank"].is_number_integer())
      pp::fail("InvalidJson", "each element needs a string 'id' and an integer 'rank'");
    elems.emplace_back(e["id"].get<std::string>(), e["rank"].get<int>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) pp::fail("InvalidJson", "'covers' must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        pp::fail("InvalidJson", "each cover is a pair [upper, lower] of ids");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return poset::GradedPoset::build(elems, covers);
}

std::shared_ptr<const poset::GradedPoset> weyl_board(const coxeter::WeylPtr& g) {
  static std::mutex mu;
  static std::map<const coxeter::WeylGroup*, std::pair<coxeter::WeylPtr, std::shared_ptr<const poset::GradedPoset>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.get());
  if (it != cache.end()) return it->second.second;
  auto b = std::make_shared<const poset::GradedPoset>(g->to_poset());
  cache[g.get()] = {g, b};
  return b;
}

namespace {

coxeter::WeylPtr group_for(const std::string& type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, coxeter::WeylPtr> cache;
  auto t = coxeter::parse_type(type);
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(coxeter::type_letter(t), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = coxeter::WeylGroup::make(t, rank);
  cache[key] = g;
  return g;
}

coxeter::WeylPtr type_a_for(const Json& doc) {
  int n = get_int(doc, "n");
  if (n < 2) bad("n must be at least 2");
  return group_for("A", n - 1);
}

}  // namespace

int resolve_id(const poset::GradedPoset& board, const coxeter::WeylGroup* g, const std::string& text) {
  if (auto i = board.find(text)) return *i;
  if (g && board.size() == g->size()) {
    try {
      return g->parse(text);
    } catch (const pp::Error&) {
    }
  }
  pp::fail("UnknownId", "unknown element '" + text + "'");
}

LoadedConfig load_config(const Json& doc) {
  if (!doc.is_object()) bad("config must be a JSON object");
  LoadedConfig out;
  Json norm = Json::object();
  std::vector<int> initial;
  std::optional<std::vector<int>> default_targets;
  std::optional<pinball::Variant> default_variant;

  if (doc.contains("board")) {
    out.game.board = std::make_shared<const poset::GradedPoset>(poset_from_json(doc["board"]));
    norm["board"] = poset_to_json(*out.game.board);
    std::vector<int> all(out.game.board->size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    initial = out.game.board->linear_extension(all);
  } else if (doc.contains("builtin")) {
    const std::string kind = get_string(doc, "builtin");
    norm["builtin"] = kind;
    if (kind == "fig1" || kind == "fig2" || kind == "fig3" || kind == "fig4") {
      const auto& f = repro::figure(kind);
      out.group = f.group;
      out.game.board = f.board;
      initial = f.initial;
      default_variant = f.variant;
      default_targets = f.targets;
    } else if (kind == "springer") {
      out.group = type_a_for(doc);
      std::vector<int> lambda = get_ints(need(doc, "lambda"), "lambda");
      const int n = out.group->dim();
      hessenberg::check_partition(lambda, n);
      norm["n"] = n;
      norm["lambda"] = lambda;
      out.game.board = weyl_board(out.group);
      initial = out.game.board->linear_extension(hessenberg::springer_fixed_points(*out.group, lambda));
      // Subregular: one ball of rank 0 and n-1 of rank 1.
      if (lambda.size() == 2 && lambda[1] == 1) default_targets = std::vector<int>{1, n - 1};
    } else if (kind == "hessenberg") {
      std::optional<hessenberg::HessenbergSpace> space;
      if (doc.contains("h")) {
        out.group = type_a_for(doc);
        auto h = get_ints(doc["h"], "h");
        space = hessenberg::space_from_h(out.group, h);
        norm["n"] = out.group->dim();
        norm["h"] = h;
      } else {
        std::string type = get_string(doc, "type");
        int rank = get_int(doc, "rank");
        out.group = group_for(type, rank);
        std::string mh = get_string(doc, "mh");
        space = hessenberg::space_from_string(out.group, mh);
        norm["type"] = std::string(1, coxeter::type_letter(out.group->type()));
        norm["rank"] = rank;
        norm["mh"] = mh;
      }
      out.game.board = weyl_board(out.group);
      initial = out.game.board->linear_extension(hessenberg::fixed_points(*space));
    } else if (kind == "peterson" || kind == "weyl") {
      std::string type = get_string(doc, "type");
      int rank = get_int(doc, "rank");
      out.group = group_for(type, rank);
      norm["type"] = std::string(1, coxeter::type_letter(out.group->type()));
      norm["rank"] = rank;
      out.game.board = weyl_board(out.group);
      if (kind == "peterson") {
        std::vector<int> fp;
        for (const auto& [J, w] : hessenberg::peterson_fixed_points(*out.group)) fp.push_back(w);
        initial = out.game.board->linear_extension(fp);
      } else if (!doc.contains("initial")) {
        bad("builtin 'weyl' needs an 'initial' list");
      }
    } else {
      bad("unknown builtin '" + kind + "'");
    }
  } else {
    bad("config needs either 'board' or 'builtin'");
  }

  const auto& board = *out.game.board;
  if (doc.contains("initial")) {
    const Json& init = doc["initial"];
    if (!init.is_array()) bad("'initial' must be a list of ids");
    initial.clear();
    for (const auto& x : init) {
      if (!x.is_string()) bad("'initial' must be a list of ids");
      initial.push_back(out.resolve(x.get<std::string>()));
    }
  }
  out.game.initial = initial;

  if (doc.contains("variant")) {
    if (!doc["variant"].is_string()) bad("'variant' must be a string");
    out.game.variant = pinball::parse_variant(doc["variant"].get<std::string>());
  } else if (default_variant) {
    out.game.variant = *default_variant;
  }

  if (doc.contains("targets") && !doc["targets"].is_null()) {
    out.game.targets = get_ints(doc["targets"], "targets");
  } else if (pinball::has_betti_walls(out.game.variant)) {
    out.game.targets = default_targets;
  }
  if (doc.contains("auto_finalize")) {
    if (!doc["auto_finalize"].is_boolean()) bad("'auto_finalize' must be true or false");
    out.auto_finalize = doc["auto_finalize"].get<bool>();
  }

  pinball::validate(out.game);

  norm["initial"] = id_list(board, out.game.initial);
  norm["variant"] = pinball::variant_name(out.game.variant);
  if (out.game.targets) norm["targets"] = *out.game.targets;
  norm["auto_finalize"] = out.auto_finalize;
  out.doc = std::move(norm);
  return out;
}

void auto_finalize(const LoadedConfig& cfg, pinball::PinballState& s) {
  if (!cfg.auto_finalize) return;
  while (!s.game_over() && s.legal_moves().empty()) s.finalize_current();
}

Json edge_json(const poset::GradedPoset& b, const pinball::Edge& e) { return {b.id(e.upper), b.id(e.lower)}; }

Json moves_json(const pinball::PinballState& s) {
  Json moves = Json::array();
  if (!s.game_over())
    for (const auto& e : s.legal_moves()) moves.push_back(edge_json(s.board(), e));
  return moves;
}

namespace {

Json rolldown_json(const pinball::PinballState& s) {
  const auto& b = s.board();
  Json r = Json::object();
  const auto& init = s.config().initial;
  for (size_t k = 0; k < init.size(); ++k)
    if (s.rolldown()[k] >= 0) r[b.id(init[k])] = b.id(s.rolldown()[k]);
  return r;
}

}  // namespace

Json state_json(const pinball::PinballState& s) {
  const auto& b = s.board();
  const auto& c = s.config();
  Json rows = Json::array();
  for (int r = 0; r <= b.max_rank(); ++r) {
    Json row = Json::array();
    for (size_t i = 0; i < b.size(); ++i)
      if (b.rank(static_cast<int>(i)) == r) row.push_back(b.id(static_cast<int>(i)));
    rows.push_back(row);
  }
  Json occupied = Json::array();
  for (size_t i = 0; i < b.size(); ++i)
    if (s.occupied()[i]) occupied.push_back(b.id(static_cast<int>(i)));
  Json walls = Json::array();
  for (size_t ci = 0; ci < b.covers().size(); ++ci) {
    auto w = s.walls()[ci];
    if (w == pinball::WallReason::None) continue;
    const auto& cv = b.covers()[ci];
    walls.push_back({{"edge", {b.id(cv.upper), b.id(cv.lower)}}, {"reason", pinball::wall_reason_name(w)}});
  }
  Json out;
  out["board"] = poset_to_json(b);
  out["layout"] = {{"rows", rows}};
  out["variant"] = pinball::variant_name(c.variant);
  out["targets"] = c.targets ? Json(*c.targets) : Json(nullptr);
  out["initial"] = id_list(b, c.initial);
  out["current_index"] = s.current_index();
  out["ball"] = s.ball() ? Json(b.id(*s.ball())) : Json(nullptr);
  out["game_over"] = s.game_over();
  out["occupied"] = occupied;
  out["walls"] = walls;
  out["rolldown"] = rolldown_json(s);
  out["tally"] = s.tally();
  out["legal_moves"] = moves_json(s);
  out["success"] = s.game_over() ? Json(s.success()) : Json(nullptr);
  return out;
}

Json transcript_json(const LoadedConfig& cfg, const pinball::PinballState& s) {
  const auto& b = s.board();
  Json moves = Json::array();
  for (const auto& m : s.history())
    moves.push_back({{"ball", b.id(s.config().initial[static_cast<size_t>(m.ball)])}, {"edge", edge_json(b, m.edge)}});
  Json out;
  out["config"] = cfg.doc;
  out["moves"] = moves;
  out["rolldown"] = rolldown_json(s);
  out["success"] = s.game_over() ? Json(s.success()) : Json(nullptr);
  return out;
}

Replay replay_transcript(const Json& t) {
  if (!t.is_object() || !t.contains("config")) pp::fail("InvalidJson", "transcript needs a 'config'");
  LoadedConfig cfg = load_config(t["config"]);
  pinball::PinballState s(cfg.game);
  const auto& b = *cfg.game.board;
  const auto& init = cfg.game.initial;
  auto ball_index = [&](const std::string& id) -> size_t {
    int x = cfg.resolve(id);
    for (size_t k = 0; k < init.size(); ++k)
      if (init[k] == x) return k;
    pp::fail("ReplayMismatch", "'" + id + "' is not a released ball");
  };
  auto finalize_until = [&](size_t k) {
    while (!s.game_over() && s.current_index() < k) {
      if (!s.legal_moves().empty())
        pp::fail("ReplayMismatch", "ball '" + b.id(init[s.current_index()]) + "' could still roll");
      s.finalize_current();
    }
  };
  auto_finalize(cfg, s);
  const Json moves = t.value("moves", Json::array());
  if (!moves.is_array()) pp::fail("InvalidJson", "'moves' must be an array");
  for (const auto& m : moves) {
    if (!m.is_object() || !m.contains("ball") || !m.contains("edge") || !m["edge"].is_array() ||
        m["edge"].size() != 2)
      pp::fail("InvalidJson", "each move is {\"ball\": id, \"edge\": [upper, lower]}");
    size_t k = ball_index(m["ball"].get<std::string>());
    finalize_until(k);
    if (s.game_over() || s.current_index() != k) pp::fail("ReplayMismatch", "moves are out of release order");
    pinball::Edge e{cfg.resolve(m["edge"][0].get<std::string>()), cfg.resolve(m["edge"][1].get<std::string>())};
    s.apply_move(e);
    auto_finalize(cfg, s);
  }
  // Trailing balls that the transcript records as rested.
  const Json rd = t.value("rolldown", Json::object());
  while (!s.game_over() && rd.contains(b.id(init[s.current_index()]))) finalize_until(s.current_index() + 1);

  if (t.contains("rolldown") && rolldown_json(s) != rd)
    pp::fail("ReplayMismatch", "replayed rolldown differs from the transcript");
  if (t.contains("success") && !t["success"].is_null()) {
    if (!s.game_over() || s.success() != t["success"].get<bool>())
      pp::fail("ReplayMismatch", "replayed success flag differs from the transcript");
  }
  return Replay{std::move(cfg), std::move(s)};
}

Json outcome_json(const pinball::GameConfig& c, const pinball::Outcome& o) {
  const auto& b = *c.board;
  Json r = Json::object();
  for (size_t k = 0; k < c.initial.size(); ++k) r[b.id(c.initial[k])] = b.id(o.rolldown[k]);
  return {{"rolldown", r}, {"success", o.success}};
}

Json enumeration_json(const pinball::GameConfig& c, const pinball::Enumeration& e) {
  Json outs = Json::array();
  for (const auto& o : e.outcomes) outs.push_back(outcome_json(c, o));
  return {{"outcomes", outs}, {"count", e.outcomes.size()}, {"exhausted", e.exhausted}, {"nodes", e.nodes}};
}

Candidates candidates_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("index") || !doc["index"].is_array() || !doc.contains("classes") ||
      !doc["classes"].is_array())
    pp::fail("InvalidJson", "candidate basis needs 'index' and 'classes' arrays");
  Candidates out;
  std::vector<std::string> ids;
  for (const auto& x : doc["index"]) {
    if (!x.is_string()) pp::fail("InvalidJson", "'index' entries are ids");
    ids.push_back(x.get<std::string>());
  }
  if (doc.contains("group")) {
    const Json& g = doc["group"];
    out.group = group_for(get_string(g, "type"), get_int(g, "rank"));
    std::vector<int> elems;
    for (const auto& id : ids) elems.push_back(out.group->parse(id));
    auto ind = std::make_shared<poset::GradedPoset>(weyl_board(out.group)->induced(elems));
    out.family.index = ind;
  } else {
    // Without a group the index is an antichain of rank 0.
    std::vector<std::pair<std::string, int>> elems;
    for (const auto& id : ids) elems.emplace_back(id, 0);
    out.family.index = std::make_shared<poset::GradedPoset>(poset::GradedPoset::build(elems, {}));
  }
  const auto& index = *out.family.index;
  auto slot_of = [&](const std::string& key) -> size_t {
    for (size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == key || index.id(static_cast<int>(i)) == key) return i;
    if (out.group) {
      int e = out.group->parse(key);
      for (size_t i = 0; i < ids.size(); ++i)
        if (out.group->parse(ids[i]) == e) return i;
    }
    pp::fail("UnknownId", "value key '" + key + "' is not in the index");
  };
  for (const auto& c : doc["classes"]) {
    if (!c.is_object() || !c.contains("values") || !c["values"].is_object())
      pp::fail("InvalidJson", "each class needs a 'values' object");
    out.family.labels.push_back(c.value("label", std::string()));
    if (!c.contains("degree") || !c["degree"].is_number_integer())
      pp::fail("InvalidJson", "each class needs an integer 'degree'");
    out.family.degrees.push_back(c["degree"].get<int>());
    flowup::Vector row(ids.size());
    for (const auto& [key, val] : c["values"].items()) {
      if (!val.is_string()) pp::fail("InvalidJson", "class values are polynomial strings");
      row[slot_of(key)] = algebra::TPoly::parse(val.get<std::string>());
    }
    out.family.rows.push_back(std::move(row));
  }
  if (doc.contains("targets")) out.targets = get_ints(doc["targets"], "targets");
  if (doc.contains("matching")) {
    if (!out.group) pp::fail("InvalidJson", "'matching' needs a 'group'");
    const Json& m = doc["matching"];
    if (!m.is_object()) pp::fail("InvalidJson", "'matching' maps index ids to group elements");
    std::vector<int> f(ids.size(), -1);
    for (const auto& [key, val] : m.items()) {
      if (!val.is_string()) pp::fail("InvalidJson", "'matching' maps index ids to group elements");
      f[slot_of(key)] = out.group->parse(val.get<std::string>());
    }
    for (int x : f)
      if (x < 0) pp::fail("InvalidJson", "'matching' must cover every index element");
    out.matching = f;
    if (doc.contains("matching_degrees")) {
      std::vector<int> d(ids.size(), 0);
      for (const auto& [key, val] : doc["matching_degrees"].items()) d[slot_of(key)] = val.get<int>();
      out.matching_degrees = d;
    } else {
      std::vector<int> d;
      for (int x : f) d.push_back(out.group->length(x));
      out.matching_degrees = d;
    }
  }
  return out;
}

Json family_to_json(const flowup::Family& f, const coxeter::WeylGroup* g) {
  const auto& index = *f.index;
  Json ids = Json::array();
  for (size_t i = 0; i < index.size(); ++i) ids.push_back(index.id(static_cast<int>(i)));
  Json classes = Json::array();
  for (size_t k = 0; k < f.rows.size(); ++k) {
    Json vals = Json::object();
    for (size_t i = 0; i < index.size(); ++i) vals[index.id(static_cast<int>(i))] = f.rows[k][i].str();
    classes.push_back({{"label", f.labels[k]}, {"degree", f.degrees[k]}, {"values", vals}});
  }
  Json out = {{"index", ids}, {"classes", classes}};
  if (g) out["group"] = {{"type", std::string(1, coxeter::type_letter(g->type()))}, {"rank", g->rank()}};
  return out;
}

Json basis_report_json(const flowup::Family& f, const flowup::BasisReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["independent"] = r.independent;
  out["rank"] = r.rank;
  out["histogram"] = r.histogram;
  if (r.triangular_order) {
    Json o = Json::array();
    for (int i : *r.triangular_order) o.push_back(f.index->id(i));
    out["triangular_order"] = o;
  } else {
    out["triangular_order"] = nullptr;
  }
  out["problems"] = r.problems;
  return out;
}

}  // namespace jio
