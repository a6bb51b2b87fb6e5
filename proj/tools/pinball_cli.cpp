// Command-line front end. Everything goes through the C API.
#include <poset_pinball/pinball.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct DomainError {
  std::string kind, message;
};

void check(pp_status s) {
  if (s != PP_OK) throw DomainError{pp_last_error_kind(), pp_last_error()};
}

// Takes ownership of a string returned through char**.
std::string take(char* s) {
  std::string out = s ? s : "";
  pp_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError{"FileNotFound", "cannot open '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_or_fail(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError{"InvalidJson", what + ": " + e.what()};
  }
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s)) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(x, &pos));
      if (pos != x.size()) throw std::invalid_argument(x);
    } catch (const std::exception&) {
      throw CLI::ValidationError("not an integer list: " + s);
    }
  }
  return out;
}

struct Group {
  pp_weyl* g = nullptr;
  Group(const std::string& type, int rank) { check(pp_weyl_create(type.c_str(), rank, &g)); }
  ~Group() { pp_weyl_free(g); }
};

struct Game {
  pp_game* g = nullptr;
  ~Game() { pp_game_free(g); }
  Json state() const {
    char* out = nullptr;
    check(pp_game_state(g, &out));
    return take_json(out);
  }
  Json transcript() const {
    char* out = nullptr;
    check(pp_game_transcript(g, &out));
    return take_json(out);
  }
};

void print_rolldown(const Json& state_or_transcript) {
  const Json& rd = state_or_transcript["rolldown"];
  size_t width = 4;
  for (const auto& [j, v] : rd.items()) width = std::max(width, j.size());
  size_t k = 1;
  for (const auto& [j, v] : rd.items()) {
    std::cout << "  " << std::setw(3) << std::left << k++ << std::setw(static_cast<int>(width) + 2) << j << "-> "
              << v.get<std::string>() << "\n";
  }
}

// ---- pinball config assembly -------------------------------------------------

struct ConfigOpts {
  std::string config_file, board_file, builtin, type = "A", lambda, h, mh, initial, variant, targets;
  int rank = 0, n = 0;
  bool auto_finalize = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "config JSON file");
    app->add_option("--board", board_file, "poset JSON file");
    app->add_option("--builtin", builtin, "fig1..fig4, springer, hessenberg, peterson, weyl");
    app->add_option("--type", type, "Lie type for builtin boards");
    app->add_option("--rank", rank, "Lie rank for builtin boards");
    app->add_option("--n", n, "type A size for springer/hessenberg boards");
    app->add_option("--lambda", lambda, "partition, e.g. 2,2");
    app->add_option("--hessenberg-h", h, "Hessenberg function, e.g. 3,3,4,4");
    app->add_option("--mh", mh, "negative roots of the Hessenberg space");
    app->add_option("--initial", initial, "release order, comma separated ids");
    app->add_option("--variant", variant, "basic, upper_triangular, betti, upper_triangular_betti");
    app->add_option("--targets", targets, "Betti targets, e.g. 1,3,2");
    app->add_flag("--auto-finalize", auto_finalize, "rest balls automatically when they cannot move");
  }

  Json build() const {
    Json doc;
    if (!config_file.empty()) {
      doc = parse_or_fail(slurp(config_file), config_file);
    } else if (!board_file.empty()) {
      doc["board"] = parse_or_fail(slurp(board_file), board_file);
    } else if (!builtin.empty()) {
      doc["builtin"] = builtin;
      if (builtin == "springer" || (builtin == "hessenberg" && !h.empty())) doc["n"] = n;
      if (!lambda.empty()) doc["lambda"] = ints(lambda);
      if (!h.empty()) doc["h"] = ints(h);
      if (builtin == "weyl" || builtin == "peterson" || (builtin == "hessenberg" && h.empty())) {
        doc["type"] = type;
        doc["rank"] = rank;
      }
      if (!mh.empty()) doc["mh"] = mh;
    } else {
      throw CLI::ValidationError("one of --config, --board or --builtin is required");
    }
    if (!initial.empty()) doc["initial"] = split(initial);
    if (!variant.empty()) doc["variant"] = variant;
    if (!targets.empty()) doc["targets"] = ints(targets);
    if (auto_finalize) doc["auto_finalize"] = true;
    return doc;
  }
};

// ---- subcommands -------------------------------------------------------------

int run_poset(const std::string& board_file, const std::string& type, int rank, const std::string& leq,
              const std::string& ideal, const std::string& filter, bool linext, const std::string& union_check,
              bool json) {
  pp_poset* p = nullptr;
  if (!board_file.empty()) {
    check(pp_poset_from_json(slurp(board_file).c_str(), &p));
  } else {
    Group g(type, rank);
    check(pp_weyl_poset(g.g, &p));
  }
  std::unique_ptr<pp_poset, void (*)(pp_poset*)> hold(p, pp_poset_free);
  auto query = [&](const Json& req) {
    char* out = nullptr;
    check(pp_poset_query(p, req.dump().c_str(), &out));
    return take_json(out);
  };
  Json res;
  if (!leq.empty()) {
    auto ab = split(leq);
    if (ab.size() != 2) throw CLI::ValidationError("--leq takes two ids: a,b");
    res = query({{"op", "leq"}, {"a", ab[0]}, {"b", ab[1]}});
  } else if (!ideal.empty()) {
    res = query({{"op", "ideal"}, {"id", ideal}});
  } else if (!filter.empty()) {
    res = query({{"op", "filter"}, {"id", filter}});
  } else if (linext) {
    res = query({{"op", "linear_extension"}});
  } else if (!union_check.empty()) {
    res = query({{"op", "union_of_ideals"}, {"subset", split(union_check)}});
  } else {
    char* out = nullptr;
    check(pp_poset_to_json(p, &out));
    Json doc = take_json(out);
    if (json) {
      std::cout << doc.dump() << "\n";
      return 0;
    }
    std::map<int, std::vector<std::string>> rows;
    for (const auto& e : doc["elements"]) rows[e["rank"].get<int>()].push_back(e["id"]);
    std::cout << doc["elements"].size() << " elements, " << doc["covers"].size() << " covers\n";
    for (const auto& [r, ids] : rows) {
      std::cout << "  rank " << r << ":";
      for (const auto& id : ids) std::cout << " " << id;
      std::cout << "\n";
    }
    return 0;
  }
  if (json) {
    std::cout << res.dump() << "\n";
    return 0;
  }
  for (const auto& [k, v] : res.items()) {
    if (v.is_array()) {
      for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i].get<std::string>();
      std::cout << "\n";
    } else {
      std::cout << v.dump() << "\n";
    }
  }
  return 0;
}

void print_element(const Json& e) {
  std::cout << "  id " << e["id"].get<std::string>() << "\n  one-line " << e["one_line"].get<std::string>()
            << "\n  length " << e["length"] << "\n  right descents " << e["right_descents"].dump()
            << "\n  left descents " << e["left_descents"].dump() << "\n  inverse " << e["inverse"].get<std::string>()
            << "\n";
}

int run_weyl(const std::string& type, int rank, const std::string& element, const std::string& bruhat,
             const std::string& parabolic, const std::string& act, const std::string& root, bool json) {
  Group g(type, rank);
  char* out = nullptr;
  if (!bruhat.empty()) {
    auto uw = split(bruhat);
    if (uw.size() != 2) throw CLI::ValidationError("--bruhat takes u,w");
    int leq = 0;
    check(pp_weyl_bruhat_leq(g.g, uw[0].c_str(), uw[1].c_str(), &leq));
    std::cout << (json ? Json({{"leq", leq != 0}}).dump() : (leq ? "true" : "false")) << "\n";
    return 0;
  }
  if (!act.empty()) {
    auto r = ints(root);
    std::vector<int> img(r.size());
    check(pp_weyl_act(g.g, act.c_str(), r.data(), r.size(), img.data()));
    if (json) {
      std::cout << Json({{"image", img}}).dump() << "\n";
    } else {
      for (size_t i = 0; i < img.size(); ++i) std::cout << (i ? "," : "") << img[i];
      std::cout << "\n";
    }
    return 0;
  }
  Json doc;
  if (!parabolic.empty()) {
    auto J = ints(parabolic);
    check(pp_weyl_max_parabolic(g.g, J.data(), J.size(), &out));
    doc = take_json(out);
  } else if (!element.empty()) {
    check(pp_weyl_element(g.g, element.c_str(), &out));
    doc = take_json(out);
  } else {
    check(pp_weyl_describe(g.g, &out));
    doc = take_json(out);
    if (!json) {
      std::cout << doc["name"].get<std::string>() << ": order " << doc["order"] << ", "
                << doc["positive_roots"].size() << " positive roots\n  simple roots";
      for (const auto& r : doc["simple_roots"]) std::cout << " " << r.dump();
      std::cout << "\n  longest element " << doc["longest"]["id"].get<std::string>() << " "
                << doc["longest"]["one_line"].get<std::string>() << "\n";
      return 0;
    }
  }
  if (json)
    std::cout << doc.dump() << "\n";
  else
    print_element(doc);
  return 0;
}

int run_billey(const std::string& type, int rank, const std::string& v, const std::string& w, bool specialize,
               bool json) {
  Group g(type, rank);
  char* out = nullptr;
  check(pp_billey(g.g, v.c_str(), w.c_str(), specialize ? 1 : 0, &out));
  std::string poly = take(out);
  if (json)
    std::cout << Json({{"v", v}, {"w", w}, {"value", poly}}).dump() << "\n";
  else
    std::cout << poly << "\n";
  return 0;
}

// Script files hold either a transcript document or one "upper lower" edge per line.
std::vector<std::pair<std::string, std::string>> read_script(const std::string& path) {
  std::string text = slurp(path);
  std::vector<std::pair<std::string, std::string>> edges;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    Json doc = parse_or_fail(text, path);
    const Json& moves = doc.is_array() ? doc : doc.at("moves");
    for (const auto& m : moves) {
      const Json& e = m.is_array() ? m : m.at("edge");
      edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return edges;
  }
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::stringstream ls(line);
    std::vector<std::string> tok;
    for (std::string x; ls >> x;)
      if (x != "->") tok.push_back(x);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw DomainError{"InvalidScript", "script line needs two ids: '" + line + "'"};
    edges.emplace_back(tok[0], tok[1]);
  }
  return edges;
}

Json legal_moves(const Game& game) {
  char* out = nullptr;
  check(pp_game_moves(game.g, &out));
  return take_json(out);
}

int run_play(const Json& config, const std::string& script, bool interactive, const std::string& transcript_out,
             bool json) {
  Game game;
  check(pp_game_new(config.dump().c_str(), &game.g));
  if (!script.empty()) {
    auto edges = read_script(script);
    size_t idx = 0;
    while (!game.state()["game_over"].get<bool>()) {
      if (legal_moves(game).empty()) {
        check(pp_game_finalize(game.g));
        continue;
      }
      if (idx >= edges.size()) throw DomainError{"ScriptExhausted", "script ended while the ball can still roll"};
      const auto& [u, l] = edges[idx++];
      if (pp_game_move(game.g, u.c_str(), l.c_str()) != PP_OK)
        throw DomainError{"ScriptIllegalMove", "script move " + std::to_string(idx) + " (" + u + " -> " + l +
                                                   "): " + pp_last_error()};
    }
    if (idx < edges.size()) throw DomainError{"ScriptIllegalMove", "script has moves after the game ended"};
  } else if (interactive) {
    std::string line;
    while (true) {
      Json st = game.state();
      if (st["game_over"].get<bool>()) break;
      Json moves = legal_moves(game);
      std::cout << "ball at " << st["ball"].get<std::string>() << "; legal moves:";
      if (moves.empty()) std::cout << " none (enter 'f' to rest)";
      for (size_t i = 0; i < moves.size(); ++i)
        std::cout << "\n  " << i + 1 << ") " << moves[i][0].get<std::string>() << " -> "
                  << moves[i][1].get<std::string>();
      std::cout << "\n> " << std::flush;
      if (!std::getline(std::cin, line)) throw DomainError{"ScriptExhausted", "input ended before the game did"};
      std::stringstream ls(line);
      std::string a, b;
      ls >> a >> b;
      if (a.empty()) continue;
      pp_status s;
      if (a == "f" || a == "finalize") {
        s = pp_game_finalize(game.g);
      } else if (b.empty() && std::all_of(a.begin(), a.end(), ::isdigit)) {
        size_t k = std::stoul(a);
        if (k < 1 || k > moves.size()) {
          std::cout << "no move " << a << "\n";
          continue;
        }
        s = pp_game_move(game.g, moves[k - 1][0].get<std::string>().c_str(), moves[k - 1][1].get<std::string>().c_str());
      } else {
        s = pp_game_move(game.g, a.c_str(), b.c_str());
      }
      if (s != PP_OK) std::cout << "rejected: " << pp_last_error() << "\n";
    }
  } else {
    // Default strategy: first legal move, rest when stuck.
    while (!game.state()["game_over"].get<bool>()) {
      Json moves = legal_moves(game);
      if (moves.empty())
        check(pp_game_finalize(game.g));
      else
        check(pp_game_move(game.g, moves[0][0].get<std::string>().c_str(), moves[0][1].get<std::string>().c_str()));
    }
  }
  Json t = game.transcript();
  if (!transcript_out.empty()) {
    std::ofstream f(transcript_out);
    f << t.dump(2) << "\n";
  }
  if (json) {
    std::cout << t.dump() << "\n";
  } else {
    print_rolldown(t);
    std::cout << (t["success"].get<bool>() ? "success" : "not successful") << "\n";
  }
  return 0;
}

int run_enumerate(const Json& config, int threads, unsigned long long budget, bool json) {
  char* out = nullptr;
  pp_status s = pp_enumerate(config.dump().c_str(), budget, threads, &out);
  if (s != PP_OK && s != PP_ERR_BUDGET) check(s);
  std::string kind = pp_last_error_kind(), msg = pp_last_error();
  Json doc = take_json(out);
  if (json) {
    std::cout << doc.dump() << "\n";
  } else {
    size_t ok = 0;
    for (const auto& o : doc["outcomes"]) ok += o["success"].get<bool>() ? 1 : 0;
    std::cout << doc["count"] << " outcomes, " << ok << " successful, " << doc["nodes"] << " nodes\n";
    size_t k = 1;
    for (const auto& o : doc["outcomes"]) {
      std::cout << "outcome " << k++ << (o["success"].get<bool>() ? " (success)" : "") << "\n";
      print_rolldown(o);
    }
  }
  if (s == PP_ERR_BUDGET) throw DomainError{kind, msg};
  return 0;
}

int run_replay(const std::string& file, bool json) {
  Game game;
  check(pp_game_replay(slurp(file).c_str(), &game.g));
  Json st = game.state();
  if (json) {
    std::cout << st.dump() << "\n";
  } else {
    print_rolldown(st);
    std::cout << (st["game_over"].get<bool>() ? (st["success"].get<bool>() ? "success" : "not successful")
                                              : "in progress")
              << "\n";
  }
  return 0;
}

int run_fixed_points(const std::string& type, int rank, const std::string& family, const std::string& lambda,
                     const std::string& h, const std::string& mh, bool board, bool json) {
  Json req = {{"type", type}, {"rank", rank}};
  std::string fam = family;
  if (fam.empty()) fam = !lambda.empty() ? "springer" : "hessenberg";
  req["family"] = fam;
  if (!lambda.empty()) req["lambda"] = ints(lambda);
  if (!h.empty()) req["h"] = ints(h);
  if (!mh.empty()) req["mh"] = mh;
  if (fam == "hessenberg" && h.empty() && mh.empty())
    throw CLI::ValidationError("hessenberg family needs --hessenberg-h or --mh");
  if (fam == "springer" && lambda.empty()) throw CLI::ValidationError("springer family needs --lambda");
  if (board) req["board"] = true;
  char* out = nullptr;
  check(pp_fixed_points(req.dump().c_str(), &out));
  Json doc = take_json(out);
  if (json) {
    std::cout << doc.dump() << "\n";
    return 0;
  }
  if (board) {
    std::cout << doc["config"].dump() << "\n";
    return 0;
  }
  std::cout << doc["count"] << " fixed points\n";
  for (const auto& e : doc["fixed_points"]) {
    std::cout << "  " << std::setw(16) << std::left << e["one_line"].get<std::string>() << std::setw(22)
              << e["id"].get<std::string>();
    if (e.contains("dimension")) std::cout << "dim " << e["dimension"];
    std::cout << "\n";
  }
  if (doc.contains("betti")) std::cout << "betti " << doc["betti"].dump() << "\n";
  return 0;
}

int run_basis(const std::string& file, const std::string& targets, bool construct, bool json) {
  Json doc = parse_or_fail(slurp(file), file);
  if (!targets.empty()) doc["targets"] = ints(targets);
  if (construct && !doc.contains("construct")) doc["construct"] = true;
  char* out = nullptr;
  check(pp_basis_verify(doc.dump().c_str(), &out));
  Json res = take_json(out);
  if (json) {
    std::cout << res.dump() << "\n";
  } else {
    std::cout << "candidates " << res["candidates"] << ", rank " << res["rank"] << "\n";
    std::cout << "poset upper-triangular " << res["poset_upper_triangular"] << "\n";
    std::cout << "triangular order " << res["triangular_order"].dump() << "\n";
    for (const char* key : {"pinball", "matching"}) {
      if (!res.contains(key)) continue;
      std::cout << key << " certificate " << (res[key]["ok"].get<bool>() ? "passes" : "fails") << "\n";
      for (const auto& p : res[key]["problems"]) std::cout << "  " << p.get<std::string>() << "\n";
    }
    if (res.contains("constructed")) std::cout << res["constructed"].dump(2) << "\n";
  }
  return res["ok"].get<bool>() ? 0 : 1;
}

int run_springer(int n, bool characters, const std::string& kk, bool json) {
  char* out = nullptr;
  if (!kk.empty()) {
    check(pp_kk_matrix(n, kk.c_str(), &out));
    Json doc = take_json(out);
    if (json) {
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "basis " << doc["basis"].dump() << "\n";
      for (const auto& row : doc["matrix"]) {
        for (const auto& x : row) std::cout << std::setw(8) << std::right << x.get<std::string>();
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (!characters) throw CLI::ValidationError("springer-rep needs --characters or --kk");
  check(pp_springer_characters(n, &out));
  Json doc = take_json(out);
  if (json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << std::left << std::setw(14) << "cycle type" << std::right << std::setw(6) << "#fix" << std::setw(6)
              << "psi0" << std::setw(6) << "psi1" << std::setw(6) << "chi0" << std::setw(6) << "chi1"
              << "  match\n";
    for (const auto& r : doc["rows"]) {
      std::string ct;
      for (const auto& p : r["cycle_type"]) ct += (ct.empty() ? "" : ",") + std::to_string(p.get<int>());
      std::cout << std::left << std::setw(14) << "(" + ct + ")" << std::right;
      for (const char* key : {"fixed_points", "psi0", "psi1", "chi0", "chi1"}) std::cout << std::setw(6) << r[key].get<int>();
      std::cout << "  " << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
  }
  return doc["all_match"].get<bool>() ? 0 : 1;
}

int run_reproduce(const std::string& target, int threads, bool json) {
  std::vector<std::string> targets;
  if (target == "all")
    targets = {"fig1", "fig2", "fig3", "fig4"};
  else
    targets = {target};
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& t : targets) {
    char* out = nullptr;
    int passed = 0;
    if (json) {
      check(pp_reproduce(t.c_str(), threads, &out, &passed));
      reports.push_back(take_json(out));
    } else {
      check(pp_reproduce_text(t.c_str(), threads, &out, &passed));
      std::cout << take(out);
    }
    all_pass = all_pass && passed;
  }
  if (json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump() << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poset pinball and equivariant cohomology toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // poset
  auto* poset_cmd = app.add_subcommand("poset", "inspect a poset or a Bruhat order");
  std::string p_board, p_type = "A", p_leq, p_ideal, p_filter, p_union;
  int p_rank = 3;
  bool p_linext = false;
  poset_cmd->add_option("--board", p_board, "poset JSON file");
  poset_cmd->add_option("--type", p_type);
  poset_cmd->add_option("--rank", p_rank);
  poset_cmd->add_option("--leq", p_leq, "a,b");
  poset_cmd->add_option("--ideal", p_ideal);
  poset_cmd->add_option("--filter", p_filter);
  poset_cmd->add_flag("--linear-extension", p_linext);
  poset_cmd->add_option("--union-check", p_union, "ids; is the set a union of principal ideals");
  poset_cmd->add_flag("--json", json);

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group data");
  std::string w_type = "A", w_element, w_bruhat, w_parabolic, w_act, w_root;
  int w_rank = 3;
  weyl_cmd->add_option("--type", w_type);
  weyl_cmd->add_option("--rank", w_rank);
  weyl_cmd->add_option("--element", w_element, "word or one-line notation");
  weyl_cmd->add_option("--bruhat", w_bruhat, "u,w");
  weyl_cmd->add_option("--max-parabolic", w_parabolic, "J, e.g. 1,3");
  weyl_cmd->add_option("--act", w_act, "element acting on --root");
  weyl_cmd->add_option("--root", w_root, "ambient coordinates");
  weyl_cmd->add_flag("--json", json);

  // billey
  auto* billey_cmd = app.add_subcommand("billey", "restriction sigma_v(w)");
  std::string b_type = "A", b_v, b_w;
  int b_rank = 3;
  bool b_spec = false;
  billey_cmd->add_option("--type", b_type);
  billey_cmd->add_option("--rank", b_rank);
  billey_cmd->add_option("--v", b_v)->required();
  billey_cmd->add_option("--w", b_w)->required();
  billey_cmd->add_flag("--specialize", b_spec, "substitute every simple root by t");
  billey_cmd->add_flag("--json", json);

  // pinball play|enumerate|replay
  auto* pin_cmd = app.add_subcommand("pinball", "play or enumerate pinball games");
  pin_cmd->require_subcommand(1);
  ConfigOpts play_opts, enum_opts;
  auto* play_cmd = pin_cmd->add_subcommand("play", "play one game");
  play_opts.attach(play_cmd);
  std::string script, transcript_out;
  bool interactive = false;
  play_cmd->add_option("--script", script, "edges to play (transcript JSON or one edge per line)");
  play_cmd->add_flag("--interactive", interactive, "read edges from standard input");
  play_cmd->add_option("--transcript-out", transcript_out, "write the transcript here");
  play_cmd->add_flag("--json", json);
  auto* enum_cmd = pin_cmd->add_subcommand("enumerate", "all reachable outcomes");
  enum_opts.attach(enum_cmd);
  int threads = 1;
  unsigned long long budget = 0;
  enum_cmd->add_option("--parallel", threads, "worker threads (hint)");
  enum_cmd->add_option("--budget", budget, "node budget (default PINBALL_NODE_BUDGET or 10^7)");
  enum_cmd->add_flag("--json", json);
  auto* replay_cmd = pin_cmd->add_subcommand("replay", "rebuild a game from its transcript");
  std::string replay_file;
  replay_cmd->add_option("transcript", replay_file)->required();
  replay_cmd->add_flag("--json", json);

  // fixed-points
  auto* fp_cmd = app.add_subcommand("fixed-points", "torus fixed points of Hessenberg varieties");
  std::string f_type = "A", f_family, f_lambda, f_h, f_mh;
  int f_rank = 3;
  bool f_board = false;
  fp_cmd->add_option("--type", f_type);
  fp_cmd->add_option("--rank", f_rank);
  fp_cmd->add_option("--family", f_family, "peterson, springer or hessenberg");
  fp_cmd->add_option("--lambda", f_lambda);
  fp_cmd->add_option("--hessenberg-h", f_h);
  fp_cmd->add_option("--mh", f_mh);
  fp_cmd->add_flag("--board", f_board, "emit a pinball config on the Bruhat board");
  fp_cmd->add_flag("--json", json);

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "verify a candidate basis");
  std::string basis_file, basis_targets;
  bool construct = false;
  basis_cmd->add_option("file", basis_file)->required();
  basis_cmd->add_option("--targets", basis_targets);
  basis_cmd->add_flag("--construct", construct, "also build a flow-up basis along a linear extension");
  basis_cmd->add_flag("--json", json);

  // springer-rep
  auto* spr_cmd = app.add_subcommand("springer-rep", "subregular Springer representation");
  int s_n = 4;
  bool characters = false;
  std::string kk;
  spr_cmd->add_option("--n", s_n);
  spr_cmd->add_flag("--characters", characters);
  spr_cmd->add_option("--kk", kk, "print the matrix of this element");
  spr_cmd->add_flag("--json", json);

  // reproduce
  auto* rep_cmd = app.add_subcommand("reproduce", "reproduce a worked example");
  std::string target;
  int r_threads = 1;
  rep_cmd->add_option("target", target, "fig1, fig2, fig3, fig4 or all")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "all"}));
  rep_cmd->add_option("--parallel", r_threads);
  rep_cmd->add_flag("--json", json);

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "run the game server");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poset_cmd) return run_poset(p_board, p_type, p_rank, p_leq, p_ideal, p_filter, p_linext, p_union, json);
    if (*weyl_cmd) return run_weyl(w_type, w_rank, w_element, w_bruhat, w_parabolic, w_act, w_root, json);
    if (*billey_cmd) return run_billey(b_type, b_rank, b_v, b_w, b_spec, json);
    if (*play_cmd) return run_play(play_opts.build(), script, interactive, transcript_out, json);
    if (*enum_cmd) return run_enumerate(enum_opts.build(), threads, budget, json);
    if (*replay_cmd) return run_replay(replay_file, json);
    if (*fp_cmd) return run_fixed_points(f_type, f_rank, f_family, f_lambda, f_h, f_mh, f_board, json);
    if (*basis_cmd) return run_basis(basis_file, basis_targets, construct, json);
    if (*spr_cmd) return run_springer(s_n, characters, kk, json);
    if (*rep_cmd) return run_reproduce(target, r_threads, json);
    if (*serve_cmd) {
      check(pp_server_run(host.c_str(), port));
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    if (json)
      std::cerr << Json({{"error", {{"kind", e.kind}, {"message", e.message}}}}).dump() << "\n";
    else
      std::cerr << "error [" << e.kind << "]: " << e.message << "\n";
    return 1;
  }
  return 2;
}
