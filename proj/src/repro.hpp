#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "flowup.hpp"
#include "pinball.hpp"

namespace repro {

// One of the four worked examples in A3: the board is all of S4, the balls are
// released at the fixed points in table order, and the table records where
// each one came to rest.
struct Figure {
  std::string name;
  std::string family;  // "springer" or "hessenberg"
  std::vector<int> parameter;  // lambda or h
  coxeter::WeylPtr group;
  std::shared_ptr<const poset::GradedPoset> board;
  std::vector<std::string> w_words, v_words;  // table columns, as printed
  std::vector<int> initial, expected;  // board indices
  pinball::Variant variant;
  std::optional<std::vector<int>> targets;
  std::vector<std::pair<std::string, std::string>> script;
};

const std::vector<std::string>& figure_names();
const Figure& figure(const std::string& name);  // throws UnknownTarget
pinball::GameConfig figure_config(const Figure& f);
std::vector<pinball::Edge> figure_script(const Figure& f);

// Rows p_{v_k} restricted to the released fixed points, over their induced
// Bruhat order; degree tags 2 l(v_k).
flowup::Family rolldown_family(const coxeter::WeylGroup& g, const std::vector<int>& fixed_points,
                               const std::vector<int>& rolldowns);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string target;
  std::vector<std::array<std::string, 2>> table;  // (w_k, v_k)
  std::vector<Check> checks;
  bool passed() const;
};

Report reproduce(const std::string& target, int threads = 1);
std::string format_report(const Report& r);

}  // namespace repro
