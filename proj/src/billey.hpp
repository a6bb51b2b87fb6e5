#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "rootpoly.hpp"

namespace billey {

using algebra::RootPoly;
using algebra::TPoly;
using coxeter::Elem;
using coxeter::WeylGroup;

// A root written as a linear form in the simple roots.
RootPoly root_form(const WeylGroup& g, const coxeter::Vec& root);

// sigma_v(w), summed over reduced subwords of the given reduced word of w.
RootPoly restrict_along_word(const WeylGroup& g, Elem v, const coxeter::Word& word);
// Same, using the canonical reduced word of w.
RootPoly billey_restrict(const WeylGroup& g, Elem v, Elem w);

inline TPoly specialize_to_t(const RootPoly& p) { return p.specialize(); }

// Values of a class at a list of fixed points, one t-polynomial per point.
struct RestrictionClass {
  std::vector<Elem> support;
  std::vector<TPoly> values;
  int degree = 0;  // cohomological degree tag, 2 * length
};

RestrictionClass schubert_class(const WeylGroup& g, Elem v, const std::vector<Elem>& fixed_points);

// sigma_v over all of W, indexed by group element.
std::vector<RootPoly> full_schubert_class(const WeylGroup& g, Elem v);

struct GkmFailure {
  Elem w;
  Elem tw;
  coxeter::Vec root;
};

// For every w and positive root a: a divides x(w) - x(t_a w). Returns the first
// failing edge, or nullopt when the class satisfies every condition.
std::optional<GkmFailure> gkm_first_failure(const WeylGroup& g, const std::vector<RootPoly>& values);
inline bool gkm_divisibility_check(const WeylGroup& g, const std::vector<RootPoly>& values) {
  return !gkm_first_failure(g, values).has_value();
}

}  // namespace billey
