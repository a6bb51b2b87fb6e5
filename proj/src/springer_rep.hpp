#pragma once

#include <vector>

#include "coxeter.hpp"
#include "rootpoly.hpp"
#include "tpoly.hpp"

namespace springer {

using algebra::RootPoly;
using algebra::TPoly;
using coxeter::Elem;
using coxeter::WeylGroup;

// Square matrix over Q[t]; column c is the image of basis vector c. The basis
// is (p_e, p_{s_1}, ..., p_{s_{n-1}}).
using Matrix = std::vector<std::vector<TPoly>>;

Matrix identity_matrix(int size);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix at_zero(const Matrix& m);

Matrix kk_matrix_simple(int n, int j);
// Product of generator matrices along a reduced word of w in S_n (g is A_{n-1}).
// Checks that a second reduced word gives the same matrix.
Matrix kk_matrix(const WeylGroup& g, Elem w);

// (w . x)(u) = x(u w) on a class given at every element of W.
std::vector<RootPoly> kk_act_on_class(const WeylGroup& g, Elem w, const std::vector<RootPoly>& x);

// Trace at t = 0 on the degree-0 line (piece 0) or the degree-2 block (piece 1).
int character(const WeylGroup& g, Elem w, int piece);

struct Filling {
  std::vector<int> top;  // increasing, n-1 entries
  int bottom;
  friend bool operator==(const Filling& a, const Filling& b) { return a.top == b.top && a.bottom == b.bottom; }
};
std::vector<Filling> row_strict_fillings(int n);  // ordered by bottom entry 1..n
Filling act_on_filling(const WeylGroup& g, Elem w, const Filling& t);
// Garsia-Procesi model: trace on span{v_0} (piece 0) or span{v_2..v_n} (piece 1).
int gp_character(const WeylGroup& g, Elem w, int piece);

int fixed_point_count(const WeylGroup& g, Elem w);
std::vector<std::vector<int>> partitions_of(int n);
Elem cycle_type_representative(const WeylGroup& g, const std::vector<int>& cycle_type);

struct CharacterRow {
  std::vector<int> cycle_type;
  Elem representative;
  int fixed_points, psi0, psi1, chi0, chi1;
  bool match;
};
std::vector<CharacterRow> character_table(const WeylGroup& g);

// s_j . sigma_{s_j} written as c_e sigma_e + sum_i c_i sigma_{s_i}.
struct SimpleActionExpansion {
  RootPoly coeff_e;
  std::vector<RootPoly> coeff_s;  // index i-1 for sigma_{s_i}
  bool exact = false;             // the expansion agrees with the action at every element
};
SimpleActionExpansion expand_simple_action(const WeylGroup& g, int j);

}  // namespace springer
