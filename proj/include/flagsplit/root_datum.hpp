#pragma once

// Root data for the supported types: A(n) for 1 <= n <= 5, C2, G2.
//
// A root datum fixes, once and for all, the polynomial model of H^2(G/T):
// the working variables, the simple reflections as integer substitution
// matrices on those variables, and the simple roots as integer linear forms
// (elements of the character lattice, so that divided differences are exact
// and integral). For C2 and G2 the labeling/sign conventions are pinned by a
// calibration self-test against known Schubert-calculus identities; see
// calibration.hpp.

#include <cstdint>
#include <string>
#include <vector>

#include "flagsplit/linalg.hpp"

namespace flagsplit {

enum class LieType { A, C2, G2 };

struct PositiveRoot {
  std::vector<long long> form;    // the root as a linear form in the working variables
  std::vector<long long> coroot;  // functional: <x_k, beta^vee> per variable
  IMat reflection;                // s_beta as a substitution matrix
};

struct RootDatum {
  LieType type;
  int rank = 0;    // number of simple reflections
  int nvars = 0;   // working variables of the polynomial model
  // Variables of the textbook presentation; for G2 this is 3 and the third
  // variable is eliminated (x3 := -x1-x2) before any computation.
  int presentation_vars = 0;
  std::string name;  // "A2", "C2", "G2", ...

  std::vector<IMat> reflection;                      // per generator, nvars x nvars
  std::vector<std::vector<long long>> simple_root;   // per generator, linear form
  std::vector<std::vector<long long>> simple_coroot; // per generator, functional
  std::vector<std::vector<long long>> cartan;        // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<PositiveRoot> positive;                // all positive roots

  int positive_count() const { return int(positive.size()); }  // = l(w0)
};

// Accepts "A1".."A5", "C2", "G2" and the aliases "SU2".."SU6", "SP2".
// Throws ParseError for anything else.
RootDatum build_root_datum(const std::string& name);

namespace detail {
// Convention knobs the calibration self-test explores for C2/G2: which
// generator is the "swap" one, and the signs of the two simple roots.
struct Convention {
  bool swapped_labels = false;
  int sign1 = 1;
  int sign2 = 1;
};
RootDatum build_c2(const Convention&);
RootDatum build_g2(const Convention&);
RootDatum build_a(int n);
}  // namespace detail

}  // namespace flagsplit
