#pragma once

// Finite Weyl group enumeration via the faithful matrix representation from
// the root datum. Elements are dense indices 0..|W|-1 ordered by (length,
// lexicographically least reduced word); index 0 is the identity.
//
// Serialization: an element is its lex-least reduced word written as a digit
// string ("121"), with "e" for the identity.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagsplit/root_datum.hpp"

namespace flagsplit {

class WeylGroup {
 public:
  // max_order guards against accidentally enormous enumerations; the largest
  // supported group (A5) has order 720.
  explicit WeylGroup(RootDatum datum, size_t max_order = 720);

  const RootDatum& datum() const { return datum_; }
  int order() const { return int(mats_.size()); }
  int rank() const { return datum_.rank; }
  int identity() const { return 0; }
  int generator(int i) const { return gen_index_[i]; }  // i in 0..rank-1

  int mult(int u, int v) const { return mult_table_[size_t(u) * order() + v]; }
  int inverse(int w) const { return inverse_[w]; }
  int length(int w) const { return length_[w]; }
  const std::string& word(int w) const { return word_[w]; }
  int longest() const { return longest_; }

  const IMat& matrix(int w) const { return mats_[w]; }
  // -1 if the matrix does not belong to the group.
  int element_of_matrix(const IMat& m) const;

  // Strong Bruhat order (computed once, on demand, via the descent
  // recursion: for a left descent s of w, v <= w iff (sv <= sw if sv < v,
  // else v <= sw)).
  bool bruhat_leq(int v, int w) const;
  // Covering pairs (v, w) with v < w and l(w) = l(v) + 1.
  std::vector<std::pair<int, int>> hasse_edges() const;

  // ranks[k] = #{w : l(w) = k}, k = 0..l(w0)
  std::vector<int> poincare_ranks() const;

  // Parse "e" or a digit string such as "121"; throws ParseError on invalid
  // generator letters. The result is canonicalized (any word is accepted,
  // reduced or not).
  int parse_word(const std::string&) const;

  bool left_descent(int i, int w) const;   // l(s_i w) < l(w)
  bool right_descent(int w, int i) const;  // l(w s_i) < l(w)

  // All reduced words of w (as digit strings); exponential in the worst case,
  // intended for tests and small groups.
  std::vector<std::string> reduced_words(int w) const;

  // Elements of each length, ascending index order within a length.
  const std::vector<std::vector<int>>& elements_by_length() const { return by_length_; }

 private:
  RootDatum datum_;
  std::vector<IMat> mats_;
  std::map<std::vector<long long>, int> index_;  // flattened matrix -> element
  std::vector<int> length_;
  std::vector<std::string> word_;
  std::vector<int> gen_index_;
  std::vector<int> inverse_;
  std::vector<int> mult_table_;
  std::vector<std::vector<int>> by_length_;
  int longest_ = 0;
  mutable std::vector<uint8_t> bruhat_;  // |W|^2, lazily built

  std::vector<long long> key(const IMat&) const;
  void build_bruhat() const;
};

}  // namespace flagsplit
