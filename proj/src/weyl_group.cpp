#include "flagsplit/weyl_group.hpp"

#include <algorithm>
#include <numeric>

#include "flagsplit/errors.hpp"

namespace flagsplit {

std::vector<long long> WeylGroup::key(const IMat& m) const { return m.a; }

WeylGroup::WeylGroup(RootDatum datum, size_t max_order) : datum_(std::move(datum)) {
  // Phase 1: BFS closure under right multiplication by the generators.
  std::vector<IMat> mats{IMat::identity(datum_.nvars)};
  std::map<std::vector<long long>, int> idx{{mats[0].a, 0}};
  std::vector<int> length{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier)
      for (int i = 0; i < datum_.rank; ++i) {
        IMat m = mul(mats[w], datum_.reflection[i]);
        auto [it, inserted] = idx.try_emplace(m.a, int(mats.size()));
        if (inserted) {
          if (mats.size() >= max_order)
            throw InternalError("Weyl group order exceeds limit " + std::to_string(max_order));
          mats.push_back(std::move(m));
          length.push_back(length[w] + 1);
          next.push_back(it->second);
        }
      }
    frontier = std::move(next);
  }
  int n = int(mats.size());

  // Phase 2: lexicographically least reduced words (greedy smallest left
  // descent, which is the first letter of the lex-least word).
  std::vector<std::string> word(n);
  auto index_of = [&](const IMat& m) {
    auto it = idx.find(m.a);
    require(it != idx.end(), "matrix not in group");
    return it->second;
  };
  std::vector<int> by_len_order(n);
  std::iota(by_len_order.begin(), by_len_order.end(), 0);
  std::sort(by_len_order.begin(), by_len_order.end(),
            [&](int a, int b) { return length[a] < length[b]; });
  for (int w : by_len_order) {
    if (length[w] == 0) {
      word[w] = "e";
      continue;
    }
    for (int i = 0; i < datum_.rank; ++i) {
      int sw = index_of(mul(datum_.reflection[i], mats[w]));
      if (length[sw] == length[w] - 1) {
        word[w] = std::to_string(i + 1) + (length[sw] == 0 ? "" : word[sw]);
        break;
      }
    }
    require(!word[w].empty(), "no left descent found");
  }

  // Phase 3: re-index by (length, word) so that the canonical order is stable
  // and human-friendly everywhere downstream.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (length[a] != length[b]) return length[a] < length[b];
    return word[a] < word[b];
  });
  mats_.resize(n);
  length_.resize(n);
  word_.resize(n);
  for (int newi = 0; newi < n; ++newi) {
    mats_[newi] = mats[perm[newi]];
    length_[newi] = length[perm[newi]];
    word_[newi] = word[perm[newi]];
    index_[mats_[newi].a] = newi;
  }
  require(length_[0] == 0, "identity not at index 0");

  by_length_.assign(length_[n - 1] + 1, {});
  for (int w = 0; w < n; ++w) by_length_[length_[w]].push_back(w);
  require(by_length_.back().size() == 1, "longest element not unique");
  longest_ = by_length_.back()[0];

  gen_index_.resize(datum_.rank);
  for (int i = 0; i < datum_.rank; ++i) gen_index_[i] = element_of_matrix(datum_.reflection[i]);

  // Multiplication table via right-generator folding along words.
  std::vector<int> right_gen(size_t(n) * datum_.rank);
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < datum_.rank; ++i)
      right_gen[size_t(w) * datum_.rank + i] = element_of_matrix(mul(mats_[w], datum_.reflection[i]));
  mult_table_.resize(size_t(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int acc = u;
      if (length_[v] > 0)
        for (char c : word_[v]) acc = right_gen[size_t(acc) * datum_.rank + (c - '1')];
      mult_table_[size_t(u) * n + v] = acc;
    }

  inverse_.resize(n);
  for (int w = 0; w < n; ++w) {
    int acc = 0;
    if (length_[w] > 0)
      for (auto it = word_[w].rbegin(); it != word_[w].rend(); ++it)
        acc = right_gen[size_t(acc) * datum_.rank + (*it - '1')];
    inverse_[w] = acc;
    require(mult(w, acc) == 0 && mult(acc, w) == 0, "inverse check failed");
  }
}

int WeylGroup::element_of_matrix(const IMat& m) const {
  auto it = index_.find(m.a);
  return it == index_.end() ? -1 : it->second;
}

bool WeylGroup::left_descent(int i, int w) const {
  return length(mult(generator(i), w)) < length(w);
}

bool WeylGroup::right_descent(int w, int i) const {
  return length(mult(w, generator(i))) < length(w);
}

void WeylGroup::build_bruhat() const {
  int n = order();
  bruhat_.assign(size_t(n) * n, 0);
  // v <= e iff v = e
  bruhat_[0] = 1;
  for (int len = 1; len <= length_[longest_]; ++len)
    for (int w : by_length_[len]) {
      int s = -1;
      for (int i = 0; i < rank(); ++i)
        if (left_descent(i, w)) { s = i; break; }
      int sw = mult(generator(s), w);
      for (int v = 0; v < n; ++v) {
        int sv = mult(generator(s), v);
        int vv = length_[sv] < length_[v] ? sv : v;
        bruhat_[size_t(v) * n + w] = bruhat_[size_t(vv) * n + sw];
      }
      bruhat_[size_t(w) * n + w] = 1;
    }
}

bool WeylGroup::bruhat_leq(int v, int w) const {
  if (bruhat_.empty()) build_bruhat();
  return bruhat_[size_t(v) * order() + w] != 0;
}

std::vector<std::pair<int, int>> WeylGroup::hasse_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < order(); ++w)
    for (int v = 0; v < order(); ++v)
      if (length_[v] + 1 == length_[w] && bruhat_leq(v, w)) edges.emplace_back(v, w);
  return edges;
}

std::vector<int> WeylGroup::poincare_ranks() const {
  std::vector<int> ranks;
  for (const auto& level : by_length_) ranks.push_back(int(level.size()));
  return ranks;
}

int WeylGroup::parse_word(const std::string& s) const {
  if (s == "e" || s.empty()) return identity();
  int acc = identity();
  for (char c : s) {
    if (c < '1' || c >= '1' + rank())
      throw ParseError("invalid generator letter '" + std::string(1, c) + "' in word \"" + s +
                       "\" (rank " + std::to_string(rank()) + ")");
    acc = mult(acc, generator(c - '1'));
  }
  return acc;
}

std::vector<std::string> WeylGroup::reduced_words(int w) const {
  if (length(w) == 0) return {""};
  std::vector<std::string> out;
  for (int i = 0; i < rank(); ++i) {
    if (!left_descent(i, w)) continue;
    for (const auto& rest : reduced_words(mult(generator(i), w)))
      out.push_back(std::to_string(i + 1) + rest);
  }
  return out;
}

}  // namespace flagsplit
