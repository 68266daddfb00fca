#include "flagsplit/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "flagsplit/errors.hpp"

namespace flagsplit {
namespace {

// Apply a substitution matrix to a linear form: coefficient vectors transform
// by the transpose (x_j is replaced by row j of M).
std::vector<long long> apply_to_form(const IMat& M, const std::vector<long long>& form) {
  std::vector<long long> out(form.size(), 0);
  for (size_t k = 0; k < form.size(); ++k)
    for (size_t j = 0; j < form.size(); ++j) out[k] += M.at(int(j), int(k)) * form[j];
  return out;
}

int order_of_product(const IMat& a, const IMat& b, int cap = 12) {
  IMat prod = mul(a, b);
  IMat acc = prod;
  IMat id = IMat::identity(a.rows);
  for (int k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = mul(acc, prod);
  }
  throw InternalError("generator product order exceeds cap");
}

// coroot functional of a root (form, reflection): x_k - x_k o R = c_k * form.
std::vector<long long> coroot_of(const std::vector<long long>& form, const IMat& R) {
  int n = int(form.size());
  int t = -1;
  for (int i = 0; i < n; ++i)
    if (form[i] != 0) { t = i; break; }
  require(t >= 0, "zero root");
  std::vector<long long> coroot(n, 0);
  for (int k = 0; k < n; ++k) {
    std::vector<long long> delta(n, 0);
    delta[k] = 1;
    for (int j = 0; j < n; ++j) delta[j] -= R.at(k, j);
    require(delta[t] % form[t] == 0, "coroot pairing not integral");
    long long c = delta[t] / form[t];
    for (int j = 0; j < n; ++j)
      require(delta[j] == c * form[j], "reflection displacement not proportional to root");
    coroot[k] = c;
  }
  return coroot;
}

// Solve beta = sum q_i alpha_i; returns the rational coefficients.
std::vector<Rational> in_simple_basis(const RootDatum& d, const std::vector<long long>& beta) {
  QMat A(d.nvars, d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int k = 0; k < d.nvars; ++k) A.at(k, i) = d.simple_root[i][k];
  std::vector<Rational> b(d.nvars);
  for (int k = 0; k < d.nvars; ++k) b[k] = beta[k];
  return solve(A, b);
}

void compute_positive_roots(RootDatum& d, int expected_count) {
  // Orbit of the simple roots under the generators, tracking reflections.
  std::vector<PositiveRoot> seen;
  auto known = [&](const std::vector<long long>& f) {
    auto neg = f;
    for (auto& v : neg) v = -v;
    return std::any_of(seen.begin(), seen.end(),
                       [&](const PositiveRoot& r) { return r.form == f || r.form == neg; });
  };
  std::vector<std::pair<std::vector<long long>, IMat>> work;
  for (int i = 0; i < d.rank; ++i) {
    seen.push_back({d.simple_root[i], d.simple_coroot[i], d.reflection[i]});
    work.emplace_back(d.simple_root[i], d.reflection[i]);
  }
  while (!work.empty()) {
    auto [form, R] = work.back();
    work.pop_back();
    for (int i = 0; i < d.rank; ++i) {
      auto f2 = apply_to_form(d.reflection[i], form);
      if (known(f2)) continue;
      IMat R2 = mul(mul(d.reflection[i], R), d.reflection[i]);
      seen.push_back({f2, coroot_of(f2, R2), R2});
      work.emplace_back(f2, R2);
    }
  }
  require(int(seen.size()) == expected_count, "unexpected number of roots for " + d.name);
  // Normalize each +/- pair to the positive representative.
  for (auto& r : seen) {
    auto q = in_simple_basis(d, r.form);
    bool nonneg = std::all_of(q.begin(), q.end(), [](const Rational& x) { return x >= 0; });
    bool nonpos = std::all_of(q.begin(), q.end(), [](const Rational& x) { return x <= 0; });
    require(nonneg || nonpos, "root not sign-coherent in simple basis");
    if (nonpos && !nonneg) {
      for (auto& v : r.form) v = -v;
      for (auto& v : r.coroot) v = -v;
    }
  }
  std::sort(seen.begin(), seen.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) { return a.form < b.form; });
  d.positive = std::move(seen);
}

void finalize(RootDatum& d, const std::vector<std::vector<int>>& coxeter, int npos,
              bool require_standard_cartan) {
  for (int i = 0; i < d.rank; ++i) {
    require(mul(d.reflection[i], d.reflection[i]) == IMat::identity(d.nvars),
            "generator not an involution");
    auto negated = apply_to_form(d.reflection[i], d.simple_root[i]);
    for (int k = 0; k < d.nvars; ++k)
      require(negated[k] == -d.simple_root[i][k], "s_i(alpha_i) != -alpha_i");
    d.simple_coroot.push_back(coroot_of(d.simple_root[i], d.reflection[i]));
  }
  for (int i = 0; i < d.rank; ++i)
    for (int j = i + 1; j < d.rank; ++j)
      require(order_of_product(d.reflection[i], d.reflection[j]) == coxeter[i][j],
              "braid relation violated");
  d.cartan.assign(d.rank, std::vector<long long>(d.rank, 0));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) {
      long long v = 0;
      for (int k = 0; k < d.nvars; ++k) v += d.simple_coroot[i][k] * d.simple_root[j][k];
      d.cartan[i][j] = v;
    }
  for (int i = 0; i < d.rank; ++i) {
    require(d.cartan[i][i] == 2, "cartan diagonal");
    for (int j = 0; j < d.rank; ++j) {
      if (i == j) continue;
      // 4 cos^2(pi/m) rule: m=2 -> 0, m=3 -> 1, m=4 -> 2, m=6 -> 3
      static const std::map<int, long long> expect{{2, 0}, {3, 1}, {4, 2}, {6, 3}};
      require(d.cartan[i][j] * d.cartan[j][i] == expect.at(coxeter[i][j]),
              "cartan off-diagonal product");
      if (require_standard_cartan)
        require(d.cartan[i][j] <= 0, "cartan off-diagonal sign (non-standard convention)");
    }
  }
  compute_positive_roots(d, npos);
}

std::vector<std::vector<int>> coxeter_matrix_a(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    m[i][i] = 1;
    if (i + 1 < rank) m[i][i + 1] = m[i + 1][i] = 3;
  }
  return m;
}

}  // namespace

namespace detail {

RootDatum build_a(int n) {
  require(n >= 1 && n <= 5, "A(n) supported for 1 <= n <= 5");
  RootDatum d;
  d.type = LieType::A;
  d.rank = n;
  d.nvars = n + 1;
  d.presentation_vars = n + 1;
  d.name = "A" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    IMat m = IMat::identity(d.nvars);
    m.at(i, i) = m.at(i + 1, i + 1) = 0;
    m.at(i, i + 1) = m.at(i + 1, i) = 1;
    d.reflection.push_back(m);
    std::vector<long long> a(d.nvars, 0);
    a[i] = 1;
    a[i + 1] = -1;
    d.simple_root.push_back(a);
  }
  finalize(d, coxeter_matrix_a(n), n * (n + 1) / 2, true);
  return d;
}

RootDatum build_c2(const Convention& cv) {
  RootDatum d;
  d.type = LieType::C2;
  d.rank = 2;
  d.nvars = 2;
  d.presentation_vars = 2;
  d.name = "C2";
  IMat swap(2, 2), neg(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = 1;
  neg.at(0, 0) = 1;
  neg.at(1, 1) = -1;
  std::vector<long long> root_swap{1, -1}, root_neg{0, 2};
  if (!cv.swapped_labels) {
    d.reflection = {swap, neg};
    d.simple_root = {root_swap, root_neg};
  } else {
    d.reflection = {neg, swap};
    d.simple_root = {root_neg, root_swap};
  }
  for (auto& v : d.simple_root[0]) v *= cv.sign1;
  for (auto& v : d.simple_root[1]) v *= cv.sign2;
  finalize(d, {{1, 4}, {4, 1}}, 4, false);
  return d;
}

RootDatum build_g2(const Convention& cv) {
  RootDatum d;
  d.type = LieType::G2;
  d.rank = 2;
  d.nvars = 2;
  d.presentation_vars = 3;  // x3 := -x1-x2 is eliminated from all polynomials
  d.name = "G2";
  IMat swap(2, 2), neg(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = 1;
  // x1 -> -x1, x2 -> x1 + x2: the restriction of (x1,x2,x3) -> (-x1,-x3,-x2)
  // to the plane x1+x2+x3 = 0.
  neg.at(0, 0) = -1;
  neg.at(1, 0) = 1;
  neg.at(1, 1) = 1;
  std::vector<long long> root_swap{1, -1}, root_neg{-1, 0};
  if (!cv.swapped_labels) {
    d.reflection = {swap, neg};
    d.simple_root = {root_swap, root_neg};
  } else {
    d.reflection = {neg, swap};
    d.simple_root = {root_neg, root_swap};
  }
  for (auto& v : d.simple_root[0]) v *= cv.sign1;
  for (auto& v : d.simple_root[1]) v *= cv.sign2;
  finalize(d, {{1, 6}, {6, 1}}, 6, false);
  return d;
}

}  // namespace detail

RootDatum build_root_datum(const std::string& name) {
  std::string up;
  for (char c : name) up += char(std::toupper(static_cast<unsigned char>(c)));
  if (up.size() == 2 && up[0] == 'A' && up[1] >= '1' && up[1] <= '9') {
    int n = up[1] - '0';
    if (n > 5) throw ParseError("A(n) supported only for n <= 5 (got " + name + ")");
    return detail::build_a(n);
  }
  if (up.size() == 3 && up.substr(0, 2) == "SU" && up[2] >= '2' && up[2] <= '9') {
    int n = up[2] - '0' - 1;
    if (n > 5) throw ParseError("SU(n) supported only for n <= 6 (got " + name + ")");
    return detail::build_a(n);
  }
  // Pinned C2/G2 conventions; the calibration self-test (calibration.hpp)
  // re-derives these from the known Schubert identities and asserts they win.
  if (up == "C2" || up == "SP2") return detail::build_c2({});
  if (up == "G2") return detail::build_g2({});
  throw ParseError("unknown type '" + name + "' (expected A1..A5, C2, G2)");
}

}  // namespace flagsplit
