#include "flagsplit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace flagsplit {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  require(i >= 0 && i < nvars, "variable index out of range");
  Poly p(nvars);
  Monomial m;
  m.e[i] = 1;
  p.add_term(m, 1);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  require(nvars_ == o.nvars_, "mixed variable counts");
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  require(nvars_ == o.nvars_, "mixed variable counts");
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::scaled(const Rational& s) const {
  Poly out(nvars_);
  if (s == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  require(nvars_ == o.nvars_, "mixed variable counts");
  Poly out(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (int i = 0; i < nvars_; ++i) {
        int e = m1.e[i] + m2.e[i];
        require(e <= 255, "exponent overflow");
        m.e[i] = uint8_t(e);
      }
      out.add_term(m, c1 * c2);
    }
  return out;
}

bool Poly::homogeneous(int* deg) const {
  if (terms_.empty()) {
    if (deg) *deg = 0;
    return true;
  }
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  if (deg) *deg = d;
  return true;
}

Poly Poly::substituted(const IMat& M) const {
  require(M.rows == nvars_ && M.cols == nvars_, "substitution matrix shape");
  // image of each variable as a linear form
  std::vector<Poly> image(nvars_, Poly(nvars_));
  for (int j = 0; j < nvars_; ++j) {
    for (int k = 0; k < nvars_; ++k) {
      if (M.at(j, k) == 0) continue;
      Monomial m;
      m.e[k] = 1;
      image[j].add_term(m, M.at(j, k));
    }
  }
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(nvars_, c);
    for (int j = 0; j < nvars_; ++j)
      for (int rep = 0; rep < m.e[j]; ++rep) term = term * image[j];
    out = out + term;
  }
  return out;
}

Poly Poly::divided_by_linear(const std::vector<long long>& form) const {
  require(int(form.size()) == nvars_, "linear form size");
  int t = -1;
  for (int i = nvars_ - 1; i >= 0; --i)
    if (form[i] != 0) { t = i; break; }
  require(t >= 0, "division by zero form");
  Rational lead(form[t]);

  Poly divisor(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    if (form[i] == 0) continue;
    Monomial m;
    m.e[i] = 1;
    divisor.add_term(m, form[i]);
  }

  Poly rem = *this, quot(nvars_);
  while (!rem.terms_.empty()) {
    // highest x_t-degree term group
    int maxdeg = 0;
    for (const auto& [m, c] : rem.terms_) maxdeg = std::max(maxdeg, int(m.e[t]));
    if (maxdeg == 0) break;
    Poly step(nvars_);
    for (const auto& [m, c] : rem.terms_) {
      if (m.e[t] != maxdeg) continue;
      Monomial q = m;
      q.e[t] -= 1;
      step.add_term(q, c / lead);
    }
    quot = quot + step;
    rem = rem - step * divisor;
  }
  require(rem.terms_.empty(), "inexact division by linear form");
  return quot;
}

Poly Poly::power_derivation(uint32_t p) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      Monomial d = m;
      int e = d.e[i] - 1 + int(p);
      require(e <= 255, "exponent overflow");
      d.e[i] = uint8_t(e);
      out.add_term(d, c * int(m.e[i]));
    }
  return out;
}

bool Poly::integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

bool Poly::p_integral(uint32_t p) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return is_p_integral(t.second, p); });
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m.e[i] > 1) mono += "^" + std::to_string(int(m.e[i]));
    }
    if (mono.empty()) {
      os << to_string(abs);
    } else {
      if (abs != 1) os << to_string(abs) << "*";
      os << mono;
    }
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  // recursive enumeration, then canonical sort
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.e[var] = uint8_t(remaining);
      out.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur.e[var] = uint8_t(k);
      self(self, var + 1, remaining - k);
    }
    cur.e[var] = 0;
  };
  if (nvars > 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

Poly elementary_symmetric(int nvars, int k) {
  require(k >= 0 && k <= nvars, "elementary symmetric index");
  Poly out(nvars);
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      Monomial m;
      for (int i : idx) m.e[i] = 1;
      out.add_term(m, 1);
      return;
    }
    for (int i = start; i < nvars; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace flagsplit
