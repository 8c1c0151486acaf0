#include "alexdimer/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace alexdimer {

LaurentPoly LaurentPoly::monomial(Int coeff, int dexp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[dexp] = std::move(coeff);
  return p;
}

Int LaurentPoly::coeff(int dexp) const {
  auto it = terms_.find(dexp);
  return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_dexp() const {
  if (terms_.empty()) throw InternalError("min_dexp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_dexp() const {
  if (terms_.empty()) throw InternalError("max_dexp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int dexp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(dexp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_[d] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

LaurentPoly abs_poly(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [d, c] : f.terms()) r.add_term(d, c < 0 ? Int(-c) : c);
  return r;
}

std::vector<int> support(const LaurentPoly& f) {
  std::vector<int> s;
  s.reserve(f.terms().size());
  for (const auto& [d, c] : f.terms()) s.push_back(d);
  return s;
}

bool uniform_parity(const LaurentPoly& f) {
  if (f.is_zero()) return true;
  const int parity = ((f.min_dexp() % 2) + 2) % 2;
  for (const auto& [d, c] : f.terms())
    if (((d % 2) + 2) % 2 != parity) return false;
  return true;
}

bool is_centered(const LaurentPoly& f) {
  if (f.is_zero()) return true;
  // f(1/t) negates every exponent.  Compare against +f and -f.
  bool plus = true, minus = true;
  for (const auto& [d, c] : f.terms()) {
    const Int mirrored = f.coeff(-d);
    if (mirrored != c) plus = false;
    if (mirrored != -c) minus = false;
    if (!plus && !minus) return false;
  }
  return plus || minus;
}

CoeffSeq coeff_seq(const LaurentPoly& f) {
  CoeffSeq s;
  if (f.is_zero()) return s;
  s.step = uniform_parity(f) ? 2 : 1;
  s.min_dexp = f.min_dexp();
  for (int d = s.min_dexp; d <= f.max_dexp(); d += s.step)
    s.values.push_back(f.coeff(d));
  return s;
}

bool is_trapezoidal(const std::vector<Int>& seq) {
  const size_t n = seq.size();
  size_t i = 0;
  while (i + 1 < n && seq[i] < seq[i + 1]) ++i;
  size_t j = i;
  while (j + 1 < n && seq[j] == seq[j + 1]) ++j;
  while (j + 1 < n && seq[j] > seq[j + 1]) ++j;
  return j + 1 == n || n == 0;
}

bool is_trapezoidal(const CoeffSeq& s) { return is_trapezoidal(s.values); }

bool is_palindromic_abs(const LaurentPoly& f) {
  const CoeffSeq s = coeff_seq(abs_poly(f));
  const size_t n = s.values.size();
  for (size_t i = 0; i < n / 2; ++i)
    if (s.values[i] != s.values[n - 1 - i]) return false;
  return true;
}

bool is_noncanceling_sum(const std::vector<LaurentPoly>& fs) {
  std::map<int, int> sign_at;  // dexp -> -1, +1, or 0 (both seen)
  for (const auto& f : fs) {
    for (const auto& [d, c] : f.terms()) {
      const int s = c < 0 ? -1 : 1;
      auto [it, inserted] = sign_at.try_emplace(d, s);
      if (!inserted && it->second != s) return false;
    }
  }
  return true;
}

bool is_noncanceling_product(const LaurentPoly& f, const LaurentPoly& g) {
  std::map<int, int> sign_at;
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      const int s = (cf < 0) == (cg < 0) ? 1 : -1;
      auto [it, inserted] = sign_at.try_emplace(df + dg, s);
      if (!inserted && it->second != s) return false;
    }
  }
  return true;
}

LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw InternalError("divexact by zero");
  if (f.is_zero()) return f;
  LaurentPoly rem = f, quot;
  const int gd = g.max_dexp();
  const Int& gc = g.terms().rbegin()->second;
  // In an exact division the quotient cannot reach below this exponent;
  // without the bound, Laurent division recurses downward forever.
  const int qmin = f.min_dexp() - g.min_dexp();
  while (!rem.is_zero()) {
    const int rd = rem.max_dexp();
    const Int rc = rem.terms().rbegin()->second;
    if (rd - gd < qmin || rc % gc != 0)
      throw InternalError("divexact: inexact division");
    const Int q = rc / gc;
    quot.add_term(rd - gd, q);
    rem -= LaurentPoly::monomial(q, rd - gd) * g;
  }
  return quot;
}

LaurentPoly unit_normalized(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  const int lo = f.min_dexp();
  const bool flip = f.coeff(lo) < 0;
  LaurentPoly r;
  for (const auto& [d, c] : f.terms()) r.add_term(d - lo, flip ? Int(-c) : c);
  return r;
}

bool equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g) {
  return unit_normalized(f) == unit_normalized(g);
}

namespace {

// t^(k/2) pretty-printed from the doubled exponent k.
std::string power_str(int dexp) {
  if (dexp == 0) return "";
  if (dexp == 2) return "t";
  std::ostringstream os;
  os << "t^(";
  if (dexp % 2 == 0) {
    os << dexp / 2;
  } else {
    os << dexp << "/2";
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : f.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::string p = power_str(d);
    if (p.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << p;
    }
  }
  return os.str();
}

}  // namespace alexdimer
