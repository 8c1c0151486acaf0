#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alexdimer/errors.hpp"

namespace alexdimer {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in t allowing half-integer exponents.  Exponents are
// stored doubled, so the key of t^(k/2) is k; t^3 has key 6.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(Int coeff, int dexp);
  static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int dexp) const;
  int min_dexp() const;
  int max_dexp() const;

  void add_term(int dexp, const Int& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<int, Int> terms_;  // doubled exponent -> coefficient, never zero
};

// Coefficient sequence over the saturated exponent range, lowest exponent
// first.  step is 2 (whole powers of t) when every doubled exponent has the
// same parity, 1 otherwise; missing interior exponents contribute zeros.
struct CoeffSeq {
  std::vector<Int> values;
  int min_dexp = 0;
  int step = 2;
};

LaurentPoly abs_poly(const LaurentPoly& f);
std::vector<int> support(const LaurentPoly& f);  // sorted doubled exponents
bool uniform_parity(const LaurentPoly& f);

// f(1/t) == f(t) or f(1/t) == -f(t); the zero polynomial is centered.
bool is_centered(const LaurentPoly& f);

CoeffSeq coeff_seq(const LaurentPoly& f);

// Strict rise, plateau, strict fall: a0 < ... < ak = ... = am > ... > an.
// Empty and single-element sequences qualify.
bool is_trapezoidal(const std::vector<Int>& seq);
bool is_trapezoidal(const CoeffSeq& s);

// coeff_seq(abs_poly(f)) reads the same in both directions.
bool is_palindromic_abs(const LaurentPoly& f);

// No exponent receives both a positive and a negative contribution.
bool is_noncanceling_sum(const std::vector<LaurentPoly>& fs);
// No exponent of f*g receives products of both signs.
bool is_noncanceling_product(const LaurentPoly& f, const LaurentPoly& g);

// Exact division; throws InternalError when g is zero or does not divide f.
LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g);

// f divided by its lowest monomial, sign fixed so the new constant term is
// positive.  Canonical representative of the class {±t^(m/2) f}.
LaurentPoly unit_normalized(const LaurentPoly& f);
bool equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g);

// Ascending exponents, e.g. "14*t^(-9/2) + 108*t^(-7/2) + 395*t^(-5/2)".
std::string to_string(const LaurentPoly& f);

}  // namespace alexdimer
