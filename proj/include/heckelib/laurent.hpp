#ifndef HECKELIB_LAURENT_HPP
#define HECKELIB_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace laurent {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct OddExponent : std::domain_error {
  using std::domain_error::domain_error;
};
struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonLaurentCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

// exact square root of a nonnegative rational, if one exists
std::optional<Rat> exact_sqrt(const Rat& t);

// t^e for integer e (e < 0 requires t != 0)
Rat rat_pow(const Rat& t, long e);

/*
  Sparse elements of Z[v,v^-1], keyed by exponent.  Zero coefficients are
  never stored, so the map representation is canonical and operator== is
  structural equality in the ring.
*/
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);
  LaurentPoly(Int c);

  static LaurentPoly monomial(Int c, long e);
  static LaurentPoly v(long e = 1);  // the monomial v^e

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  long min_exp() const;  // lowest exponent; throws std::logic_error on 0
  long max_exp() const;
  Int coeff(long e) const;
  Int leading_coeff() const;  // coefficient at max_exp
  const std::map<long, Int>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly shifted(long k) const;      // multiply by v^k
  LaurentPoly scaled(const Int& c) const; // multiply by the integer c
  LaurentPoly bar() const;                // v -> v^-1
  LaurentPoly alternated() const;         // v -> -v
  LaurentPoly subst_square() const;       // v -> v^2 (embeds P(q) as P(v^2))
  LaurentPoly pow(unsigned long n) const;

  Int content() const;  // gcd of the coefficients, >= 0 (0 for the zero poly)

  // exact division; throws std::logic_error when b does not divide *this
  LaurentPoly divexact(const LaurentPoly& b) const;

  Rat eval(const Rat& t) const;  // value at v = t, t != 0 if negative exponents occur

  // value at v = sqrt(t) as (a, b) with p(sqrt t) = a + b*sqrt(t)
  std::pair<Rat, Rat> eval_at_sqrt(const Rat& t) const;

  std::string str(const std::string& var = "v") const;

 private:
  std::map<long, Int> terms_;
  void put(long e, Int c);
};

// Primitive gcd with unit normalization: content 1, lowest exponent 0,
// positive leading coefficient.  gcd(0,0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

enum class SpecMode { V, VSquared };

// Evaluate with v = t (mode V) or v^2 = t (mode VSquared).  In mode VSquared
// odd exponents are admitted only when t has an exact rational square root.
Rat specialize(const LaurentPoly& p, const Rat& t, SpecMode mode);

/*
  Exact value in Q(sqrt(t)): a + b*sqrt(t).  When t is a perfect square the
  representation collapses to b = 0, so equality stays structural.
*/
struct QuadRat {
  Rat a, b, t;
  QuadRat() : a(0), b(0), t(0) {}
  QuadRat(Rat a_, Rat b_, Rat t_);
  friend bool operator==(const QuadRat& x, const QuadRat& y) = default;
  std::string str() const;
};

/*
  The fraction field of Z[v,v^-1], i.e. Q(v), with a canonical reduced form:
    - num/den coprime as polynomials, gcd(content(num), content(den)) = 1;
    - den has lowest exponent 0 and positive leading coefficient.
  Equality is therefore structural.
*/
class FracLaurent {
 public:
  FracLaurent() : num_(), den_(LaurentPoly(1)) {}
  FracLaurent(long c) : FracLaurent(LaurentPoly(c)) {}
  FracLaurent(Int c) : FracLaurent(LaurentPoly(std::move(c))) {}
  FracLaurent(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly(1)) {}
  FracLaurent(LaurentPoly num, LaurentPoly den);

  static FracLaurent v(long e = 1) { return FracLaurent(LaurentPoly::v(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  bool is_laurent() const { return den_.is_one(); }
  // the underlying Laurent polynomial; throws NonLaurentCoefficient otherwise
  const LaurentPoly& as_laurent() const;

  FracLaurent operator-() const;
  FracLaurent& operator+=(const FracLaurent& o);
  FracLaurent& operator-=(const FracLaurent& o);
  FracLaurent& operator*=(const FracLaurent& o);
  friend FracLaurent operator+(FracLaurent a, const FracLaurent& b) { return a += b; }
  friend FracLaurent operator-(FracLaurent a, const FracLaurent& b) { return a -= b; }
  friend FracLaurent operator*(FracLaurent a, const FracLaurent& b) { return a *= b; }
  friend FracLaurent operator/(const FracLaurent& a, const FracLaurent& b);
  friend bool operator==(const FracLaurent& a, const FracLaurent& b) = default;

  FracLaurent inv() const;  // throws ZeroDenominator on 0
  FracLaurent bar() const;  // v -> v^-1

  Rat eval(const Rat& t) const;           // throws ZeroDenominator when den(t) = 0
  QuadRat eval_v2(const Rat& t) const;    // exact value at v^2 = t, in Q(sqrt t)

  std::string str(const std::string& var = "v") const;

 private:
  LaurentPoly num_, den_;
  void reduce();
};

}  // namespace laurent

#endif
