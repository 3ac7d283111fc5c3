#pragma once

#include <iosfwd>
#include <string>

#include "dahakit/ring.hpp"

namespace daha {

struct PoleAtLimit : std::domain_error {
  using std::domain_error::domain_error;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of the fraction field of Z[Q,S,u,X], kept in canonical form:
// num/den coprime, no common integer or monomial content, and the
// denominator's lex-leading coefficient positive. Equality is syntactic.
//
// Scalars of the paper's field C_{q,t} are the elements not using X (and
// usually not u); q = Q^4, t = S^2.
class Frac {
 public:
  Frac() : num_(), den_(1) {}
  Frac(long v) : num_(v), den_(1) {}
  Frac(const mpz_class& v) : num_(v), den_(1) {}
  Frac(const mpq_class& v) : num_(v.get_num()), den_(v.get_den()) { normalize(); }
  Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit Frac(Poly num) : num_(std::move(num)), den_(1) {}

  // Laurent monomial c * Q^eq S^es u^eu X^ex (negative exponents allowed).
  static Frac mono(const mpq_class& c, int eq, int es = 0, int eu = 0, int ex = 0) {
    Exps en{0, 0, 0, 0}, ed{0, 0, 0, 0};
    int e[4] = {eq, es, eu, ex};
    for (int i = 0; i < 4; ++i) {
      if (e[i] >= 0)
        en[i] = e[i];
      else
        ed[i] = -e[i];
    }
    return Frac(Poly::monomial(c.get_num(), en), Poly::monomial(c.get_den(), ed));
  }
  static Frac q(int quarters) { return mono(1, quarters); }       // q^{quarters/4}
  static Frac t(int halves) { return mono(1, 0, halves); }        // t^{halves/2}
  static Frac x(int e) { return mono(1, 0, 0, 0, e); }            // X^e
  static Frac u(int e = 1) { return mono(1, 0, 0, e, 0); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool usesVar(Var v) const { return num_.uses(v) || den_.uses(v); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
    Poly g = polyGcd(a.den_, b.den_);
    if (g.isOne()) return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly da = *divExact(a.den_, g), db = *divExact(b.den_, g);
    return Frac(a.num_ * db + b.num_ * da, a.den_ * db);
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  Frac operator-() const {
    Frac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.isZero() || b.isZero()) return Frac();
    Poly g1 = polyGcd(a.num_, b.den_), g2 = polyGcd(b.num_, a.den_);
    Poly n = *divExact(a.num_, g1) * *divExact(b.num_, g2);
    Poly d = *divExact(a.den_, g2) * *divExact(b.den_, g1);
    Frac r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.fixSign();
    return r;
  }
  Frac inv() const {
    if (isZero()) throw DivisionByZero("inverse of zero");
    Frac r;
    r.num_ = den_;
    r.den_ = num_;
    r.fixSign();
    return r;
  }
  friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inv(); }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  Frac pow(int e) const {
    if (e == 0) return Frac(1);
    Frac base = e > 0 ? *this : inv();
    int n = e > 0 ? e : -e;
    Frac r(1);
    while (n) {
      if (n & 1) r = r * base;
      base = n > 1 ? base * base : base;
      n >>= 1;
    }
    return r;
  }

  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Frac& o) const { return !(*this == o); }

  // v -> v^{-1} for each selected variable.
  Frac invertVars(std::initializer_list<Var> vars) const {
    Poly n = num_, d = den_;
    for (Var v : vars) {
      int dn = n.degree(v), dd = d.degree(v);
      int m = std::max(dn, dd);
      n = reflect(n, v, m);
      d = reflect(d, v, m);
    }
    return Frac(std::move(n), std::move(d));
  }

  // Substitute v -> c * v where c is a Laurent monomial in Q,S,u.
  Frac substScale(Var v, const Frac& c) const;

  // Substitute v -> monomial (eliminating v), e.g. X -> t^{-1/2}.
  Frac substVarMono(Var v, const Frac& c) const;

  // star: Q -> Q^{-1}, S -> S^{-1} (q,t inversion; u and X untouched).
  Frac star() const { return invertVars({VQ, VS}); }

  // Exact limits t -> 0 (S -> 0) and t -> infinity.
  Frac limitT0() const;
  Frac limitTInf() const { return invertVars({VS}).limitT0(); }

  // Evaluate Q and S at exact rationals (requires U,X absent).
  mpq_class evalQS(const mpq_class& q0, const mpq_class& s0) const;

  // Evaluate a single variable at an exact rational, keeping the others.
  Frac evalVar(Var v, const mpq_class& x0) const;

  std::string str() const;

 private:
  void fixSign() {
    if (den_.isZero()) throw DivisionByZero("zero denominator");
    if (den_.lead().c < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
  void normalize() {
    if (den_.isZero()) throw DivisionByZero("zero denominator");
    if (num_.isZero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = polyGcd(num_, den_);
    num_ = *divExact(num_, g);
    den_ = *divExact(den_, g);
    fixSign();
  }
  static Poly reflect(const Poly& p, Var v, int m) {
    std::map<Exps, mpz_class, Poly::ExpsLess> acc;
    for (const auto& t : p.terms()) {
      Exps e = t.e;
      e[v] = m - e[v];
      acc[e] += t.c;
    }
    return Poly::fromMap(acc);
  }

  Poly num_, den_;
};

using Scalar = Frac;

std::ostream& operator<<(std::ostream& os, const Frac& f);

// q^{n_#} as a monomial scalar: Q^{2n} S for n > 0, Q^{2n} S^{-1} for
// n <= 0 (sgn(0) = -1).
inline Scalar eigenMonomial(int n) { return Scalar::mono(1, 2 * n, n > 0 ? 1 : -1); }

// |n~|: |n|+1 for n <= 0, |n| for n > 0.
inline int tildeAbs(int n) { return n > 0 ? n : -n + 1; }
inline int sgnSharp(int n) { return n > 0 ? 1 : -1; }

}  // namespace daha
