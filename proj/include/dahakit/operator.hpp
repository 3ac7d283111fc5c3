#pragma once

#include <vector>

#include "dahakit/laurent.hpp"

namespace daha {

struct NonPolynomialResult : std::domain_error {
  using std::domain_error::domain_error;
};

// Finite sum of terms c(X) Gamma^k s^eps, with c a rational function of X
// over the scalars. Normal form: at most one term per (k,eps), coefficients
// canonical Fracs. Composition rules:
//   s c(X) = c(X^{-1}) s,  Gamma c(X) = c(q^{1/2}X) Gamma,  s Gamma = Gamma^{-1} s.
class OperatorExpr {
 public:
  struct OpTerm {
    int gamma = 0;
    int refl = 0;  // 0 or 1
    Frac coeff;
  };

  OperatorExpr() = default;
  static OperatorExpr zero() { return OperatorExpr(); }
  static OperatorExpr identity() { return term(Frac(1), 0, 0); }
  static OperatorExpr term(const Frac& c, int gamma, int refl) {
    OperatorExpr op;
    if (!c.isZero()) op.terms_.push_back({gamma, refl, c});
    return op;
  }
  // multiplication by a rational function of X
  static OperatorExpr mul(const Frac& c) { return term(c, 0, 0); }
  static OperatorExpr mul(const LaurentPoly& p) { return term(p.toFrac(), 0, 0); }
  static OperatorExpr reflection() { return term(Frac(1), 0, 1); }       // s
  static OperatorExpr shift(int k = 1) { return term(Frac(1), k, 0); }   // Gamma^k

  const std::vector<OpTerm>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr r = a;
    for (const auto& t : b.terms_) r.accumulate(t.gamma, t.refl, t.coeff);
    return r;
  }
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr r = a;
    for (const auto& t : b.terms_) r.accumulate(t.gamma, t.refl, -t.coeff);
    return r;
  }
  OperatorExpr operator-() const {
    OperatorExpr r;
    for (const auto& t : terms_) r.terms_.push_back({t.gamma, t.refl, -t.coeff});
    return r;
  }
  friend OperatorExpr operator*(const Frac& c, const OperatorExpr& a) {
    OperatorExpr r;
    if (c.isZero()) return r;
    for (const auto& t : a.terms_) r.terms_.push_back({t.gamma, t.refl, c * t.coeff});
    return r;
  }

  // a then-applied-after b: (a*b)(f) = a(b(f)).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr r;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        int sgn = ta.refl ? -1 : 1;
        Frac c = tb.coeff;
        if (ta.refl) c = c.invertVars({VX});
        if (ta.gamma != 0) c = c.substScale(VX, Scalar::q(2 * ta.gamma));
        r.accumulate(ta.gamma + sgn * tb.gamma, ta.refl ^ tb.refl, ta.coeff * c);
      }
    return r;
  }

  bool operator==(const OperatorExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const auto& a = terms_[i];
      const auto& b = o.terms_[i];
      if (a.gamma != b.gamma || a.refl != b.refl || !(a.coeff == b.coeff)) return false;
    }
    return true;
  }
  bool operator!=(const OperatorExpr& o) const { return !(*this == o); }

  // Largest |shift| of X-degree the operator can produce (coefficient degree
  // span), used for safe-window bookkeeping in series checks.
  int maxDegreeShift() const {
    int m = 0;
    for (const auto& t : terms_) {
      int span = std::max(std::abs(t.coeff.num().degree(VX) - t.coeff.den().degree(VX)),
                          std::abs(t.coeff.num().minDegree(VX) - t.coeff.den().degree(VX)));
      m = std::max(m, span);
    }
    return m;
  }

  // Image of one monomial X^n as a rational function of X.
  Frac applyMonoFrac(int n, const Scalar& c = Scalar(1)) const {
    Frac acc;
    for (const auto& t : terms_) {
      int e = t.refl ? -n : n;
      // Gamma^k(X^e) = q^{ke/2} X^e
      acc += t.coeff * Scalar::q(2 * t.gamma * e) * Frac::x(e);
    }
    return c * acc;
  }
  // Apply to one monomial X^n; the result must clear denominators.
  LaurentPoly applyMono(int n, const Scalar& c = Scalar(1)) const {
    return LaurentPoly::fromFrac(applyMonoFrac(n, c));
  }

  // Denominators may cancel only in the full sum (e.g. the Macdonald
  // operator on symmetric input), so accumulate before clearing.
  LaurentPoly apply(const LaurentPoly& f) const {
    Frac acc;
    for (const auto& [e, c] : f.coef()) acc += applyMonoFrac(e, c);
    return LaurentPoly::fromFrac(acc);
  }

  // Conjugation by a Gaussian: Gamma^k -> q^{sigma k^2/4} X^{sigma k} Gamma^k.
  // sigma=+1 gives g' A g'^{-1} for the |q|<1 Gaussian g' = sum q^{m^2/4}X^m;
  // sigma=-1 gives either the inverse twist or the check-Gaussian twist.
  OperatorExpr gaussTwist(int sigma) const {
    OperatorExpr r;
    for (const auto& t : terms_) {
      Frac c = t.coeff * Scalar::q(sigma * t.gamma * t.gamma) * Frac::x(sigma * t.gamma);
      r.accumulate(t.gamma, t.refl, c);
    }
    return r;
  }

  // Coefficient-level variable maps (used by nil-limits and RE procedures).
  OperatorExpr mapCoeffs(const std::function<Frac(const Frac&)>& f) const {
    OperatorExpr r;
    for (const auto& t : terms_) r.accumulate(t.gamma, t.refl, f(t.coeff));
    return r;
  }
  // X -> X^{-1}, Gamma -> Gamma^{-1} (the spinor second-component embedding).
  OperatorExpr iota() const {
    OperatorExpr r;
    for (const auto& t : terms_) r.accumulate(-t.gamma, t.refl, t.coeff.invertVars({VX}));
    return r;
  }

  std::string str() const;

 private:
  void accumulate(int gamma, int refl, const Frac& c) {
    if (c.isZero()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->gamma == gamma && it->refl == refl) {
        it->coeff += c;
        if (it->coeff.isZero()) terms_.erase(it);
        return;
      }
      if (it->gamma > gamma || (it->gamma == gamma && it->refl > refl)) {
        terms_.insert(it, {gamma, refl, c});
        return;
      }
    }
    terms_.push_back({gamma, refl, c});
  }

  std::vector<OpTerm> terms_;
};

// Standard generic-(q,t) operators of the polynomial representation.
namespace ops {
OperatorExpr s();                // reflection
OperatorExpr gamma(int k = 1);   // Gamma^k
OperatorExpr pi();               // pi = Gamma^{-1} s ; pi(X^n) = q^{n/2} X^{-n}
OperatorExpr piTilde();          // q^{-1/4} X pi
OperatorExpr T();
OperatorExpr Tinv();
OperatorExpr Y();                // pi T
OperatorExpr Yinv();             // T^{-1} pi
OperatorExpr L();                // Macdonald operator
OperatorExpr Pi();               // X pi
OperatorExpr xMul(int e = 1);    // multiplication by X^e
OperatorExpr build(const std::string& name);
}  // namespace ops

}  // namespace daha
