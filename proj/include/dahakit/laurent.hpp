#pragma once

#include <functional>
#include <map>

#include "dahakit/scalar.hpp"

namespace daha {

// Laurent polynomial in one operator variable (X or Lambda) with Scalar
// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Scalar& c) {
    if (!c.isZero()) coef_[0] = c;
  }
  static LaurentPoly monomial(int e, const Scalar& c = Scalar(1)) {
    LaurentPoly p;
    if (!c.isZero()) p.coef_[e] = c;
    return p;
  }

  const std::map<int, Scalar>& coef() const { return coef_; }
  bool isZero() const { return coef_.empty(); }
  Scalar at(int e) const {
    auto it = coef_.find(e);
    return it == coef_.end() ? Scalar() : it->second;
  }
  void set(int e, const Scalar& c) {
    if (c.isZero())
      coef_.erase(e);
    else
      coef_[e] = c;
  }
  void add(int e, const Scalar& c) {
    if (c.isZero()) return;
    auto it = coef_.find(e);
    if (it == coef_.end()) {
      coef_[e] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) coef_.erase(it);
    }
  }
  int minExp() const { return coef_.empty() ? 0 : coef_.begin()->first; }
  int maxExp() const { return coef_.empty() ? 0 : coef_.rbegin()->first; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coef_) r.add(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coef_) r.add(e, -c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coef_) r.coef_[e] = -c;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coef_)
      for (const auto& [eb, cb] : b.coef_) r.add(ea + eb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c.isZero()) return r;
    for (const auto& [e, pc] : p.coef_) r.coef_[e] = c * pc;
    return r;
  }
  bool operator==(const LaurentPoly& o) const { return coef_ == o.coef_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // X -> X^{-1}
  LaurentPoly reflected() const {
    LaurentPoly r;
    for (const auto& [e, c] : coef_) r.coef_[-e] = c;
    return r;
  }
  // X -> c * X for a Laurent-monomial scalar c
  LaurentPoly scaledVar(const Scalar& c) const {
    LaurentPoly r;
    for (const auto& [e, cc] : coef_) r.set(e, cc * c.pow(e));
    return r;
  }
  // coefficient conjugation a -> a*, X -> X^{-1}
  LaurentPoly starred() const {
    LaurentPoly r;
    for (const auto& [e, c] : coef_) r.coef_[-e] = c.star();
    return r;
  }
  LaurentPoly mapCoeffs(const std::function<Scalar(const Scalar&)>& f) const {
    LaurentPoly r;
    for (const auto& [e, c] : coef_) r.set(e, f(c));
    return r;
  }
  // substitute the variable by a monomial scalar (full evaluation)
  Scalar evalAt(const Scalar& point) const {
    Scalar acc;
    for (const auto& [e, c] : coef_) acc += c * point.pow(e);
    return acc;
  }
  Scalar constantTerm() const { return at(0); }

  // as a single Frac in the X variable slot
  Frac toFrac() const {
    Frac acc;
    for (const auto& [e, c] : coef_) acc += c * Frac::x(e);
    return acc;
  }
  // exact conversion from a Frac whose denominator is (scalar) x monomial in X
  static LaurentPoly fromFrac(const Frac& f);

  std::string str() const;

 private:
  std::map<int, Scalar> coef_;
};

// Scalar-coefficient data in two variables (x-exp, lambda-exp) -> Scalar.
class BiLaurent {
 public:
  using Key = std::pair<int, int>;
  BiLaurent() = default;

  const std::map<Key, Scalar>& coef() const { return coef_; }
  bool isZero() const { return coef_.empty(); }
  Scalar at(int xe, int le) const {
    auto it = coef_.find({xe, le});
    return it == coef_.end() ? Scalar() : it->second;
  }
  void add(int xe, int le, const Scalar& c) {
    if (c.isZero()) return;
    Key k{xe, le};
    auto it = coef_.find(k);
    if (it == coef_.end()) {
      coef_[k] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) coef_.erase(it);
    }
  }
  // product of an X-side and a Lambda-side Laurent polynomial
  static BiLaurent product(const LaurentPoly& fx, const LaurentPoly& fl) {
    BiLaurent r;
    for (const auto& [ex, cx] : fx.coef())
      for (const auto& [el, cl] : fl.coef()) r.add(ex, el, cx * cl);
    return r;
  }
  friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [k, c] : b.coef_) r.add(k.first, k.second, c);
    return r;
  }
  friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [k, c] : b.coef_) r.add(k.first, k.second, -c);
    return r;
  }
  bool operator==(const BiLaurent& o) const { return coef_ == o.coef_; }

 private:
  std::map<Key, Scalar> coef_;
};

}  // namespace daha
