#pragma once

#include "dahakit/laurent.hpp"

namespace daha {

// Truncated power series in q,t with quarter-q / half-t exponent units,
// graded by weight w = qexp + 2*sexp (so q and t both weigh one (q,t)-degree
// = 4 units). dir=-1 grades in q^{-1},t^{-1} for the |q|>1 objects.
// Exponents may be negative as long as the weight stays >= the floor implied
// by construction; truncation keeps weight <= cut.
class TruncQT {
 public:
  using Key = std::pair<int, int>;  // (q exponent in quarters, t exponent in halves)

  TruncQT() : cut_(0), dir_(+1) {}
  TruncQT(int cut, int dir) : cut_(cut), dir_(dir) {}
  static TruncQT one(int cut, int dir = +1) {
    TruncQT s(cut, dir);
    s.add(0, 0, 1);
    return s;
  }
  static TruncQT monomial(int cut, int dir, int qe, int se, const mpq_class& c) {
    TruncQT s(cut, dir);
    s.add(qe, se, c);
    return s;
  }

  int cut() const { return cut_; }
  int dir() const { return dir_; }
  bool isZero() const { return c_.empty(); }
  const std::map<Key, mpq_class>& coef() const { return c_; }
  int weight(int qe, int se) const { return dir_ * (qe + 2 * se); }

  void add(int qe, int se, const mpq_class& v) {
    if (v == 0 || weight(qe, se) > cut_) return;
    Key k{qe, se};
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  mpq_class at(int qe, int se) const {
    auto it = c_.find({qe, se});
    return it == c_.end() ? mpq_class(0) : it->second;
  }

  friend TruncQT operator+(const TruncQT& a, const TruncQT& b) {
    TruncQT r = a;
    for (const auto& [k, v] : b.c_) r.add(k.first, k.second, v);
    return r;
  }
  friend TruncQT operator-(const TruncQT& a, const TruncQT& b) {
    TruncQT r = a;
    for (const auto& [k, v] : b.c_) r.add(k.first, k.second, -v);
    return r;
  }
  friend TruncQT operator*(const TruncQT& a, const TruncQT& b) {
    TruncQT r(std::min(a.cut_, b.cut_), a.dir_);
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }
  TruncQT scaled(const mpq_class& v) const {
    TruncQT r(cut_, dir_);
    for (const auto& [k, c] : c_) r.add(k.first, k.second, c * v);
    return r;
  }
  bool operator==(const TruncQT& o) const { return c_ == o.c_; }
  bool operator!=(const TruncQT& o) const { return !(*this == o); }
  TruncQT truncated(int cut) const {
    TruncQT r(cut, dir_);
    for (const auto& [k, c] : c_) r.add(k.first, k.second, c);
    return r;
  }

  // Multiplicative inverse; the minimal-weight part must be a single
  // monomial (true for all kernels used here).
  TruncQT inverse() const;

  // Exact expansion of a Scalar in Q,S as a truncated series.
  static TruncQT expand(const Scalar& s, int cut, int dir);

  std::string str() const;

 private:
  std::map<Key, mpq_class> c_;
  int cut_;
  int dir_;
};

// Laurent-in-X object with truncated (q,t)-series coefficients; the window
// |xexp| <= window is enforced on store.
class KernelSeries {
 public:
  KernelSeries(int window, int cut, int dir = +1) : window_(window), cut_(cut), dir_(dir) {}

  int window() const { return window_; }
  int cut() const { return cut_; }
  int dir() const { return dir_; }
  const std::map<int, TruncQT>& coef() const { return c_; }
  TruncQT at(int x) const {
    auto it = c_.find(x);
    return it == c_.end() ? TruncQT(cut_, dir_) : it->second;
  }
  void add(int x, const TruncQT& s) {
    if (std::abs(x) > window_ || s.isZero()) return;
    auto it = c_.find(x);
    if (it == c_.end()) {
      c_[x] = s;
    } else {
      it->second = it->second + s;
      if (it->second.isZero()) c_.erase(it);
    }
  }
  void addMono(int x, int qe, int se, const mpq_class& v) {
    if (std::abs(x) > window_) return;
    auto it = c_.find(x);
    if (it == c_.end()) {
      TruncQT s(cut_, dir_);
      s.add(qe, se, v);
      if (!s.isZero()) c_[x] = s;
    } else {
      it->second.add(qe, se, v);
      if (it->second.isZero()) c_.erase(it);
    }
  }
  static KernelSeries one(int window, int cut, int dir = +1) {
    KernelSeries k(window, cut, dir);
    k.add(0, TruncQT::one(cut, dir));
    return k;
  }

  // In-place multiply by (1 + c q^{qe} t^{se} X^{xe}).
  void mulBinomial(int xe, int qe, int se, const mpq_class& c);
  // In-place multiply by 1/(1 - q^{qe} t^{se} X^{xe}) via geometric series.
  void mulGeometric(int xe, int qe, int se);

  friend KernelSeries operator*(const KernelSeries& a, const KernelSeries& b) {
    KernelSeries r(std::min(a.window_, b.window_), std::min(a.cut_, b.cut_), a.dir_);
    for (const auto& [xa, sa] : a.c_)
      for (const auto& [xb, sb] : b.c_) {
        if (std::abs(xa + xb) > r.window_) continue;
        r.add(xa + xb, sa * sb);
      }
    return r;
  }
  KernelSeries scaled(const TruncQT& s) const {
    KernelSeries r(window_, cut_, dir_);
    for (const auto& [x, c] : c_) r.add(x, c * s);
    return r;
  }

  TruncQT constantTerm() const { return at(0); }

  // constant term of f * g^{(*)} * this; f,g Laurent with Scalar coeffs
  TruncQT pair(const LaurentPoly& f, const LaurentPoly& g, bool conjugateG) const;

 private:
  std::map<int, TruncQT> c_;
  int window_;
  int cut_;
  int dir_;
};

// ---- kernels of the inner products --------------------------------------

struct KernelOptions {
  int truncN;   // joint (q,t) degree; internal cut = 4*truncN
  int window;   // X-window D of the final object
};

// mu(X;q,t) as a truncated kernel (product formula), and mu_o = mu/<mu>.
KernelSeries muSeries(const KernelOptions& opt, bool normalized);
// gauss' = sum q^{m^2/4} X^m within window/cut.
KernelSeries gaussSeries(const KernelOptions& opt, int qsign = +1);
// closed form <mu> = prod (1-tq^j)^2 / ((1-t^2 q^j)(1-q^j))
TruncQT muConstantClosed(int cut);
// closed forms <gauss' mu_o> and <gauss' mu>
TruncQT gaussMuCircClosed(int cut);
TruncQT gaussMuClosed(int cut);

// ---- exact bar (t -> 0) kernels ------------------------------------------

// mu-bar_o = sum_n (-1)^n q^{n(n-1)/2} X^{2n}: exact monomial coefficients.
LaurentPoly barMuCirc(int window);
// gauss' * mu-bar: exact expansion sum_m (-1)^m [ q^{m(3m+2)/4}(X^{-3m}-X^{3m+2})
//   + q^{(3m+1)(m+1)/4}(X^{-3m-1}-X^{3m+3}) ].
LaurentPoly barGaussMu(int window);
// product route for the same object (finite polynomial factors), exact for
// q-order < jmax within the window; used as the independent cross-check.
KernelSeries barGaussMuProductRoute(int window, int cut);
// <mu-bar> = 1/prod(1-q^j) as a series
TruncQT barMuConstant(int cut);

// exact CT pairing <f g^{(*)} kernel> for an exact Laurent kernel
Scalar pairExact(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& kernel,
                 bool conjugateG);

// ---- Gauss integral closed forms -----------------------------------------

enum class GaussVariant { E_MuCirc, EStar_MuCirc, E_Mu, EStar_Mu };

// Right-hand sides of the four Gauss-integral identities, as truncated
// series: the tail products are expanded to the cut.
TruncQT gaussIntegralRHS(int m, int n, GaussVariant v, int cut);

}  // namespace daha
