#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace daha {

// Generators of the coefficient world. Q = q^{1/4}, S = t^{1/2}; U is the
// free module parameter u; X is the operator variable (X or Lambda,
// depending on context). Scalars use Q,S,U only; operator coefficients may
// use all four.
enum Var : int { VQ = 0, VS = 1, VU = 2, VX = 3 };
inline constexpr int kNumVars = 4;

using Exps = std::array<int32_t, kNumVars>;

inline int lexCompare(const Exps& a, const Exps& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct Term {
  Exps e;
  mpz_class c;
};

// Sparse multivariate polynomial over Z with nonnegative exponents,
// terms sorted in decreasing lex order (Q > S > U > X).
class Poly {
 public:
  Poly() = default;
  explicit Poly(long v) {
    if (v != 0) terms_.push_back({Exps{0, 0, 0, 0}, mpz_class(v)});
  }
  explicit Poly(const mpz_class& v) {
    if (v != 0) terms_.push_back({Exps{0, 0, 0, 0}, v});
  }
  static Poly monomial(const mpz_class& c, const Exps& e) {
    Poly p;
    if (c != 0) p.terms_.push_back({e, c});
    return p;
  }
  static Poly variable(Var v, int exp = 1) {
    Exps e{0, 0, 0, 0};
    e[v] = exp;
    return monomial(1, e);
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const {
    return terms_.size() == 1 && terms_[0].c == 1 && terms_[0].e == Exps{0, 0, 0, 0};
  }
  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exps{0, 0, 0, 0});
  }
  bool isMonomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }

  // Leading (lex-max) term.
  const Term& lead() const { return terms_.front(); }

  int degree(Var v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, int(t.e[v]));
    return d;
  }
  int minDegree(Var v) const {
    if (terms_.empty()) return 0;
    int d = terms_[0].e[v];
    for (const auto& t : terms_) d = std::min(d, int(t.e[v]));
    return d;
  }
  bool uses(Var v) const {
    for (const auto& t : terms_)
      if (t.e[v] != 0) return true;
    return false;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, -1); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    if (b.isMonomial()) return a.scaled(b.terms_[0].c, b.terms_[0].e);
    if (a.isMonomial()) return b.scaled(a.terms_[0].c, a.terms_[0].e);
    std::map<Exps, mpz_class, ExpsLess> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Exps e;
        for (int i = 0; i < kNumVars; ++i) e[i] = ta.e[i] + tb.e[i];
        acc[e] += ta.c * tb.c;
      }
    return fromMap(acc);
  }

  Poly scaled(const mpz_class& c, const Exps& shift) const {
    Poly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exps e;
      for (int i = 0; i < kNumVars; ++i) e[i] = t.e[i] + shift[i];
      r.terms_.push_back({e, t.c * c});
    }
    return r;
  }
  Poly scaled(const mpz_class& c) const { return scaled(c, Exps{0, 0, 0, 0}); }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  mpz_class contentInt() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }
  Exps contentMono() const {
    Exps m{0, 0, 0, 0};
    if (terms_.empty()) return m;
    m = terms_[0].e;
    for (const auto& t : terms_)
      for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], t.e[i]);
    return m;
  }
  Poly divExactInt(const mpz_class& d) const {
    Poly r = *this;
    for (auto& t : r.terms_) {
      mpz_class q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
      assert(rem == 0);
      t.c = q;
    }
    return r;
  }
  Poly shiftDown(const Exps& m) const {
    Poly r = *this;
    for (auto& t : r.terms_)
      for (int i = 0; i < kNumVars; ++i) {
        t.e[i] -= m[i];
        assert(t.e[i] >= 0);
      }
    return r;
  }

  // Substitute an integer for one variable.
  Poly evalVarInt(Var v, const mpz_class& x) const {
    std::map<Exps, mpz_class, ExpsLess> acc;
    std::map<int, mpz_class> powers;
    for (const auto& t : terms_) {
      int e = t.e[v];
      auto it = powers.find(e);
      if (it == powers.end()) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), e);
        it = powers.emplace(e, p).first;
      }
      Exps en = t.e;
      en[v] = 0;
      acc[en] += t.c * it->second;
    }
    return fromMap(acc);
  }

  // Substitute var -> c * var (integer scale of every exponent's coefficient
  // would live in Frac; here: e |-> multiply coefficient by c^e).
  Poly evalVarZero(Var v) const {
    Poly r;
    for (const auto& t : terms_)
      if (t.e[v] == 0) r.terms_.push_back(t);
    return r;
  }

  mpz_class maxAbsCoeff() const {
    mpz_class m = 0;
    for (const auto& t : terms_) {
      mpz_class a = abs(t.c);
      if (a > m) m = a;
    }
    return m;
  }

  std::string str(const std::array<const char*, kNumVars>& names = {"Q", "S", "u", "X"}) const;

  struct ExpsLess {
    bool operator()(const Exps& a, const Exps& b) const { return lexCompare(a, b) > 0; }
  };
  static Poly fromMap(const std::map<Exps, mpz_class, ExpsLess>& m) {
    Poly r;
    r.terms_.reserve(m.size());
    for (const auto& [e, c] : m)
      if (c != 0) r.terms_.push_back({e, c});
    return r;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, int sign) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = lexCompare(a.terms_[i].e, b.terms_[j].e);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(b.terms_[j]);
        if (sign < 0) r.terms_.back().c = -r.terms_.back().c;
        ++j;
      } else {
        mpz_class c;
        if (sign > 0)
          c = a.terms_[i].c + b.terms_[j].c;
        else
          c = a.terms_[i].c - b.terms_[j].c;
        if (c != 0) r.terms_.push_back({a.terms_[i].e, c});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      r.terms_.push_back(b.terms_[j]);
      if (sign < 0) r.terms_.back().c = -r.terms_.back().c;
    }
    return r;
  }

  std::vector<Term> terms_;
};

// Exact division; returns nullopt if b does not divide a.
std::optional<Poly> divExact(const Poly& a, const Poly& b);

// Multivariate gcd over Z, sign-normalized so the lex-leading coefficient is
// positive. Heuristic (integer evaluation + reconstruction) with a primitive
// PRS fallback.
Poly polyGcd(const Poly& a, const Poly& b);

}  // namespace daha
