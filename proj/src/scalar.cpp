#include "dahakit/scalar.hpp"

#include <ostream>
#include <sstream>

namespace daha {

namespace {

// p with v -> c*v: multiply each term by c^{e_v}; returns a Frac since c may
// be a Laurent monomial.
Frac scaleVar(const Poly& p, Var v, const Frac& c) {
  Frac acc;
  // group by exponent of v to reuse powers
  std::map<int, Poly> groups;
  {
    std::map<int, std::map<Exps, mpz_class, Poly::ExpsLess>> g;
    for (const auto& t : p.terms()) g[t.e[v]][t.e] += t.c;
    for (auto& [d, m] : g) groups[d] = Poly::fromMap(m);
  }
  for (const auto& [d, part] : groups) acc += Frac(part) * c.pow(d);
  return acc;
}

Frac substMono(const Poly& p, Var v, const Frac& c) {
  Frac acc;
  std::map<int, Poly> groups;
  {
    std::map<int, std::map<Exps, mpz_class, Poly::ExpsLess>> g;
    for (const auto& t : p.terms()) {
      Exps e = t.e;
      int d = e[v];
      e[v] = 0;
      g[d][e] += t.c;
    }
    for (auto& [d, m] : g) groups[d] = Poly::fromMap(m);
  }
  for (const auto& [d, part] : groups) acc += Frac(part) * c.pow(d);
  return acc;
}

}  // namespace

Frac Frac::substScale(Var v, const Frac& c) const {
  return scaleVar(num_, v, c) / scaleVar(den_, v, c);
}

Frac Frac::substVarMono(Var v, const Frac& c) const {
  return substMono(num_, v, c) / substMono(den_, v, c);
}

Frac Frac::limitT0() const {
  // drop the common S-power first (canonical form has no common S factor,
  // but be safe for callers composing raw polys)
  int ms = std::min(num_.minDegree(VS), den_.minDegree(VS));
  Poly n = num_, d = den_;
  if (ms > 0) {
    Exps sh{0, 0, 0, 0};
    sh[VS] = ms;
    n = n.shiftDown(sh);
    d = d.shiftDown(sh);
  }
  Poly d0 = d.evalVarZero(VS);
  if (d0.isZero()) throw PoleAtLimit("pole at t->0");
  return Frac(n.evalVarZero(VS), d0);
}

mpq_class Frac::evalQS(const mpq_class& q0, const mpq_class& s0) const {
  if (usesVar(VU) || usesVar(VX)) throw std::domain_error("evalQS: non-scalar value");
  auto evalPoly = [&](const Poly& p) {
    mpq_class acc = 0;
    for (const auto& t : p.terms()) {
      mpq_class m = t.c;
      mpz_class num, den;
      // q0^eq * s0^es
      mpq_class qp;
      mpz_pow_ui(qp.get_num_mpz_t(), q0.get_num().get_mpz_t(), t.e[VQ]);
      mpz_pow_ui(qp.get_den_mpz_t(), q0.get_den().get_mpz_t(), t.e[VQ]);
      qp.canonicalize();
      mpq_class sp;
      mpz_pow_ui(sp.get_num_mpz_t(), s0.get_num().get_mpz_t(), t.e[VS]);
      mpz_pow_ui(sp.get_den_mpz_t(), s0.get_den().get_mpz_t(), t.e[VS]);
      sp.canonicalize();
      acc += m * qp * sp;
    }
    return acc;
  };
  mpq_class d = evalPoly(den_);
  if (d == 0) throw DivisionByZero("denominator vanishes at sample point");
  return mpq_class(evalPoly(num_) / d);
}

Frac Frac::evalVar(Var v, const mpq_class& x0) const {
  auto evalPoly = [&](const Poly& p) -> std::pair<Poly, int> {
    int deg = p.degree(v);
    // p(v=a/b) * b^deg stays integral
    std::map<Exps, mpz_class, Poly::ExpsLess> acc;
    for (const auto& t : p.terms()) {
      mpz_class an, bd;
      mpz_pow_ui(an.get_mpz_t(), x0.get_num().get_mpz_t(), t.e[v]);
      mpz_pow_ui(bd.get_mpz_t(), x0.get_den().get_mpz_t(), deg - t.e[v]);
      Exps e = t.e;
      e[v] = 0;
      acc[e] += t.c * an * bd;
    }
    return {Poly::fromMap(acc), deg};
  };
  auto [n, dn] = evalPoly(num_);
  auto [d, dd] = evalPoly(den_);
  // reconcile the b^deg scales
  mpz_class bn, bdz;
  mpz_pow_ui(bn.get_mpz_t(), x0.get_den().get_mpz_t(), dd);
  mpz_pow_ui(bdz.get_mpz_t(), x0.get_den().get_mpz_t(), dn);
  return Frac(n.scaled(bn), d.scaled(bdz));
}

std::string Frac::str() const {
  std::ostringstream os;
  os << num_.str();
  if (!den_.isOne()) {
    bool wrapNum = num_.size() > 1;
    std::string n = os.str();
    os.str("");
    if (wrapNum)
      os << "(" << n << ")";
    else
      os << n;
    os << "/";
    if (den_.size() > 1)
      os << "(" << den_.str() << ")";
    else
      os << den_.str();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Frac& f) { return os << f.str(); }

}  // namespace daha
