#include "dahakit/operator.hpp"

#include <sstream>

namespace daha {

LaurentPoly LaurentPoly::fromFrac(const Frac& f) {
  if (f.isZero()) return LaurentPoly();
  const Poly& d = f.den();
  // denominator must be free of X up to a monomial
  Poly dx;  // X-part stripped
  int xshift = d.minDegree(VX);
  if (d.degree(VX) != xshift) throw NonPolynomialResult("operator result is not Laurent: " + f.str());
  // split numerator by X-exponent; scalar denominator = d with X removed
  Exps sh{0, 0, 0, 0};
  sh[VX] = xshift;
  Poly dscalar = d.shiftDown(sh);
  LaurentPoly out;
  std::map<int, std::map<Exps, mpz_class, Poly::ExpsLess>> groups;
  for (const auto& t : f.num().terms()) {
    Exps e = t.e;
    int xe = e[VX];
    e[VX] = 0;
    groups[xe][e] += t.c;
  }
  for (auto& [xe, m] : groups) out.set(xe - xshift, Frac(Poly::fromMap(m), dscalar));
  return out;
}

std::string LaurentPoly::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e != 0) os << "*X^" << e;
  }
  return os.str();
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << t.coeff.str() << "]";
    if (t.gamma != 0) os << " G^" << t.gamma;
    if (t.refl) os << " s";
  }
  return os.str();
}

namespace ops {

OperatorExpr s() { return OperatorExpr::reflection(); }
OperatorExpr gamma(int k) { return OperatorExpr::shift(k); }

OperatorExpr pi() { return OperatorExpr::term(Frac(1), -1, 1); }

OperatorExpr piTilde() {
  // q^{-1/4} X pi = q^{1/4} pi X^{-1}
  return OperatorExpr::term(Frac::q(-1) * Frac::x(1), -1, 1);
}

OperatorExpr T() {
  // t^{1/2} s + (t^{1/2}-t^{-1/2})/(X^2-1) (s - 1)
  Frac c = (Frac::t(1) - Frac::t(-1)) / (Frac::x(2) - Frac(1));
  return OperatorExpr::term(Frac::t(1) + c, 0, 1) - OperatorExpr::mul(c);
}

OperatorExpr Tinv() {
  // T^{-1} = T - (t^{1/2} - t^{-1/2})
  return T() - OperatorExpr::mul(Frac::t(1) - Frac::t(-1));
}

OperatorExpr Y() { return pi() * T(); }
OperatorExpr Yinv() { return Tinv() * pi(); }

OperatorExpr L() {
  Frac a = (Frac::t(1) * Frac::x(1) - Frac::t(-1) * Frac::x(-1)) / (Frac::x(1) - Frac::x(-1));
  return OperatorExpr::term(a, 1, 0) + OperatorExpr::term(a.invertVars({VX}), -1, 0);
}

OperatorExpr Pi() { return xMul(1) * pi(); }

OperatorExpr xMul(int e) { return OperatorExpr::mul(Frac::x(e)); }

OperatorExpr build(const std::string& name) {
  if (name == "T") return T();
  if (name == "Tinv") return Tinv();
  if (name == "pi") return pi();
  if (name == "pitilde") return piTilde();
  if (name == "Y") return Y();
  if (name == "Yinv") return Yinv();
  if (name == "L") return L();
  if (name == "Gamma") return gamma(1);
  if (name == "Gammainv") return gamma(-1);
  if (name == "omega") return gamma(-1);
  if (name == "Pi") return Pi();
  if (name == "s") return s();
  if (name == "X") return xMul(1);
  if (name == "Xinv") return xMul(-1);
  throw std::invalid_argument("unknown operator name: " + name);
}

}  // namespace ops
}  // namespace daha
