#include "dahakit/macdonald.hpp"

#include <sstream>

namespace daha {

namespace {
Scalar one() { return Scalar(1); }
Scalar qpow(int n) { return Scalar::q(4 * n); }  // q^n
Scalar tq(int j) { return Scalar::t(2) * qpow(j); }
}  // namespace

const LaurentPoly& Macdonald::ePoly(int n) {
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  if (n == 0) return memo_[0] = LaurentPoly(Scalar(1));
  if (n > 0) {
    // E_{n} = q^{(n-1)/2} X pi (E_{1-n})
    const LaurentPoly& prev = ePoly(1 - n);
    LaurentPoly img = ops::Pi().apply(prev);
    return memo_[n] = Scalar::q(2 * (n - 1)) * img;
  }
  // n < 0: affine step from E_{-n}
  const LaurentPoly& prev = ePoly(-n);
  Scalar c = (Scalar::t(1) - Scalar::t(-1)) / (eigenMonomial(-n).pow(2) - one());
  LaurentPoly img = ops::T().apply(prev) + c * prev;
  return memo_[n] = Scalar::t(1) * img;
}

LaurentPoly Macdonald::ePolyExplicit(int n) {
  LaurentPoly r;
  if (n == 0) return LaurentPoly(one());
  if (n < 0) {
    int m = -n;
    r.add(-m, one());
    r.add(m, (one() - Scalar::t(2)) / (one() - tq(m)));
    for (int j = 1; j <= m / 2; ++j) {
      Scalar pr(1);
      for (int i = 0; i < j; ++i)
        pr *= (one() - qpow(m - i)) / (one() - qpow(1 + i)) * (one() - tq(i)) / (one() - tq(m - i));
      r.add(2 * j - m, pr);
    }
    for (int j = 1; j <= (m - 1) / 2; ++j) {
      Scalar pr = (one() - tq(j)) / (one() - tq(m - j));
      for (int i = 0; i < j; ++i)
        pr *= (one() - qpow(m - i)) / (one() - qpow(1 + i)) * (one() - tq(i)) / (one() - tq(m - i));
      r.add(m - 2 * j, pr);
    }
    return r;
  }
  r.add(n, one());
  for (int j = 1; j <= n / 2; ++j) {
    Scalar pr = qpow(n - j) * (one() - qpow(j)) / (one() - qpow(n - j));
    for (int i = 0; i < j; ++i)
      pr *= (one() - qpow(n - i - 1)) / (one() - qpow(1 + i)) * (one() - tq(i)) / (one() - tq(n - i - 1));
    r.add(2 * j - n, pr);
  }
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    Scalar pr = qpow(j);
    for (int i = 0; i < j; ++i)
      pr *= (one() - qpow(n - i - 1)) / (one() - qpow(1 + i)) * (one() - tq(i)) / (one() - tq(n - i - 1));
    r.add(n - 2 * j, pr);
  }
  return r;
}

LaurentPoly Macdonald::ePolySpherical(int n) {
  const LaurentPoly& e = ePoly(n);
  return evaluatePrincipal(e).inv() * e;
}

const LaurentPoly& Macdonald::rogers(int n) {
  auto it = rogersMemo_.find(n);
  if (it != rogersMemo_.end()) return it->second;
  if (n == 0) return rogersMemo_[0] = LaurentPoly(one());
  const LaurentPoly& e = ePoly(n);
  LaurentPoly p = e + Scalar::t(1) * ops::T().apply(e);
  return rogersMemo_[n] = p;
}

LaurentPoly Macdonald::rogersExplicit(int n) {
  if (n == 0) return LaurentPoly(one());
  LaurentPoly r;
  r.add(n, one());
  r.add(-n, one());
  for (int j = 1; j <= n / 2; ++j) {
    Scalar pr(1);
    for (int i = 0; i < j; ++i)
      pr *= (one() - qpow(n - i)) / (one() - qpow(1 + i)) * (one() - tq(i)) / (one() - tq(n - i - 1));
    if (n - 2 * j == 0) {
      r.add(0, pr);
    } else {
      r.add(n - 2 * j, pr);
      r.add(2 * j - n, pr);
    }
  }
  return r;
}

LaurentPoly Macdonald::rogersSpherical(int n) {
  const LaurentPoly& p = rogers(n);
  return evaluatePrincipal(p, -1).inv() * p;  // divide by P_n(t^{1/2})
}

Scalar Macdonald::evaluatePrincipal(const LaurentPoly& p, int sign) {
  return p.evalAt(Scalar::t(-sign));
}

Scalar Macdonald::evalFormulaE(int n) {
  Scalar r = Scalar::t(-std::abs(n));
  for (int j = 1; j < tildeAbs(n); ++j)
    r *= (one() - qpow(j) * Scalar::t(4)) / (one() - qpow(j) * Scalar::t(2));
  return r;
}

Scalar Macdonald::evalFormulaP(int n) {
  Scalar r = Scalar::t(-n);
  for (int j = 0; j <= n - 1; ++j)
    r *= (one() - qpow(j) * Scalar::t(4)) / (one() - qpow(j) * Scalar::t(2));
  return r;
}

LaurentPoly Macdonald::eStar(int n) {
  return LaurentPoly::monomial(-1) * ePoly(1 - n);
}

bool Macdonald::verifyYEigen(int n) {
  const LaurentPoly& e = ePoly(n);
  return ops::Y().apply(e) == eigenMonomial(n).inv() * e;
}

bool Macdonald::verifyLEigen(int n) {
  const LaurentPoly& p = rogers(n);
  Scalar ev = Scalar::q(2 * n) * Scalar::t(1) + Scalar::q(-2 * n) * Scalar::t(-1);
  return ops::L().apply(p) == ev * p;
}

bool Macdonald::verifyPieri(int n, std::string* firstFailure) {
  int pm = n <= 0 ? 1 : -1;
  Scalar tpm = Scalar::t(2 * pm);
  LaurentPoly X1 = LaurentPoly::monomial(1);
  LaurentPoly Xm1 = LaurentPoly::monomial(-1);
  LaurentPoly en = ePolySpherical(n);

  // X E_n = a E_{n+1} + b E_{1-n}
  {
    Scalar den = tpm * qpow(-n) - one();
    Scalar a = (Scalar::t(-1) * tpm * qpow(-n) - Scalar::t(1)) / den;
    Scalar b = (Scalar::t(1) - Scalar::t(-1)) / den;
    LaurentPoly lhs = X1 * en;
    LaurentPoly rhs = a * ePolySpherical(n + 1) + b * ePolySpherical(1 - n);
    if (lhs != rhs) {
      if (firstFailure) {
        LaurentPoly d = lhs - rhs;
        std::ostringstream os;
        os << "pierie n=" << n << " first bad coeff at X^" << d.coef().begin()->first << ": "
           << d.coef().begin()->second.str();
        *firstFailure = os.str();
      }
      return false;
    }
  }
  // X^{-1} E_n = a' E_{n-1} - b' E_{1-n}
  {
    Scalar den = tpm * qpow(1 - n) - one();
    Scalar a = (Scalar::t(1) * tpm * qpow(1 - n) - Scalar::t(-1)) / den;
    Scalar b = (Scalar::t(1) - Scalar::t(-1)) / den;
    LaurentPoly lhs = Xm1 * en;
    LaurentPoly rhs = a * ePolySpherical(n - 1) - b * ePolySpherical(1 - n);
    if (lhs != rhs) {
      if (firstFailure) {
        LaurentPoly d = lhs - rhs;
        std::ostringstream os;
        os << "pierie1 n=" << n << " first bad coeff at X^" << d.coef().begin()->first << ": "
           << d.coef().begin()->second.str();
        *firstFailure = os.str();
      }
      return false;
    }
  }
  return true;
}

bool Macdonald::dualityCheck(int m, int n) {
  Scalar lhs = ePolySpherical(m).evalAt(eigenMonomial(n));
  Scalar rhs = ePolySpherical(n).evalAt(eigenMonomial(m));
  return lhs == rhs;
}

Scalar Macdonald::normEE(int n) {
  Scalar r(1);
  for (int j = 1; j < tildeAbs(n); ++j) {
    Scalar a = one() - qpow(j);
    Scalar b = one() - qpow(j) * Scalar::t(4);
    Scalar c = one() - qpow(j) * Scalar::t(2);
    r *= a * b / (c * c);
  }
  return r;
}

Scalar Macdonald::normSphericalEE(int n) {
  Scalar r(1);
  for (int j = 1; j < tildeAbs(n); ++j)
    r *= (one() - qpow(j)) / (Scalar::t(-2) - qpow(j) * Scalar::t(2));
  return r;
}

Scalar Macdonald::normPP(int n) {
  Scalar r(1);
  for (int j = 0; j <= n - 1; ++j)
    r *= (one() - qpow(j + 1)) * (one() - Scalar::t(4) * qpow(j)) /
         ((one() - tq(j + 1)) * (one() - tq(j)));
  return r;
}

}  // namespace daha
