#pragma once

#include "dahakit/operator.hpp"

namespace daha {

// Nonsymmetric Macdonald polynomials E_n for A_1 (generic q,t), their
// spherical normalizations, and the Rogers polynomials P_n.
//
// Generation follows the intertwiner recursion: starting at E_0 = 1,
//   E_{-n}  = t^{1/2} (T + (t^{1/2}-t^{-1/2})/(q^{2 n_#} - 1)) E_n   (n >= 1),
//   E_{n+1} = q^{n/2} X pi (E_{-n})                                  (n >= 0),
// memoized. The closed-form route is in ePolyExplicit.
class Macdonald {
 public:
  // E_n by the intertwiner recursion.
  const LaurentPoly& ePoly(int n);
  // E_n by direct summation of the closed formulas (independent oracle).
  static LaurentPoly ePolyExplicit(int n);

  // spherical E_n = E_n / E_n(t^{-1/2})
  LaurentPoly ePolySpherical(int n);

  // Rogers P_n (monic convention P_0 = 1) and spherical P_n.
  const LaurentPoly& rogers(int n);
  static LaurentPoly rogersExplicit(int n);
  LaurentPoly rogersSpherical(int n);

  // evaluation E(t^{-sign/2}); sign=+1 means the point t^{-1/2}
  static Scalar evaluatePrincipal(const LaurentPoly& p, int sign = +1);
  // closed evaluation formula t^{-|n|/2} prod_{0<j<|n~|} (1-q^j t^2)/(1-q^j t)
  static Scalar evalFormulaE(int n);
  static Scalar evalFormulaP(int n);

  // E_n^* = X^{-1} E_{1-n}; also equals t^{sgn(n)/2} T(E_n)
  LaurentPoly eStar(int n);

  // Pieri coefficients for X^{+-1} acting on spherical E_n. Both identities
  // of the paper with the sign rule (+ iff n <= 0).
  bool verifyPieri(int n, std::string* firstFailure = nullptr);
  bool dualityCheck(int m, int n);

  // Y E_n = q^{-n_#} E_n
  bool verifyYEigen(int n);
  // L P_n = (q^{n/2} t^{1/2} + q^{-n/2} t^{-1/2}) P_n
  bool verifyLEigen(int n);

  // norm values (norm formulas of the paper)
  static Scalar normEE(int n);          // <E_n E_n^* mu_o>
  static Scalar normSphericalEE(int n); // <cal E_n cal E_n^* mu_o>
  static Scalar normPP(int n);          // <P_n P_n mu_o>

 private:
  std::map<int, LaurentPoly> memo_;
  std::map<int, LaurentPoly> rogersMemo_;
};

}  // namespace daha
