#pragma once

#include "dahakit/macdonald.hpp"
#include "dahakit/report.hpp"
#include "dahakit/series.hpp"

namespace daha {

// Bar (t -> 0) and dag (t -> infinity) degenerations: operators, q-Hermite
// polynomials, relation suites, connection maps and the Shapovalov trace.
namespace nil {

// ---- operators in the bar / dag polynomial representations ----------------
OperatorExpr Tbar();     // 1/(1-X^2) (s - 1)
OperatorExpr Tbar1();    // Tbar + 1
OperatorExpr Ybar();     // pi Tbar
OperatorExpr Ybar1();    // Tbar1 pi
OperatorExpr Lbar();     // Ybar + Ybar1
OperatorExpr Xt();       // q^{1/4} Ybar X
OperatorExpr Xt1();      // q^{-1/4} X^{-1} Ybar1
OperatorExpr Tdag();     // s + 1/(X^2-1) (s - 1)
OperatorExpr Tdag1();    // Tdag - 1
OperatorExpr Ydag();     // pi Tdag
OperatorExpr Ydag1();    // Tdag1 pi

// Limit of an operator with coefficients rescaled by t^{half/2}.
OperatorExpr reLimit(const OperatorExpr& op, int tHalfPower, bool toInfinity);

// ---- q-Hermite polynomials -------------------------------------------------
enum class Regime { Bar, Dag };
const LaurentPoly& qHermite(int n, Regime r);
// bar-Rogers: P-bar_n = E-bar_{-n} (n >= 0)
inline const LaurentPoly& barRogers(int n) { return qHermite(-n, Regime::Bar); }

// ---- suites ----------------------------------------------------------------
Report relationSuite();                    // all presentations in their reps
Report barPieriEigenSuite(int maxN);       // bar-Pieri + Ybar tables + Lbar eigen
Report conjugationSuite(int maxN);         // eta/beta/nu/star/chi compatibility
Report grLeadingOrderSuite();              // nil-Weyl and core-Weyl leading terms

// PBW linear independence at order <= maxOrder, exact rank at rational q.
enum class Presentation { TildePiY, TildePiXt, Core };
Report pbwIndependence(Presentation p, int maxOrder);

// ---- pairings ---------------------------------------------------------------
// ((E-bar_m, E-dag_n))_o against mu-bar_o; dag order uses q -> q^{-1}.
Scalar dagPairing(int m, int n, bool dagOrder = false);
Scalar dagPairingClosed(int m, int n, bool dagOrder = false);

// ---- Shapovalov trace -------------------------------------------------------
// trace of X^n from the defining recursion
Scalar shapTraceX(int n);

// letters of core-algebra words
enum class Gen { T, T1, Y, Y1, Xt, Xt1, Pi, PiTilde };
// trace of a word (psi-prime normalization, the one adjusted to the
// polynomial representation); throws on unsupported word shapes
Scalar shapTraceWord(const std::vector<Gen>& word);
// reversed-order trace (backprime), adjusted to the Y-induced module
Scalar shapTraceWordBackprime(const std::vector<Gen>& word);

// <f,g>'_alg = sum f_a g_b <X^{a+b}> (algebraic route)
Scalar shapFormAlg(const LaurentPoly& f, const LaurentPoly& g);
// full form check against the gauss'*mu-bar constant term route
Report shapovalovSuite(int window);

}  // namespace nil
}  // namespace daha
