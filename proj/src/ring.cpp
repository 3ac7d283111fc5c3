#include "dahakit/ring.hpp"

#include <sstream>

namespace daha {

std::string Poly::str(const std::array<const char*, kNumVars>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    }
    first = false;
    bool hasVar = t.e != Exps{0, 0, 0, 0};
    if (c != 1 || !hasVar) os << c.get_str();
    bool needStar = (c != 1);
    for (int v = 0; v < kNumVars; ++v) {
      if (t.e[v] == 0) continue;
      if (needStar) os << "*";
      needStar = true;
      os << names[v];
      if (t.e[v] != 1) os << "^" << t.e[v];
    }
  }
  return os.str();
}

std::optional<Poly> divExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::domain_error("division by zero polynomial");
  if (a.isZero()) return Poly();
  if (b.isOne()) return a;
  if (b.isMonomial()) {
    const Term& lb = b.lead();
    std::map<Exps, mpz_class, Poly::ExpsLess> acc;
    for (const auto& t : a.terms()) {
      Exps e;
      for (int i = 0; i < kNumVars; ++i) {
        e[i] = t.e[i] - lb.e[i];
        if (e[i] < 0) return std::nullopt;
      }
      mpz_class qq, rr;
      mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), t.c.get_mpz_t(), lb.c.get_mpz_t());
      if (rr != 0) return std::nullopt;
      acc[e] = qq;
    }
    return Poly::fromMap(acc);
  }
  Poly r = a;
  std::map<Exps, mpz_class, Poly::ExpsLess> qacc;
  const Term& lb = b.lead();
  while (!r.isZero()) {
    const Term& lr = r.lead();
    Exps e;
    for (int i = 0; i < kNumVars; ++i) {
      e[i] = lr.e[i] - lb.e[i];
      if (e[i] < 0) return std::nullopt;
    }
    mpz_class qq, rr;
    mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), lr.c.get_mpz_t(), lb.c.get_mpz_t());
    if (rr != 0) return std::nullopt;
    qacc[e] += qq;
    r = r - b.scaled(qq, e);
  }
  return Poly::fromMap(qacc);
}

namespace {

Poly balancedMod(const Poly& p, const mpz_class& xi) {
  mpz_class half = xi / 2;
  std::map<Exps, mpz_class, Poly::ExpsLess> acc;
  for (const auto& t : p.terms()) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), t.c.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    if (r != 0) acc[t.e] = r;
  }
  return Poly::fromMap(acc);
}

Poly primitiveSigned(const Poly& p) {
  if (p.isZero()) return p;
  mpz_class c = p.contentInt();
  if (p.lead().c < 0) c = -c;
  return p.divExactInt(c);
}

std::optional<Poly> gcdHeuristic(const Poly& a, const Poly& b, Var v) {
  mpz_class na = a.maxAbsCoeff(), nb = b.maxAbsCoeff();
  mpz_class xi = 2 * std::min(na, nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > size_t(8000)) return std::nullopt;
    Poly av = a.evalVarInt(v, xi), bv = b.evalVarInt(v, xi);
    if (!av.isZero() && !bv.isZero()) {
      Poly h = polyGcd(av, bv);
      Poly gamma, rem = h;
      int i = 0;
      bool ok = true;
      while (!rem.isZero()) {
        Poly d = balancedMod(rem, xi);
        Exps sh{0, 0, 0, 0};
        sh[v] = i;
        gamma = gamma + d.scaled(1, sh);
        rem = (rem - d).divExactInt(xi);
        if (++i > 512) {
          ok = false;
          break;
        }
      }
      if (ok && !gamma.isZero()) {
        gamma = primitiveSigned(gamma);
        if (divExact(a, gamma) && divExact(b, gamma)) return gamma;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

std::map<int, Poly> univView(const Poly& p, Var v) {
  std::map<int, std::map<Exps, mpz_class, Poly::ExpsLess>> acc;
  for (const auto& t : p.terms()) {
    Exps e = t.e;
    int d = e[v];
    e[v] = 0;
    acc[d][e] += t.c;
  }
  std::map<int, Poly> m;
  for (auto& [d, a] : acc) {
    Poly c = Poly::fromMap(a);
    if (!c.isZero()) m[d] = c;
  }
  return m;
}

Poly fromUniv(const std::map<int, Poly>& m, Var v) {
  Poly r;
  for (const auto& [d, c] : m) {
    Exps sh{0, 0, 0, 0};
    sh[v] = d;
    r = r + c.scaled(1, sh);
  }
  return r;
}

int univDeg(const std::map<int, Poly>& m) { return m.empty() ? -1 : m.rbegin()->first; }

Poly univContent(const std::map<int, Poly>& m) {
  Poly g;
  for (const auto& [d, c] : m) {
    g = polyGcd(g, c);
    if (g.isOne()) break;
  }
  return g;
}

std::map<int, Poly> pseudoRem(std::map<int, Poly> f, const std::map<int, Poly>& g, Var v) {
  int dg = univDeg(g);
  const Poly lg = g.rbegin()->second;
  while (univDeg(f) >= dg && !f.empty()) {
    int df = univDeg(f);
    Poly lf = f.rbegin()->second;
    std::map<int, Poly> nf;
    for (auto& [d, c] : f) {
      if (d == df) continue;
      nf[d] = c * lg;
    }
    for (const auto& [d, c] : g) {
      if (d == dg) continue;
      int nd = d + df - dg;
      auto it = nf.find(nd);
      if (it == nf.end()) {
        nf[nd] = -(c * lf);
      } else {
        it->second = it->second - c * lf;
      }
    }
    for (auto it = nf.begin(); it != nf.end();)
      it = it->second.isZero() ? nf.erase(it) : std::next(it);
    f = std::move(nf);
  }
  return f;
}

// Primitive PRS for primitive inputs that both use v.
Poly gcdPRS(const Poly& a, const Poly& b, Var v) {
  std::map<int, Poly> f = univView(a, v), g = univView(b, v);
  if (univDeg(f) < univDeg(g)) std::swap(f, g);
  Poly contF = univContent(f), contG = univContent(g);
  Poly cont = polyGcd(contF, contG);
  for (auto& [d, c] : f) c = *divExact(c, contF);
  for (auto& [d, c] : g) c = *divExact(c, contG);
  while (true) {
    std::map<int, Poly> r = pseudoRem(f, g, v);
    if (r.empty()) break;
    Poly cr = univContent(r);
    for (auto& [d, c] : r) c = *divExact(c, cr);
    f = std::move(g);
    g = std::move(r);
  }
  Poly res = univDeg(g) == 0 ? Poly(1) : fromUniv(g, v);
  return primitiveSigned(cont * res);
}

// gcd when exactly one argument uses v: only the v-content of that argument
// can contribute.
Poly gcdOneSided(const Poly& with, const Poly& other, Var v) {
  Poly g;
  for (const auto& [d, c] : univView(with, v)) {
    g = polyGcd(g, c);
    if (g.isOne()) break;
  }
  return polyGcd(g, other);
}

Poly gcdPrimitive(const Poly& a, const Poly& b) {
  if (a == b) return a;
  if (a.isConstant() || b.isConstant()) return Poly(1);
  if (divExact(b, a)) return a;
  if (divExact(a, b)) return b;
  Var best = VQ;
  int bestd = -1;
  for (int v = 0; v < kNumVars; ++v) {
    bool ua = a.uses(Var(v)), ub = b.uses(Var(v));
    if (!ua && !ub) continue;
    if (ua != ub) return ua ? gcdOneSided(a, b, Var(v)) : gcdOneSided(b, a, Var(v));
    int d = std::max(a.degree(Var(v)), b.degree(Var(v)));
    if (bestd < 0 || d < bestd) {
      bestd = d;
      best = Var(v);
    }
  }
  if (bestd < 0) return Poly(1);
  if (auto h = gcdHeuristic(a, b, best)) return *h;
  return gcdPRS(a, b, best);
}

}  // namespace

Poly polyGcd(const Poly& a, const Poly& b) {
  if (a.isZero()) return b.isZero() ? b : primitiveSigned(b).scaled(b.contentInt());
  if (b.isZero()) return primitiveSigned(a).scaled(a.contentInt());
  mpz_class ca = a.contentInt(), cb = b.contentInt();
  mpz_class ci;
  mpz_gcd(ci.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Exps ma = a.contentMono(), mb = b.contentMono(), mc;
  for (int i = 0; i < kNumVars; ++i) mc[i] = std::min(ma[i], mb[i]);
  Poly ap = a.divExactInt(a.lead().c < 0 ? -ca : ca).shiftDown(ma);
  Poly bp = b.divExactInt(b.lead().c < 0 ? -cb : cb).shiftDown(mb);
  Poly g = gcdPrimitive(ap, bp);
  return g.scaled(ci, mc);
}

}  // namespace daha
