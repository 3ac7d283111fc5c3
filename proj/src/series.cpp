#include "dahakit/series.hpp"

#include <sstream>

#include "dahakit/macdonald.hpp"

namespace daha {

TruncQT TruncQT::inverse() const {
  if (c_.empty()) throw DivisionByZero("inverse of zero series");
  auto best = c_.begin();
  int bw = weight(best->first.first, best->first.second);
  int count = 1;
  for (auto it = std::next(c_.begin()); it != c_.end(); ++it) {
    int w = weight(it->first.first, it->first.second);
    if (w < bw) {
      bw = w;
      best = it;
      count = 1;
    } else if (w == bw) {
      ++count;
    }
  }
  if (count != 1) throw std::domain_error("series inverse: non-monomial lowest weight part");
  const int q0 = best->first.first, s0 = best->first.second;
  const mpq_class c0 = best->second;
  // this = c0 q^{q0} t^{s0} (1 + r), r of strictly positive relative weight
  TruncQT r(cut_, dir_);
  for (const auto& [k, v] : c_) {
    if (k == best->first) continue;
    r.add(k.first - q0, k.second - s0, v / c0);
  }
  TruncQT inv = TruncQT::one(cut_, dir_);
  TruncQT pw = TruncQT::one(cut_, dir_);
  for (int i = 1; i <= cut_ + 1 && !pw.isZero(); ++i) {
    pw = pw * r;
    for (const auto& [k, v] : pw.coef()) inv.add(k.first, k.second, (i % 2) ? -v : v);
  }
  TruncQT out(cut_, dir_);
  for (const auto& [k, v] : inv.coef()) out.add(k.first - q0, k.second - s0, v / c0);
  return out;
}

TruncQT TruncQT::expand(const Scalar& s, int cut, int dir) {
  auto polySeries = [&](const Poly& p) {
    TruncQT r(cut, dir);
    for (const auto& t : p.terms()) {
      if (t.e[VU] || t.e[VX]) throw std::domain_error("expand: non-scalar value");
      r.add(t.e[VQ], t.e[VS], mpq_class(t.c));
    }
    return r;
  };
  return polySeries(s.num()) * polySeries(s.den()).inverse();
}

std::string TruncQT::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v.get_str() << "*Q^" << k.first << "S^" << k.second;
  }
  return first ? "0" : os.str();
}

void KernelSeries::mulBinomial(int xe, int qe, int se, const mpq_class& c) {
  std::map<int, TruncQT> shiftedParts;
  for (const auto& [x, s] : c_) {
    if (std::abs(x + xe) > window_) continue;
    TruncQT shifted(cut_, dir_);
    for (const auto& [k, v] : s.coef()) shifted.add(k.first + qe, k.second + se, v * c);
    if (!shifted.isZero()) shiftedParts[x + xe] = shifted;
  }
  for (const auto& [x, s] : shiftedParts) this->add(x, s);
}

void KernelSeries::mulGeometric(int xe, int qe, int se) {
  if (dir_ * (qe + 2 * se) <= 0) throw std::domain_error("geometric factor needs positive weight");
  auto step = [&](int x) {
    auto prev = c_.find(x - xe);
    if (prev == c_.end()) return;
    TruncQT shifted(cut_, dir_);
    for (const auto& [k, v] : prev->second.coef()) shifted.add(k.first + qe, k.second + se, v);
    if (!shifted.isZero()) add(x, shifted);
  };
  if (xe > 0) {
    for (int x = -window_ + xe; x <= window_; ++x) step(x);
  } else {
    for (int x = window_ + xe; x >= -window_; --x) step(x);
  }
}

TruncQT KernelSeries::pair(const LaurentPoly& f, const LaurentPoly& g, bool conjugateG) const {
  LaurentPoly gg = conjugateG ? g.starred() : g;
  int span = std::max(std::abs(f.minExp() + gg.minExp()), std::abs(f.maxExp() + gg.maxExp()));
  if (span > window_) throw std::domain_error("pair: kernel window too small for deg f + deg g");
  TruncQT acc(cut_, dir_);
  for (const auto& [a, ca] : f.coef())
    for (const auto& [b, cb] : gg.coef()) {
      auto it = c_.find(-a - b);
      if (it == c_.end()) continue;
      acc = acc + it->second * TruncQT::expand(ca * cb, cut_, dir_);
    }
  return acc;
}

KernelSeries muSeries(const KernelOptions& opt, bool normalized) {
  const int cut = 4 * opt.truncN;
  // internal window: an X-excursion beyond it costs more than the cut to
  // fold back (each X^{+-2} step besides the single (1 - X^2) factor
  // carries at least one unit of q or t)
  const int W = opt.window + 2 * opt.truncN + 4;
  KernelSeries k = KernelSeries::one(W, cut);
  for (int j = 0; 4 * j <= cut; ++j) k.mulBinomial(2, 4 * j, 0, -1);
  for (int j = 0; 4 * (j + 1) <= cut; ++j) k.mulBinomial(-2, 4 * (j + 1), 0, -1);
  for (int j = 0; 4 * j + 2 <= cut; ++j) k.mulGeometric(2, 4 * j, 2);
  for (int j = 0; 4 * (j + 1) + 2 <= cut; ++j) k.mulGeometric(-2, 4 * (j + 1), 2);
  KernelSeries out(opt.window, cut);
  if (normalized) {
    TruncQT ctInv = k.constantTerm().inverse();
    for (const auto& [x, s] : k.coef())
      if (std::abs(x) <= opt.window) out.add(x, s * ctInv);
  } else {
    for (const auto& [x, s] : k.coef())
      if (std::abs(x) <= opt.window) out.add(x, s);
  }
  return out;
}

KernelSeries gaussSeries(const KernelOptions& opt, int qsign) {
  const int cut = 4 * opt.truncN;
  KernelSeries k(opt.window, cut, qsign);
  for (int m = -opt.window; m <= opt.window; ++m) k.addMono(m, qsign * m * m, 0, 1);
  return k;
}

TruncQT muConstantClosed(int cut) {
  TruncQT r = TruncQT::one(cut);
  for (int j = 1; 4 * j <= cut; ++j) {
    TruncQT f1(cut, +1), f2(cut, +1), f3(cut, +1);
    f1.add(0, 0, 1);
    f1.add(4 * j, 2, -1);
    f2.add(0, 0, 1);
    f2.add(4 * j, 4, -1);
    f3.add(0, 0, 1);
    f3.add(4 * j, 0, -1);
    r = r * f1 * f1 * f2.inverse() * f3.inverse();
  }
  return r;
}

TruncQT gaussMuCircClosed(int cut) {
  TruncQT r = TruncQT::one(cut);
  for (int j = 1; 4 * j <= cut; ++j) {
    TruncQT f1(cut, +1), f2(cut, +1);
    f1.add(0, 0, 1);
    f1.add(4 * j, 0, -1);
    f2.add(0, 0, 1);
    f2.add(4 * j, 2, -1);
    r = r * f1 * f2.inverse();
  }
  return r;
}

TruncQT gaussMuClosed(int cut) {
  TruncQT r = TruncQT::one(cut);
  for (int j = 1; 4 * j <= cut; ++j) {
    TruncQT f1(cut, +1), f2(cut, +1);
    f1.add(0, 0, 1);
    f1.add(4 * j, 2, -1);
    f2.add(0, 0, 1);
    f2.add(4 * j, 4, -1);
    r = r * f1 * f2.inverse();
  }
  return r;
}

LaurentPoly barMuCirc(int window) {
  LaurentPoly r;
  for (int n = -window / 2; n <= window / 2; ++n) {
    Scalar c = Scalar::q(2 * n * (n - 1));
    if (((n % 2) + 2) % 2 == 1) c = -c;
    r.add(2 * n, c);
  }
  return r;
}

LaurentPoly barGaussMu(int window) {
  LaurentPoly r;
  for (int m = 0; 3 * m <= window + 3; ++m) {
    const int n1 = 3 * m, n2 = 3 * m + 1;
    Scalar s1 = Scalar::q(m * (3 * m + 2));
    Scalar s2 = Scalar::q((3 * m + 1) * (m + 1));
    if (m % 2 == 1) {
      s1 = -s1;
      s2 = -s2;
    }
    if (n1 <= window) r.add(-n1, s1);
    if (n1 + 2 <= window) r.add(n1 + 2, -s1);
    if (n2 <= window) r.add(-n2, s2);
    if (n2 + 2 <= window) r.add(n2 + 2, -s2);
  }
  return r;
}

KernelSeries barGaussMuProductRoute(int window, int cut) {
  KernelSeries k = KernelSeries::one(window, cut);
  for (int j = 1; 2 * j <= cut; ++j) k.mulBinomial(0, 2 * j, 0, -1);
  for (int j = 1; 2 * j - 1 <= cut; ++j) {
    k.mulBinomial(1, 2 * j - 1, 0, 1);
    k.mulBinomial(-1, 2 * j - 1, 0, 1);
  }
  for (int j = 0; 4 * j <= cut; ++j) k.mulBinomial(2, 4 * j, 0, -1);
  for (int j = 0; 4 * (j + 1) <= cut; ++j) k.mulBinomial(-2, 4 * (j + 1), 0, -1);
  return k;
}

TruncQT barMuConstant(int cut) {
  TruncQT r = TruncQT::one(cut);
  for (int j = 1; 4 * j <= cut; ++j) {
    TruncQT f(cut, +1);
    f.add(0, 0, 1);
    f.add(4 * j, 0, -1);
    r = r * f.inverse();
  }
  return r;
}

Scalar pairExact(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& kernel,
                 bool conjugateG) {
  LaurentPoly gg = conjugateG ? g.starred() : g;
  Scalar acc;
  for (const auto& [a, ca] : f.coef())
    for (const auto& [b, cb] : gg.coef()) acc += ca * cb * kernel.at(-a - b);
  return acc;
}

TruncQT gaussIntegralRHS(int m, int n, GaussVariant v, int cut) {
  Macdonald mac;
  const bool star = (v == GaussVariant::EStar_MuCirc || v == GaussVariant::EStar_Mu);
  const bool circ = (v == GaussVariant::E_MuCirc || v == GaussVariant::EStar_MuCirc);
  Scalar value =
      star ? mac.eStar(m).evalAt(eigenMonomial(n)) : mac.ePoly(m).evalAt(eigenMonomial(n));
  Scalar weight = Scalar::q(m * m + n * n) * Scalar::t(std::abs(m));
  TruncQT rhs = TruncQT::expand(weight * value, cut, +1);
  if (circ) {
    Scalar head(1);
    for (int j = 1; j < tildeAbs(n); ++j)
      head *= (Scalar(1) - Scalar::q(4 * j) * Scalar::t(4)) /
              (Scalar(1) - Scalar::q(4 * j) * Scalar::t(2));
    rhs = rhs * TruncQT::expand(head, cut, +1);
    for (int j = 1; 4 * j <= cut; ++j) {
      TruncQT f1(cut, +1), f2(cut, +1);
      f1.add(0, 0, 1);
      f1.add(4 * j, 0, -1);
      f2.add(0, 0, 1);
      f2.add(4 * j, 2, -1);
      rhs = rhs * f1 * f2.inverse();
    }
  } else {
    for (int j = tildeAbs(n); 4 * j <= cut; ++j) {
      TruncQT f1(cut, +1), f2(cut, +1);
      f1.add(0, 0, 1);
      f1.add(4 * j, 2, -1);
      f2.add(0, 0, 1);
      f2.add(4 * j, 4, -1);
      rhs = rhs * f1 * f2.inverse();
    }
  }
  return rhs;
}

}  // namespace daha
