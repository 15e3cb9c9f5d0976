#pragma once

#include <stdexcept>

#include "vermalab/sl2/module.hpp"

namespace vermalab::enright {

struct PseudoadjointReport {
  Rational c;
  int margin = 0;
  std::size_t interiorSize = 0;
  bool residualZero = false;        // B²+C²+2cC+c² - (BC+CB+2cB) = 0
  bool bMinusCIsCasimir = false;    // B - C = h²+2h+4fe
  bool omegaMinusCZero = false;     // Ω acts by the scalar c
  bool squareZero = false;          // (Ω-c)² = 0
  bool passed() const { return residualZero && bMinusCIsCasimir && squareZero; }
};

/// Checks the pseudoadjoint identity on interior(m, margin), where
/// B = (EF)² + (FE)² + 2EF + 2FE and C = EF²E + FE²F.
inline PseudoadjointReport pseudoadjoint_check(const sl2::TruncatedModule& m, const Rational& c, int margin = 8) {
  if (margin < 8) throw std::invalid_argument("pseudoadjoint_check: margin must be at least 8");
  const auto reg = sl2::interior(m, margin);
  if (reg.indices.empty()) throw std::invalid_argument("pseudoadjoint_check: margin too large for this depth");

  const QMat E = m.E_trunc(), F = m.F_trunc();
  const QMat I = QMat::identity(m.dim());
  const QMat EF = E * F, FE = F * E;
  const QMat B = EF * EF + FE * FE + Rational(2) * EF + Rational(2) * FE;
  const QMat C = E * F * F * E + F * E * E * F;
  const QMat lhs = B * B + C * C + Rational(2) * c * C + c * c * I;
  const QMat rhs = B * C + C * B + Rational(2) * c * B;

  const QMat om = sl2::casimir(m);
  const QMat shifted = om - c * I;

  PseudoadjointReport rep;
  rep.c = c;
  rep.margin = margin;
  rep.interiorSize = reg.indices.size();
  rep.residualZero = sl2::columns_agree(lhs, rhs, reg.indices);
  rep.bMinusCIsCasimir = sl2::columns_agree(B - C, om, reg.indices);
  rep.omegaMinusCZero = sl2::columns_agree(shifted, QMat(m.dim(), m.dim()), reg.indices);
  rep.squareZero = sl2::columns_agree(shifted * shifted, QMat(m.dim(), m.dim()), reg.indices);
  return rep;
}

}  // namespace vermalab::enright
