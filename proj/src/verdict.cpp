#include "nimcash/verdict.hpp"

namespace nimcash {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Oracle: return "oracle";
    case Regime::ClassicFormula: return "classic";
    case Regime::UpperRegime: return "upper";
    case Regime::LowerRegime: return "lower";
    case Regime::Staircase: return "staircase";
    case Regime::Fallback: return "fallback";
  }
  return "unknown";
}

std::string describe(const RegimeCase& c) {
  using K = RegimeCase::Kind;
  auto side = std::string(c.side == Player::P1 ? "P1 side" : "P2 side");
  switch (c.kind) {
    case K::Oracle: return "oracle";
    case K::UpperCase: return "upper class, case " + std::to_string(c.bullet);
    case K::LowerCase: return "lower class, case " + std::to_string(c.bullet);
    case K::StaircaseBand:
      return "staircase " + to_string(c.family) + ", case " + std::to_string(c.residue_case) +
             ", band " + std::to_string(c.band) + ", " + side;
    case K::StaircaseBottom:
      return "staircase " + to_string(c.family) + ", case " + std::to_string(c.residue_case) +
             ", bottom, " + side;
    case K::StaircaseTop:
      return "staircase " + to_string(c.family) + ", case " + std::to_string(c.residue_case) +
             ", top, " + side;
    case K::OracleFallback: return "oracle fallback";
  }
  return "unknown";
}

Regime regime_of(const RegimeCase& c) {
  using K = RegimeCase::Kind;
  switch (c.kind) {
    case K::Oracle: return Regime::Oracle;
    case K::UpperCase: return Regime::UpperRegime;
    case K::LowerCase: return Regime::LowerRegime;
    case K::StaircaseBand:
    case K::StaircaseBottom:
    case K::StaircaseTop: return Regime::Staircase;
    case K::OracleFallback: return Regime::Fallback;
  }
  return Regime::Oracle;
}

}  // namespace nimcash
