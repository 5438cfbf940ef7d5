#include "monoteq/rational.hpp"

#include <cctype>

#include "monoteq/error.hpp"

namespace monoteq {

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-'))
      fail(Errc::ParseError, "bad rational '" + s + "'");
  try {
    Rat r(s);
    if (r.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational '" + s + "'");
  }
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DirectedCycle: return "DirectedCycle";
    case Errc::RedundantCover: return "RedundantCover";
    case Errc::BadIntersection: return "BadIntersection";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::MassMismatch: return "MassMismatch";
    case Errc::ThetaOutOfRange: return "ThetaOutOfRange";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::LambdaTooSmall: return "LambdaTooSmall";
    case Errc::NotMaximalBipartite: return "NotMaximalBipartite";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotStochasticallyMonotone: return "NotStochasticallyMonotone";
    case Errc::NotOrdered: return "NotOrdered";
    case Errc::NotInterlaced: return "NotInterlaced";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NotWClass: return "NotWClass";
    case Errc::NoExtremes: return "NoExtremes";
    case Errc::NotYGluedBipartite: return "NotYGluedBipartite";
    case Errc::NotWGluedDiamond: return "NotWGluedDiamond";
    case Errc::MidpointInfeasible: return "MidpointInfeasible";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::MarginalMismatch: return "MarginalMismatch";
    case Errc::RuleGap: return "RuleGap";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace monoteq
