#pragma once

#include <stdexcept>
#include <string>

namespace monoteq {

enum class Errc {
  UnknownElement,
  DirectedCycle,
  RedundantCover,
  BadIntersection,
  SizeLimit,
  MassMismatch,
  ThetaOutOfRange,
  SupportMismatch,
  LambdaTooSmall,
  NotMaximalBipartite,
  NotAcyclic,
  NotConnected,
  NotStochasticallyMonotone,
  NotOrdered,
  NotInterlaced,
  BadIndex,
  NotWClass,
  NoExtremes,
  NotYGluedBipartite,
  NotWGluedDiamond,
  MidpointInfeasible,
  HypothesisViolated,
  MarginalMismatch,
  RuleGap,
  ParseError,
};

const char* errc_name(Errc c);

/// All domain errors carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace monoteq
