#pragma once

#include <gmpxx.h>

#include <string>

namespace monoteq {

// All quantities in this library are exact rationals. mpq_class keeps
// everything in lowest terms, so serialized output is canonical.
using Rat = mpq_class;

// mpq_class's two-argument constructor does not reduce the fraction;
// always canonicalize before the value escapes.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Serializes in lowest terms: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

/// Parses "p/q" or "p" (optionally signed). Throws Errc::ParseError.
Rat rat_parse(const std::string& s);

}  // namespace monoteq
