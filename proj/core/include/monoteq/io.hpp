#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monoteq/markov.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"

namespace monoteq {

/// Poset text format: first significant line `elements: a b c d`, then
/// one cover per line as `a < b`; `#` starts a comment. Parse errors
/// carry 1-based line numbers.
Poset parse_poset(const std::string& text);
std::string format_poset(const Poset& p);

/// Measure lines `label: x=1/3 y=2/3`; omitted elements carry zero mass.
/// Returns (label, measure) pairs in file order.
std::vector<std::pair<std::string, RationalMeasure>> parse_measures(
    const std::string& text, const Poset& support);

/// A system file lists one measure line per index element; the index is
/// the induced subposet of the support on the labels.
MeasureSystem parse_system(const std::string& text, const Poset& support);
std::string format_measure(const std::string& label, const RationalMeasure& m);
std::string format_system(const MeasureSystem& s);

/// Generator format: header `states: a b c`, then rows `a: b=1 c=2`
/// holding off-diagonal rates; the diagonal is recomputed. The state
/// poset is an antichain unless `covers` lines `a < b` are present
/// between the header and the rows.
Generator parse_generator(const std::string& text);
std::string format_generator(const Generator& l);

/// Whole-file helpers; ParseError on unreadable paths.
std::string read_file(const std::string& path);

}  // namespace monoteq
