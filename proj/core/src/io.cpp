#include "monoteq/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "monoteq/error.hpp"
#include "monoteq/rational.hpp"

namespace monoteq {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Significant lines with their 1-based numbers: comments stripped,
/// blanks dropped.
std::vector<std::pair<int, std::string>> significant_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (!t.empty()) out.emplace_back(no, t);
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

/// Parses `a < b`; empty result when the line has another shape.
std::optional<std::pair<std::string, std::string>> parse_cover_line(
    const std::string& t) {
  std::vector<std::string> w = split_words(t);
  if (w.size() == 3 && w[1] == "<") return std::make_pair(w[0], w[2]);
  return std::nullopt;
}

/// Parses `label: x=1/3 y=2`; ParseError with the given line number.
std::pair<std::string, std::vector<std::pair<std::string, Rat>>> parse_row(
    int no, const std::string& t) {
  size_t colon = t.find(':');
  if (colon == std::string::npos) parse_fail(no, "expected `label: ...`");
  std::string label = trim(t.substr(0, colon));
  if (label.empty() || label.find(' ') != std::string::npos)
    parse_fail(no, "bad row label");
  std::vector<std::pair<std::string, Rat>> entries;
  for (const std::string& w : split_words(t.substr(colon + 1))) {
    size_t eq = w.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= w.size())
      parse_fail(no, "expected `element=value`, got `" + w + "`");
    try {
      entries.emplace_back(w.substr(0, eq), rat_parse(w.substr(eq + 1)));
    } catch (const Error&) {
      parse_fail(no, "bad rational `" + w.substr(eq + 1) + "`");
    }
  }
  return {std::move(label), std::move(entries)};
}

std::vector<std::string> parse_header(int no, const std::string& t,
                                      const std::string& keyword) {
  std::vector<std::string> w = split_words(t);
  if (w.empty() || w[0] != keyword + ":")
    parse_fail(no, "expected `" + keyword + ": ...` header");
  w.erase(w.begin());
  if (w.empty()) parse_fail(no, "empty element list");
  return w;
}

}  // namespace

Poset parse_poset(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines = significant_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "line 1: empty poset file");
  std::vector<std::string> elements =
      parse_header(lines[0].first, lines[0].second, "elements");
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto cov = parse_cover_line(lines[i].second);
    if (!cov) parse_fail(lines[i].first, "expected `a < b`");
    covers.push_back(*cov);
  }
  try {
    return Poset::from_cover_edges(elements, covers);
  } catch (const Error& e) {
    fail(Errc::ParseError, std::string("invalid poset: ") + e.what());
  }
}

std::string format_poset(const Poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const std::string& n : p.elements()) out << ' ' << n;
  out << '\n';
  for (auto [x, y] : p.cover_pairs())
    out << p.name(x) << " < " << p.name(y) << '\n';
  return out.str();
}

std::vector<std::pair<std::string, RationalMeasure>> parse_measures(
    const std::string& text, const Poset& support) {
  std::vector<std::pair<std::string, RationalMeasure>> out;
  for (auto& [no, t] : significant_lines(text)) {
    auto [label, entries] = parse_row(no, t);
    RationalMeasure m{support, std::vector<Rat>(support.size(), 0)};
    for (auto& [el, v] : entries) {
      int y = support.find(el);
      if (y < 0) parse_fail(no, "unknown element `" + el + "`");
      if (v < 0) parse_fail(no, "negative mass at `" + el + "`");
      m.mass[y] += v;
    }
    out.emplace_back(std::move(label), std::move(m));
  }
  if (out.empty()) fail(Errc::ParseError, "line 1: empty measure file");
  return out;
}

MeasureSystem parse_system(const std::string& text, const Poset& support) {
  std::vector<std::pair<std::string, RationalMeasure>> rows =
      parse_measures(text, support);
  std::vector<std::string> labels;
  for (auto& [label, m] : rows) {
    if (support.find(label) < 0)
      fail(Errc::ParseError, "index label `" + label + "` is not a support element");
    labels.push_back(label);
  }
  Poset index = support.induced(labels);  // rejects duplicates via size
  if (index.size() != static_cast<int>(rows.size()))
    fail(Errc::ParseError, "duplicate index label");
  std::vector<RationalMeasure> family(rows.size(),
                                      RationalMeasure{support, {}});
  for (auto& [label, m] : rows) family[index.index_of(label)] = std::move(m);
  return make_system(std::move(index), support, std::move(family));
}

std::string format_measure(const std::string& label, const RationalMeasure& m) {
  std::ostringstream out;
  out << label << ':';
  for (int y = 0; y < m.support.size(); ++y)
    if (m.mass[y] != 0) out << ' ' << m.support.name(y) << '=' << rat_str(m.mass[y]);
  out << '\n';
  return out.str();
}

std::string format_system(const MeasureSystem& s) {
  std::string out;
  for (int a = 0; a < s.index.size(); ++a)
    out += format_measure(s.index.name(a), s.family[a]);
  return out;
}

Generator parse_generator(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines = significant_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "line 1: empty generator file");
  std::vector<std::string> states =
      parse_header(lines[0].first, lines[0].second, "states");
  std::vector<std::pair<std::string, std::string>> covers;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    auto cov = parse_cover_line(lines[i].second);
    if (!cov) break;
    covers.push_back(*cov);
  }
  Poset p = [&] {
    try {
      return Poset::from_cover_edges(states, covers);
    } catch (const Error& e) {
      fail(Errc::ParseError, std::string("invalid state poset: ") + e.what());
    }
  }();
  std::vector<std::vector<Rat>> rates(p.size(), std::vector<Rat>(p.size(), 0));
  std::vector<bool> seen(p.size(), false);
  for (; i < lines.size(); ++i) {
    auto [label, entries] = parse_row(lines[i].first, lines[i].second);
    int x = p.find(label);
    if (x < 0) parse_fail(lines[i].first, "unknown state `" + label + "`");
    if (seen[x]) parse_fail(lines[i].first, "duplicate row for `" + label + "`");
    seen[x] = true;
    for (auto& [el, v] : entries) {
      int y = p.find(el);
      if (y < 0) parse_fail(lines[i].first, "unknown state `" + el + "`");
      if (y == x) parse_fail(lines[i].first, "diagonal rates are computed, not given");
      if (v < 0) parse_fail(lines[i].first, "negative rate");
      rates[x][y] += v;
    }
  }
  try {
    return Generator(std::move(p), std::move(rates));
  } catch (const Error& e) {
    fail(Errc::ParseError, std::string("invalid generator: ") + e.what());
  }
}

std::string format_generator(const Generator& l) {
  const Poset& p = l.states();
  std::ostringstream out;
  out << "states:";
  for (const std::string& n : p.elements()) out << ' ' << n;
  out << '\n';
  for (auto [x, y] : p.cover_pairs())
    out << p.name(x) << " < " << p.name(y) << '\n';
  for (int x = 0; x < p.size(); ++x) {
    out << p.name(x) << ':';
    for (int y = 0; y < p.size(); ++y)
      if (y != x && l.rate(x, y) != 0)
        out << ' ' << p.name(y) << '=' << rat_str(l.rate(x, y));
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace monoteq
