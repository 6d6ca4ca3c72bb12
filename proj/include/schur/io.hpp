#pragma once

// Text formats.  Points are 1-based in every external format and 0-based
// inside the library; group elements are written as their internal codes
// (0 is always the identity), since for the cyclic and additive groups those
// codes are the residues themselves.
//
//  scheme file      optional size line, then n rows of n color indices
//  permgroup file   degree line, then one generator per line, as cycles
//                   "(1,2,3)(4,5)" or as an image list "2 3 1 5 4"
//  partition file   one class per line, element codes
//  diffset file     group spec line, then the element codes of D
//
// Blank lines and everything after '#' are ignored everywhere.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "schur/designs.hpp"
#include "schur/error.hpp"
#include "schur/group.hpp"
#include "schur/perm.hpp"
#include "schur/scheme.hpp"
#include "schur/sring.hpp"

namespace schur::io {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  std::string s = p == std::string::npos ? line : line.substr(0, p);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-empty lines with comments removed, paired with their line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto s = strip_comment(line);
    if (!s.empty()) out.emplace_back(no, std::move(s));
  }
  return out;
}

inline long long parse_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw ParseError("line " + std::to_string(line) + ": '" + tok + "' is not an integer");
  return v;
}

// Integers separated by whitespace and/or commas.
inline std::vector<long long> ints(const std::string& s, std::size_t line) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int(tok, line));
  return out;
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ----- schemes --------------------------------------------------------------

inline AssociationScheme parse_scheme_text(const std::string& text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("scheme file is empty");
  std::vector<std::vector<long long>> rows;
  for (auto& [no, s] : lines) rows.push_back(detail::ints(s, no));
  std::size_t first = 0;
  std::size_t n = rows[0].size();
  if (rows.size() > 1 && rows[0].size() == 1 && rows[0][0] >= 0 &&
      static_cast<std::size_t>(rows[0][0]) == rows.size() - 1) {
    n = static_cast<std::size_t>(rows[0][0]);
    first = 1;
  }
  if (rows.size() - first != n)
    throw ParseError("scheme file has " + std::to_string(rows.size() - first) +
                     " rows but " + std::to_string(n) + " columns");
  std::vector<color_t> raw;
  raw.reserve(n * n);
  for (std::size_t i = first; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw ParseError("line " + std::to_string(lines[i].first) + ": ragged row with " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (long long v : rows[i]) {
      if (v < 0) throw ParseError("line " + std::to_string(lines[i].first) + ": negative color");
      raw.push_back(static_cast<color_t>(v));
    }
  }
  auto v = try_scheme(n, raw);
  if (!v.ok()) throw ParseError("not an association scheme: " + v.violation);
  return *v.scheme;
}

inline AssociationScheme parse_scheme_file(const std::filesystem::path& p) {
  try {
    return parse_scheme_text(read_file(p));
  } catch (const ParseError& e) {
    throw ParseError(p.filename().string() + ": " + e.what());
  }
}

inline std::string emit_scheme(const AssociationScheme& X) {
  std::ostringstream os;
  const std::size_t n = X.size();
  os << n << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) os << (y ? " " : "") << X.color(x, y);
    os << '\n';
  }
  return os.str();
}

// ----- permutation groups ---------------------------------------------------

inline Perm parse_perm_line(const std::string& s, std::size_t degree, std::size_t line) {
  auto where = [&] { return "line " + std::to_string(line) + ": "; };
  if (s.find('(') == std::string::npos) {
    auto v = detail::ints(s, line);
    if (v.size() != degree)
      throw ParseError(where() + "image list has " + std::to_string(v.size()) +
                       " entries, degree is " + std::to_string(degree));
    std::vector<point_t> img(degree);
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      if (v[i] < 1 || static_cast<std::size_t>(v[i]) > degree)
        throw ParseError(where() + "point " + std::to_string(v[i]) + " out of range");
      img[i] = static_cast<point_t>(v[i] - 1);
      if (hit[img[i]]) throw ParseError(where() + "image list is not a permutation");
      hit[img[i]] = true;
    }
    return Perm(std::move(img));
  }
  std::vector<std::vector<point_t>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw ParseError(where() + "expected '(' at column " + std::to_string(i + 1));
    auto close = s.find(')', i);
    if (close == std::string::npos) throw ParseError(where() + "unclosed cycle");
    auto inner = s.substr(i + 1, close - i - 1);
    if (inner.find('(') != std::string::npos) throw ParseError(where() + "nested '('");
    std::vector<point_t> cyc;
    for (long long v : detail::ints(inner, line)) {
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw ParseError(where() + "point " + std::to_string(v) + " out of range");
      cyc.push_back(static_cast<point_t>(v - 1));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const PreconditionError& e) {
    throw ParseError(where() + e.what());
  }
}

inline PermGroup parse_permgroup_text(const std::string& text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("permutation group file is empty");
  auto head = detail::ints(lines[0].second, lines[0].first);
  if (head.size() != 1 || head[0] < 1 || static_cast<std::size_t>(head[0]) > kDegreeCap)
    throw ParseError("line " + std::to_string(lines[0].first) + ": expected a degree");
  const std::size_t degree = static_cast<std::size_t>(head[0]);
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < lines.size(); ++i)
    gens.push_back(parse_perm_line(lines[i].second, degree, lines[i].first));
  return PermGroup(degree, std::move(gens));
}

inline PermGroup parse_permgroup_file(const std::filesystem::path& p) {
  try {
    return parse_permgroup_text(read_file(p));
  } catch (const ParseError& e) {
    throw ParseError(p.filename().string() + ": " + e.what());
  }
}

inline std::string emit_permgroup(const PermGroup& G) {
  std::ostringstream os;
  os << G.degree() << '\n';
  for (const Perm& g : G.generators()) os << g.to_string(true) << '\n';
  return os.str();
}

// ----- group specs ----------------------------------------------------------

inline FiniteGroup parse_group_spec(const std::string& spec,
                                    const std::filesystem::path& base = {});

namespace detail {

inline std::vector<long long> spec_args(const std::string& s, const std::string& spec) {
  try {
    return ints(s, 0);
  } catch (const ParseError&) {
    throw ParseError("group spec '" + spec + "': bad arguments '" + s + "'");
  }
}

inline std::uint32_t one_arg(const std::vector<long long>& a, const std::string& spec) {
  if (a.size() != 1 || a[0] < 1) throw ParseError("group spec '" + spec + "': expected one positive integer");
  return static_cast<std::uint32_t>(a[0]);
}

}  // namespace detail

// cyclic:n cN  ea:p,k eQ  dihedral:2n dN  gdihedral:<spec>  frobenius:p,k,m
// psl2:q  g16  m:p,k  sd:N  q:N  sym:n  alt:n  sg:n,id  perm:<file>  A*B
// Numeric suffix forms (c12, d8, e9, q8) are case-insensitive.
inline FiniteGroup parse_group_spec(const std::string& spec_in, const std::filesystem::path& base) {
  std::string spec = detail::strip_comment(spec_in);
  if (spec.empty()) throw ParseError("empty group spec");
  // direct products, outside any perm: file path
  if (spec.rfind("perm:", 0) != 0) {
    int depth = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      if (spec[i] == '(') ++depth;
      if (spec[i] == ')') --depth;
      if (spec[i] == '*' && depth == 0)
        return direct_product(parse_group_spec(spec.substr(0, i), base),
                              parse_group_spec(spec.substr(i + 1), base));
    }
    if (spec.front() == '(' && spec.back() == ')')
      return parse_group_spec(spec.substr(1, spec.size() - 2), base);
  }
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon), rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::string lower = head;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  auto args = [&] { return detail::spec_args(rest, spec); };
  try {
    if (colon != std::string::npos) {
      if (lower == "cyclic" || lower == "c") return cyclic(detail::one_arg(args(), spec));
      if (lower == "ea" || lower == "e") {
        auto a = args();
        if (a.size() == 1) {
          auto pp = prime_power(static_cast<std::uint64_t>(a[0]));
          if (!pp) throw ParseError("group spec '" + spec + "': not a prime power");
          return elementary_abelian(pp->first, pp->second);
        }
        if (a.size() != 2) throw ParseError("group spec '" + spec + "': expected p,k");
        return elementary_abelian(static_cast<std::uint32_t>(a[0]), static_cast<std::uint32_t>(a[1]));
      }
      if (lower == "dihedral" || lower == "d") return dihedral(detail::one_arg(args(), spec));
      if (lower == "gdihedral") return generalized_dihedral(parse_group_spec(rest, base));
      if (lower == "frobenius") {
        auto a = args();
        if (a.size() != 3) throw ParseError("group spec '" + spec + "': expected p,k,m");
        return frobenius_field(static_cast<std::uint32_t>(a[0]), static_cast<std::uint32_t>(a[1]),
                               static_cast<std::uint32_t>(a[2]));
      }
      if (lower == "psl2") return psl2(detail::one_arg(args(), spec));
      if (lower == "m") {
        auto a = args();
        if (a.size() != 2) throw ParseError("group spec '" + spec + "': expected p,k");
        return modular_M(static_cast<std::uint32_t>(a[0]), static_cast<std::uint32_t>(a[1]));
      }
      if (lower == "sd") return semidihedral(detail::one_arg(args(), spec));
      if (lower == "q") return quaternion_generalized(detail::one_arg(args(), spec));
      if (lower == "sym") return symmetric_group(detail::one_arg(args(), spec));
      if (lower == "alt") return alternating_group(detail::one_arg(args(), spec));
      if (lower == "sg") {
        auto a = args();
        if (a.size() != 2) throw ParseError("group spec '" + spec + "': expected order,id");
        return catalogue(static_cast<std::size_t>(a[0]), static_cast<std::size_t>(a[1]));
      }
      if (lower == "perm") {
        std::filesystem::path p = rest;
        if (p.is_relative() && !base.empty()) p = base / p;
        auto G = parse_permgroup_file(p);
        std::vector<Perm> gens = G.generators();
        return from_permutations(G.degree(), gens, p.stem().string(), nullptr, 100'000);
      }
      throw ParseError("unknown group constructor '" + head + "'");
    }
    if (lower == "g16") return g16();
    // letter + number shorthands
    std::size_t digits = lower.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0)
      throw ParseError("unknown group spec '" + spec + "'");
    std::string letters = lower.substr(0, digits);
    auto a = detail::spec_args(lower.substr(digits), spec);
    std::uint32_t v = detail::one_arg(a, spec);
    if (letters == "c") return cyclic(v);
    if (letters == "d") return dihedral(v);
    if (letters == "q") return quaternion_generalized(v);
    if (letters == "sd") return semidihedral(v);
    if (letters == "s") return symmetric_group(v);
    if (letters == "a") return alternating_group(v);
    if (letters == "e") {
      auto pp = prime_power(v);
      if (!pp) throw ParseError("group spec '" + spec + "': not a prime power");
      return elementary_abelian(pp->first, pp->second);
    }
    throw ParseError("unknown group spec '" + spec + "'");
  } catch (const PreconditionError& e) {
    throw ParseError("group spec '" + spec + "': " + e.what());
  }
}

// ----- partitions and difference sets ---------------------------------------

inline ElementPartition parse_partition_text(const std::string& text, std::size_t order) {
  ElementPartition P;
  for (auto& [no, s] : detail::content_lines(text)) {
    P.emplace_back();
    for (long long v : detail::ints(s, no)) {
      if (v < 0 || static_cast<std::size_t>(v) >= order)
        throw ParseError("line " + std::to_string(no) + ": element " + std::to_string(v) +
                         " out of range");
      P.back().push_back(static_cast<elem_t>(v));
    }
  }
  return P;
}

inline DifferenceSet parse_difference_set_text(const std::string& text,
                                               const std::filesystem::path& base = {}) {
  auto lines = detail::content_lines(text);
  if (lines.size() < 2) throw ParseError("difference set file needs a group line and elements");
  FiniteGroup H = parse_group_spec(lines[0].second, base);
  std::vector<elem_t> D;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (long long v : detail::ints(lines[i].second, lines[i].first)) {
      if (v < 0 || static_cast<std::size_t>(v) >= H.order())
        throw ParseError("line " + std::to_string(lines[i].first) + ": element out of range");
      D.push_back(static_cast<elem_t>(v));
    }
  if (!H.is_abelian()) throw ParseError("difference set group must be abelian");
  auto v = is_difference_set(H, D);
  if (!v.ok()) throw ParseError("not a difference set: " + v.violation);
  return *v.set;
}

// ----- tables ---------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw Error("table row width differs from header");
    rows.push_back(std::move(row));
  }
};

enum class TableFormat { tsv, json };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "tsv") return TableFormat::tsv;
  if (s == "json") return TableFormat::json;
  throw ParseError("unknown table format '" + s + "' (tsv or json)");
}

// Cells that look like integers are written as JSON numbers.
inline std::string emit_table(const Table& t, TableFormat fmt) {
  std::ostringstream os;
  if (fmt == TableFormat::tsv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "\t" : "") << t.columns[i];
    os << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
      os << '\n';
    }
    return os.str();
  }
  using ojson = nlohmann::ordered_json;
  ojson out = ojson::object();
  out["columns"] = t.columns;
  out["rows"] = ojson::array();
  for (const auto& r : t.rows) {
    ojson row = ojson::object();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string& cell = r[i];
      bool numeric = !cell.empty() && cell.size() < 19 &&
                     std::all_of(cell.begin() + (cell[0] == '-' ? 1 : 0), cell.end(),
                                 [](unsigned char ch) { return std::isdigit(ch); }) &&
                     cell != "-";
      if (numeric) row[t.columns[i]] = std::stoll(cell);
      else row[t.columns[i]] = cell;
    }
    out["rows"].push_back(std::move(row));
  }
  os << out.dump(2) << '\n';
  return os.str();
}

}  // namespace schur::io
