#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "icosa/error.hpp"
#include "icosa/permutation.hpp"

namespace icosa {

// Wire grammar for permutations, used verbatim by the CLI and fixtures:
//
//   perm  := cycle*
//   cycle := '(' label (',' label)+ ')'
//   label := [0-9]+ ('\'' | '\'\'' | '+')?
//
// ASCII spaces may appear between tokens. Cycles must be pairwise disjoint;
// unlisted labels are fixed. The empty string is the identity.

/// Parses cycle notation over `domain`. Throws ParseError with a 1-based
/// position for malformed syntax, unknown labels and duplicated labels.
inline Permutation parse_cycles(std::string_view text, const Domain& domain) {
  const std::size_t n = domain.size();
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(n, false);

  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto skip_spaces = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto unexpected = [&](const char* what) -> ParseError {
    return ParseError(std::string("unexpected character '") + text[i] +
                          "'; expected " + what,
                      i + 1);
  };

  skip_spaces();
  while (i < text.size()) {
    if (text[i] != '(') throw unexpected("'('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_spaces();
      if (i >= text.size())
        throw ParseError("unexpected end of input; expected a label", i + 1);
      if (!is_digit(text[i])) throw unexpected("a label");
      const std::size_t label_start = i;
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i < text.size() && text[i] == '+') {
        ++i;
      } else if (i < text.size() && text[i] == '\'') {
        ++i;
        if (i < text.size() && text[i] == '\'') ++i;
      }
      const std::string token(text.substr(label_start, i - label_start));
      const auto pos = domain.find(token);
      if (!pos)
        throw ParseError("unknown label '" + token + "'", label_start + 1);
      if (used[*pos])
        throw ParseError("duplicate label '" + token + "'", label_start + 1);
      used[*pos] = true;
      cycle.push_back(*pos);

      skip_spaces();
      if (i >= text.size())
        throw ParseError("unexpected end of input; expected ',' or ')'", i + 1);
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        if (cycle.size() < 2)
          throw ParseError("cycle must list at least two labels", i + 1);
        ++i;
        break;
      }
      throw unexpected("',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_spaces();
  }
  return Permutation(domain, std::move(images));
}

/// Canonical cycle notation: each cycle starts at its position-minimal
/// label, cycles ordered by starting position, no spaces. The identity
/// formats as the empty string. `parse_cycles(format_cycles(p)) == p`
/// whenever `include_fixed` is false.
inline std::string format_cycles(const Permutation& p,
                                 bool include_fixed = false) {
  std::string out;
  for (const auto& cyc : cycle_positions(p, include_fixed)) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ',';
      out += p.domain().label(cyc[k]).text();
    }
    out += ')';
  }
  return out;
}

}  // namespace icosa
