#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icosa/error.hpp"
#include "icosa/permutation.hpp"

namespace icosa {

struct NamedGenerator {
  std::string name;
  Permutation value;
};

/// Ordered list of named generators over one shared domain. The list order
/// defines the alphabet order used to break ties between equal-length words.
class GeneratorSet {
public:
  explicit GeneratorSet(std::vector<NamedGenerator> gens)
      : gens_(std::move(gens)) {
    if (gens_.empty()) throw Error("generator set must not be empty");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name.empty()) throw Error("generator name must not be empty");
      if (!(gens_[i].value.domain() == gens_[0].value.domain()))
        throw Error("generators '" + gens_[0].name + "' and '" +
                    gens_[i].name + "' act on different domains");
      for (std::size_t j = 0; j < i; ++j)
        if (gens_[j].name == gens_[i].name)
          throw Error("duplicate generator name '" + gens_[i].name + "'");
    }
  }

  std::size_t size() const noexcept { return gens_.size(); }
  const NamedGenerator& at(std::size_t i) const { return gens_.at(i); }
  const std::vector<NamedGenerator>& all() const noexcept { return gens_; }
  const Domain& domain() const noexcept { return gens_[0].value.domain(); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return i;
    return std::nullopt;
  }

  const Permutation& value_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw Error("unknown generator '" + std::string(name) + "'");
    return gens_[*i].value;
  }

private:
  std::vector<NamedGenerator> gens_;
};

/// A sequence of generator names, evaluated as a left-to-right product.
/// The empty word is the identity and displays as "-".
struct Word {
  std::vector<std::string> tokens;

  Word() = default;
  explicit Word(std::vector<std::string> t) : tokens(std::move(t)) {}

  /// Builds a word from one-letter generator names, e.g. "DYDT"; spaces
  /// are ignored.
  static Word of_letters(std::string_view letters) {
    Word w;
    for (char c : letters)
      if (c != ' ') w.tokens.emplace_back(1, c);
    return w;
  }

  std::size_t length() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  std::string str() const {
    if (tokens.empty()) return "-";
    std::string out;
    for (const auto& t : tokens) out += t;
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) = default;
};

namespace detail {
struct ImageVectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t x : v)
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};
}  // namespace detail

inline constexpr std::size_t kDefaultClosureBound = 10000;

/// A finite permutation group materialized as its full element list.
/// Elements appear in breadth-first order: index 0 is the identity, and
/// each element is discovered through its shortest, lexicographically
/// least generator word (alphabet ordered as in the GeneratorSet).
class Group {
public:
  Group(GeneratorSet gens, std::vector<Permutation> elements,
        std::vector<std::pair<std::size_t, std::size_t>> parents)
      : gens_(std::move(gens)),
        elems_(std::move(elements)),
        parents_(std::move(parents)) {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      index_.emplace(elems_[i].images(), i);
  }

  const GeneratorSet& generators() const noexcept { return gens_; }
  const std::vector<Permutation>& elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  const Domain& domain() const noexcept { return gens_.domain(); }
  const Permutation& element(std::size_t i) const { return elems_.at(i); }
  const Permutation& identity_element() const { return elems_.front(); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    if (!(p.domain() == domain())) return std::nullopt;
    auto it = index_.find(p.images());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// The shortest, lexicographically least word for element `i`,
  /// reconstructed from the breadth-first search tree.
  Word word_at(std::size_t i) const {
    if (i >= elems_.size())
      throw Error("element index " + std::to_string(i) + " out of range");
    std::vector<std::string> tokens;
    while (i != 0) {
      const auto& [parent, gen] = parents_[i];
      tokens.push_back(gens_.at(gen).name);
      i = parent;
    }
    std::reverse(tokens.begin(), tokens.end());
    return Word(std::move(tokens));
  }

private:
  GeneratorSet gens_;
  std::vector<Permutation> elems_;
  std::vector<std::pair<std::size_t, std::size_t>> parents_;
  std::unordered_map<std::vector<std::size_t>, std::size_t,
                     detail::ImageVectorHash>
      index_;
};

/// Breadth-first closure of the generator set. Enumeration is by word
/// length with ties broken by generator order. Throws once the closure
/// grows past `max_elements`, which guards against mistyped generators.
inline Group generate(GeneratorSet gens,
                      std::size_t max_elements = kDefaultClosureBound) {
  std::vector<Permutation> elems;
  std::vector<std::pair<std::size_t, std::size_t>> parents;
  std::unordered_map<std::vector<std::size_t>, std::size_t,
                     detail::ImageVectorHash>
      seen;

  elems.push_back(identity(gens.domain()));
  parents.emplace_back(0, 0);
  seen.emplace(elems[0].images(), 0);

  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Permutation next = compose(elems[at], gens.at(g).value);
      if (seen.contains(next.images())) continue;
      if (elems.size() >= max_elements)
        throw Error("group closure exceeded the safety bound of " +
                    std::to_string(max_elements) +
                    " elements; check the generators");
      seen.emplace(next.images(), elems.size());
      parents.emplace_back(at, g);
      elems.push_back(std::move(next));
    }
  }
  return Group(std::move(gens), std::move(elems), std::move(parents));
}

/// Left-to-right product of the named generators; the empty word gives
/// the identity. Unknown tokens are an error.
inline Permutation evaluate_word(const GeneratorSet& gens, const Word& w) {
  Permutation acc = identity(gens.domain());
  for (const auto& token : w.tokens) acc = compose(acc, gens.value_of(token));
  return acc;
}

/// The shortest word for `target`, lexicographically least among words of
/// minimal length. Throws if `target` is not a group element.
inline Word shortest_word(const Group& group, const Permutation& target) {
  auto i = group.index_of(target);
  if (!i)
    throw Error("permutation is not an element of the generated group");
  return group.word_at(*i);
}

struct RelationCheck {
  Word lhs;
  Word rhs;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Evaluates both sides of each relation over `gens` and reports
/// per-relation pass/fail. Failures are report entries, not errors.
inline RelationReport verify_relations(
    const GeneratorSet& gens,
    const std::vector<std::pair<Word, Word>>& relations) {
  RelationReport report;
  for (const auto& [lhs, rhs] : relations) {
    const bool pass = evaluate_word(gens, lhs) == evaluate_word(gens, rhs);
    report.checks.push_back({lhs, rhs, pass});
  }
  return report;
}

/// Disjoint cover of the group by cycle type; element indices keep the
/// group's enumeration order.
inline std::map<CycleType, std::vector<std::size_t>> partition_by_cycle_type(
    const Group& group) {
  std::map<CycleType, std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < group.order(); ++i)
    parts[cycle_type(group.element(i))].push_back(i);
  return parts;
}

}  // namespace icosa
