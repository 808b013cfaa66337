#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icosa/error.hpp"

namespace icosa {

/// A short symbolic point name such as `1`, `2+` or `3''`.
/// Equality is exact text equality.
class Label {
public:
  explicit Label(std::string text) : text_(std::move(text)) {
    if (text_.empty()) throw Error("label must not be empty");
    for (char c : text_) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' ||
          c == '(' || c == ')') {
        throw Error("label '" + text_ + "' contains whitespace or punctuation");
      }
    }
  }

  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Label& a, const Label& b) noexcept {
    return a.text_ == b.text_;
  }

private:
  std::string text_;
};

/// An ordered set of distinct labels. The construction order is canonical:
/// it drives cycle canonicalization and every piece of formatted output.
/// Copies share the underlying data and are cheap.
class Domain {
public:
  explicit Domain(std::vector<Label> labels) {
    auto data = std::make_shared<Data>();
    data->labels = std::move(labels);
    for (std::size_t i = 0; i < data->labels.size(); ++i) {
      auto [it, inserted] = data->index.emplace(data->labels[i].text(), i);
      if (!inserted)
        throw Error("duplicate label '" + data->labels[i].text() +
                    "' in domain");
    }
    data_ = std::move(data);
  }

  static Domain of(std::vector<std::string> texts) {
    std::vector<Label> labels;
    labels.reserve(texts.size());
    for (auto& t : texts) labels.emplace_back(std::move(t));
    return Domain(std::move(labels));
  }

  std::size_t size() const noexcept { return data_->labels.size(); }

  const Label& label(std::size_t position) const {
    if (position >= size())
      throw Error("domain position " + std::to_string(position) +
                  " out of range");
    return data_->labels[position];
  }

  const std::vector<Label>& labels() const noexcept { return data_->labels; }

  std::optional<std::size_t> find(std::string_view text) const {
    auto it = data_->index.find(std::string(text));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t position(const Label& l) const {
    auto p = find(l.text());
    if (!p)
      throw Error("label '" + l.text() + "' is not in domain " + str());
    return *p;
  }

  bool contains(std::string_view text) const { return find(text).has_value(); }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += data_->labels[i].text();
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Domain& a, const Domain& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->labels == b.data_->labels;
  }

private:
  struct Data {
    std::vector<Label> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Multiset of cycle lengths, fixed points included.
class CycleType {
public:
  CycleType() = default;

  explicit CycleType(std::map<std::size_t, std::size_t> counts)
      : counts_(std::move(counts)) {
    for (auto [len, mult] : counts_)
      if (len == 0 || mult == 0)
        throw Error("cycle type entries must be positive");
  }

  static CycleType of(
      std::initializer_list<std::pair<std::size_t, std::size_t>> entries) {
    std::map<std::size_t, std::size_t> counts;
    for (auto [len, mult] : entries) counts[len] += mult;
    return CycleType(std::move(counts));
  }

  const std::map<std::size_t, std::size_t>& counts() const noexcept {
    return counts_;
  }

  std::size_t total_points() const {
    std::size_t n = 0;
    for (auto [len, mult] : counts_) n += len * mult;
    return n;
  }

  /// Display form, e.g. "k1=2,k3=1".
  std::string str() const {
    std::string out;
    for (auto [len, mult] : counts_) {
      if (!out.empty()) out += ',';
      out += "k" + std::to_string(len) + "=" + std::to_string(mult);
    }
    return out;
  }

  friend bool operator==(const CycleType& a, const CycleType& b) = default;
  friend bool operator<(const CycleType& a, const CycleType& b) {
    return a.counts_ < b.counts_;
  }

private:
  std::map<std::size_t, std::size_t> counts_;
};

/// A bijection of a finite labeled domain onto itself. Immutable.
/// `images()[i]` is the domain position of the image of the label at
/// position `i`.
class Permutation {
public:
  Permutation(Domain domain, std::vector<std::size_t> images)
      : dom_(std::move(domain)), img_(std::move(images)) {
    const std::size_t n = dom_.size();
    if (img_.size() != n)
      throw Error("permutation has " + std::to_string(img_.size()) +
                  " images for a domain of size " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (img_[i] >= n)
        throw Error("image index " + std::to_string(img_[i]) +
                    " out of range for domain of size " + std::to_string(n));
      if (seen[img_[i]])
        throw Error("images are not a bijection: label '" +
                    dom_.label(img_[i]).text() + "' is hit twice");
      seen[img_[i]] = true;
    }
  }

  const Domain& domain() const noexcept { return dom_; }
  std::size_t size() const noexcept { return img_.size(); }
  const std::vector<std::size_t>& images() const noexcept { return img_; }

  std::size_t image(std::size_t position) const { return img_.at(position); }

  const Label& image(const Label& l) const {
    return dom_.label(img_[dom_.position(l)]);
  }

  bool fixes(std::size_t position) const { return img_.at(position) == position; }
  bool fixes(const Label& l) const { return fixes(dom_.position(l)); }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  std::vector<std::size_t> fixed_point_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] == i) out.push_back(i);
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.dom_ == b.dom_ && a.img_ == b.img_;
  }

private:
  Domain dom_;
  std::vector<std::size_t> img_;
};

/// Hashes the image vector only; intended for containers holding
/// permutations over one shared domain.
struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t x : p.images())
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

inline Permutation identity(const Domain& domain) {
  std::vector<std::size_t> img(domain.size());
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(domain, std::move(img));
}

/// Left-to-right composition: the result applies `p` first, then `q`,
/// so `compose(p, q).image(x) == q.image(p.image(x))` for every label x.
/// This convention is fixed for the whole library.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (!(p.domain() == q.domain()))
    throw Error("cannot compose permutations over different domains " +
                p.domain().str() + " and " + q.domain().str());
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) img[i] = q.image(p.image(i));
  return Permutation(p.domain(), std::move(img));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) img[p.image(i)] = i;
  return Permutation(p.domain(), std::move(img));
}

/// n-fold left-to-right power; negative exponents use the inverse,
/// power(p, 0) is the identity.
inline Permutation power(const Permutation& p, long long n) {
  Permutation base = n < 0 ? inverse(p) : p;
  unsigned long long e =
      n < 0 ? -static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Permutation acc = identity(p.domain());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// Cycles as lists of domain positions. Each cycle starts at its
/// position-minimal element; cycles are ordered by starting position.
/// Length-1 cycles are omitted unless `include_fixed` is set.
inline std::vector<std::vector<std::size_t>> cycle_positions(
    const Permutation& p, bool include_fixed = false) {
  const std::size_t n = p.size();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    if (p.image(start) == start) {
      visited[start] = true;
      if (include_fixed) cycles.push_back({start});
      continue;
    }
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !visited[i]; i = p.image(i)) {
      visited[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// Same decomposition with labels instead of positions.
inline std::vector<std::vector<Label>> cycle_decomposition(
    const Permutation& p, bool include_fixed = false) {
  std::vector<std::vector<Label>> out;
  for (const auto& cyc : cycle_positions(p, include_fixed)) {
    std::vector<Label> labels;
    labels.reserve(cyc.size());
    for (std::size_t pos : cyc) labels.push_back(p.domain().label(pos));
    out.push_back(std::move(labels));
  }
  return out;
}

inline CycleType cycle_type(const Permutation& p) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& cyc : cycle_positions(p, /*include_fixed=*/true))
    ++counts[cyc.size()];
  return CycleType(std::move(counts));
}

inline std::size_t order(const Permutation& p) {
  std::size_t result = 1;
  for (const auto& cyc : cycle_positions(p))
    result = std::lcm(result, cyc.size());
  return result;
}

enum class Parity { even, odd };

/// Even iff (domain size - number of cycles, fixed points included) is even.
inline Parity parity(const Permutation& p) {
  const std::size_t cycles = cycle_positions(p, /*include_fixed=*/true).size();
  return (p.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace icosa
