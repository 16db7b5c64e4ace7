#pragma once

// Irredundant m-irreducible decompositions of monomial ideals.
//
// split_decompose is the generic splitting algorithm: a generator f = u*v
// with coprime non-unit u, v gives (I + (f)) = (I + (u)) ∩ (I + (v)), and
// recursion bottoms out at ideals generated by pure powers of distinct
// variables. It knows nothing about graphs, which is what makes it usable as
// an independent check of the cover-based decomposition.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wei/monomial.hpp"

namespace wei {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(V', δ'): the ideal generated by X_i^{powers[i]}.
class IrreducibleComponent {
 public:
  using Powers = std::map<VarIndex, Exponent>;

  explicit IrreducibleComponent(VariableContext ctx, Powers powers = {})
      : ctx_(std::move(ctx)), powers_(std::move(powers)) {
    for (auto [i, e] : powers_) {
      if (i >= ctx_.dimension()) throw std::out_of_range("component variable outside context");
      if (e < 1) throw std::invalid_argument("component exponents must be >= 1");
    }
  }

  /// Requires is_m_irreducible(I).
  static IrreducibleComponent from_ideal(const MonomialIdeal& I) {
    if (!is_m_irreducible(I)) throw std::invalid_argument("ideal is not m-irreducible: " + to_string(I));
    Powers p;
    for (const auto& g : I.generators())
      for (VarIndex i = 0; i < g.dimension(); ++i)
        if (g[i] > 0) p.emplace(i, g[i]);
    return IrreducibleComponent(I.context(), std::move(p));
  }

  const VariableContext& context() const { return ctx_; }
  const Powers& powers() const { return powers_; }
  std::size_t m_height() const { return powers_.size(); }

  std::vector<VarIndex> support() const {
    std::vector<VarIndex> s;
    s.reserve(powers_.size());
    for (auto [i, e] : powers_) s.push_back(i);
    return s;
  }

  MonomialIdeal ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(powers_.size());
    for (auto [i, e] : powers_) gens.push_back(Monomial::variable_power(ctx_.dimension(), i, e));
    return MonomialIdeal(ctx_, std::move(gens));
  }

  /// P(this) ⊆ P(other): every X_i^a here is divisible by some X_i^b there.
  bool contained_in(const IrreducibleComponent& other) const {
    for (auto [i, a] : powers_) {
      auto it = other.powers_.find(i);
      if (it == other.powers_.end() || it->second > a) return false;
    }
    return true;
  }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_ == b.powers_ && a.ctx_ == b.ctx_;
  }
  /// Lexicographic on (variable, exponent) pairs; the canonical component order.
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) { return a.powers_ < b.powers_; }

 private:
  VariableContext ctx_;
  Powers powers_;
};

/// `(X1^2, X2^5)`; the empty component renders as `0`.
inline std::string to_string(const IrreducibleComponent& c) {
  if (c.powers().empty()) return "0";
  std::string out = "(";
  bool first = true;
  for (auto [i, e] : c.powers()) {
    if (!first) out += ", ";
    first = false;
    out += c.context().name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out + ")";
}

struct Decomposition {
  std::vector<IrreducibleComponent> components;
  bool irredundant = false;

  std::size_t size() const { return components.size(); }
};

inline Decomposition irredundantize(std::vector<IrreducibleComponent> components) {
  if (components.empty()) throw std::invalid_argument("irredundantize needs at least one component");
  for (const auto& c : components)
    if (c.context() != components.front().context()) throw ContextMismatch("components live in different contexts");

  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());

  // Pairwise pruning is complete here: if f, g avoid an m-irreducible C then so does lcm(f, g).
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < components.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < components.size() && !redundant; ++j)
      redundant = j != i && components[j].contained_in(components[i]);
    if (!redundant) kept.push_back(components[i]);
  }
  return Decomposition{std::move(kept), true};
}

/// Intersection of all components; the source ideal when the decomposition is correct.
inline MonomialIdeal intersect_components(const Decomposition& D, const VariableContext& ctx) {
  auto acc = MonomialIdeal::unit(ctx);
  for (const auto& c : D.components) acc = intersect(acc, c.ideal());
  return acc;
}

inline std::size_t m_height_of(const Decomposition& D) {
  if (D.components.empty()) throw std::invalid_argument("m-height of an empty decomposition is undefined");
  std::size_t h = D.components.front().m_height();
  for (const auto& c : D.components) h = std::min(h, c.m_height());
  return h;
}

inline std::string to_string(const Decomposition& D) {
  if (D.components.empty()) return "0 (zero ideal)";
  std::string out;
  for (const auto& c : D.components) {
    if (!out.empty()) out += " ∩ ";
    out += to_string(c);
  }
  return out;
}

struct SplitOptions {
  std::size_t component_cap = 100'000;
};

namespace detail {

class Splitter {
 public:
  explicit Splitter(SplitOptions opts) : opts_(opts) {}

  using Components = std::vector<IrreducibleComponent::Powers>;

  const Components& run(const std::vector<Monomial>& gens) {
    auto key = flatten(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Components result;
    auto pivot = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return g.support_size() > 1; });
    if (pivot == gens.end()) {
      // Canonical generators that are all pure powers use distinct variables.
      IrreducibleComponent::Powers p;
      for (const auto& g : gens)
        for (VarIndex i = 0; i < g.dimension(); ++i)
          if (g[i] > 0) p.emplace(i, g[i]);
      result.push_back(std::move(p));
    } else {
      const Monomial& f = *pivot;
      VarIndex first = 0;
      while (f[first] == 0) ++first;
      auto u = Monomial::variable_power(f.dimension(), first, f[first]);
      std::vector<Exponent> rest(f.exponents().begin(), f.exponents().end());
      rest[first] = 0;
      Monomial v(std::move(rest));

      Components left = run(with_generator(gens, u));
      const Components& right = run(with_generator(gens, v));
      left.insert(left.end(), right.begin(), right.end());
      result = prune(std::move(left));
    }

    produced_ += result.size();
    if (produced_ > opts_.component_cap)
      throw ResourceLimitExceeded("split decomposition exceeded the component cap of " +
                                  std::to_string(opts_.component_cap));
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  static std::vector<Exponent> flatten(const std::vector<Monomial>& gens) {
    std::vector<Exponent> key;
    for (const auto& g : gens) key.insert(key.end(), g.exponents().begin(), g.exponents().end());
    return key;
  }

  static std::vector<Monomial> with_generator(const std::vector<Monomial>& gens, const Monomial& extra) {
    std::vector<Monomial> out;
    out.reserve(gens.size() + 1);
    for (const auto& g : gens)
      if (!divides_unchecked(extra, g)) out.push_back(g);
    out.push_back(extra);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  static bool powers_contained(const IrreducibleComponent::Powers& a, const IrreducibleComponent::Powers& b) {
    for (auto [i, e] : a) {
      auto it = b.find(i);
      if (it == b.end() || it->second > e) return false;
    }
    return true;
  }

  static Components prune(Components cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    Components kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < cs.size() && !redundant; ++j) redundant = j != i && powers_contained(cs[j], cs[i]);
      if (!redundant) kept.push_back(cs[i]);
    }
    return kept;
  }

  SplitOptions opts_;
  std::map<std::vector<Exponent>, Components> memo_;
  std::size_t produced_ = 0;
};

}  // namespace detail

/// Irredundant m-irreducible decomposition by recursive splitting.
/// The zero ideal is itself m-irreducible and comes back as the single component P(∅).
inline Decomposition split_decompose(const MonomialIdeal& I, SplitOptions opts = {}) {
  if (I.is_unit()) throw std::invalid_argument("unit ideal has no irreducible decomposition");
  detail::Splitter splitter(opts);
  const auto& powers = splitter.run(I.generators());
  Decomposition D;
  D.irredundant = true;
  D.components.reserve(powers.size());
  for (const auto& p : powers) D.components.emplace_back(I.context(), p);
  std::sort(D.components.begin(), D.components.end());
  return D;
}

inline bool is_m_unmixed_ideal(const MonomialIdeal& I) {
  auto D = split_decompose(I);
  return std::all_of(D.components.begin(), D.components.end(),
                     [&](const IrreducibleComponent& c) { return c.m_height() == D.components.front().m_height(); });
}

}  // namespace wei
