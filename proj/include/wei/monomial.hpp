#pragma once

// Exponent-vector monomials and monomial ideals over a fixed variable context.
//
// Everything here works at the monomial level: coefficients never appear.
// Ideals are stored by their canonical minimal generating set, so two ideals
// are equal exactly when their generator lists compare equal.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wei {

using Exponent = std::uint32_t;
using VarIndex = std::size_t;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VariableContext {
 public:
  /// Context with default names X1..Xd.
  explicit VariableContext(std::size_t dimension) {
    if (dimension == 0) throw std::invalid_argument("variable context needs at least one variable");
    names_.reserve(dimension);
    for (std::size_t i = 1; i <= dimension; ++i) names_.push_back("X" + std::to_string(i));
  }

  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("variable context needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw std::invalid_argument("variable names must be nonempty");
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    }
  }

  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VarIndex i) const { return names_.at(i); }

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t dimension) { return Monomial(std::vector<Exponent>(dimension, 0)); }

  static Monomial variable_power(std::size_t dimension, VarIndex i, Exponent e) {
    std::vector<Exponent> v(dimension, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  std::size_t dimension() const { return exps_.size(); }
  Exponent operator[](VarIndex i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  /// A pure power X_i^e with e >= 1.
  bool is_pure_power() const { return support_size() == 1; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

namespace detail {

inline void require_same_dimension(const Monomial& m, const Monomial& n) {
  if (m.dimension() != n.dimension()) throw ContextMismatch("monomials live in different variable contexts");
}

inline bool divides_unchecked(const Monomial& m, const Monomial& n) {
  auto a = m.exponents();
  auto b = n.exponents();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial lcm_unchecked(const Monomial& m, const Monomial& n) {
  std::vector<Exponent> out(m.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(m[i], n[i]);
  return Monomial(std::move(out));
}

// Graded order: lower degree first, ties broken so that X1 precedes X2.
inline bool canonical_less(const Monomial& m, const Monomial& n) {
  auto dm = m.degree();
  auto dn = n.degree();
  if (dm != dn) return dm < dn;
  auto a = m.exponents();
  auto b = n.exponents();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>{});
}

// Sort, dedupe, and drop every generator divisible by another.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  // A divisor of g has degree <= deg g, so it already sits in `kept`.
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides_unchecked(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace detail

inline bool divides(const Monomial& m, const Monomial& n) {
  detail::require_same_dimension(m, n);
  return detail::divides_unchecked(m, n);
}

inline Monomial lcm_monomial(const Monomial& m, const Monomial& n) {
  detail::require_same_dimension(m, n);
  return detail::lcm_unchecked(m, n);
}

/// Writes `X1^2*X2^5`, or `1` for the unit monomial.
inline std::string to_string(const Monomial& m, const VariableContext& ctx) {
  if (m.dimension() != ctx.dimension()) throw ContextMismatch("monomial does not match variable context");
  std::ostringstream os;
  bool first = true;
  for (VarIndex i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ctx.name(i);
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

class MonomialIdeal {
 public:
  /// The zero ideal of `ctx`.
  explicit MonomialIdeal(VariableContext ctx) : ctx_(std::move(ctx)) {}

  /// Canonicalizes `gens`; every generator must match the context.
  MonomialIdeal(VariableContext ctx, std::vector<Monomial> gens) : ctx_(std::move(ctx)) {
    for (const auto& g : gens)
      if (g.dimension() != ctx_.dimension()) throw ContextMismatch("generator does not match variable context");
    gens_ = detail::minimalize(std::move(gens));
  }

  static MonomialIdeal unit(VariableContext ctx) {
    auto d = ctx.dimension();
    return MonomialIdeal(std::move(ctx), {Monomial::one(d)});
  }

  const VariableContext& context() const { return ctx_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t dimension() const { return ctx_.dimension(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Trusted {};
  MonomialIdeal(Trusted, VariableContext ctx, std::vector<Monomial> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

  friend MonomialIdeal make_canonical_unchecked(VariableContext ctx, std::vector<Monomial> canonical);

  VariableContext ctx_;
  std::vector<Monomial> gens_;
};

/// Wraps a generator list already known to be canonical. Internal fast path.
inline MonomialIdeal make_canonical_unchecked(VariableContext ctx, std::vector<Monomial> canonical) {
  return MonomialIdeal(MonomialIdeal::Trusted{}, std::move(ctx), std::move(canonical));
}

namespace detail {

inline void require_same_context(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.context() != J.context()) throw ContextMismatch("ideals live in different variable contexts");
}

inline void require_context(const MonomialIdeal& I, const Monomial& m) {
  if (I.dimension() != m.dimension()) throw ContextMismatch("monomial does not match the ideal's context");
}

inline bool member_unchecked(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides_unchecked(g, m); });
}

inline bool leq_unchecked(std::span<const Monomial> I, std::span<const Monomial> J) {
  return std::all_of(I.begin(), I.end(), [&](const Monomial& g) { return member_unchecked(J, g); });
}

}  // namespace detail

inline MonomialIdeal minimal_generators(const VariableContext& ctx, std::vector<Monomial> gens) {
  return MonomialIdeal(ctx, std::move(gens));
}

inline bool member(const MonomialIdeal& I, const Monomial& m) {
  detail::require_context(I, m);
  return detail::member_unchecked(I.generators(), m);
}

/// I ⊆ J.
inline bool ideal_leq(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_context(I, J);
  return detail::leq_unchecked(I.generators(), J.generators());
}

inline bool ideal_eq(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_context(I, J);
  return I.generators() == J.generators();
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_context(I, J);
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.context(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_context(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(detail::lcm_unchecked(f, g));
  return MonomialIdeal(I.context(), std::move(gens));
}

inline MonomialIdeal m_radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& f : I.generators()) {
    std::vector<Exponent> e(f.exponents().begin(), f.exponents().end());
    for (auto& x : e) x = x > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.context(), std::move(gens));
}

/// I^[a]: every minimal generator raised to the a-th power.
inline MonomialIdeal bracket_power(const MonomialIdeal& I, Exponent a) {
  if (a < 1) throw std::invalid_argument("bracket power exponent must be >= 1");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& f : I.generators()) {
    std::vector<Exponent> e(f.exponents().begin(), f.exponents().end());
    for (auto& x : e) x *= a;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.context(), std::move(gens));
}

/// Minimal generators are pure powers in pairwise distinct variables.
/// The zero ideal qualifies; the unit ideal does not.
inline bool is_m_irreducible(const MonomialIdeal& I) {
  std::vector<bool> used(I.dimension(), false);
  for (const auto& g : I.generators()) {
    if (!g.is_pure_power()) return false;
    for (VarIndex i = 0; i < g.dimension(); ++i) {
      if (g[i] == 0) continue;
      if (used[i]) return false;
      used[i] = true;
    }
  }
  return true;
}

/// Generators joined by ", ", or `0` for the zero ideal.
inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, I.context());
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << '(' << to_string(I) << ')'; }

// ---------------------------------------------------------------------------
// Polarization

struct Polarization {
  VariableContext context;
  MonomialIdeal ideal;
  /// source_variable[k] is the original variable that polarized variable k maps to.
  std::vector<VarIndex> source_variable;
  /// First polarized index for each original variable; X_{i,j} sits at offset[i] + j - 1.
  std::vector<std::size_t> offset;
};

/// Splits every X_i^e into X_{i,1}*...*X_{i,e}. Variables named `<name>_<j>`.
/// The zero and unit ideals (and ideals using no variable) come back unchanged
/// with the identity substitution.
inline Polarization polarize(const MonomialIdeal& I) {
  const auto d = I.dimension();
  std::vector<Exponent> max_exp(d, 0);
  for (const auto& g : I.generators())
    for (VarIndex i = 0; i < d; ++i) max_exp[i] = std::max(max_exp[i], g[i]);

  const std::size_t total = std::accumulate(max_exp.begin(), max_exp.end(), std::size_t{0});
  if (total == 0) {
    std::vector<VarIndex> identity(d);
    std::iota(identity.begin(), identity.end(), VarIndex{0});
    return Polarization{I.context(), I, identity, identity};
  }

  std::vector<std::string> names;
  std::vector<VarIndex> source;
  std::vector<std::size_t> offset(d, 0);
  names.reserve(total);
  source.reserve(total);
  for (VarIndex i = 0; i < d; ++i) {
    offset[i] = names.size();
    for (Exponent j = 1; j <= max_exp[i]; ++j) {
      names.push_back(I.context().name(i) + "_" + std::to_string(j));
      source.push_back(i);
    }
  }
  VariableContext pctx(std::move(names));

  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(total, 0);
    for (VarIndex i = 0; i < d; ++i)
      for (Exponent j = 0; j < g[i]; ++j) e[offset[i] + j] = 1;
    gens.emplace_back(std::move(e));
  }
  MonomialIdeal pideal(pctx, std::move(gens));
  return Polarization{std::move(pctx), std::move(pideal), std::move(source), std::move(offset)};
}

/// Applies X_{i,j} -> X_i to every generator of the polarized ideal.
inline MonomialIdeal depolarize(const Polarization& p, const VariableContext& target) {
  if (p.ideal.context() != p.context) throw ContextMismatch("polarized ideal does not match its context");
  std::vector<Monomial> gens;
  gens.reserve(p.ideal.generators().size());
  for (const auto& g : p.ideal.generators()) {
    std::vector<Exponent> e(target.dimension(), 0);
    for (std::size_t k = 0; k < g.dimension(); ++k) {
      auto src = p.source_variable.at(k);
      if (src >= e.size()) throw ContextMismatch("substitution targets a variable outside the context");
      e[src] += g[k];
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(target, std::move(gens));
}

}  // namespace wei
