#pragma once

// Exact algebra of polynomial operators over the generators
//   x, y, z, t, p_x, p_y, p_z, D_t
// with canonical commutators [x, p_x] = [y, p_y] = [z, p_z] = iħ and
// [D_t, t] = 1; every other pair of distinct generators commutes.
//
// Coefficients are exact rationals times monomials in the symbolic
// parameters ħ, m, q, E, ω_c, c and the imaginary unit. Expressions are
// kept normal-ordered (generator words sorted x < y < z < t < p_x < p_y <
// p_z < D_t), so two equal operators always have identical storage.

#include <algorithm>
#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrinv/error.hpp"

namespace lrinv::algebra {

using Rational = boost::multiprecision::cpp_rational;

enum class Generator : std::uint8_t { X, Y, Z, T, Px, Py, Pz, Dt };
inline constexpr int generator_count = 8;

enum class Param : std::uint8_t { hbar, m, q, E, wc, c };
inline constexpr int param_count = 6;

/// Product of parameter powers and a power of i. i² is folded into the
/// rational coefficient eagerly, so `i_power` is 0 or 1.
struct ParamMonomial {
  std::array<int, param_count> exponents{};
  int i_power = 0;

  int exponent(Param p) const { return exponents[static_cast<int>(p)]; }
  bool is_one() const {
    return i_power == 0 && std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
  }
  auto operator<=>(const ParamMonomial&) const = default;
};

using Word = std::vector<Generator>;

/// Multiplies two monomials; returns the product and the sign picked up from i·i = -1.
inline std::pair<ParamMonomial, int> multiply(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial r;
  for (int k = 0; k < param_count; ++k) r.exponents[k] = a.exponents[k] + b.exponents[k];
  const int ip = a.i_power + b.i_power;
  r.i_power = ip % 2;
  return {r, ip >= 2 ? -1 : 1};
}

/// Inverse monomial; 1/i = -i gives the returned sign.
inline std::pair<ParamMonomial, int> inverse(const ParamMonomial& a) {
  ParamMonomial r;
  for (int k = 0; k < param_count; ++k) r.exponents[k] = -a.exponents[k];
  r.i_power = a.i_power;
  return {r, a.i_power == 1 ? -1 : 1};
}

inline constexpr bool is_position(Generator g) { return g <= Generator::T; }

/// For an out-of-order adjacent pair (a, b) with a > b, tells whether
/// swapping produces a contraction term, and its scalar factor:
///   p_x x = x p_x - iħ      D_t t = t D_t + 1
inline bool contraction(Generator a, Generator b, Rational& coeff, ParamMonomial& params) {
  params = ParamMonomial{};
  switch (a) {
    case Generator::Px:
    case Generator::Py:
    case Generator::Pz:
      if (static_cast<int>(a) - static_cast<int>(b) == 4 && b != Generator::T) {
        coeff = -1;
        params.exponents[static_cast<int>(Param::hbar)] = 1;
        params.i_power = 1;
        return true;
      }
      return false;
    case Generator::Dt:
      if (b == Generator::T) {
        coeff = 1;
        return true;
      }
      return false;
    default:
      return false;
  }
}

class OperatorExpr {
 public:
  struct Key {
    Word word;
    ParamMonomial params;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, Rational>;

  OperatorExpr() = default;

  static OperatorExpr scalar(const Rational& value) {
    OperatorExpr e;
    e.add_ordered(Key{}, value);
    return e;
  }
  static OperatorExpr one() { return scalar(1); }
  static OperatorExpr generator(Generator g) {
    OperatorExpr e;
    e.add_ordered(Key{{g}, {}}, 1);
    return e;
  }
  static OperatorExpr param(Param p, int power = 1) {
    OperatorExpr e;
    Key k;
    k.params.exponents[static_cast<int>(p)] = power;
    e.add_ordered(k, 1);
    return e;
  }
  static OperatorExpr imaginary_unit() {
    OperatorExpr e;
    Key k;
    k.params.i_power = 1;
    e.add_ordered(k, 1);
    return e;
  }
  /// Single term `coeff · params · word`, normal-ordering the word.
  static OperatorExpr term(const Rational& coeff, const ParamMonomial& params, const Word& word) {
    OperatorExpr e;
    e.add_unordered(coeff, params, word);
    return e;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  bool contains(Generator g) const {
    for (const auto& [k, c] : terms_)
      if (std::find(k.word.begin(), k.word.end(), g) != k.word.end()) return true;
    return false;
  }

  /// True when the expression is a single term free of generators.
  bool is_scalar_monomial() const {
    return terms_.size() == 1 && terms_.begin()->first.word.empty();
  }

  OperatorExpr& operator+=(const OperatorExpr& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_ordered(k, c);
    return *this;
  }
  OperatorExpr& operator-=(const OperatorExpr& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_ordered(k, -c);
    return *this;
  }
  OperatorExpr& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator-(OperatorExpr a) { return a *= Rational(-1); }
  friend OperatorExpr operator*(OperatorExpr a, const Rational& s) { return a *= s; }
  friend OperatorExpr operator*(const Rational& s, OperatorExpr a) { return a *= s; }

  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr out;
    Word w;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        auto [params, sign] = multiply(ka.params, kb.params);
        w.assign(ka.word.begin(), ka.word.end());
        w.insert(w.end(), kb.word.begin(), kb.word.end());
        out.add_unordered(ca * cb * sign, params, w);
      }
    }
    return out;
  }
  OperatorExpr& operator*=(const OperatorExpr& rhs) { return *this = *this * rhs; }

  bool operator==(const OperatorExpr&) const = default;

  /// Adds `coeff · params · word`, rewriting the word into normal order.
  void add_unordered(const Rational& coeff, const ParamMonomial& params, Word word) {
    if (coeff == 0) return;
    struct Pending {
      Rational coeff;
      ParamMonomial params;
      Word word;
    };
    std::vector<Pending> stack;
    stack.push_back({coeff, params, std::move(word)});
    Rational c_coeff;
    ParamMonomial c_params;
    while (!stack.empty()) {
      Pending cur = std::move(stack.back());
      stack.pop_back();
      auto it = std::adjacent_find(cur.word.begin(), cur.word.end(),
                                   [](Generator a, Generator b) { return a > b; });
      if (it == cur.word.end()) {
        add_ordered(Key{std::move(cur.word), cur.params}, cur.coeff);
        continue;
      }
      const auto pos = static_cast<std::size_t>(it - cur.word.begin());
      if (contraction(cur.word[pos], cur.word[pos + 1], c_coeff, c_params)) {
        Word shorter;
        shorter.reserve(cur.word.size() - 2);
        shorter.insert(shorter.end(), cur.word.begin(), cur.word.begin() + pos);
        shorter.insert(shorter.end(), cur.word.begin() + pos + 2, cur.word.end());
        auto [p, sign] = multiply(cur.params, c_params);
        stack.push_back({cur.coeff * c_coeff * sign, p, std::move(shorter)});
      }
      std::swap(cur.word[pos], cur.word[pos + 1]);
      stack.push_back(std::move(cur));
    }
  }

 private:
  void add_ordered(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline OperatorExpr operator*(const OperatorExpr& a, long s) { return a * Rational(s); }
inline OperatorExpr operator*(long s, const OperatorExpr& a) { return a * Rational(s); }

/// e^n for n >= 0; e^0 is the identity.
inline OperatorExpr pow(const OperatorExpr& e, unsigned n) {
  OperatorExpr result = OperatorExpr::one();
  for (unsigned k = 0; k < n; ++k) result = result * e;
  return result;
}

/// Rewrites every term into normal order. Stored expressions are already
/// normal-ordered, so this is the identity on them; it exists so that
/// normal ordering can be applied to words built by hand.
inline OperatorExpr normal_order(const OperatorExpr& e) {
  OperatorExpr out;
  for (const auto& [k, c] : e.terms()) out.add_unordered(c, k.params, k.word);
  return out;
}

inline OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

/// Formal derivative with respect to explicit time: t^k ↦ k t^(k-1) in each
/// word, every other generator (including D_t) held fixed.
inline OperatorExpr partial_t(const OperatorExpr& e) {
  OperatorExpr out;
  for (const auto& [k, c] : e.terms()) {
    const auto count = std::count(k.word.begin(), k.word.end(), Generator::T);
    if (count == 0) continue;
    Word w = k.word;
    w.erase(std::find(w.begin(), w.end(), Generator::T));
    out.add_unordered(c * static_cast<long>(count), k.params, std::move(w));
  }
  return out;
}

/// Hermitian adjoint. Positions, t and momenta are self-adjoint, D_t is
/// anti-self-adjoint (so iħD_t is Hermitian), parameters are real.
inline OperatorExpr adjoint(const OperatorExpr& e) {
  OperatorExpr out;
  for (const auto& [k, c] : e.terms()) {
    Word w(k.word.rbegin(), k.word.rend());
    const auto dts = std::count(w.begin(), w.end(), Generator::Dt);
    Rational coeff = c;
    if (k.params.i_power == 1) coeff = -coeff;
    if (dts % 2 == 1) coeff = -coeff;
    out.add_unordered(coeff, k.params, std::move(w));
  }
  return out;
}

/// (1/iħ)[f, H] + ∂f/∂t. Zero exactly when f is conserved under H.
inline OperatorExpr heisenberg_residual(const OperatorExpr& f, const OperatorExpr& hamiltonian) {
  if (hamiltonian.contains(Generator::Dt)) throw DomainError("Hamiltonian must be time-local");
  ParamMonomial inv_i_hbar;  // 1/(iħ) = -i/ħ
  inv_i_hbar.exponents[static_cast<int>(Param::hbar)] = -1;
  inv_i_hbar.i_power = 1;
  const auto factor = OperatorExpr::term(-1, inv_i_hbar, {});
  return factor * commutator(f, hamiltonian) + partial_t(f);
}

/// Numeric values substituted for the symbolic parameters.
struct ParamValues {
  std::array<double, param_count> values{1, 1, 1, 1, 1, 1};
  double& operator[](Param p) { return values[static_cast<int>(p)]; }
  double operator[](Param p) const { return values[static_cast<int>(p)]; }
};

inline std::complex<double> evaluate(const Rational& coeff, const ParamMonomial& params, const ParamValues& v) {
  double x = static_cast<double>(coeff);
  for (int k = 0; k < param_count; ++k)
    if (params.exponents[k] != 0) x *= std::pow(v.values[k], params.exponents[k]);
  return params.i_power == 1 ? std::complex<double>(0.0, x) : std::complex<double>(x, 0.0);
}

/// Replaces the listed parameters by exact rational values. Any finite
/// double is a dyadic rational, so the substitution is exact.
inline OperatorExpr specialize(const OperatorExpr& e, const std::vector<std::pair<Param, double>>& values) {
  OperatorExpr out;
  for (const auto& [k, c] : e.terms()) {
    Rational coeff = c;
    ParamMonomial params = k.params;
    for (const auto& [p, value] : values) {
      int& exp = params.exponents[static_cast<int>(p)];
      if (exp == 0) continue;
      if (value == 0.0) {
        if (exp < 0) throw DomainError("division by a parameter specialized to zero");
        coeff = 0;
        break;
      }
      const Rational r(value);
      Rational factor = 1;
      for (int n = 0; n < std::abs(exp); ++n) factor *= r;
      coeff = exp > 0 ? Rational(coeff * factor) : Rational(coeff / factor);
      exp = 0;
    }
    out.add_unordered(coeff, params, k.word);
  }
  return out;
}

}  // namespace lrinv::algebra
