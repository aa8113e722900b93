#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "lrinv/algebra/hamiltonians.hpp"
#include "lrinv/solutions/analytic.hpp"

namespace lrinv {

/// Dense polynomial Σ c_ab x^a t^b. `coeffs[a][b]` is the coefficient of
/// x^a t^b; the table is trimmed so the last row and column are nonzero.
class BivariatePoly {
 public:
  BivariatePoly() : coeffs_{{cplx(0.0)}} {}

  /// Numeric polynomial from an expression built only from x, t and
  /// parameters; parameters are substituted exactly from `cfg` and the
  /// coefficients rounded once at the end.
  static BivariatePoly from_expr(const algebra::OperatorExpr& expr, const SystemConfig& cfg) {
    using algebra::Generator;
    const auto exact = algebra::specialize(expr, cfg);
    BivariatePoly p;
    p.symbolic_ = expr;
    p.coeffs_.clear();
    for (const auto& [key, coeff] : exact.terms()) {
      std::size_t a = 0, b = 0;
      for (Generator g : key.word) {
        if (g == Generator::X) ++a;
        else if (g == Generator::T) ++b;
        else throw DomainError("polynomial may only contain x and t");
      }
      if (p.coeffs_.size() <= a) p.coeffs_.resize(a + 1);
      auto& row = p.coeffs_[a];
      if (row.size() <= b) row.resize(b + 1);
      const double value = static_cast<double>(coeff);
      row[b] += key.params.i_power == 1 ? cplx(0.0, value) : cplx(value, 0.0);
    }
    p.trim();
    return p;
  }

  int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_t() const {
    std::size_t d = 0;
    for (const auto& row : coeffs_) d = std::max(d, row.size());
    return static_cast<int>(d) - 1;
  }
  cplx coefficient(int a, int b) const {
    if (a < 0 || b < 0 || a > degree_x() || static_cast<std::size_t>(b) >= coeffs_[a].size()) return 0.0;
    return coeffs_[a][b];
  }
  const algebra::OperatorExpr& symbolic() const { return symbolic_; }

  /// Horner evaluation, outer loop over powers of x.
  cplx operator()(double x, double t) const {
    cplx acc = 0.0;
    for (auto a = coeffs_.rbegin(); a != coeffs_.rend(); ++a) acc = acc * x + horner_t(*a, t);
    return acc;
  }

  /// ∂/∂x at (x, t).
  cplx derivative_x(double x, double t) const {
    cplx acc = 0.0;
    for (std::size_t a = coeffs_.size(); a-- > 1;) acc = acc * x + double(a) * horner_t(coeffs_[a], t);
    return acc;
  }

 private:
  static cplx horner_t(const std::vector<cplx>& row, double t) {
    cplx acc = 0.0;
    for (auto b = row.rbegin(); b != row.rend(); ++b) acc = acc * t + *b;
    return acc;
  }

  void trim() {
    for (auto& row : coeffs_)
      while (!row.empty() && row.back() == cplx(0.0)) row.pop_back();
    while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back({cplx(0.0)});
  }

  std::vector<std::vector<cplx>> coeffs_;
  algebra::OperatorExpr symbolic_;
};

inline void check_ladder_index(int j, const SystemConfig& cfg) {
  if (j < 0) throw DomainError("ladder index must be nonnegative");
  if (j > cfg.ladder_depth)
    throw DomainError("ladder index " + std::to_string(j) + " exceeds ladder depth " +
                      std::to_string(cfg.ladder_depth));
}

/// P_j with Ê^j φ = P_j φ.
inline BivariatePoly degeneracy_polynomial(int j, const SystemConfig& cfg) {
  check_ladder_index(j, cfg);
  return BivariatePoly::from_expr(algebra::degeneracy_polynomial_symbolic(static_cast<unsigned>(j)), cfg);
}

/// P_0 .. P_depth for one configuration, built once.
class DegeneracyLadder {
 public:
  explicit DegeneracyLadder(const SystemConfig& cfg) : DegeneracyLadder(cfg, cfg.ladder_depth) {}
  DegeneracyLadder(const SystemConfig& cfg, int depth) : cfg_(cfg) {
    if (depth < 0 || depth > max_ladder_depth) throw DomainError("ladder depth out of range");
    cfg_.ladder_depth = std::max(cfg_.ladder_depth, depth);
    for (int j = 0; j <= depth; ++j) polys_.push_back(degeneracy_polynomial(j, cfg_));
  }

  int depth() const { return static_cast<int>(polys_.size()) - 1; }
  const BivariatePoly& operator[](int j) const {
    if (j < 0 || j > depth()) throw DomainError("ladder index exceeds ladder depth");
    return polys_[j];
  }
  const SystemConfig& config() const { return cfg_; }

  /// Σ_j coeffs[j] P_j(x, t) φ(x, t), for caller-chosen coefficients.
  cplx superpose(const std::vector<cplx>& coeffs, double x, double t) const {
    if (static_cast<int>(coeffs.size()) > depth() + 1)
      throw DomainError("more coefficients than ladder rungs");
    cplx sum = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != cplx(0.0)) sum += coeffs[j] * polys_[j](x, t);
    return sum * phi_electric(x, t, cfg_);
  }

 private:
  SystemConfig cfg_;
  std::vector<BivariatePoly> polys_;
};

/// Solution P_j(x, t) φ(x, t).
inline Solution1D make_ladder_state(int j, const SystemConfig& cfg) {
  auto poly = std::make_shared<const BivariatePoly>(degeneracy_polynomial(j, cfg));
  Solution1D s;
  s.family = Family::electric_1d_ladder;
  s.quantum_number = j;
  s.label = "ladder_state";
  s.evaluate = [poly, cfg](const Solution1D::Point& p, double t) {
    return (*poly)(p[0], t) * phi_electric(p[0], t, cfg);
  };
  const double k_rate = cfg.force() / cfg.hbar();
  s.gradient = [poly, cfg, k_rate](const Solution1D::Point& p, double t) {
    const cplx d = poly->derivative_x(p[0], t) + cplx(0.0, k_rate * t) * (*poly)(p[0], t);
    return d * phi_electric(p[0], t, cfg);
  };
  s.drift = electric_drift(cfg);
  return s;
}

/// Taylor coefficients of the time shift: φ(t - δt) = Σ_j c_j Ê^j φ(t) with
/// c_j = (-δt)^j / (j! (iħ)^j) = (iδt/ħ)^j / j!, as an exact expression in ħ.
inline algebra::OperatorExpr taylor_coefficient_symbolic(int j, double dt) {
  using namespace algebra;
  OperatorExpr c = OperatorExpr::one();
  const auto step = ops::i_unit() * OperatorExpr::scalar(Rational(dt)) * ops::par(Param::hbar, -1);
  for (int k = 1; k <= j; ++k) c = c * step * OperatorExpr::scalar(Rational(1, k));
  return c;
}

inline cplx taylor_coefficient(int j, double dt, const SystemConfig& cfg) {
  const auto exact = algebra::specialize(taylor_coefficient_symbolic(j, dt), cfg);
  cplx sum = 0.0;
  for (const auto& [key, c] : exact.terms())
    sum += key.params.i_power == 1 ? cplx(0.0, static_cast<double>(c)) : cplx(static_cast<double>(c), 0.0);
  return sum;
}

/// Truncated resummation Σ_{j≤J} c_j P_j φ folded into one polynomial.
/// Coefficients are combined in exact arithmetic before rounding, so large
/// factorials and powers of ħ never overflow.
class TaylorResummation {
 public:
  TaylorResummation(const SystemConfig& cfg, double dt, int order) : cfg_(cfg), dt_(dt), order_(order) {
    check_ladder_index(order, cfg);
    algebra::OperatorExpr sum;
    for (int j = 0; j <= order; ++j)
      sum = sum + taylor_coefficient_symbolic(j, dt) * algebra::degeneracy_polynomial_symbolic(unsigned(j));
    poly_ = BivariatePoly::from_expr(sum, cfg);
  }

  cplx operator()(double x, double t) const { return poly_(x, t) * phi_electric(x, t, cfg_); }
  const BivariatePoly& polynomial() const { return poly_; }
  double shift() const { return dt_; }
  int order() const { return order_; }

 private:
  SystemConfig cfg_;
  double dt_;
  int order_;
  BivariatePoly poly_;
};

inline cplx superposition_taylor(double x, double t, double dt, int order, const SystemConfig& cfg) {
  return TaylorResummation(cfg, dt, order)(x, t);
}

inline Solution1D make_superposition_taylor(const SystemConfig& cfg, double dt, int order) {
  auto sum = std::make_shared<const TaylorResummation>(cfg, dt, order);
  Solution1D s;
  s.family = Family::electric_1d_superposition;
  s.quantum_number = order;
  s.shifts.dt = dt;
  s.label = "superposition_taylor";
  s.evaluate = [sum](const Solution1D::Point& p, double t) { return (*sum)(p[0], t); };
  s.drift = electric_drift(cfg);
  return s;
}

}  // namespace lrinv
