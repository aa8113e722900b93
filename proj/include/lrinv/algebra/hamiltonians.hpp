#pragma once

#include <string>
#include <vector>

#include "lrinv/algebra/operator_expr.hpp"
#include "lrinv/algebra/parser.hpp"
#include "lrinv/config.hpp"

namespace lrinv::algebra {

namespace ops {

inline OperatorExpr gen(Generator g) { return OperatorExpr::generator(g); }
inline OperatorExpr par(Param p, int power = 1) { return OperatorExpr::param(p, power); }
inline OperatorExpr i_unit() { return OperatorExpr::imaginary_unit(); }
inline OperatorExpr half() { return OperatorExpr::scalar(Rational(1, 2)); }

/// p_x - qEt
inline OperatorExpr f_hat() { return gen(Generator::Px) - par(Param::q) * par(Param::E) * gen(Generator::T); }
/// iħ D_t
inline OperatorExpr energy() { return i_unit() * par(Param::hbar) * gen(Generator::Dt); }
inline OperatorExpr pi_x() { return f_hat(); }
/// p_y - m ω_c z
inline OperatorExpr pi_y() { return gen(Generator::Py) - par(Param::m) * par(Param::wc) * gen(Generator::Z); }
inline OperatorExpr pi_z() { return gen(Generator::Pz); }

}  // namespace ops

/// p_x²/2m - qEx, symbolic in the parameters.
inline OperatorExpr hamiltonian_1d_symbolic() {
  using namespace ops;
  return half() * par(Param::m, -1) * pow(gen(Generator::Px), 2) -
         par(Param::q) * par(Param::E) * gen(Generator::X);
}

/// (p_x² + p_y² + (p_z - m ω_c y)²)/2m - qEx, expanded and normal-ordered.
inline OperatorExpr hamiltonian_parallel_symbolic() {
  using namespace ops;
  const auto kinetic_z = gen(Generator::Pz) - par(Param::m) * par(Param::wc) * gen(Generator::Y);
  return half() * par(Param::m, -1) *
             (pow(gen(Generator::Px), 2) + pow(gen(Generator::Py), 2) + pow(kinetic_z, 2)) -
         par(Param::q) * par(Param::E) * gen(Generator::X);
}

inline OperatorExpr hamiltonian_1d(const SystemConfig& cfg) {
  if (cfg.fields.geometry != Geometry::electric_1d)
    throw GeometryError("one-dimensional Hamiltonian requested for a parallel-field geometry");
  return hamiltonian_1d_symbolic();
}

inline OperatorExpr hamiltonian_parallel(const SystemConfig& cfg) {
  if (cfg.fields.geometry != Geometry::parallel_eb)
    throw GeometryError("parallel-field Hamiltonian requested for the one-dimensional geometry");
  return hamiltonian_parallel_symbolic();
}

/// The 1D Hamiltonian, or the configured replacement text if one is set.
inline OperatorExpr effective_hamiltonian_1d(const SystemConfig& cfg) {
  return cfg.hamiltonian_1d_override ? parse_operator(*cfg.hamiltonian_1d_override)
                                     : hamiltonian_1d_symbolic();
}

inline OperatorExpr effective_hamiltonian_parallel(const SystemConfig& cfg) {
  return cfg.hamiltonian_parallel_override ? parse_operator(*cfg.hamiltonian_parallel_override)
                                           : hamiltonian_parallel_symbolic();
}

/// Numeric parameter values of a config: ħ, m, q, E, ω_c (0 outside the
/// parallel geometry) and c.
inline ParamValues param_values(const SystemConfig& cfg) {
  ParamValues v;
  v[Param::hbar] = cfg.units.hbar;
  v[Param::m] = cfg.particle.mass;
  v[Param::q] = cfg.particle.charge;
  v[Param::E] = cfg.fields.electric;
  v[Param::wc] = cfg.fields.geometry == Geometry::parallel_eb ? cyclotron_frequency(cfg) : 0.0;
  v[Param::c] = cfg.units.c;
  return v;
}

/// Substitutes every parameter value of `cfg` exactly.
inline OperatorExpr specialize(const OperatorExpr& e, const SystemConfig& cfg) {
  const auto v = param_values(cfg);
  std::vector<std::pair<Param, double>> subs;
  for (int p = 0; p < param_count; ++p) subs.emplace_back(static_cast<Param>(p), v.values[p]);
  return specialize(e, subs);
}

/// [f, Ê^(j+1)] - iħqE(j+1)Ê^j; the zero expression when the ladder identity holds.
inline OperatorExpr eigen_ladder_check(unsigned j, unsigned depth = 6) {
  if (j > depth) throw DomainError("ladder index exceeds configured depth");
  using namespace ops;
  const auto e_pow_j = pow(energy(), j);
  const auto lhs = commutator(f_hat(), e_pow_j * energy());
  const auto rhs = i_unit() * par(Param::hbar) * par(Param::q) * par(Param::E) *
                   OperatorExpr::scalar(Rational(j + 1)) * e_pow_j;
  return lhs - rhs;
}

struct ConservedPair {
  std::string name;
  OperatorExpr op;
  OperatorExpr hamiltonian;
};

/// The six (operator, Hamiltonian) pairs whose Heisenberg residual vanishes.
inline std::vector<ConservedPair> conserved_pairs(const OperatorExpr& h1d, const OperatorExpr& hpar) {
  using namespace ops;
  return {
      {"f = px - qEt under H_1d", f_hat(), h1d},
      {"E = i hbar dt under H_1d", energy(), h1d},
      {"pi_x = px - qEt under H_par", pi_x(), hpar},
      {"pi_y = py - m wc z under H_par", pi_y(), hpar},
      {"pi_z = pz under H_par", pi_z(), hpar},
      {"E = i hbar dt under H_par", energy(), hpar},
  };
}

inline std::vector<ConservedPair> conserved_pairs() {
  return conserved_pairs(hamiltonian_1d_symbolic(), hamiltonian_parallel_symbolic());
}

/// Symbolic degeneracy polynomial P_j(x, t) with Ê^j φ = P_j φ:
///   P_0 = 1,  P_(j+1) = iħ ∂P_j/∂t + (q²E²t²/2m - qEx) P_j.
inline OperatorExpr degeneracy_polynomial_symbolic(unsigned j) {
  using namespace ops;
  const auto weight = half() * par(Param::q, 2) * par(Param::E, 2) * par(Param::m, -1) *
                          pow(gen(Generator::T), 2) -
                      par(Param::q) * par(Param::E) * gen(Generator::X);
  const auto i_hbar = i_unit() * par(Param::hbar);
  OperatorExpr p = OperatorExpr::one();
  for (unsigned k = 0; k < j; ++k) p = i_hbar * partial_t(p) + weight * p;
  return p;
}

}  // namespace lrinv::algebra
