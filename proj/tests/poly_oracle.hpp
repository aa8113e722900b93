#pragma once

// Test-only oracle: acts with an operator word on a polynomial in
// (x, y, z, t) by direct differentiation and multiplication, right to left,
// without any commutation rules. Agreement with the normal-ordered form of
// the same word checks the rewriting independently.

#include <array>
#include <complex>
#include <map>

#include "lrinv/algebra/operator_expr.hpp"

namespace lrinv::oracle {

using Monomial = std::array<int, 4>;  // powers of x, y, z, t
using Poly = std::map<Monomial, std::complex<double>>;

inline Poly multiply_by(const Poly& f, int axis) {
  Poly out;
  for (const auto& [key, c] : f) {
    Monomial m = key;
    ++m[axis];
    out[m] += c;
  }
  return out;
}

inline Poly differentiate(const Poly& f, int axis, std::complex<double> factor) {
  Poly out;
  for (const auto& [key, c] : f) {
    Monomial m = key;
    if (m[axis] == 0) continue;
    const double k = m[axis];
    --m[axis];
    out[m] += factor * k * c;
  }
  return out;
}

inline Poly apply_generator(algebra::Generator g, const Poly& f, double hbar) {
  using algebra::Generator;
  const std::complex<double> minus_i_hbar(0.0, -hbar);
  switch (g) {
    case Generator::X: return multiply_by(f, 0);
    case Generator::Y: return multiply_by(f, 1);
    case Generator::Z: return multiply_by(f, 2);
    case Generator::T: return multiply_by(f, 3);
    case Generator::Px: return differentiate(f, 0, minus_i_hbar);
    case Generator::Py: return differentiate(f, 1, minus_i_hbar);
    case Generator::Pz: return differentiate(f, 2, minus_i_hbar);
    case Generator::Dt: return differentiate(f, 3, 1.0);
  }
  return f;
}

inline Poly apply_word(const algebra::Word& w, Poly f, double hbar) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = apply_generator(*it, f, hbar);
  return f;
}

inline Poly apply(const algebra::OperatorExpr& e, const Poly& f, const algebra::ParamValues& v) {
  Poly out;
  for (const auto& [key, coeff] : e.terms()) {
    const auto scale = algebra::evaluate(coeff, key.params, v);
    for (const auto& [m, c] : apply_word(key.word, f, v[algebra::Param::hbar])) out[m] += scale * c;
  }
  return out;
}

inline double max_difference(const Poly& a, const Poly& b) {
  double d = 0.0;
  for (const auto& [m, c] : a) {
    auto it = b.find(m);
    d = std::max(d, std::abs(c - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [m, c] : b)
    if (!a.count(m)) d = std::max(d, std::abs(c));
  return d;
}

/// A dense polynomial of total degree <= 3 in (x, y, z, t) with fixed
/// irrational-looking coefficients.
inline Poly test_polynomial() {
  Poly f;
  double c = 0.37;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3 - a; ++b)
      for (int d = 0; d <= 3 - a - b; ++d)
        for (int e = 0; e <= 3 - a - b - d; ++e) {
          c = std::fmod(c * 7.31 + 0.113, 2.0) - 1.0;
          f[{a, b, d, e}] = {c, 0.5 * c * c - 0.2};
        }
  return f;
}

}  // namespace lrinv::oracle
