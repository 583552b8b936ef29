#pragma once

#include <map>
#include <string>
#include <vector>

#include "splab/numeric.hpp"
#include "splab/tableau.hpp"

namespace splab {

/// Sparse polynomial in x_1..x_n with integer coefficients.
class SymPoly {
 public:
  using Exponent = std::vector<int>;

  explicit SymPoly(int nvars = 1);
  static SymPoly constant(int nvars, BigInt c);
  static SymPoly monomial(Exponent e, BigInt c = 1);

  int nvars() const noexcept { return nvars_; }
  const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(const Exponent& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const BigInt& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const BigInt& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const BigInt& c) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  bool operator==(const SymPoly&) const = default;

  bool is_homogeneous() const;
  bool is_symmetric() const;

 private:
  int nvars_;
  std::map<Exponent, BigInt> terms_;
};

/// `3*x1^2*x2 + x3`; `0` for the zero polynomial.
std::string to_string(const SymPoly& f);

/// Sum of x^content over semistandard tableaux with values <= n.
SymPoly schur_P_poly(const SkewShape& shape, int n);
SymPoly schur_P_poly(const StrictPartition& shape, int n);
/// Sum of x^content over Q-tableaux with values <= n.
SymPoly q_tableau_generating_function(const SkewShape& shape, int n);
/// Computed both by doubling P once per diagonal cell and from Q-tableaux.
/// Throws MismatchError if the two disagree.
SymPoly schur_Q_poly(const SkewShape& shape, int n);

using CoeffMap = std::map<StrictPartition, BigInt>;

/// Coefficients of f in the basis P_lambda(x_1..x_n), l(lambda) <= n.
/// Throws NotHomogeneous, NotSymmetric or NotInSpan.
CoeffMap expand_in_P(const SymPoly& f);

/// Expansion of P_{nu/mu} in the P-basis, with n = max(1, l(nu)).
CoeffMap skew_P_expansion(const StrictPartition& nu, const StrictPartition& mu);

/// Shifted Littlewood-Richardson numbers: Q_{nu/mu} = sum b_lambda Q_lambda,
/// equivalently the coefficient of P_nu in P_lambda * P_mu.
CoeffMap b_coeffs(const StrictPartition& nu, const StrictPartition& mu);

}  // namespace splab
