#ifndef TDN_GENFUNC_HPP
#define TDN_GENFUNC_HPP

#include <vector>

#include "tdn/series.hpp"

namespace tdn {

/// Normalized coefficients p_1..p_n of the Betti generating function,
/// computed from the convolution recursion
///   (n+1) p_{n+1} = (1 - n q^{2d}) p_n + q^2 kappa_d sum_{i+j=n+1} j p_i p_j
/// with p_1 = 1.  Index k of the result holds p_{k+1}.
std::vector<QPoly> normalized_poincare(int d, int n);

/// Poincare polynomial of T_{d,n}: P_n = n! p_n.  Integer, even-power,
/// palindromic coefficients (asserted).  P_1 = 1 by convention.
QPoly poincare(int d, int n);

/// Same value computed from the direct recursion
///   P_{n+1} = (kappa_{d+1} + n q^2 kappa_{d-1}) P_n
///             + q^2 kappa_d sum_{i+j=n+1, 2<=i<=n-1} C(n,i) P_i P_j
/// applied for n >= 2 with base P_2 = kappa_d.
QPoly poincare_via_eq1(int d, int n);

/// Betti numbers b_0, b_2, ..., b_{2 dim} of T_{d,n} (coefficients of
/// poincare at even powers).
std::vector<Int> betti_numbers(int d, int n);

/// psi(q,t) = sum_{n>=1} p_n(q) t^n truncated at t^M.
TruncSeries psi_series(int d, int M);

/// Second implementation path: solves the differential equation
///   (1 + q^{2d} t - q^2 kappa_d psi) psi_t = 1 + psi
/// coefficient by coefficient from p_1 = 1.
TruncSeries psi_series_from_differential(int d, int M);

/// Residual of the differential equation, truncated at t^(M-1); zero iff
/// the equation holds.
TruncSeries verify_differential(int d, int M);

/// Residual of the functional equation
///   kappa_d (1+psi)^{q^{2d}} = q^{2d+2} kappa_d psi - q^{2d}(q^{2d}-1) t
///                              + kappa_d
/// where the power means exp(q^{2d} log(1+psi)); truncated at t^M.
TruncSeries verify_functional(int d, int M);

/// eta(t) = psi(-1,t): Euler characteristics over n!.
TruncSeries euler_series(int d, int M);

struct EulerResiduals {
  TruncSeries logarithmic;   ///< d(1+eta)log(1+eta) - ((d+1)eta - t)
  TruncSeries differential;  ///< (1 + t - d eta) eta_t - (1 + eta)
};

/// Residuals of both Euler-characteristic equations; both zero iff they
/// hold.
EulerResiduals verify_euler(int d, int M);

/// chi(T_{d,n}) = P_n(-1).
Int euler_char(int d, int n);

}  // namespace tdn

#endif
