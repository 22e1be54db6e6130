#include "tdn/genfunc.hpp"

#include "tdn/errors.hpp"

namespace tdn {

namespace {

TruncSeries constant_series(int order, QPoly c) {
  TruncSeries s(order);
  s.set_coeff(0, std::move(c));
  return s;
}

}  // namespace

std::vector<QPoly> normalized_poincare(int d, int n) {
  if (d < 1 || n < 1) throw BadParamsError("normalized_poincare needs d,n >= 1");
  const QPoly q2kd = QPoly::power(2) * kappa(d);
  const QPoly q2d = QPoly::power(2 * d);
  std::vector<QPoly> p(n + 1);
  p[1] = QPoly::one();
  for (int m = 1; m < n; ++m) {
    // (m+1) p_{m+1} = (1 - m q^{2d}) p_m + q^2 kappa_d sum_{i+j=m+1} j p_i p_j
    QPoly rhs = (QPoly::one() - Rat(m) * q2d) * p[m];
    QPoly conv;
    for (int i = 1; i <= m; ++i) {
      const int j = m + 1 - i;
      conv += Rat(j) * (p[i] * p[j]);
    }
    rhs += q2kd * conv;
    p[m + 1] = make_rat(1, m + 1) * rhs;
  }
  p.erase(p.begin());
  return p;
}

QPoly poincare(int d, int n) {
  const std::vector<QPoly> p = normalized_poincare(d, n);
  QPoly P = Rat(factorial_int(n)) * p[n - 1];
  if (!P.integer_coeffs())
    throw Error("poincare(" + std::to_string(d) + "," + std::to_string(n) +
                ") produced non-integer coefficients");
  return P;
}

QPoly poincare_via_eq1(int d, int n) {
  if (d < 1 || n < 2) throw BadParamsError("poincare_via_eq1 needs d >= 1, n >= 2");
  const QPoly q2kd = QPoly::power(2) * kappa(d);
  const QPoly bundle = kappa(d + 1);
  const QPoly q2kdm1 = QPoly::power(2) * kappa(d - 1);
  std::vector<QPoly> P(n + 1);
  P[2] = kappa(d);
  for (int m = 2; m < n; ++m) {
    QPoly next = (bundle + Rat(m) * q2kdm1) * P[m];
    QPoly conv;
    for (int i = 2; i <= m - 1; ++i) {
      const int j = m + 1 - i;
      conv += Rat(binomial_int(m, i)) * (P[i] * P[j]);
    }
    next += q2kd * conv;
    P[m + 1] = next;
  }
  return P[n];
}

std::vector<Int> betti_numbers(int d, int n) {
  const QPoly P = poincare(d, n);
  std::vector<Int> out;
  for (int k = 0; 2 * k <= P.degree() || k == 0; ++k)
    out.push_back(to_integer(P.coeff(2 * k)));
  return out;
}

TruncSeries psi_series(int d, int M) {
  if (M < 1) throw BadParamsError("psi_series needs order >= 1");
  const std::vector<QPoly> p = normalized_poincare(d, M);
  TruncSeries s(M);
  for (int k = 1; k <= M; ++k) s.set_coeff(k, p[k - 1]);
  return s;
}

TruncSeries psi_series_from_differential(int d, int M) {
  if (M < 1) throw BadParamsError("order must be >= 1");
  const QPoly q2kd = QPoly::power(2) * kappa(d);
  const QPoly q2d = QPoly::power(2 * d);
  TruncSeries psi(M);
  psi.set_coeff(1, QPoly::one());
  for (int m = 1; m < M; ++m) {
    // Impose a vanishing residual coefficient at t^m; the unknown p_{m+1}
    // enters only through psi_t with multiplier m+1.
    TruncSeries fac = constant_series(M, QPoly::one()) +
                      q2d * TruncSeries::t(M) - q2kd * psi;
    TruncSeries dpsi(M);
    for (int k = 0; k < M; ++k)
      dpsi.set_coeff(k, Rat(k + 1) * psi.coeff(k + 1));
    const TruncSeries lhs_known = fac * dpsi;
    QPoly needed = psi.coeff(m);  // (1 + psi)_m for m >= 1
    needed -= lhs_known.coeff(m);
    psi.set_coeff(m + 1, make_rat(1, m + 1) * needed);
  }
  return psi;
}

TruncSeries verify_differential(int d, int M) {
  if (M < 2) throw BadParamsError("verify_differential needs order >= 2");
  const TruncSeries psi = psi_series(d, M);
  const int R = M - 1;
  const TruncSeries psi_r = psi.truncated(R);
  const TruncSeries dpsi = psi.derivative();  // order M-1
  const QPoly q2kd = QPoly::power(2) * kappa(d);
  TruncSeries factor = constant_series(R, QPoly::one()) +
                       QPoly::power(2 * d) * TruncSeries::t(R) - q2kd * psi_r;
  TruncSeries lhs = factor * dpsi;
  TruncSeries rhs = constant_series(R, QPoly::one()) + psi_r;
  return lhs - rhs;
}

TruncSeries verify_functional(int d, int M) {
  if (M < 2) throw BadParamsError("verify_functional needs order >= 2");
  const TruncSeries psi = psi_series(d, M);
  const QPoly kd = kappa(d);
  const QPoly q2d = QPoly::power(2 * d);
  const TruncSeries power = (q2d * psi.log1p()).exp();
  const TruncSeries lhs = kd * power;
  TruncSeries rhs = (QPoly::power(2 * d + 2) * kd) * psi;
  rhs -= (q2d * (q2d - QPoly::one())) * TruncSeries::t(M);
  rhs += constant_series(M, kd);
  return lhs - rhs;
}

TruncSeries euler_series(int d, int M) {
  const TruncSeries psi = psi_series(d, M);
  TruncSeries eta(M);
  for (int k = 0; k <= M; ++k)
    eta.set_coeff(k, QPoly(psi.coeff(k).eval(Rat(-1))));
  return eta;
}

EulerResiduals verify_euler(int d, int M) {
  if (M < 2) throw BadParamsError("verify_euler needs order >= 2");
  const TruncSeries eta = euler_series(d, M);
  const TruncSeries one = constant_series(M, QPoly::one());
  TruncSeries log_residual =
      QPoly(Rat(d)) * ((one + eta) * eta.log1p()) -
      (QPoly(Rat(d + 1)) * eta - TruncSeries::t(M));

  const int R = M - 1;
  const TruncSeries eta_r = eta.truncated(R);
  const TruncSeries one_r = constant_series(R, QPoly::one());
  TruncSeries diff_residual =
      (one_r + TruncSeries::t(R) - QPoly(Rat(d)) * eta_r) * eta.derivative() -
      (one_r + eta_r);
  return EulerResiduals{std::move(log_residual), std::move(diff_residual)};
}

Int euler_char(int d, int n) { return to_integer(poincare(d, n).eval(Rat(-1))); }

}  // namespace tdn
