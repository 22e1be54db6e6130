#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tdn/errors.hpp"
#include "tdn/genfunc.hpp"
#include "tdn/motive.hpp"

using namespace tdn;

namespace {

LefschetzPoly lpoly(std::vector<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return LefschetzPoly(std::move(c));
}

}  // namespace

TEST_CASE("projective bundle ranks") {
  for (int d = 1; d <= 4; ++d)
    CHECK(proj_bundle(LefschetzPoly::one(), d) == LefschetzPoly::twist_block(d));
  CHECK(proj_bundle(lpoly({1, 1}), 2) == lpoly({1, 2, 1}));
  CHECK(proj_bundle(lpoly({1, 4, 1}), 1) == lpoly({1, 4, 1}));
}

TEST_CASE("blowup ranks") {
  // Plane blown up at a point.
  CHECK(blowup(lpoly({1, 1, 1}), LefschetzPoly::one(), 2) == lpoly({1, 2, 1}));
  // Divisorial centers change nothing.
  CHECK(blowup(lpoly({1, 2, 1}), lpoly({1, 1}), 1) == lpoly({1, 2, 1}));
  // Triple product of lines along the small diagonal.
  CHECK(blowup(lpoly({1, 3, 3, 1}), lpoly({1, 1}), 2) == lpoly({1, 4, 4, 1}));
}

TEST_CASE("tdn rank polynomials") {
  for (int d = 1; d <= 4; ++d)
    CHECK(tdn_ranks(d, 2) == LefschetzPoly::twist_block(d));
  CHECK(tdn_ranks(1, 3) == lpoly({1, 1}));
  CHECK(tdn_ranks(2, 3) == lpoly({1, 4, 4, 1}));
  CHECK_THROWS_AS(tdn_ranks(0, 3), BadParamsError);
  CHECK_THROWS_AS(tdn_ranks(1, 1), BadParamsError);
}

TEST_CASE("tdn ranks agree with the Betti recursion (two independent paths)") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 8; ++n) {
      const LefschetzPoly r = tdn_ranks(d, n);
      const QPoly P = poincare(d, n);
      CAPTURE(d);
      CAPTURE(n);
      CHECK(2 * r.degree() == P.degree());
      for (int i = 0; i <= r.degree(); ++i)
        CHECK(Rat(r.coeff(i)) == P.coeff(2 * i));
      CHECK(r.nonnegative());
      CHECK(r.palindromic());
    }
  }
}

TEST_CASE("fiber product ranks") {
  const LefschetzPoly base = lpoly({1, 1});
  const LefschetzPoly a = base * base;
  CHECK(fiber_product_ranks(LefschetzPoly::one(), lpoly({1, 1}), lpoly({1, 1})) ==
        lpoly({1, 2, 1}));
  CHECK(fiber_product_ranks(base, a, a) == base * base * base);
  CHECK_THROWS_AS(fiber_product_ranks(lpoly({1, 2}), lpoly({1, 1}), lpoly({1, 1})),
                  DivisionError);
}

TEST_CASE("cellular space catalog") {
  CHECK(CellularSpace::projective(2).poly == lpoly({1, 1, 1}));
  const CellularSpace p1xp1 =
      CellularSpace::product(CellularSpace::projective(1),
                             CellularSpace::projective(1));
  CHECK(p1xp1.dimension == 2);
  CHECK(p1xp1.poly == lpoly({1, 2, 1}));
  CHECK(CellularSpace::parse("P2").poly == lpoly({1, 1, 1}));
  CHECK(CellularSpace::parse("P1xP1").poly == lpoly({1, 2, 1}));
  CHECK_THROWS_AS(CellularSpace::parse("K3"), BadParamsError);
}

TEST_CASE("configuration space ranks") {
  const CellularSpace P1 = CellularSpace::projective(1);
  const CellularSpace P2 = CellularSpace::projective(2);
  CHECK(fm_ranks(P2, 1) == lpoly({1, 1, 1}));
  CHECK(fm_ranks(P1, 2) == lpoly({1, 2, 1}));
  CHECK(fm_ranks(P1, 3) == lpoly({1, 4, 4, 1}));
  CHECK(fm_ranks(P2, 2) == lpoly({1, 3, 4, 3, 1}));
  CHECK(fm_ranks(P2, 2).at_one() == 12);

  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(fm_ranks(P1, n).palindromic());
    CHECK(fm_ranks(P1, n).nonnegative());
    CHECK(fm_ranks(P1, n).degree() == n);
  }
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(fm_ranks(P2, n).palindromic());
    CHECK(fm_ranks(P2, n).degree() == 2 * n);
  }
  const CellularSpace p1xp1 = CellularSpace::product(P1, P1);
  CHECK(fm_ranks(p1xp1, 2).palindromic());

  CellularSpace opaque = P2;
  opaque.cellular = false;
  CHECK_THROWS_AS(fm_ranks(opaque, 2), NotCellularError);
  CHECK_NOTHROW(fm_ranks(opaque, 1));
  CHECK_THROWS_AS(fm_ranks(P2, 0), BadParamsError);
}

TEST_CASE("boundary divisor factorization") {
  const CellularSpace P1 = CellularSpace::projective(1);
  // The full-set divisor over X[1] is the parallelizable product shadow.
  for (int n = 2; n <= 5; ++n)
    CHECK(fm_boundary_ranks(P1, n, n) == P1.poly * tdn_ranks(1, n));
  CHECK(fm_boundary_ranks(P1, 3, 2) == fm_ranks(P1, 2) * tdn_ranks(1, 2));
  CHECK_THROWS_AS(fm_boundary_ranks(P1, 3, 1), BadParamsError);
}

TEST_CASE("Euler characteristics through the rank recursion") {
  // Evaluating at L = 1 must reproduce an Euler recursion whose T-factors
  // come from the generating-function module.
  for (const CellularSpace& X :
       {CellularSpace::projective(1), CellularSpace::projective(2)}) {
    const int d = X.dimension;
    const Int chiX = X.poly.at_one();
    std::vector<Int> chi(7);
    chi[1] = chiX;
    for (int m = 1; m < 6; ++m) {
      Int next = chi[m] * chiX;
      for (int s = 2; s <= m; ++s)
        next += binomial_int(m, s) * chi[m - s + 1] * euler_char(d, s) * d;
      next += Int(m) * chi[m] * (d - 1);
      chi[m + 1] = next;
    }
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(X.name);
      CAPTURE(n);
      CHECK(fm_ranks(X, n).at_one() == chi[n]);
    }
  }
}
