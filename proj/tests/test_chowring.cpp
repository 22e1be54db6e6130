#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/dense_oracle.hpp"
#include "tdn/errors.hpp"
#include "tdn/genfunc.hpp"
#include "tdn/presentation.hpp"

using namespace tdn;

namespace {

// Random homogeneous class of the given degree, built over all variables
// (non-nested supports included, exercising the quadratic relation drop).
CycleClass random_class(const RingPresentation& p, int degree,
                        std::mt19937_64& rng) {
  CycleClass out;
  const auto& vars = p.variables();
  for (int term = 0; term < 5; ++term) {
    std::vector<std::pair<Subset, int>> factors;
    int left = degree;
    while (left > 0) {
      const Subset s = vars[rng() % vars.size()];
      const int e = 1 + static_cast<int>(rng() % left);
      factors.emplace_back(s, e);
      left -= e;
    }
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = 1 + static_cast<long>(rng() % 3);
    out += make_rat(num, den) *
           CycleClass::monomial(BoundaryMonomial::make(factors));
  }
  return out;
}

}  // namespace

TEST_CASE("presentation shape") {
  {
    RingPresentation p(2, 2);
    CHECK(p.variables().size() == 1);
    CHECK(p.variables()[0] == Subset::of({1, 2}));
    CHECK(p.top_degree() == 1);
  }
  {
    RingPresentation p(1, 3);
    CHECK(p.variables().size() == 4);
    CHECK(p.top_degree() == 1);
    // Variable count is 2^n - n - 1.
    RingPresentation q(1, 5);
    CHECK(q.variables().size() == (1u << 5) - 5 - 1);
  }
  {
    RingPresentation p(1, 2);
    CHECK(p.variables().size() == 1);
    CHECK(p.top_degree() == 0);  // a point
  }
  CHECK_THROWS_AS(RingPresentation(0, 3), BadParamsError);
  CHECK_THROWS_AS(RingPresentation(1, 1), BadParamsError);
  CHECK_THROWS_AS(RingPresentation(4, 4), CapExceededError);
  Caps loose;
  loose.max_dn = 16;
  CHECK_NOTHROW(RingPresentation(4, 4, loose));
}

TEST_CASE("graded pieces: frozen examples") {
  {
    RingPresentation p(1, 3);
    const GradedBasis& g = p.graded(1);
    CHECK(g.monomials().size() == 4);
    CHECK(g.relation_rank() == 3);  // delta_ij + delta_N for the 3 pairs
    CHECK(g.rank() == 1);
  }
  {
    RingPresentation p(2, 2);
    const GradedBasis& g = p.graded(2);
    CHECK(g.monomials().size() == 1);  // delta_N^2
    CHECK(g.relation_rank() == 1);     // (Sigma_12)^2
    CHECK(g.rank() == 0);              // degree 2 > D = 1
  }
  {
    RingPresentation p(1, 4);
    CHECK(p.rank(1) == 5);
  }
}

TEST_CASE("rank examples and degenerate degrees") {
  CHECK(RingPresentation(2, 2).rank(1) == 1);
  {
    RingPresentation p(2, 3);
    CHECK(p.rank(0) == 1);
    CHECK(p.rank(1) == 4);
    CHECK(p.rank(2) == 4);
    CHECK(p.rank(3) == 1);
    CHECK(p.rank(p.top_degree() + 1) == 0);
  }
  CHECK(RingPresentation(1, 3).rank(2) == 0);
  CHECK(RingPresentation(1, 4).rank(3) == 0);
}

TEST_CASE("normal form: vanishing and reduction") {
  // Overlapping non-nested supports die in any presentation.
  for (auto [d, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{1, 4}}) {
    RingPresentation p(d, n);
    const CycleClass c =
        CycleClass::delta(Subset::of({1, 2})) * CycleClass::delta(Subset::of({2, 3}));
    CHECK(p.normal_form(c).is_zero());
  }
  {
    // delta_S * delta_N^(d(n-|S|)) = 0.
    RingPresentation p(2, 3);
    const CycleClass c = CycleClass::delta(Subset::of({1, 2})) *
                         CycleClass::delta(p.ground(), 2);
    CHECK(p.is_zero(c));
  }
  {
    // d = 1: delta_ij + delta_N is a relation.
    RingPresentation p(1, 3);
    const CycleClass c =
        CycleClass::delta(Subset::of({1, 2})) + CycleClass::delta(p.ground());
    CHECK(p.is_zero(c));
    CHECK_FALSE(p.is_zero(CycleClass::delta(p.ground())));
  }
}

TEST_CASE("normal form rejects out-of-range degrees and foreign sets") {
  RingPresentation p(1, 3);
  CHECK_THROWS_AS(p.normal_form(CycleClass::delta(p.ground(), 2)), DegreeError);
  CHECK_THROWS_AS(p.normal_form(CycleClass::delta(Subset::of({1, 4}))),
                  BadSubsetError);
  CHECK_THROWS_AS(p.integrate(CycleClass::delta(p.ground(), 5)), DegreeError);
}

TEST_CASE("integrate: frozen base cases") {
  CHECK(RingPresentation(2, 2).integrate(
            CycleClass::delta(Subset::of({1, 2}))) == Rat(-1));
  {
    RingPresentation p(1, 3);
    CHECK(p.integrate(CycleClass::delta(p.ground())) == Rat(-1));
  }
  {
    RingPresentation p(1, 4);
    CHECK(p.integrate(CycleClass::delta(p.ground(), 2)) == Rat(1));
  }
  {
    // Dimension-zero space: integration is evaluation of the constant.
    RingPresentation p(1, 2);
    CHECK(p.integrate(CycleClass::unit()) == Rat(1));
  }
}

TEST_CASE("integrate agrees with the dense oracle and is linear") {
  std::mt19937_64 rng(811001u);
  for (auto [d, n] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 2},
                      std::pair{2, 3}}) {
    CAPTURE(d);
    CAPTURE(n);
    RingPresentation p(d, n);
    testing::DenseRing oracle(d, n);
    for (int k = 0; k <= p.top_degree() + 1; ++k)
      CHECK(p.rank(k) == oracle.rank(k));

    const int D = p.top_degree();
    for (int trial = 0; trial < 8; ++trial) {
      const CycleClass a = random_class(p, D, rng);
      const CycleClass b = random_class(p, D, rng);
      CHECK(p.integrate(a) == oracle.integrate(a));
      const Rat alpha = make_rat(static_cast<long>(rng() % 7) - 3,
                                 1 + static_cast<long>(rng() % 4));
      const CycleClass combo = alpha * a + b;
      CHECK(p.integrate(combo) == alpha * p.integrate(a) + p.integrate(b));
    }
  }
}

TEST_CASE("ranks are Poincare-dual and match the Betti polynomial") {
  for (auto [d, n] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{1, 5},
                      std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    CAPTURE(d);
    CAPTURE(n);
    RingPresentation p(d, n);
    const int D = p.top_degree();
    CHECK(p.rank(0) == 1);
    CHECK(p.rank(D) == 1);
    const QPoly P = poincare(d, n);
    for (int k = 0; k <= D; ++k) {
      CHECK(p.rank(k) == p.rank(D - k));
      CHECK(Rat(p.rank(k)) == P.coeff(2 * k));
    }
  }
}

TEST_CASE("vanishing and reduction lemmas at small parameters") {
  for (auto [d, n] : {std::pair{2, 3}, std::pair{1, 4}, std::pair{1, 5}}) {
    CAPTURE(d);
    CAPTURE(n);
    RingPresentation p(d, n);
    const Subset N = p.ground();
    const int D = p.top_degree();

    // delta_S * delta_N^(d(n-|S|)) = 0 wherever the degree is valid.
    for (Subset s : p.variables()) {
      if (s == N) continue;
      const int e = d * (n - s.size());
      if (1 + e > D) continue;
      CHECK(p.is_zero(CycleClass::delta(s) * CycleClass::delta(N, e)));
    }

    // Interval classes delta_j = delta_{1..j} squish to the top power.
    for (int j = 2; j <= n - 1; ++j) {
      CycleClass lhs = CycleClass::delta(N, d * (n - j) - 1);
      for (int i = 2; i <= j; ++i) {
        std::vector<int> elems;
        for (int e = 1; e <= i; ++e) elems.push_back(e);
        lhs = lhs * CycleClass::delta(Subset::from_elements(elems, n), d);
      }
      const Rat expected =
          ((j - 1) % 2 == 0 ? Rat(1) : Rat(-1)) *
          p.integrate(CycleClass::delta(N, D));
      CHECK(p.integrate(lhs) == expected);
    }
  }
}

TEST_CASE("monomial cap is honored") {
  Caps tight;
  tight.max_monomials = 2;
  RingPresentation p(1, 4, tight);
  CHECK_THROWS_AS(p.rank(2), CapExceededError);
}
