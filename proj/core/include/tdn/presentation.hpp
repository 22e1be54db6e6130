#ifndef TDN_PRESENTATION_HPP
#define TDN_PRESENTATION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tdn/caps.hpp"
#include "tdn/cycle.hpp"
#include "tdn/subset.hpp"

namespace tdn {

namespace detail {

/// Sparse echelon basis over exact integers (fraction-free row
/// combinations, content-stripped).  Each stored row's leftmost column is
/// its pivot; pivots are distinct.  Rank and rational normal forms are
/// canonical regardless of insertion order.
class Echelon {
 public:
  /// Reduces the row against the basis; stores the remainder if nonzero.
  /// Returns true when a new pivot was added.
  bool insert(std::vector<std::pair<int, Int>> row);

  /// Eliminates every pivot column from v, leaving the canonical
  /// representative supported on non-pivot columns.
  void reduce(std::vector<std::pair<int, Rat>>& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }

 private:
  std::map<int, std::vector<std::pair<int, Int>>> rows_;
};

}  // namespace detail

/// One graded piece of the presented ring: the nested monomials of a fixed
/// degree together with the echelon of all relation rows landing in that
/// degree.  Built once, then immutable and freely shareable across
/// threads.
class GradedBasis {
 public:
  int degree() const { return degree_; }
  const std::vector<BoundaryMonomial>& monomials() const { return monomials_; }
  /// Index in the sorted monomial list; -1 if absent.
  int index_of(const BoundaryMonomial& m) const;
  int relation_rank() const { return echelon_.rank(); }
  /// Rank of the graded quotient piece.
  int rank() const {
    return static_cast<int>(monomials_.size()) - echelon_.rank();
  }
  bool is_pivot(int col) const { return echelon_.has_pivot(col); }
  /// Canonical normal form of a coefficient vector over this degree's
  /// monomials (sorted by column index).
  std::vector<std::pair<int, Rat>> reduce(
      std::vector<std::pair<int, Rat>> v) const;

 private:
  friend class RingPresentation;
  int degree_ = 0;
  std::vector<BoundaryMonomial> monomials_;
  detail::Echelon echelon_;
};

/// The presented Chow ring  Z[delta_S : S <= N, |S| >= 2] / I_{d,n},
/// graded by codimension (variables in degree 1).  The ideal is generated
/// by products of non-nested boundary classes and by the d-th powers of
/// the distinguished pair sums, so degree-k relations are exactly
/// generator times complementary-degree nested monomial -- no Groebner
/// machinery, per-degree exact elimination.  Immutable; graded pieces are
/// built lazily under a single-writer lock and safely shared afterwards.
class RingPresentation {
 public:
  /// Throws BadParamsError for d < 1 or n < 2, CapExceededError when
  /// d*n exceeds the configured cap.
  RingPresentation(int d, int n, Caps caps = {});

  int d() const { return d_; }
  int n() const { return n_; }
  /// Top codimension D = d(n-1) - 1, the dimension of the space.
  int top_degree() const { return top_; }
  /// All delta indices S with 2 <= |S| <= n, in variable order.
  const std::vector<Subset>& variables() const { return variables_; }
  Subset ground() const { return Subset::full(n_); }
  const Caps& caps() const { return caps_; }

  const GradedBasis& graded(int k) const;
  int rank(int k) const { return graded(k).rank(); }

  /// Canonical representative of c modulo the ideal, supported on the
  /// fixed complement of the relation space.  Requires homogeneous degree
  /// <= D (DegreeError otherwise).
  CycleClass normal_form(const CycleClass& c) const;
  bool is_zero(const CycleClass& c) const {
    return normal_form(c).is_zero();
  }

  /// Degree map on the top graded piece, normalized so that the top power
  /// of delta_N integrates to (-1)^D.  Requires degree exactly D; verifies
  /// once that the top piece has rank one and the normalizer is nonzero
  /// (NormalizationError otherwise -- an engine bug, never expected).
  Rat integrate(const CycleClass& c) const;

 private:
  const std::vector<BoundaryMonomial>& monomial_list_locked(int k) const;
  std::unique_ptr<GradedBasis> build_graded_locked(int k) const;
  void ensure_top_normalizer() const;

  int d_;
  int n_;
  int top_;
  Caps caps_;
  std::vector<Subset> variables_;

  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<std::vector<BoundaryMonomial>>>
      monomial_cache_;
  mutable std::map<int, std::unique_ptr<GradedBasis>> graded_cache_;
  mutable bool top_checked_ = false;
  mutable int top_basis_col_ = -1;
  mutable Rat top_normalizer_;
};

/// Spec-level constructor name.
inline RingPresentation build_presentation(int d, int n, Caps caps = {}) {
  return RingPresentation(d, n, caps);
}

}  // namespace tdn

#endif
