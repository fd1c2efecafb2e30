#pragma once

#include "leala/algebra.hpp"

#include <map>
#include <vector>

namespace leala {

enum class Series { A, B, C, D };

std::string series_name(Series s);

/// Finite truncation of one of the four matrix families. For series A the
/// rank r algebra is sl(r+1); for B it is o(2r+1), C is sp(2r), D is o(2r).
struct SimpleType {
  Series series = Series::A;
  std::size_t rank = 1;
};

/// Free abelian grading group Z^k together with the scalar images of its
/// basis under the homomorphism phi, and a coordinate window bound.
struct GroupDatum {
  std::size_t generators = 1;
  std::vector<Scalar> phi_values;
  long long window = 1;
};

/// Finite description of an infinite diagonal: explicit leading entries,
/// then entry(i) = intercept + slope * i. For series A the tail must not
/// be eventually constant (slope != 0); for B/C/D the pattern describes
/// the first index block and is mirrored with opposite sign.
struct DiagonalPattern {
  std::vector<Scalar> head;
  Scalar intercept = Scalar(0);
  Scalar slope = Scalar(0);

  Scalar entry(std::size_t i) const; // 1-based
};

GradedAlgebra build_split_simple(const SimpleType& t);

/// Loop extension (g tensor the group algebra of Z^k) + central c + the
/// degree derivation attached to phi. Dependent phi values are refused
/// unless allow_dependent_phi is set (negative-control builds); window 0
/// collapses the derivation action and is refused unless
/// allow_degenerate_window is set.
GradedAlgebra build_loop_eala(const SimpleType& g, const GroupDatum& lambda,
                              bool allow_dependent_phi = false,
                              bool allow_degenerate_window = false);

/// Null system on a hyperbolic plane Fc + Fd: for each nonzero degree
/// delta in S, dims(delta) pairwise-paired vectors with
/// [x, y] = B(phi(delta) x, y) c and [d, x] = phi(delta) x.
/// S must be symmetric and contain 0, with dims(delta) = dims(-delta).
GradedAlgebra
build_heisenberg_null(const GroupDatum& lambda,
                      const std::vector<std::vector<long long>>& s,
                      const std::map<std::vector<long long>, std::size_t>& dims);

enum class WittCocycle { trivial, moody_rao };

/// Divergence-zero Witt vector fields in n >= 2 variables paired with
/// their restricted duals, graded by Z^n inside the given window. The
/// moody_rao variant twists the vector-field bracket by the 2-cocycle
/// tau(t^a d, t^b d') = d'(a) d(b) t^{a+b} c_{a-b}.
GradedAlgebra build_witt_null(std::size_t n, long long window,
                              WittCocycle cocycle);

/// Ladder of matrix algebras g + diagonal derivations D + central Z with
/// form u * trace on the matrix part and psi on D + Z. One algebra per
/// rank, ordered by inclusion; the pattern data is kept for the
/// outer-derivation stabilization test.
struct Tower {
  Series series = Series::A;
  std::vector<std::size_t> ranks;
  std::vector<GradedAlgebra> levels;
  std::vector<DiagonalPattern> patterns;
  std::size_t z_dim = 0;
  Scalar u = Scalar(1);
  ScalarMatrix psi;
};

Tower build_nullity_zero(Series series, const std::vector<std::size_t>& ranks,
                         const std::vector<DiagonalPattern>& patterns,
                         std::size_t z_dim, const Scalar& u,
                         const ScalarMatrix& psi);

/// Loop algebra of sl2 glued to a Heisenberg-type family sharing c and d:
/// the null directions centralize the loop part, so the result is
/// indecomposable but not tame. null_bound = 0 degenerates to the plain
/// loop algebra.
GradedAlgebra build_indecomposable_not_tame(long long loop_window = 2,
                                            long long null_bound = 1);

} // namespace leala
