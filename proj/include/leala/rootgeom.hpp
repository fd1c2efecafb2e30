#pragma once

#include "leala/algebra.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace leala {

/// Roots of an algebra with the induced form (xi, eta) = B(t_xi, t_eta),
/// split into anisotropic and isotropic parts. Immutable once built.
struct RootDatum {
  std::vector<Weight> roots;              // canonical order
  std::set<Weight, WeightLess> anisotropic; // R^x
  std::set<Weight, WeightLess> isotropic;   // R^0 (contains 0)
  std::map<Weight, Vector, WeightLess> representatives; // t_xi in H
  std::vector<std::string> cartan_ids;
  ScalarMatrix gram;                      // induced form over `roots`
  std::map<Weight, GradeLabel, WeightLess> grades; // weight -> grade, when unique
  bool grades_reliable = true;
  Scalar scale = Scalar(1);               // u with B' = uB applied so far

  bool has_root(const Weight& w) const;
  std::size_t index(const Weight& w) const;
  Scalar induced(const Weight& a, const Weight& b) const;
  /// mu(h_alpha) = 2(mu, alpha)/(alpha, alpha) evaluated through the
  /// stored representative, so mu may be any weight, not only a root.
  Scalar eval_coroot(const Weight& mu, const Weight& alpha) const;
};

/// Requires a passed admissibility check (for the representatives).
RootDatum build_root_datum(const GradedAlgebra& a, const AdmissibleResult& adm);

struct ScaleResult {
  Scalar u = Scalar(1);
  RootDatum datum;
  CheckReport report;
};

/// Rescales the form so some anisotropic norm is 1 and all norms are
/// rational. No-op (u = 1) when the convention already holds or R^x is
/// empty.
ScaleResult scale_form(const RootDatum& d);

/// 2(xi,alpha)/(alpha,alpha); empty when not an integer.
std::optional<long long> cartan_integer(const RootDatum& d, const Weight& xi,
                                        const Weight& alpha);

CheckReport check_cartan_integrality(const RootDatum& d);
CheckReport check_bound(const RootDatum& d);

Weight reflect(const RootDatum& d, const Weight& alpha, const Weight& mu);

CheckReport check_reflection_closure(const RootDatum& d, const Window& w);

struct RootString {
  long long down = 0, up = 0;
  Verdict verdict = Verdict::pass;
  std::string note;
};

RootString root_string(const RootDatum& d, const Window& w, const Weight& xi,
                       const Weight& alpha);
CheckReport check_root_strings(const RootDatum& d, const Window& w);

struct Sl2Triplet {
  Vector x, h, y;
};
struct HeisenbergTriplet {
  Vector x, t, y;
};

/// Lexicographically first basis pair with nonzero pairing, normalized.
/// Throws AlgebraError when the pairing is degenerate in the window.
Sl2Triplet sl2_triplet(const RootDatum& d, const GradedAlgebra& a,
                       const Weight& alpha);
HeisenbergTriplet heisenberg_triplet(const RootDatum& d, const GradedAlgebra& a,
                                     const Weight& delta);

/// dim L_alpha = 1 for every anisotropic alpha.
CheckReport check_dim_one(const RootDatum& d, const GradedAlgebra& a);

/// Equal length: alpha+beta and alpha-beta both roots forces equal norms.
CheckReport check_equal_length(const RootDatum& d);

/// Only k = 0, +-1 give k*alpha in R for anisotropic alpha; probes
/// k in {+-2, +-3, +-1/2} within the window.
CheckReport check_root_multiples(const RootDatum& d, const Window& w);

/// R^x connected under (alpha, beta) != 0; vacuous pass when R^x empty.
CheckReport check_irreducible(const RootDatum& d);

/// (A4): ad x locally nilpotent for x in anisotropic root spaces.
CheckReport check_local_nilpotence(const RootDatum& d, const GradedAlgebra& a,
                                   std::size_t depth_bound);

/// (R, R^0) = 0: every induced pairing against an isotropic root vanishes.
CheckReport check_isotropic_orthogonal(const RootDatum& d);

/// After scaling: (gamma, gamma) > 0 for all anisotropic gamma.
CheckReport check_positive_norms(const RootDatum& d);

} // namespace leala
