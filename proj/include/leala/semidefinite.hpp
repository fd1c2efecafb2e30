#pragma once

#include "leala/rootgeom.hpp"

#include <functional>
#include <set>

namespace leala {

/// Q-span of the observed roots: a deterministic maximal independent
/// subset (greedy in canonical root order) with the induced-form Gram,
/// plus the rational coordinates of every root in that basis.
struct RootLattice {
  std::vector<Weight> spanning;
  RationalMatrix gram;
  std::map<Weight, std::vector<Rational>, WeightLess> coords;
};

/// Throws AlgebraError if an induced-form entry is not rational (run
/// scale_form first when R^x is nonempty).
RootLattice build_lattice(const RootDatum& d);

/// Exact LDL^T with symmetric pivoting. When psd is false the witness w
/// satisfies w^T G w < 0. perm lists the pivot order over the original
/// indices; lower is unit lower triangular in pivoted order; recomposition
/// L D L^T = P G P^T is exact and checkable.
struct PsdCertificate {
  bool psd = true;
  std::vector<std::size_t> perm;
  std::vector<Rational> diag;
  RationalMatrix lower;
  std::vector<Rational> witness;
};

PsdCertificate certify_psd(const RationalMatrix& gram);
bool verify_psd_certificate(const RationalMatrix& gram,
                            const PsdCertificate& cert);

/// Image of the root span modulo the radical. Quotient coordinates are
/// taken over complement representatives chosen among the spanning roots,
/// so form_bar is a Gram submatrix.
struct QuotientSystem {
  std::vector<std::size_t> complement; // spanning indices representing V-bar
  RationalMatrix form_bar;
  std::map<Weight, std::vector<Rational>, WeightLess> classes;
  std::set<std::vector<Rational>> roots_bar;
};

struct RadicalReport {
  std::vector<std::vector<Rational>> radical_basis;
  std::size_t nullity = 0;
  PsdCertificate psd;
  QuotientSystem quotient;
};

RadicalReport radical_and_nullity(const RootLattice& l);

/// Locally finite irreducible root system axioms for the quotient at the
/// window: isotropic classes collapse to 0, positive norms, integral
/// Cartan quotients, reflection closure, irreducibility.
CheckReport check_quotient_root_system(const RadicalReport& r,
                                       const RootLattice& l,
                                       const RootDatum& d);

struct NullRankReport {
  std::size_t rank = 0;
  std::string caveat; // the rank is of the observed subgroup only
};

NullRankReport null_rank(const RootDatum& d, const RootLattice& l);

/// Constructive nondegenerate extension: given the ambient Gram (must be
/// nondegenerate) and a subspace Y (rows = rational coordinate vectors),
/// returns a basis of a Y-containing subspace on which the form restricts
/// nondegenerately. Y itself is returned when already nondegenerate.
std::vector<std::vector<Rational>>
nondegenerate_hull(const RationalMatrix& ambient_gram,
                   std::vector<std::vector<Rational>> y);

struct SubsystemResult {
  std::set<std::vector<Rational>> roots;
  CheckReport report;
};

/// (Q-span of M) intersected with the quotient roots.
SubsystemResult full_subsystem(const QuotientSystem& q,
                               const std::vector<std::vector<Rational>>& m);

/// Standalone root-system axioms for a set of anisotropic vectors with a
/// given form: nonzero norms, integral Cartan quotients with the Schwarz
/// bound |...| <= 4, reflection closure, irreducibility.
CheckReport check_lears(
    const std::vector<Weight>& roots,
    const std::function<Scalar(const Weight&, const Weight&)>& form);

} // namespace leala
