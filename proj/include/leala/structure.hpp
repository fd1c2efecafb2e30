#pragma once

#include "leala/constructions.hpp"
#include "leala/semidefinite.hpp"

#include <set>

namespace leala {

/// Subalgebra generated by the anisotropic root spaces. The closure is
/// computed inside the window; brackets that escape it are skipped and
/// counted in notes. members is only filled when the closure is spanned
/// by basis symbols (true for every factory construction).
struct CoreData {
  std::set<std::string> members;
  std::set<std::string> seeds; // symbols sitting in anisotropic spaces
  bool basis_aligned = true;
  std::size_t span_dim = 0;
  std::vector<std::string> notes;
};

CoreData core(const GradedAlgebra& a, const RootDatum& d);

/// Double grading of the core by (root class mod radical, degree):
/// anisotropic slots are one-dimensional, ad h_alpha acts by the Cartan
/// integer, and the zero-class part is spanned by opposite-class brackets.
CheckReport check_lie_torus_grading(const GradedAlgebra& a, const CoreData& c,
                                    const RootDatum& d);

/// Weight-homogeneous basis of the centralizer of span(gens), solved one
/// weight class at a time. Equations whose brackets escape the window are
/// dropped (per class and generator), so the result contains the true
/// centralizer; dropped counts go to notes.
std::vector<Vector> centralizer(const GradedAlgebra& a,
                                const std::vector<Vector>& gens,
                                std::vector<std::string>* notes = nullptr);

/// Centralizer of the whole algebra.
std::vector<Vector> center(const GradedAlgebra& a,
                           std::vector<std::string>* notes = nullptr);

/// Tame: the centralizer of the core lies inside the core.
struct TamenessResult {
  CoreData core;
  std::vector<Vector> centralizer;
  CheckReport report;
};

TamenessResult check_tame(const GradedAlgebra& a, const RootDatum& d);

enum class DecompositionStatus { indecomposable, decomposable, inconclusive };

/// Orthogonal-ideal-pair search. Root spaces are atomic (a root space
/// never splits across a decomposition), so candidate splits are
/// 2-colourings of the bracket/form connectivity atoms plus an interval
/// search for the Cartan split. decomposable comes with a fully verified
/// witness; indecomposable means every colouring was refuted.
struct DecompositionResult {
  DecompositionStatus status = DecompositionStatus::inconclusive;
  std::vector<Vector> factor_h;            // Cartan part of the witness factor
  std::vector<std::string> factor_symbols; // root-space symbols of the factor
  std::vector<std::string> notes;
};

DecompositionResult check_decomposable(const GradedAlgebra& a,
                                       const RootDatum& d);

/// L = core + D + Z with D a toral complement of (H cap core) + Z in H;
/// checks the spans fill L and that core + D is centreless. Throws unless
/// the induced form has nullity 0.
struct NullityZeroSplit {
  std::vector<std::string> core_ids;
  std::vector<Vector> d_part;
  std::vector<Vector> z_part;
  CheckReport report;
};

NullityZeroSplit split_nullity_zero(const GradedAlgebra& a, const RootDatum& d);

/// For a symmetric invariant form sigma (dense over the basis order) that
/// is nonzero on the core: rad sigma must lie in the center. Throws when
/// sigma is not symmetric or vanishes identically on the core; an
/// invariance violation fails the report.
CheckReport check_radical_in_center(const GradedAlgebra& a,
                                    const ScalarMatrix& sigma,
                                    const CoreData& c);

/// Per-level trace of the diagonal derivation of a tower. At each finite
/// level the derivation is inner (inner_diagonal realizes it inside the
/// level Cartan); the derivation survives to the limit as an outer one
/// exactly when no scalar shift makes the truncations eventually agree,
/// which is detected by the mode-corrected diagonal failing to repeat
/// over three consecutive levels.
struct TowerLevelTrace {
  std::size_t rank = 0;
  std::size_t size = 0; // matrix size at this level
  std::vector<Scalar> inner_diagonal;
  std::vector<Scalar> corrected_diagonal;
  std::size_t support_size = 0; // nonzero raw diagonal entries
};

struct TowerTrace {
  std::vector<TowerLevelTrace> levels; // for the first pattern
  bool stabilized = false;             // over all patterns
  std::string note;
};

TowerTrace outer_tower_test(const Tower& t);

/// Identifies the quotient root system by rank, cardinality and length
/// data. Low-rank coincidences are reported as label sets (B2/C2, A3/D3);
/// a root with its double present flags a nonreduced BC system.
struct TypeRecognition {
  std::set<std::string> labels;
  bool nonreduced = false;
  std::string note;
};

TypeRecognition recognize_finite_type(const QuotientSystem& q);

} // namespace leala
