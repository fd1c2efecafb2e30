#pragma once

#include "leala/linalg.hpp"
#include "leala/report.hpp"
#include "leala/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace leala {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Degree in the grading group, a finite integer vector. The optional tag
/// carries the scalar image of the degree when the grading group embeds
/// into the base field (loop constructions).
struct GradeLabel {
  std::vector<long long> coords;
  std::optional<Scalar> tag;

  GradeLabel() = default;
  explicit GradeLabel(std::vector<long long> c) : coords(std::move(c)) {}

  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }
  GradeLabel operator+(const GradeLabel& o) const;
  GradeLabel operator-() const;
  bool operator==(const GradeLabel& o) const { return coords == o.coords; }
  bool operator!=(const GradeLabel& o) const { return !(*this == o); }
  bool operator<(const GradeLabel& o) const { return coords < o.coords; }
  std::string to_string() const;
};

/// Functional on the truncated Cartan, as exact coordinates over its
/// ordered basis: coordinate k is the value on the k-th Cartan symbol.
using Weight = std::vector<Scalar>;

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

bool weight_is_zero(const Weight& w);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_negate(const Weight& a);
Weight weight_scale(const Weight& a, const Scalar& c);
std::string weight_to_string(const Weight& w);

struct BasisSymbol {
  std::string id;
  GradeLabel grade;
  Weight weight;
};

/// Sparse element of the algebra, keyed by basis identifier. No explicit
/// zero coefficients are stored.
using Vector = std::map<std::string, Scalar>;

Vector vector_add(const Vector& a, const Vector& b);
Vector vector_scale(const Vector& a, const Scalar& c);
bool vector_is_zero(const Vector& v);
std::string vector_to_string(const Vector& v);

enum class FieldKind { Q, Qt };

/// Per-coordinate bounds on grade labels plus free-form construction
/// parameters, recorded so every report can state the truncation it
/// was computed under.
struct Window {
  std::vector<long long> bounds; // empty = the algebra is fully materialized
  std::map<std::string, std::string> params;

  bool contains(const GradeLabel& g) const;
  std::string to_string() const;
  bool operator==(const Window& o) const {
    return bounds == o.bounds && params == o.params;
  }
};

/// Immutable basis-presented Lie algebra with grading, a distinguished
/// Cartan sub-basis and a symmetric form Gram table. Structure constants
/// are stored once per unordered pair, smaller identifier on the left.
class GradedAlgebra {
public:
  const std::vector<BasisSymbol>& basis() const { return basis_; }
  const BasisSymbol& symbol(const std::string& id) const;
  bool has_symbol(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;
  const std::vector<std::string>& cartan() const { return cartan_; }
  bool is_cartan(const std::string& id) const;
  const Window& window() const { return window_; }
  FieldKind field() const { return field_; }

  /// Bracket of two basis symbols. Empty optional means the product grade
  /// escapes the window, so the table is silent rather than zero.
  std::optional<Vector> bracket(const std::string& a, const std::string& b) const;
  std::optional<Vector> bracket(const Vector& x, const Vector& y) const;

  Scalar form(const std::string& a, const std::string& b) const;
  Scalar form(const Vector& x, const Vector& y) const;

  /// Weight of h = sum of Cartan symbols applied to the functional mu.
  Scalar evaluate_weight(const Weight& mu, const Vector& h) const;

  const std::map<std::pair<std::string, std::string>, Vector>& structure() const {
    return structure_;
  }
  const std::map<std::pair<std::string, std::string>, Scalar>& gram() const {
    return gram_;
  }

private:
  friend class AlgebraBuilder;
  std::vector<BasisSymbol> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> cartan_;
  std::map<std::pair<std::string, std::string>, Vector> structure_;
  std::map<std::pair<std::string, std::string>, Scalar> gram_;
  Window window_;
  FieldKind field_ = FieldKind::Q;
};

class AlgebraBuilder {
public:
  AlgebraBuilder& add_symbol(std::string id, GradeLabel grade, Weight weight);
  AlgebraBuilder& set_cartan(std::vector<std::string> ids);
  /// Bracket [a, b] = value; the pair is canonicalized internally.
  AlgebraBuilder& set_bracket(const std::string& a, const std::string& b,
                              Vector value);
  AlgebraBuilder& set_form(const std::string& a, const std::string& b,
                           Scalar value);
  AlgebraBuilder& set_window(Window w);
  AlgebraBuilder& set_field(FieldKind f);
  GradedAlgebra build();

private:
  GradedAlgebra a_;
};

/// Result of the admissibility check: the report plus, when (A3) holds,
/// the representative t_xi in H for every root xi.
struct AdmissibleResult {
  CheckReport report;
  std::map<Weight, Vector, WeightLess> representatives;
};

enum class CheckMode { exhaustive, sampled };

CheckReport check_jacobi(const GradedAlgebra& a,
                         CheckMode mode = CheckMode::exhaustive,
                         std::size_t samples = 0, unsigned seed = 0);
CheckReport check_invariance(const GradedAlgebra& a,
                             CheckMode mode = CheckMode::exhaustive,
                             std::size_t samples = 0, unsigned seed = 0);
AdmissibleResult check_admissible(const GradedAlgebra& a);

/// Structural sanity: every basis symbol is an ad-H eigenvector with its
/// declared weight, grades add under bracket, weights add under bracket,
/// the form is zero unless weights cancel, and [b,b] = 0.
CheckReport check_grading(const GradedAlgebra& a);

/// Groups the basis by weight. Throws AlgebraError if some symbol is not
/// an ad-H eigenvector (malformed input algebra).
std::map<Weight, std::vector<std::string>, WeightLess>
root_decomposition(const GradedAlgebra& a);

/// For every root xi != 0 and x in L_xi, y in L_{-xi}: [x,y] = B(x,y) t_xi.
CheckReport check_pairing_identity(const GradedAlgebra& a,
                                   const AdmissibleResult& adm);

} // namespace leala
