#pragma once

#include "leala/scalar.hpp"

#include <optional>
#include <vector>

namespace leala {

/// Dense matrices over the working field. Everything here is exact; there
/// is no pivot-size heuristic because correctness only needs a nonzero
/// pivot and all entries are canonical.
using ScalarMatrix = std::vector<std::vector<Scalar>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(const ScalarMatrix& m);
std::size_t rank(const RationalMatrix& m);

Scalar determinant(ScalarMatrix m);

/// Reduced row echelon form, in place. Returns the pivot column of each
/// reduced row.
std::vector<std::size_t> rref(ScalarMatrix& m);

/// One solution of A x = b, if any.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a,
                                         const std::vector<Scalar>& b);

/// Basis of the right kernel of A.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& a);

bool is_invertible(const ScalarMatrix& m);

ScalarMatrix transpose(const ScalarMatrix& m);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
std::vector<Scalar> apply(const ScalarMatrix& a, const std::vector<Scalar>& x);

/// Rank of an integer matrix via fraction-free row reduction. Used on
/// denominator-cleared lattice data where the answer is a lattice rank.
std::size_t integer_rank(std::vector<std::vector<Int>> m);

} // namespace leala
