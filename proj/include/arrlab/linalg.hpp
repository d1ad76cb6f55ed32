#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrlab/rational.hpp"

namespace arrlab {

/// Reduces `rows` in place to reduced row echelon form (leading entries 1,
/// zero rows dropped). Returns the pivot column indices, whose count is the
/// rank.
std::vector<int> rref_inplace(RatMat& rows);

RatMat rref(RatMat rows);

int rank_of(const RatMat& rows);

/// Canonical text key of the row span: the RREF rows serialized. Equal keys
/// iff equal subspaces, so this is usable as a hash-map key for flats.
std::string rref_key(const RatMat& rref_rows);

/// True when v lies in the row span of `rref_rows` (which must be in RREF).
bool in_row_span(const RatMat& rref_rows, const RatVec& v);

/// Pairwise-orthogonal integer basis of the row span (Gram-Schmidt with the
/// fractions cleared at each step). Rows are primitive integer vectors; no
/// normalization is performed.
RatMat orthogonal_row_basis(const RatMat& rows);

/// Orthogonal projection of z onto the row span of `rows` (any spanning set).
RatVec project_onto_row_span(const RatMat& rows, const RatVec& z);

/// Solves the square system A x = b exactly. Empty result when A is singular.
std::optional<RatVec> solve_square(RatMat A, RatVec b);

/// Numeric row rank via modified Gram-Schmidt: rows are unit-normalized and a
/// row counts as independent when its residual after orthogonalization keeps
/// at least `tol` of its length.
int mgs_rank(const std::vector<std::vector<double>>& rows, double tol);

}  // namespace arrlab
