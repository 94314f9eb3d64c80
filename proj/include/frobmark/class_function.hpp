#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobmark/cyclo.hpp"
#include "frobmark/group.hpp"
#include "frobmark/linalg.hpp"

namespace frobmark {

/// Function on group elements with cyclotomic values (indexed by element, not class).
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclo> values;

  const Cyclo& operator()(int g) const { return values[static_cast<std::size_t>(g)]; }
  int order() const { return group->order(); }
  /// chi(e) as an integer; throws InvalidParameter unless it is a positive integer.
  int degree() const;
};

/// First pair (g, h) with chi(gh) != chi(hg), if any.
std::optional<std::pair<int, int>> trace_like_violation(const ClassFunction& chi);
bool is_trace_like(const ClassFunction& chi);

/// Pointwise sum; throws InvalidParameter when the groups differ.
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(GroupPtr group);

/// Explicit representation: one dim x dim matrix per element, mats[0] = I.
struct MatrixRep {
  GroupPtr group;
  int dim = 0;
  std::vector<CycloMatrix> mats;

  ClassFunction character() const;
};

/// Checks mats[0] = I and mats[i] * mats[j] = mats[ij]; throws ValidationError.
void validate_rep(const MatrixRep& rep);

/// Extends generator images multiplicatively over the Cayley table and validates.
MatrixRep rep_from_generators(GroupPtr group, const std::vector<int>& generators,
                              const std::vector<CycloMatrix>& images);

/// 1x1 representation of a linear character (chi(e) = 1, multiplicative).
MatrixRep rep_from_linear_character(const ClassFunction& chi);

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

/// Shipped faithful low-dimensional representations: "S3" (2-dim), "D4" (2-dim),
/// "Q8" (2-dim), "S4" (3-dim).
MatrixRep builtin_matrix_rep(const std::string& group_name);

}  // namespace frobmark
