#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnhom/chain.hpp"
#include "cnhom/face_complex.hpp"
#include "cnhom/homology.hpp"
#include "cnhom/integer.hpp"

namespace cnhom {

/**
 * Externally supplied index integers, one per face of a fixed degree. The
 * values are opaque inputs (suspended index data); nothing analytic is
 * computed from them.
 */
struct IndexAssignment {
  int degree = 0;
  std::map<FaceId, Int> values;
  std::string note;
};

enum class SfpStatus { not_a_cycle, sfp_holds, sfp_fails, trivially_holds };

std::string to_string(SfpStatus status);

/** Decision on the stable Fredholm perturbation obstruction. */
struct ObstructionVerdict {
  SfpStatus status = SfpStatus::trivially_holds;
  std::optional<Chain> witness;  // degree-3 chain bounding the index chain, when that proves SFP
  std::optional<ClassCoordinates> class_coordinates;  // obstruction class when SFP fails
  std::vector<std::string> warnings;
  std::vector<std::string> diagnostics;
};

/** Validated odd-degree index classes. */
struct OddIndexClass {
  int codim = 0;
  std::optional<Chain> top_cycle;  // top-degree kernel element (codim 1 and 3)
  std::optional<ClassCoordinates> h1_class;  // degree-1 homology class (codim 2 and 3)
};

/**
 * Faces of codimension p carried with nonzero coefficient by some integer
 * cycle, detected as the nonzero rows of a kernel basis (integer and rational
 * detection agree because the kernel basis is saturated). Requires
 * 1 <= p <= codim.
 */
std::vector<FaceId> corner_cycle_faces(const FaceComplex& x, int p);

/**
 * Faces of codimension p hit by some boundary from degree p+1, detected as
 * the nonzero rows of the degree-(p+1) boundary matrix; always a subset of
 * corner_cycle_faces. Requires 1 <= p <= codim; at p = codim the set is empty.
 */
std::vector<FaceId> boundary_touched_faces(const FaceComplex& x, int p);

/** The chain with coefficient idx(Y) on each face Y (canonical orientations).
 *  Throws std::invalid_argument on unknown faces or degree mismatches. */
Chain assemble_index_chain(const FaceComplex& x, const IndexAssignment& idx);

/** Warnings for nonzero values on faces that no integer cycle carries. */
std::vector<std::string> support_warnings(const FaceComplex& x, const IndexAssignment& idx);

/**
 * Fredholm-perturbation decision from a degree-2 index assignment, for
 * complexes of codimension 1 to 3 (std::invalid_argument otherwise):
 * codimension 1 always TRIVIALLY_HOLDS; codimension 2 holds iff the assembled
 * cycle is zero; codimension 3 holds iff it bounds, with the witness returned.
 * Non-cycle inputs yield the NOT_A_CYCLE verdict. When the decision is
 * negative the obstruction class in degree-2 homology is reported.
 */
ObstructionVerdict decide_sfp(const FaceComplex& x, const IndexAssignment& idx);

/**
 * Validates and reports the odd-degree classes for codimension 1 to 3:
 * codimension 1 uses idx_top (degree 1) as a kernel element and requires
 * idx_one empty; codimension 2 uses idx_one (degree 1) and ignores idx_top;
 * codimension 3 uses both (degrees 3 and 1). Non-cycle inputs throw
 * NotACycleError.
 */
OddIndexClass odd_index_class(const FaceComplex& x, const IndexAssignment& idx_top,
                              const IndexAssignment& idx_one);

/** Parses {"degree": int, "values": {face: int, ...}, "note": str}; the note
 *  is optional and unknown fields are rejected. Throws SyntaxError. */
IndexAssignment parse_index_assignment(const std::string& text);

/** Verdict document: {"status", "witness", "class", "warnings", "diagnostics"}. */
nlohmann::ordered_json verdict_json(const ObstructionVerdict& v);

/** Odd-class document: {"codim", "top_cycle", "h1_class"}. */
nlohmann::ordered_json odd_class_json(const OddIndexClass& oc);

}  // namespace cnhom
