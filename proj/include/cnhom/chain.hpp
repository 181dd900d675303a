#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnhom/face_complex.hpp"
#include "cnhom/integer.hpp"

namespace cnhom {

/**
 * Integer chain in a fixed degree over the canonical basis {f tensor eps_f},
 * where eps_f is the increasing wedge of the conormal generators of f. Only
 * nonzero coefficients are stored.
 */
struct Chain {
  int degree = 0;
  std::map<FaceId, Int> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const Chain&) const = default;
};

/** Boundary map matrix together with the face labels fixing its basis order. */
struct BoundaryMatrix {
  IntMatrix mat;
  std::vector<FaceId> row_labels;  // codim p-1 faces
  std::vector<FaceId> col_labels;  // codim p faces
};

/**
 * Koszul sign of contracting e_i out of the increasing wedge over index_set:
 * (-1)^(k-1) where i is the k-th smallest element. Throws
 * std::invalid_argument when i is not in the set.
 */
int contraction_sign(const std::vector<int>& index_set, int i);

/**
 * Matrix of the degree-p boundary map: rows indexed by faces_of_codim(p-1),
 * columns by faces_of_codim(p); entry (g, f) is the contraction sign of the
 * dropped index when the incidence (f, g) exists, else 0. Requires
 * 1 <= p <= codim (std::out_of_range otherwise).
 */
BoundaryMatrix boundary_matrix(const FaceComplex& x, int p);

/** Boundary of a chain (degree drops by one). Requires degree >= 1 and all
 *  keys naming faces of the chain's degree. */
Chain boundary_of(const FaceComplex& x, const Chain& c);

/** Coefficientwise sum; degrees must agree. */
Chain chain_add(const Chain& a, const Chain& b);

/** Scalar multiple. */
Chain chain_scale(const Int& n, const Chain& a);

/** Chain from a coefficient vector over an ordered face basis. */
Chain chain_from_vector(int degree, const std::vector<FaceId>& basis, const IntVector& v);

/** Coefficient vector of a chain over an ordered face basis. Throws
 *  std::invalid_argument when the chain carries a face outside the basis. */
IntVector chain_to_vector(const Chain& c, const std::vector<FaceId>& basis);

/** Human-readable form, e.g. "v13 - v14 + 2*v24"; the zero chain prints "0". */
std::string format_chain(const Chain& c);

/** Face-to-coefficient JSON object with keys in label order. */
nlohmann::ordered_json chain_to_json(const Chain& c);

}  // namespace cnhom
