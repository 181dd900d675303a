#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cnhom/chain.hpp"
#include "cnhom/face_complex.hpp"
#include "cnhom/integer.hpp"

namespace cnhom {

/** Position of a cycle's class against the generators of a homology group. */
struct ClassCoordinates {
  std::vector<Int> free;     // one coordinate per free generator
  std::vector<Int> torsion;  // residue in [0, order) per torsion generator

  bool all_zero() const;
  bool operator==(const ClassCoordinates&) const = default;
};

/** One conormal homology group with deterministic (not canonical) generators. */
struct HomologyGroup {
  int degree = 0;
  Eigen::Index free_rank = 0;
  std::vector<Int> invariant_factors;  // each > 1, each dividing the next
  std::vector<Chain> free_generators;
  std::vector<std::pair<Chain, Int>> torsion_generators;  // (generator, order)
};

/** All groups split by degree parity. */
struct PeriodicGroups {
  std::vector<HomologyGroup> even;  // degrees 0, 2, 4, ...
  std::vector<HomologyGroup> odd;   // degrees 1, 3, ...
};

/** Raised when an operation requiring a cycle receives a chain with nonzero
 *  boundary; carries the faces where the boundary does not vanish. */
class NotACycleError : public std::runtime_error {
 public:
  explicit NotACycleError(std::vector<FaceId> offending);
  const std::vector<FaceId>& offending_faces() const { return offending_; }

 private:
  std::vector<FaceId> offending_;
};

/**
 * Homology in degree p, computed from the integer kernel of the degree-p
 * boundary map modulo the image of the degree-(p+1) map, with the conventions
 * that the degree-0 map is zero and the map above the top codimension is
 * zero. Requires 0 <= p <= codim.
 */
HomologyGroup homology_group(const FaceComplex& x, int p);

/** Homology in every degree 0..codim. */
std::vector<HomologyGroup> all_homology(const FaceComplex& x);

/** The degreewise homology partitioned by parity. */
PeriodicGroups periodic_homology(const FaceComplex& x);

/** True iff the chain's boundary vanishes; degree-0 chains are always cycles. */
bool is_cycle(const FaceComplex& x, const Chain& c);

/**
 * A chain one degree up whose boundary is c, when one exists over the
 * integers. The input must be a cycle (NotACycleError otherwise). Above the
 * top codimension the image is zero, so the witness exists only for c = 0.
 */
std::optional<Chain> boundary_witness(const FaceComplex& x, const Chain& c);

/**
 * Coordinates of the cycle's class against the generators of
 * homology_group(x, c.degree). All-zero coordinates iff c is a boundary.
 */
ClassCoordinates homology_class(const FaceComplex& x, const Chain& c);

/** Human-readable isomorphism type, e.g. "0", "Z", "Z^2 ⊕ Z/2". */
std::string format_group(const HomologyGroup& g);

/** One homology group as JSON. */
nlohmann::ordered_json group_to_json(const HomologyGroup& g);

/** Full homology report: {"name", "codim", "groups": [...]} with degrees ascending. */
nlohmann::ordered_json homology_report(const FaceComplex& x);

}  // namespace cnhom
