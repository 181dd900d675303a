#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cnhom {

using FaceId = std::string;

/** A connected face, identified by label, with its set of hyperface indices. */
struct Face {
  FaceId id;
  std::vector<int> index_set;  // strictly increasing, entries in [1, num_hyperfaces]

  int codim() const { return static_cast<int>(index_set.size()); }
  bool operator==(const Face&) const = default;
};

/** Containment of a codim-p face in the closure of a codim-(p-1) face. */
struct Incidence {
  FaceId sub;
  FaceId super;
  int dropped_index = 0;  // the unique element of I(sub) \ I(super); derived, never stored

  bool operator==(const Incidence&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/** Malformed document: bad syntax or schema. The message reports the position or field. */
class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Structurally well-formed complex that violates the validation rules. */
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/**
 * Combinatorial description of a manifold with embedded corners: faces with
 * hyperface index sets plus the face-containment incidences. Immutable after
 * construction; construction canonicalizes order (faces by label, incidences
 * by sub then super label) and derives dropped indices, but does not validate.
 */
class FaceComplex {
 public:
  FaceComplex(std::string name, int num_hyperfaces, std::vector<Face> faces,
              std::vector<Incidence> incidences);

  const std::string& name() const { return name_; }
  int num_hyperfaces() const { return num_hyperfaces_; }
  /** Largest face codimension (0 for a complex without faces). */
  int codim() const { return codim_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Incidence>& incidences() const { return incidences_; }

  bool has_face(const FaceId& id) const;
  const Face& face(const FaceId& id) const;  // throws std::invalid_argument

  /** Labels of the codim-p faces in lexicographic order; this order fixes all
   *  matrix row/column indexing. Throws std::out_of_range unless 0 <= p <= codim(). */
  std::vector<FaceId> faces_of_codim(int p) const;

  /** All (super face, dropped index) pairs of f, sorted by super label.
   *  Throws std::invalid_argument for an unknown face. */
  std::vector<std::pair<FaceId, int>> supers_of(const FaceId& f) const;

  /** The unique super of f obtained by dropping index i, when exactly one
   *  incidence provides it. */
  std::optional<FaceId> super_by_dropped(const FaceId& f, int i) const;

  /** All supers recorded for (f, i); validation uses the multiplicity. */
  std::vector<FaceId> supers_multi(const FaceId& f, int i) const;

  bool operator==(const FaceComplex& other) const;

 private:
  std::string name_;
  int num_hyperfaces_ = 0;
  int codim_ = 0;
  std::vector<Face> faces_;
  std::vector<Incidence> incidences_;
  std::map<FaceId, std::size_t> face_index_;
  std::map<std::pair<FaceId, int>, std::vector<FaceId>> supers_;
};

/**
 * Checks every validation rule and reports all violations: unique nonempty
 * labels, well-formed index sets, exactly one codimension-0 face (relaxed to
 * at least one when allow_disconnected), one-index-drop containment, exactly
 * one incidence per (face, dropped index), and the diamond condition.
 */
ValidationReport validate(const FaceComplex& x, bool allow_disconnected = false);

/**
 * Parses and validates a face-complex document. Throws SyntaxError on
 * malformed JSON or schema violations, ValidationError when validation fails.
 */
FaceComplex parse_complex(const std::string& text, bool allow_disconnected = false);

/** Canonical document: fixed field order, faces and incidences sorted.
 *  Serializing a parsed document is byte-stable. */
std::string serialize(const FaceComplex& x);

}  // namespace cnhom
