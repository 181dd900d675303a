#include "cnhom/obstruction.hpp"

#include <algorithm>
#include <climits>

#include "cnhom/zlinalg.hpp"

namespace cnhom {

namespace {

using nlohmann::ordered_json;

std::vector<FaceId> nonzero_rows(const IntMatrix& m, const std::vector<FaceId>& row_labels) {
  std::vector<FaceId> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (Eigen::Index j = 0; j < m.cols() && !nonzero; ++j)
      if (m(i, j) != 0) nonzero = true;
    if (nonzero) out.push_back(row_labels[static_cast<std::size_t>(i)]);
  }
  return out;
}

void check_degree_range(const FaceComplex& x, int p) {
  if (p < 1 || p > x.codim())
    throw std::out_of_range("codimension " + std::to_string(p) + " outside [1, " +
                            std::to_string(x.codim()) + "]");
}

nlohmann::ordered_json class_json(const ClassCoordinates& cc) {
  ordered_json j;
  j["free"] = ordered_json::array();
  for (const Int& v : cc.free) j["free"].push_back(to_long(v));
  j["torsion"] = ordered_json::array();
  for (const Int& v : cc.torsion) j["torsion"].push_back(to_long(v));
  return j;
}

}  // namespace

std::string to_string(SfpStatus status) {
  switch (status) {
    case SfpStatus::not_a_cycle: return "NOT_A_CYCLE";
    case SfpStatus::sfp_holds: return "SFP_HOLDS";
    case SfpStatus::sfp_fails: return "SFP_FAILS";
    case SfpStatus::trivially_holds: return "TRIVIALLY_HOLDS";
  }
  return "UNKNOWN";
}

std::vector<FaceId> corner_cycle_faces(const FaceComplex& x, int p) {
  check_degree_range(x, p);
  BoundaryMatrix bm = boundary_matrix(x, p);
  IntMatrix kernel = zlinalg::kernel_basis(bm.mat);
  return nonzero_rows(kernel, bm.col_labels);
}

std::vector<FaceId> boundary_touched_faces(const FaceComplex& x, int p) {
  check_degree_range(x, p);
  if (p == x.codim()) return {};  // the boundary map from above is zero
  BoundaryMatrix bm = boundary_matrix(x, p + 1);
  return nonzero_rows(bm.mat, bm.row_labels);
}

Chain assemble_index_chain(const FaceComplex& x, const IndexAssignment& idx) {
  Chain c;
  c.degree = idx.degree;
  for (const auto& [id, value] : idx.values) {
    const Face& f = x.face(id);  // throws on unknown faces
    if (f.codim() != idx.degree)
      throw std::invalid_argument("index assignment of degree " + std::to_string(idx.degree) +
                                  " names face " + id + " of codimension " +
                                  std::to_string(f.codim()));
    if (value != 0) c.coeffs[id] = value;
  }
  return c;
}

std::vector<std::string> support_warnings(const FaceComplex& x, const IndexAssignment& idx) {
  std::vector<std::string> warnings;
  if (idx.degree < 1 || idx.degree > x.codim()) return warnings;
  std::vector<FaceId> cycle_faces = corner_cycle_faces(x, idx.degree);
  for (const auto& [id, value] : idx.values) {
    if (value == 0) continue;
    if (!std::binary_search(cycle_faces.begin(), cycle_faces.end(), id))
      warnings.push_back("face " + id + " has nonzero index but belongs to no corner cycle");
  }
  return warnings;
}

ObstructionVerdict decide_sfp(const FaceComplex& x, const IndexAssignment& idx) {
  const int d = x.codim();
  if (d < 1 || d > 3)
    throw std::invalid_argument("perturbation decision supports codimension 1 to 3, got " +
                                std::to_string(d));
  if (idx.degree != 2)
    throw std::invalid_argument("perturbation decision needs a degree-2 index assignment, got degree " +
                                std::to_string(idx.degree));

  ObstructionVerdict v;
  if (d == 1) {
    // No codimension-2 faces exist, so the assignment must be empty.
    if (!idx.values.empty())
      throw std::invalid_argument("codimension-1 complex has no codimension-2 faces");
    v.status = SfpStatus::trivially_holds;
    v.diagnostics.push_back("codimension 1: the even obstruction vanishes identically");
    return v;
  }

  Chain c = assemble_index_chain(x, idx);
  v.warnings = support_warnings(x, idx);

  Chain boundary = c.is_zero() ? Chain{1, {}} : boundary_of(x, c);
  if (!boundary.is_zero()) {
    v.status = SfpStatus::not_a_cycle;
    for (const auto& [id, coeff] : boundary.coeffs)
      v.diagnostics.push_back("nonzero boundary coefficient on " + id + ": " + coeff.get_str());
    return v;
  }

  if (d == 2) {
    if (c.is_zero()) {
      v.status = SfpStatus::sfp_holds;
      v.diagnostics.push_back("index chain is zero");
    } else {
      v.status = SfpStatus::sfp_fails;
      v.class_coordinates = homology_class(x, c);
      v.diagnostics.push_back(
          "codimension 2: every degree-2 cycle is its own homology class, so a nonzero index chain obstructs");
    }
    return v;
  }

  // d == 3: the chain must bound from degree 3.
  std::vector<FaceId> cycle_faces = corner_cycle_faces(x, 2);
  std::vector<FaceId> touched = boundary_touched_faces(x, 2);
  std::vector<FaceId> untouched_support;
  for (const auto& [id, coeff] : c.coeffs) {
    (void)coeff;
    if (std::binary_search(cycle_faces.begin(), cycle_faces.end(), id) &&
        !std::binary_search(touched.begin(), touched.end(), id))
      untouched_support.push_back(id);
  }

  std::optional<Chain> witness = boundary_witness(x, c);
  if (witness) {
    v.status = SfpStatus::sfp_holds;
    v.witness = witness;
    v.diagnostics.push_back("index chain is the boundary of a degree-3 chain");
  } else {
    v.status = SfpStatus::sfp_fails;
    v.class_coordinates = homology_class(x, c);
    for (const FaceId& id : untouched_support)
      v.diagnostics.push_back("face " + id +
                              " carries a corner-cycle index outside every boundary image");
    if (untouched_support.empty())
      v.diagnostics.push_back(
          "restricted to boundary-touched faces, the index chain is not an integer boundary");
  }
  return v;
}

OddIndexClass odd_index_class(const FaceComplex& x, const IndexAssignment& idx_top,
                              const IndexAssignment& idx_one) {
  const int d = x.codim();
  if (d < 1 || d > 3)
    throw std::invalid_argument("odd index classes support codimension 1 to 3, got " +
                                std::to_string(d));

  OddIndexClass oc;
  oc.codim = d;

  auto checked_cycle = [&](const IndexAssignment& idx, int degree) {
    if (idx.degree != degree)
      throw std::invalid_argument("expected a degree-" + std::to_string(degree) +
                                  " index assignment, got degree " + std::to_string(idx.degree));
    Chain c = assemble_index_chain(x, idx);
    if (!is_cycle(x, c)) {
      Chain b = boundary_of(x, c);
      std::vector<FaceId> offending;
      for (const auto& [id, coeff] : b.coeffs) {
        (void)coeff;
        offending.push_back(id);
      }
      throw NotACycleError(std::move(offending));
    }
    return c;
  };

  if (d == 1) {
    if (!idx_one.values.empty())
      throw std::invalid_argument("codimension 1 uses only the top assignment; the degree-1 "
                                  "secondary assignment must be empty");
    oc.top_cycle = checked_cycle(idx_top, 1);
    return oc;
  }
  if (d == 2) {
    // The top assignment is ignored in codimension 2.
    oc.h1_class = homology_class(x, checked_cycle(idx_one, 1));
    return oc;
  }
  oc.top_cycle = checked_cycle(idx_top, 3);
  oc.h1_class = homology_class(x, checked_cycle(idx_one, 1));
  return oc;
}

IndexAssignment parse_index_assignment(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw SyntaxError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("index assignment: expected an object");
  for (const auto& item : doc.items())
    if (item.key() != "degree" && item.key() != "values" && item.key() != "note")
      throw SyntaxError("index assignment: unknown field '" + item.key() + "'");
  if (!doc.contains("degree")) throw SyntaxError("index assignment: missing field 'degree'");
  if (!doc.contains("values")) throw SyntaxError("index assignment: missing field 'values'");

  IndexAssignment idx;
  if (!doc["degree"].is_number_integer()) throw SyntaxError("degree: expected an integer");
  auto degree = doc["degree"].get<long long>();
  if (degree < 0 || degree > INT_MAX) throw SyntaxError("degree: out of range");
  idx.degree = static_cast<int>(degree);
  if (!doc["values"].is_object()) throw SyntaxError("values: expected an object");
  for (const auto& item : doc["values"].items()) {
    if (!item.value().is_number_integer())
      throw SyntaxError("values." + item.key() + ": expected an integer");
    idx.values[item.key()] = Int(static_cast<long>(item.value().get<long long>()));
  }
  if (doc.contains("note")) {
    if (!doc["note"].is_string()) throw SyntaxError("note: expected a string");
    idx.note = doc["note"].get<std::string>();
  }
  return idx;
}

nlohmann::ordered_json verdict_json(const ObstructionVerdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness ? chain_to_json(*v.witness) : ordered_json(nullptr);
  j["class"] = v.class_coordinates ? class_json(*v.class_coordinates) : ordered_json(nullptr);
  j["warnings"] = v.warnings;
  j["diagnostics"] = v.diagnostics;
  return j;
}

nlohmann::ordered_json odd_class_json(const OddIndexClass& oc) {
  ordered_json j;
  j["codim"] = oc.codim;
  j["top_cycle"] = oc.top_cycle ? chain_to_json(*oc.top_cycle) : ordered_json(nullptr);
  j["h1_class"] = oc.h1_class ? class_json(*oc.h1_class) : ordered_json(nullptr);
  return j;
}

}  // namespace cnhom
