#include "cnhom/homology.hpp"

#include "cnhom/zlinalg.hpp"

namespace cnhom {

namespace {

std::string offending_summary(const std::vector<FaceId>& offending) {
  std::string msg = "chain is not a cycle; nonzero boundary on:";
  for (const FaceId& id : offending) msg += " " + id;
  return msg;
}

// Boundary map with the complex's conventions extended to the degree ends:
// degree 0 maps to nothing, degrees above the top codimension are zero.
IntMatrix delta_or_empty(const FaceComplex& x, int p) {
  if (p == 0)
    return IntMatrix::Zero(0, static_cast<Eigen::Index>(x.faces_of_codim(0).size()));
  if (p > x.codim())
    return IntMatrix::Zero(static_cast<Eigen::Index>(x.faces_of_codim(p - 1).size()), 0);
  return boundary_matrix(x, p).mat;
}

struct HomologySetup {
  std::vector<FaceId> basis;  // codim-p faces
  zlinalg::QuotientPresentation<Int> quotient;
};

HomologySetup setup(const FaceComplex& x, int p) {
  if (p < 0 || p > x.codim())
    throw std::out_of_range("homology degree " + std::to_string(p) + " outside [0, " +
                            std::to_string(x.codim()) + "]");
  HomologySetup hs;
  hs.basis = x.faces_of_codim(p);
  hs.quotient =
      zlinalg::quotient_presentation(zlinalg::kernel_basis(delta_or_empty(x, p)),
                                     delta_or_empty(x, p + 1));
  return hs;
}

std::vector<FaceId> boundary_support(const FaceComplex& x, const Chain& c) {
  if (c.degree == 0) return {};
  Chain b = boundary_of(x, c);
  std::vector<FaceId> out;
  for (const auto& [id, coeff] : b.coeffs) {
    (void)coeff;
    out.push_back(id);
  }
  return out;
}

void require_cycle(const FaceComplex& x, const Chain& c) {
  std::vector<FaceId> offending = boundary_support(x, c);
  if (!offending.empty()) throw NotACycleError(std::move(offending));
}

}  // namespace

bool ClassCoordinates::all_zero() const {
  for (const Int& v : free)
    if (v != 0) return false;
  for (const Int& v : torsion)
    if (v != 0) return false;
  return true;
}

NotACycleError::NotACycleError(std::vector<FaceId> offending)
    : std::runtime_error(offending_summary(offending)), offending_(std::move(offending)) {}

HomologyGroup homology_group(const FaceComplex& x, int p) {
  HomologySetup hs = setup(x, p);
  const auto& q = hs.quotient;
  HomologyGroup g;
  g.degree = p;
  g.free_rank = q.presentation.free_rank;
  g.invariant_factors = q.presentation.invariant_factors;
  for (Eigen::Index j = 0; j < q.free_generators.cols(); ++j)
    g.free_generators.push_back(chain_from_vector(p, hs.basis, q.free_generators.col(j)));
  for (const auto& [vec, order] : q.torsion_generators)
    g.torsion_generators.emplace_back(chain_from_vector(p, hs.basis, vec), order);
  return g;
}

std::vector<HomologyGroup> all_homology(const FaceComplex& x) {
  std::vector<HomologyGroup> out;
  for (int p = 0; p <= x.codim(); ++p) out.push_back(homology_group(x, p));
  return out;
}

PeriodicGroups periodic_homology(const FaceComplex& x) {
  PeriodicGroups pg;
  for (HomologyGroup& g : all_homology(x))
    (g.degree % 2 == 0 ? pg.even : pg.odd).push_back(std::move(g));
  return pg;
}

bool is_cycle(const FaceComplex& x, const Chain& c) {
  return boundary_support(x, c).empty();
}

std::optional<Chain> boundary_witness(const FaceComplex& x, const Chain& c) {
  const int p = c.degree;
  if (p < 0 || p > x.codim())
    throw std::out_of_range("boundary_witness: degree " + std::to_string(p) + " outside [0, " +
                            std::to_string(x.codim()) + "]");
  require_cycle(x, c);
  if (p == x.codim()) {
    // No faces one degree down the filtration: only the zero chain bounds.
    if (c.is_zero()) return Chain{p + 1, {}};
    return std::nullopt;
  }
  BoundaryMatrix bm = boundary_matrix(x, p + 1);
  auto sr = zlinalg::solve_integer(bm.mat, chain_to_vector(c, bm.row_labels));
  if (!sr.x) return std::nullopt;
  return chain_from_vector(p + 1, bm.col_labels, *sr.x);
}

ClassCoordinates homology_class(const FaceComplex& x, const Chain& c) {
  require_cycle(x, c);
  HomologySetup hs = setup(x, c.degree);
  auto gc = zlinalg::group_coordinates(hs.quotient, chain_to_vector(c, hs.basis));
  return ClassCoordinates{std::move(gc.free), std::move(gc.torsion)};
}

std::string format_group(const HomologyGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const Int& d : g.invariant_factors) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

nlohmann::ordered_json group_to_json(const HomologyGroup& g) {
  nlohmann::ordered_json j;
  j["degree"] = g.degree;
  j["free_rank"] = g.free_rank;
  j["invariant_factors"] = nlohmann::ordered_json::array();
  for (const Int& d : g.invariant_factors) j["invariant_factors"].push_back(to_long(d));
  j["free_generators"] = nlohmann::ordered_json::array();
  for (const Chain& c : g.free_generators) j["free_generators"].push_back(chain_to_json(c));
  j["torsion_generators"] = nlohmann::ordered_json::array();
  for (const auto& [c, order] : g.torsion_generators) {
    nlohmann::ordered_json tj;
    tj["order"] = to_long(order);
    tj["chain"] = chain_to_json(c);
    j["torsion_generators"].push_back(std::move(tj));
  }
  return j;
}

nlohmann::ordered_json homology_report(const FaceComplex& x) {
  nlohmann::ordered_json j;
  j["name"] = x.name();
  j["codim"] = x.codim();
  j["groups"] = nlohmann::ordered_json::array();
  for (const HomologyGroup& g : all_homology(x)) j["groups"].push_back(group_to_json(g));
  return j;
}

}  // namespace cnhom
