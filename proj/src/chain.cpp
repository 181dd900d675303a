#include "cnhom/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnhom {

int contraction_sign(const std::vector<int>& index_set, int i) {
  auto it = std::find(index_set.begin(), index_set.end(), i);
  if (it == index_set.end())
    throw std::invalid_argument("contraction_sign: index " + std::to_string(i) +
                                " not in the index set");
  auto k = std::distance(index_set.begin(), it);  // zero-based position
  return k % 2 == 0 ? 1 : -1;
}

BoundaryMatrix boundary_matrix(const FaceComplex& x, int p) {
  if (p < 1 || p > x.codim())
    throw std::out_of_range("boundary degree " + std::to_string(p) + " outside [1, " +
                            std::to_string(x.codim()) + "]");
  BoundaryMatrix bm;
  bm.row_labels = x.faces_of_codim(p - 1);
  bm.col_labels = x.faces_of_codim(p);
  std::map<FaceId, Eigen::Index> row_of;
  for (std::size_t i = 0; i < bm.row_labels.size(); ++i)
    row_of[bm.row_labels[i]] = static_cast<Eigen::Index>(i);
  bm.mat = IntMatrix::Zero(static_cast<Eigen::Index>(bm.row_labels.size()),
                           static_cast<Eigen::Index>(bm.col_labels.size()));
  for (std::size_t j = 0; j < bm.col_labels.size(); ++j) {
    const Face& f = x.face(bm.col_labels[j]);
    for (const auto& [super, dropped] : x.supers_of(f.id))
      bm.mat(row_of.at(super), static_cast<Eigen::Index>(j)) =
          contraction_sign(f.index_set, dropped);
  }
  return bm;
}

Chain boundary_of(const FaceComplex& x, const Chain& c) {
  if (c.degree < 1) throw std::invalid_argument("boundary_of: degree-0 chain has no boundary");
  Chain out;
  out.degree = c.degree - 1;
  for (const auto& [id, coeff] : c.coeffs) {
    const Face& f = x.face(id);
    if (f.codim() != c.degree)
      throw std::invalid_argument("boundary_of: face " + id + " has codimension " +
                                  std::to_string(f.codim()) + ", chain degree is " +
                                  std::to_string(c.degree));
    for (const auto& [super, dropped] : x.supers_of(id))
      out.coeffs[super] += coeff * contraction_sign(f.index_set, dropped);
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Chain chain_add(const Chain& a, const Chain& b) {
  if (a.degree != b.degree)
    throw std::invalid_argument("chain_add: degree mismatch (" + std::to_string(a.degree) +
                                " vs " + std::to_string(b.degree) + ")");
  Chain out = a;
  for (const auto& [id, coeff] : b.coeffs) out.coeffs[id] += coeff;
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Chain chain_scale(const Int& n, const Chain& a) {
  Chain out;
  out.degree = a.degree;
  if (n == 0) return out;
  for (const auto& [id, coeff] : a.coeffs) out.coeffs[id] = n * coeff;
  return out;
}

Chain chain_from_vector(int degree, const std::vector<FaceId>& basis, const IntVector& v) {
  if (static_cast<std::size_t>(v.size()) != basis.size())
    throw std::invalid_argument("chain_from_vector: basis size mismatch");
  Chain out;
  out.degree = degree;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v(static_cast<Eigen::Index>(i)) != 0) out.coeffs[basis[i]] = v(static_cast<Eigen::Index>(i));
  return out;
}

IntVector chain_to_vector(const Chain& c, const std::vector<FaceId>& basis) {
  std::map<FaceId, Eigen::Index> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<Eigen::Index>(i);
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [id, coeff] : c.coeffs) {
    auto it = pos.find(id);
    if (it == pos.end()) throw std::invalid_argument("chain_to_vector: face " + id + " not in basis");
    v(it->second) = coeff;
  }
  return v;
}

std::string format_chain(const Chain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, coeff] : c.coeffs) {
    Int magnitude = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += id;
  }
  return out;
}

nlohmann::ordered_json chain_to_json(const Chain& c) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [id, coeff] : c.coeffs) j[id] = to_long(coeff);
  return j;
}

}  // namespace cnhom
