#include "cnhom/builders.hpp"

#include <string>
#include <vector>

namespace cnhom {

namespace {

// Builder outputs must always pass validation.
FaceComplex checked(FaceComplex x) {
  ValidationReport report = validate(x);
  if (!report.ok()) throw ValidationError(std::move(report));
  return x;
}

FaceComplex renamed(const FaceComplex& x, std::string name) {
  return FaceComplex(std::move(name), x.num_hyperfaces(), x.faces(), x.incidences());
}

std::string subset_label(const std::vector<int>& s) {
  std::string label = "s";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) label += "_";
    label += std::to_string(s[i]);
  }
  return label;
}

}  // namespace

FaceComplex interval() {
  return checked(FaceComplex("interval", 2,
                             {{"interior", {}}, {"left", {1}}, {"right", {2}}},
                             {{"left", "interior"}, {"right", "interior"}}));
}

FaceComplex disk() {
  return checked(FaceComplex("disk", 1, {{"interior", {}}, {"boundary", {1}}},
                             {{"boundary", "interior"}}));
}

FaceComplex polygon(int k) {
  if (k < 2) throw std::invalid_argument("polygon: k must be at least 2");
  std::vector<Face> faces{{"interior", {}}};
  std::vector<Incidence> incidences;
  for (int i = 1; i <= k; ++i) {
    std::string edge = "e" + std::to_string(i);
    faces.push_back({edge, {i}});
    incidences.push_back({edge, "interior"});
  }
  for (int i = 1; i <= k; ++i) {
    int next = i == k ? 1 : i + 1;
    int lo = std::min(i, next), hi = std::max(i, next);
    std::string vertex = "v" + std::to_string(i);
    faces.push_back({vertex, {lo, hi}});
    incidences.push_back({vertex, "e" + std::to_string(i)});
    incidences.push_back({vertex, "e" + std::to_string(next)});
  }
  return checked(FaceComplex("polygon" + std::to_string(k), k, std::move(faces),
                             std::move(incidences)));
}

FaceComplex simplex(int n) {
  if (n < 1) throw std::invalid_argument("simplex: n must be at least 1");
  std::vector<Face> faces{{"interior", {}}};
  std::vector<Incidence> incidences;
  // Every nonempty proper subset of {1..n+1}.
  for (unsigned mask = 1; mask + 1 < (1u << (n + 1)); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) subset.push_back(i + 1);
    std::string label = subset_label(subset);
    faces.push_back({label, subset});
    if (subset.size() == 1) {
      incidences.push_back({label, "interior"});
    } else {
      for (std::size_t drop = 0; drop < subset.size(); ++drop) {
        std::vector<int> smaller = subset;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        incidences.push_back({label, subset_label(smaller)});
      }
    }
  }
  return checked(FaceComplex("simplex" + std::to_string(n), n + 1, std::move(faces),
                             std::move(incidences)));
}

FaceComplex product(const FaceComplex& x, const FaceComplex& y) {
  const int shift = x.num_hyperfaces();
  std::vector<Face> faces;
  std::vector<Incidence> incidences;
  for (const Face& f : x.faces()) {
    for (const Face& g : y.faces()) {
      Face fg;
      fg.id = f.id + "x" + g.id;
      fg.index_set = f.index_set;
      for (int i : g.index_set) fg.index_set.push_back(i + shift);
      faces.push_back(std::move(fg));
    }
  }
  for (const Incidence& inc : x.incidences())
    for (const Face& g : y.faces())
      incidences.push_back({inc.sub + "x" + g.id, inc.super + "x" + g.id});
  for (const Face& f : x.faces())
    for (const Incidence& inc : y.incidences())
      incidences.push_back({f.id + "x" + inc.sub, f.id + "x" + inc.super});
  return checked(FaceComplex(x.name() + "x" + y.name(), shift + y.num_hyperfaces(),
                             std::move(faces), std::move(incidences)));
}

FaceComplex hypercube(int n) {
  if (n < 1) throw std::invalid_argument("hypercube: n must be at least 1");
  FaceComplex x = interval();
  for (int i = 2; i <= n; ++i) x = product(x, interval());
  return renamed(x, "hypercube" + std::to_string(n));
}

}  // namespace cnhom
