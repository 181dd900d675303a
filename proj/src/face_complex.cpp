#include "cnhom/face_complex.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cnhom {

namespace {

using nlohmann::ordered_json;

// Sentinel for incidences whose dropped index cannot be derived.
constexpr int kNoDropped = INT_MIN;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string violation_summary(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid face complex: " << report.violations.size() << " violation(s)";
  if (!report.violations.empty()) os << "; first: " << report.violations.front();
  return os.str();
}

// The unique element of I(sub) \ I(super) when I(super) is I(sub) minus one
// index. Sorts local copies: unvalidated input may carry unsorted sets.
std::optional<int> derive_dropped(const Face& sub, const Face& super) {
  if (super.index_set.size() + 1 != sub.index_set.size()) return std::nullopt;
  std::vector<int> a = sub.index_set, b = super.index_set;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> diff;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  if (diff.size() != 1) return std::nullopt;
  // Containment, not just a size-1 difference: super minus sub must be empty.
  std::vector<int> extra;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(extra));
  if (!extra.empty()) return std::nullopt;
  return diff.front();
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(violation_summary(report)), report_(std::move(report)) {}

FaceComplex::FaceComplex(std::string name, int num_hyperfaces, std::vector<Face> faces,
                         std::vector<Incidence> incidences)
    : name_(std::move(name)),
      num_hyperfaces_(num_hyperfaces),
      faces_(std::move(faces)),
      incidences_(std::move(incidences)) {
  std::stable_sort(faces_.begin(), faces_.end(),
                   [](const Face& a, const Face& b) { return a.id < b.id; });
  std::stable_sort(incidences_.begin(), incidences_.end(), [](const Incidence& a, const Incidence& b) {
    return std::tie(a.sub, a.super) < std::tie(b.sub, b.super);
  });
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    face_index_.emplace(faces_[i].id, i);  // keeps the first occurrence of a duplicate
    codim_ = std::max(codim_, faces_[i].codim());
  }
  for (Incidence& inc : incidences_) {
    inc.dropped_index = kNoDropped;
    auto sub = face_index_.find(inc.sub);
    auto super = face_index_.find(inc.super);
    if (sub == face_index_.end() || super == face_index_.end()) continue;
    if (auto dropped = derive_dropped(faces_[sub->second], faces_[super->second])) {
      inc.dropped_index = *dropped;
      supers_[{inc.sub, *dropped}].push_back(inc.super);
    }
  }
}

bool FaceComplex::has_face(const FaceId& id) const { return face_index_.count(id) != 0; }

const Face& FaceComplex::face(const FaceId& id) const {
  auto it = face_index_.find(id);
  if (it == face_index_.end()) throw std::invalid_argument("unknown face: " + id);
  return faces_[it->second];
}

std::vector<FaceId> FaceComplex::faces_of_codim(int p) const {
  if (p < 0 || p > codim_)
    throw std::out_of_range("codimension " + std::to_string(p) + " outside [0, " +
                            std::to_string(codim_) + "]");
  std::vector<FaceId> out;
  for (const Face& f : faces_)
    if (f.codim() == p) out.push_back(f.id);
  return out;
}

std::vector<std::pair<FaceId, int>> FaceComplex::supers_of(const FaceId& f) const {
  face(f);  // existence check
  std::vector<std::pair<FaceId, int>> out;
  for (const Incidence& inc : incidences_)
    if (inc.sub == f && inc.dropped_index != kNoDropped)
      out.emplace_back(inc.super, inc.dropped_index);
  // Incidences are sorted by (sub, super), so the result is sorted by super label.
  return out;
}

std::optional<FaceId> FaceComplex::super_by_dropped(const FaceId& f, int i) const {
  auto it = supers_.find({f, i});
  if (it == supers_.end() || it->second.size() != 1) return std::nullopt;
  return it->second.front();
}

std::vector<FaceId> FaceComplex::supers_multi(const FaceId& f, int i) const {
  auto it = supers_.find({f, i});
  return it == supers_.end() ? std::vector<FaceId>{} : it->second;
}

bool FaceComplex::operator==(const FaceComplex& other) const {
  return name_ == other.name_ && num_hyperfaces_ == other.num_hyperfaces_ &&
         faces_ == other.faces_ && incidences_ == other.incidences_;
}

ValidationReport validate(const FaceComplex& x, bool allow_disconnected) {
  ValidationReport report;
  auto add = [&](const std::string& msg) { report.violations.push_back(msg); };

  // Labels.
  std::set<FaceId> seen, duplicated;
  for (const Face& f : x.faces()) {
    if (f.id.empty()) add("face with empty label");
    if (!seen.insert(f.id).second && duplicated.insert(f.id).second)
      add("duplicate face label: " + f.id);
  }

  // Index sets.
  for (const Face& f : x.faces()) {
    bool increasing = true;
    for (std::size_t i = 1; i < f.index_set.size(); ++i)
      if (f.index_set[i - 1] >= f.index_set[i]) increasing = false;
    if (!increasing) add("face " + f.id + ": index_set not strictly increasing");
    for (int idx : f.index_set)
      if (idx < 1 || idx > x.num_hyperfaces())
        add("face " + f.id + ": index " + std::to_string(idx) + " outside [1, " +
            std::to_string(x.num_hyperfaces()) + "]");
  }

  // Codimension-0 count.
  std::vector<FaceId> interiors;
  for (const Face& f : x.faces())
    if (f.codim() == 0) interiors.push_back(f.id);
  if (interiors.empty()) add("no codimension-0 face");
  else if (interiors.size() > 1 && !allow_disconnected)
    add("multiple codimension-0 faces: " + join(interiors, ", "));

  // Incidence endpoints and one-index-drop containment.
  for (const Incidence& inc : x.incidences()) {
    const std::string pair = "incidence (" + inc.sub + ", " + inc.super + ")";
    bool known = true;
    if (!x.has_face(inc.sub)) {
      add(pair + ": unknown face " + inc.sub);
      known = false;
    }
    if (!x.has_face(inc.super)) {
      add(pair + ": unknown face " + inc.super);
      known = false;
    }
    if (known && !derive_dropped(x.face(inc.sub), x.face(inc.super)))
      add(pair + ": I(" + inc.super + ") is not I(" + inc.sub + ") minus exactly one index");
  }

  // Exactly one incidence per (face, index).
  for (const Face& f : x.faces()) {
    for (int i : f.index_set) {
      std::size_t count = x.supers_multi(f.id, i).size();
      if (count == 0)
        add("face " + f.id + " missing super for dropped index " + std::to_string(i));
      else if (count > 1)
        add("face " + f.id + " has " + std::to_string(count) + " supers for dropped index " +
            std::to_string(i));
    }
  }

  // Diamond condition.
  for (const Face& f : x.faces()) {
    if (f.codim() < 2) continue;
    for (std::size_t a = 0; a < f.index_set.size(); ++a) {
      for (std::size_t b = a + 1; b < f.index_set.size(); ++b) {
        int i = f.index_set[a], j = f.index_set[b];
        auto gi = x.super_by_dropped(f.id, i);
        auto gj = x.super_by_dropped(f.id, j);
        if (!gi || !gj) continue;  // already reported above
        auto gij = x.super_by_dropped(*gi, j);
        auto gji = x.super_by_dropped(*gj, i);
        if (!gij || !gji) continue;
        if (*gij != *gji)
          add("diamond failure at (" + f.id + ", " + std::to_string(i) + ", " +
              std::to_string(j) + ")");
      }
    }
  }

  return report;
}

namespace {

void require_keys(const ordered_json& obj, const std::set<std::string>& keys,
                  const std::string& what) {
  if (!obj.is_object()) throw SyntaxError(what + ": expected an object");
  for (const auto& item : obj.items())
    if (!keys.count(item.key())) throw SyntaxError(what + ": unknown field '" + item.key() + "'");
  for (const std::string& key : keys)
    if (!obj.contains(key)) throw SyntaxError(what + ": missing field '" + key + "'");
}

int require_int(const ordered_json& v, const std::string& what) {
  if (!v.is_number_integer()) throw SyntaxError(what + ": expected an integer");
  auto value = v.get<long long>();
  if (value < INT_MIN || value > INT_MAX) throw SyntaxError(what + ": integer out of range");
  return static_cast<int>(value);
}

std::string require_string(const ordered_json& v, const std::string& what) {
  if (!v.is_string()) throw SyntaxError(what + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

FaceComplex parse_complex(const std::string& text, bool allow_disconnected) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw SyntaxError(std::string("syntax error: ") + e.what());
  }

  require_keys(doc, {"name", "num_hyperfaces", "faces", "incidences"}, "document");
  std::string name = require_string(doc["name"], "name");
  int n = require_int(doc["num_hyperfaces"], "num_hyperfaces");
  if (n < 0) throw SyntaxError("num_hyperfaces: must be nonnegative");

  if (!doc["faces"].is_array()) throw SyntaxError("faces: expected an array");
  std::vector<Face> faces;
  for (const auto& fj : doc["faces"]) {
    require_keys(fj, {"id", "index_set"}, "face");
    Face f;
    f.id = require_string(fj["id"], "face id");
    if (!fj["index_set"].is_array()) throw SyntaxError("face " + f.id + ": index_set must be an array");
    for (const auto& ij : fj["index_set"])
      f.index_set.push_back(require_int(ij, "face " + f.id + ": index_set entry"));
    faces.push_back(std::move(f));
  }

  if (!doc["incidences"].is_array()) throw SyntaxError("incidences: expected an array");
  std::vector<Incidence> incidences;
  for (const auto& ij : doc["incidences"]) {
    require_keys(ij, {"sub", "super"}, "incidence");
    Incidence inc;
    inc.sub = require_string(ij["sub"], "incidence sub");
    inc.super = require_string(ij["super"], "incidence super");
    incidences.push_back(std::move(inc));
  }

  FaceComplex x(std::move(name), n, std::move(faces), std::move(incidences));
  ValidationReport report = validate(x, allow_disconnected);
  if (!report.ok()) throw ValidationError(std::move(report));
  return x;
}

std::string serialize(const FaceComplex& x) {
  ordered_json doc;
  doc["name"] = x.name();
  doc["num_hyperfaces"] = x.num_hyperfaces();
  doc["faces"] = ordered_json::array();
  for (const Face& f : x.faces()) {
    ordered_json fj;
    fj["id"] = f.id;
    fj["index_set"] = f.index_set;
    doc["faces"].push_back(std::move(fj));
  }
  doc["incidences"] = ordered_json::array();
  for (const Incidence& inc : x.incidences()) {
    ordered_json ij;
    ij["sub"] = inc.sub;
    ij["super"] = inc.super;
    doc["incidences"].push_back(std::move(ij));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cnhom
