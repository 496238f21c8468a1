#include "multifan/document.hpp"

#include "multifan/ehrhart.hpp"
#include "multifan/error.hpp"
#include "multifan/fixtures.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace multifan::io {

using nlohmann::json;

MultiPolytope Document::polytope() const {
  if (!support) throw Error(ErrorKind::parse_error, "document has no support numbers");
  return MultiPolytope(fan, *support);
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

Int read_int(const json& x, const std::string& where) {
  if (x.is_number_integer()) return Int(std::to_string(x.get<std::int64_t>()));
  if (x.is_string()) {
    Int v;
    if (v.set_str(x.get<std::string>(), 10) == 0) return v;
  }
  fail("expected an integer in " + where);
}

Rat read_rat(const json& x, const std::string& where) {
  if (x.is_number_integer()) return Rat(read_int(x, where));
  if (x.is_string()) return parse_rat(x.get<std::string>());
  fail("expected a rational in " + where);
}

Face read_face(const json& x, int d, const std::string& where) {
  if (!x.is_array()) fail("expected a list of ray indices in " + where);
  Face f;
  for (const auto& e : x) {
    if (!e.is_number_integer()) fail("non-integer ray index in " + where);
    const auto i = e.get<std::int64_t>();
    if (i < 1 || i > d) fail("ray index " + std::to_string(i) + " out of range in " + where);
    f.push_back(static_cast<int>(i - 1));
  }
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) fail("repeated ray index in " + where);
  return f;
}

std::string face_text(const Face& f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? ", " : "") + std::to_string(f[k] + 1);
  return s + "]";
}

std::string write(const MultiFan& fan, const std::vector<Rat>* support) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << fan.dim() << ",\n  \"rays\": [";
  for (int i = 0; i < fan.num_rays(); ++i) {
    out << (i ? ", " : "") << "[";
    const auto& r = fan.ray(i);
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? ", " : "") << to_string(r[k]);
    out << "]";
  }
  out << "],\n  \"cones\": [";
  const auto& cones = fan.top_cones();
  for (std::size_t k = 0; k < cones.size(); ++k) {
    out << (k ? "," : "") << "\n    {\"set\": " << face_text(cones[k].face) << ", \"w_plus\": " << cones[k].weight.plus
        << ", \"w_minus\": " << cones[k].weight.minus << "}";
  }
  out << (cones.empty() ? "]" : "\n  ]");
  if (!fan.extra_faces().empty()) {
    out << ",\n  \"extra_faces\": [";
    auto extra = fan.extra_faces();
    std::sort(extra.begin(), extra.end());
    for (std::size_t k = 0; k < extra.size(); ++k) out << (k ? ", " : "") << face_text(extra[k]);
    out << "]";
  }
  if (support) {
    out << ",\n  \"support\": [";
    for (std::size_t k = 0; k < support->size(); ++k) out << (k ? ", " : "") << json(to_string((*support)[k])).dump();
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

} // namespace

Document parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  const json& dim = field(doc, "dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0) fail("'dim' must be a non-negative integer");
  const int n = static_cast<int>(dim.get<std::int64_t>());

  const json& rays_json = field(doc, "rays");
  if (!rays_json.is_array()) fail("'rays' must be a list");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < rays_json.size(); ++i) {
    const auto where = "ray " + std::to_string(i + 1);
    if (!rays_json[i].is_array() || static_cast<int>(rays_json[i].size()) != n)
      fail(where + " must have " + std::to_string(n) + " coordinates");
    IntVector r;
    for (const auto& x : rays_json[i]) r.push_back(read_int(x, where));
    rays.push_back(std::move(r));
  }
  const int d = static_cast<int>(rays.size());

  const json& cones_json = field(doc, "cones");
  if (!cones_json.is_array()) fail("'cones' must be a list");
  std::map<Face, WeightPair> weights;
  for (std::size_t k = 0; k < cones_json.size(); ++k) {
    const auto where = "cone " + std::to_string(k + 1);
    const json& c = cones_json[k];
    if (!c.is_object()) fail(where + " must be an object");
    Face f = read_face(field(c, "set"), d, where);
    WeightPair w{1, 0};
    if (c.contains("w_plus")) w.plus = to_i64(read_int(c["w_plus"], where));
    if (c.contains("w_minus")) w.minus = to_i64(read_int(c["w_minus"], where));
    if (!weights.emplace(f, w).second) fail(where + " repeats the set " + face_text(f));
  }

  std::vector<Face> extra;
  if (doc.contains("extra_faces")) {
    const json& e = doc["extra_faces"];
    if (!e.is_array()) fail("'extra_faces' must be a list");
    for (std::size_t k = 0; k < e.size(); ++k) extra.push_back(read_face(e[k], d, "extra face " + std::to_string(k + 1)));
  }

  std::optional<std::vector<Rat>> support;
  if (doc.contains("support")) {
    const json& s = doc["support"];
    if (!s.is_array() || static_cast<int>(s.size()) != d) fail("'support' must list one rational per ray");
    std::vector<Rat> c;
    for (std::size_t k = 0; k < s.size(); ++k) c.push_back(read_rat(s[k], "support " + std::to_string(k + 1)));
    support = std::move(c);
  }

  try {
    return Document{MultiFan(n, std::move(rays), weights, extra), std::move(support)};
  } catch (const Error& e) {
    fail(e.what());
  }
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

std::string serialize(const MultiFan& fan) { return write(fan, nullptr); }
std::string serialize(const MultiPolytope& p) { return write(p.fan(), &p.support()); }
std::string serialize(const Document& doc) { return write(doc.fan, doc.support ? &*doc.support : nullptr); }

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"star", "star-polytope", "folded", "ex24", "p2",
                                              "p2-triangle", "p112", "square"};
  return names;
}

Document fixture(const std::string& name) {
  namespace fx = multifan::fixtures;
  auto poly = [](const MultiPolytope& p) { return Document{p.fan(), p.support()}; };
  if (name == "star") return {fx::star(), std::nullopt};
  if (name == "star-polytope") return poly(fx::star_polytope());
  if (name == "folded") return {fx::folded(), std::nullopt};
  if (name == "ex24") return {fx::ex24(), std::nullopt};
  if (name == "p2") return {fx::p2(), std::nullopt};
  if (name == "p2-triangle") return poly(fx::p2_triangle());
  if (name == "p112") return poly(fx::p112_triangle());
  if (name == "square") return poly(fx::unit_square());
  std::string list;
  for (const auto& n : fixture_names()) list += (list.empty() ? "" : ", ") + n;
  fail("unknown example '" + name + "'; available: " + list);
}

std::vector<GridRow> grid(const MultiPolytope& p, const Rat& step, Shift shift, const RatVector& v) {
  if (p.dim() != 2) throw Error(ErrorKind::dimension_mismatch, "grid export needs a 2-dimensional multi-polytope");
  if (step <= 0) throw Error(ErrorKind::parse_error, "grid step must be positive");
  require_complete(p);
  const auto box = support_box(p);
  const DhEvaluator dh(p, v);
  std::vector<GridRow> rows;
  const Rat x0(static_cast<long>(box.lo[0])), y0(static_cast<long>(box.lo[1]));
  const Rat x1(static_cast<long>(box.hi[0])), y1(static_cast<long>(box.hi[1]));
  for (Rat x = x0; x <= x1; x += step)
    for (Rat y = y0; y <= y1; y += step) {
      const RatVector u{x, y};
      bool on_wall = false;
      for (int j = 0; j < p.fan().num_rays() && !on_wall; ++j) on_wall = pairing(u, p.fan().ray(j)) == p.c(j);
      if (on_wall && shift == Shift::exact) continue;
      rows.push_back({x, y, dh(u, shift)});
    }
  return rows;
}

std::string grid_csv(const std::vector<GridRow>& rows) {
  std::string out = "x,y,dh\n";
  for (const auto& r : rows) out += to_string(r.x) + "," + to_string(r.y) + "," + std::to_string(r.dh) + "\n";
  return out;
}

} // namespace multifan::io
