#include "multifan/cli.hpp"

#include "multifan/cohomology.hpp"
#include "multifan/document.hpp"
#include "multifan/ehrhart.hpp"
#include "multifan/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

namespace multifan::cli {

namespace {

struct Options {
  std::string command;
  std::string target;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-6;
  std::string shift = "exact";
  std::string generic_v;
  std::string ray;
  std::string step = "1/4";
  std::string format = "text";
  std::string point;
  std::string from;
  std::string to;
  int wall = 0;
  int trials = 8;
  std::string nu;
};

using Report = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    parts.push_back(item);
  }
  return parts;
}

RatVector parse_point(const std::string& text, int n, const char* flag) {
  if (text.empty()) throw Error(ErrorKind::parse_error, std::string(flag) + " is required");
  RatVector u;
  for (const auto& s : split_csv(text)) u.push_back(parse_rat(s));
  if (static_cast<int>(u.size()) != n)
    throw Error(ErrorKind::dimension_mismatch, std::string(flag) + " needs " + std::to_string(n) + " coordinates");
  return u;
}

IntVector parse_int_vector(const std::string& text, int n, const char* flag) {
  IntVector v;
  for (const auto& x : parse_point(text, n, flag)) {
    if (x.get_den() != 1) throw Error(ErrorKind::parse_error, std::string(flag) + " needs integers");
    v.push_back(x.get_num());
  }
  return v;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += " ";
    if constexpr (std::is_same_v<T, Rat> || std::is_same_v<T, Int>) s += to_string(x);
    else s += std::to_string(x);
  }
  return s;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string face_text(const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k] + 1);
  return s + "}";
}

// sum c_k var^k, highest power first unless `ascending`.
std::string poly_text(const std::vector<Rat>& c, const std::string& var, bool ascending = false) {
  std::string s;
  const int top = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= top; ++i) {
    const int k = ascending ? i : top - i;
    if (c[k] == 0) continue;
    Rat a = c[k];
    if (s.empty()) {
      if (a < 0) s += "-", a = -a;
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (k == 0 || a != 1) s += to_string(a);
    if (k > 0) s += (a != 1 ? " " : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s.empty() ? "0" : s;
}

class Session {
public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out), rng_(opt.seed) {}

  int run() {
    const auto& c = opt_.command;
    if (c == "example") {
      out_ << io::serialize(io::fixture(opt_.target));
      return 0;
    }
    doc_ = load();
    const MultiFan& fan = doc_->fan;
    if (c == "validate") {
      const auto r = validate(fan);
      add("valid", yesno(r.valid));
      for (const auto& p : r.problems) add("problem", p);
      add("primitive", yesno(fan.all_primitive()));
      if (r.valid) add("nonsingular", yesno(fan.is_nonsingular()));
      return r.valid ? 0 : 4;
    }
    if (c == "degree") {
      add("degree", std::to_string(degree(fan)));
    } else if (c == "complete") {
      const auto pre = is_precomplete(fan);
      add("precomplete", yesno(pre.precomplete));
      if (pre.degree) add("degree", std::to_string(*pre.degree));
      add("complete", yesno(pre.precomplete && is_complete(fan)));
    } else if (c == "hvector") {
      add("h", join(h_vector(fan, direction(fan))));
    } else if (c == "evector") {
      add("e", join(e_vector(fan)));
    } else if (c == "tygenus") {
      const auto ty = ty_genus(fan, direction(fan));
      std::vector<Rat> coeffs;
      for (auto x : ty) coeffs.push_back(Rat(static_cast<long>(x)));
      add("ty", poly_text(coeffs, "y", true));
      add("coefficients", join(ty));
    } else if (c == "signature") {
      add("signature", std::to_string(signature(fan, direction(fan))));
    } else if (c == "dh") {
      const auto p = polytope();
      add("dh", std::to_string(dh_eval(p, parse_point(opt_.point, p.dim(), "--point"), shift(), direction(fan))));
    } else if (c == "wn") {
      const auto p = polytope();
      add("wn", std::to_string(wn_eval(p, parse_point(opt_.point, p.dim(), "--point"), shift(), rng_)));
    } else if (c == "wallcheck") {
      const auto p = polytope();
      if (opt_.wall < 1 || opt_.wall > fan.num_rays())
        throw Error(ErrorKind::parse_error, "--wall must name a ray between 1 and " + std::to_string(fan.num_rays()));
      const auto w = wall_crossing(p, parse_point(opt_.from, p.dim(), "--from"), parse_point(opt_.to, p.dim(), "--to"),
                                   opt_.wall - 1, rng_);
      add("jump", std::to_string(w.lhs));
      add("projected", std::to_string(w.rhs));
      add("holds", yesno(w.holds()));
      return w.holds() ? 0 : 4;
    } else if (c == "count") {
      add("count", to_string(count(polytope())));
    } else if (c == "interior") {
      add("interior", to_string(count_interior(polytope())));
    } else if (c == "ehrhart") {
      const auto e = ehrhart_polynomial(polytope());
      add("ehrhart", poly_text(e.coefficients, "nu"));
      add("coefficients", join(e.coefficients));
      if (!opt_.nu.empty()) add("value", to_string(e(parse_rat(opt_.nu))));
    } else if (c == "reciprocity") {
      const bool ok = reciprocity_check(polytope());
      add("reciprocity", yesno(ok));
      return ok ? 0 : 4;
    } else if (c == "charcheck") {
      const bool ok = character_identity_check(polytope(), opt_.trials, rng_);
      add("trials", std::to_string(opt_.trials));
      add("charcheck", yesno(ok));
      return ok ? 0 : 4;
    } else if (c == "volume") {
      add("volume", to_string(volume(polytope())));
    } else if (c == "toddcount") {
      add("toddcount", to_string(todd_count(polytope(), tolerance())));
    } else if (c == "kpcount") {
      add("kpcount", to_string(kp_count(polytope(), tolerance())));
    } else if (c == "decompose") {
      if (opt_.ray.empty()) throw Error(ErrorKind::parse_error, "--ray is required");
      const auto pieces = decompose_star(fan, parse_int_vector(opt_.ray, fan.dim(), "--ray"));
      add("pieces", std::to_string(pieces.size()));
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& piece = pieces[k];
        std::string labels;
        for (int l : piece.labels) labels += (labels.empty() ? "" : " ") + (l < 0 ? std::string("*") : std::to_string(l + 1));
        const auto& top = piece.fan.top_cones().front();
        add("piece " + std::to_string(k + 1), "source " + face_text(piece.source) + " labels " + labels + " weight " +
                                                  std::to_string(top.weight.plus) + "/" + std::to_string(top.weight.minus) +
                                                  " minimal " + yesno(is_minimal(piece.fan)));
      }
      add("cancellation", yesno(star_cancellation_holds(fan, pieces)));
    } else if (c == "grid") {
      const auto p = polytope();
      out_ << io::grid_csv(io::grid(p, parse_rat(opt_.step), shift(), direction(fan)));
      return 0;
    } else {
      throw Error(ErrorKind::parse_error, "unknown command '" + c + "'");
    }
    return 0;
  }

  void print() const {
    if (report_.empty()) return;
    if (opt_.format == "json") {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : report_) {
        if (v == "true" || v == "false") {
          j[k] = v == "true";
          continue;
        }
        try {
          std::size_t used = 0;
          const long long x = std::stoll(v, &used);
          if (used == v.size()) {
            j[k] = x;
            continue;
          }
        } catch (const std::exception&) {
        }
        if (j.contains(k)) {
          if (!j[k].is_array()) j[k] = nlohmann::ordered_json::array({j[k]});
          j[k].push_back(v);
        } else {
          j[k] = v;
        }
      }
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& [k, v] : report_) out_ << k << ": " << v << "\n";
    }
  }

private:
  io::Document load() {
    if (opt_.target.empty()) throw Error(ErrorKind::parse_error, "no input file given");
    return io::load_document(opt_.target);
  }

  MultiPolytope polytope() const { return doc_->polytope(); }

  RatVector direction(const MultiFan& fan) {
    if (opt_.generic_v.empty()) return to_rat(choose_generic(fan, rng_));
    auto v = parse_point(opt_.generic_v, fan.dim(), "--generic-v");
    if (!is_generic(fan, v)) throw Error(ErrorKind::not_generic, "--generic-v is not generic for this fan");
    return v;
  }

  Shift shift() const { return parse_shift(opt_.shift); }

  Tolerance tolerance() const {
    Tolerance t;
    t.integrality = opt_.tolerance;
    return t;
  }

  void add(std::string key, std::string value) { report_.emplace_back(std::move(key), std::move(value)); }

  const Options& opt_;
  std::ostream& out_;
  Rng rng_;
  std::optional<io::Document> doc_;
  Report report_;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
      return 2;
    case ErrorKind::verification_failed:
      return 4;
    case ErrorKind::unsupported:
      return 5;
    default:
      return 3;
  }
}

} // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{
      "validate", "degree",      "complete",  "hvector", "evector",   "tygenus", "signature",
      "dh",       "wn",          "wallcheck", "count",   "interior",  "ehrhart", "reciprocity",
      "charcheck", "volume",     "toddcount", "kpcount", "decompose", "grid",    "example"};
  return list;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Multi-fans and multi-polytopes: degrees, genera, DH functions and lattice counts."};
  app.add_option("command", opt.command, "One of: " + [] {
    std::string s;
    for (const auto& c : commands()) s += (s.empty() ? "" : ", ") + c;
    return s;
  }())->required()->check(CLI::IsMember(commands()));
  app.add_option("input", opt.target, "Document file (JSON), or a fixture name for 'example'");
  app.add_option("--seed", opt.seed, "Seed for every randomized choice")->capture_default_str();
  app.add_option("--tolerance", opt.tolerance, "Integrality tolerance for floating-point counts")->capture_default_str();
  app.add_option("--shift", opt.shift, "Evaluate against P, P_+ or P_-")
      ->check(CLI::IsMember({"exact", "plus", "minus"}))
      ->capture_default_str();
  app.add_option("--generic-v", opt.generic_v, "Generic direction as comma-separated integers");
  app.add_option("--ray", opt.ray, "Extra ray for decompose, comma-separated integers");
  app.add_option("--step", opt.step, "Grid step as a rational")->capture_default_str();
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--point", opt.point, "Point for dh and wn, comma-separated rationals");
  app.add_option("--from", opt.from, "Start point for wallcheck");
  app.add_option("--to", opt.to, "End point for wallcheck");
  app.add_option("--wall", opt.wall, "1-based index of the crossed hyperplane for wallcheck");
  app.add_option("--trials", opt.trials, "Number of (v, z) samples for charcheck")->capture_default_str();
  app.add_option("--nu", opt.nu, "Also evaluate the Ehrhart polynomial at this dilation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 1;
  }

  Session session(opt, out);
  try {
    const int status = session.run();
    session.print();
    return status;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

} // namespace multifan::cli
