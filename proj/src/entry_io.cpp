#include "dpcyl/entry_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dpcyl/error.hpp"

namespace dpcyl {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, source + ": at " + (where.empty() ? "/" : where) + ": " + what);
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::InvalidInput, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                             ": syntax error");
  }
}

// Walks a document keeping the JSON pointer of the current node for errors.
class Reader {
 public:
  Reader(const Json& node, std::string source, std::string path)
      : node_(node), source_(std::move(source)), path_(std::move(path)) {}

  Reader field(const std::string& key) const {
    require(node_.is_object(), "expected an object");
    const auto it = node_.find(key);
    if (it == node_.end()) fail(source_, path_, "missing field '" + key + "'");
    return Reader(*it, source_, path_ + "/" + key);
  }

  bool has(const std::string& key) const { return node_.is_object() && node_.contains(key) && !node_.at(key).is_null(); }

  Reader at(std::size_t i) const { return Reader(node_.at(i), source_, path_ + "/" + std::to_string(i)); }

  std::size_t size() const {
    require(node_.is_array(), "expected an array");
    return node_.size();
  }

  std::string str() const {
    require(node_.is_string(), "expected a string");
    return node_.get<std::string>();
  }

  int integer() const {
    require(node_.is_number_integer(), "expected an integer");
    return node_.get<int>();
  }

  Rational rational() const {
    if (node_.is_number_float()) fail(source_, path_, "decimal literal; write rationals as \"p/q\" strings");
    if (node_.is_number_integer()) return Rational(node_.get<long>());
    require(node_.is_string(), "expected a rational \"p/q\"");
    try {
      return parse_rational(node_.get<std::string>());
    } catch (const Error& e) {
      fail(source_, path_, e.what());
    }
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).str());
    return out;
  }

  std::map<std::string, Rational> rational_map() const {
    require(node_.is_object(), "expected an object of id: \"p/q\"");
    std::map<std::string, Rational> out;
    for (const auto& [key, value] : node_.items()) {
      out[key] = Reader(value, source_, path_ + "/" + key).rational();
    }
    return out;
  }

  template <typename F>
  auto guarded(F&& f) const {
    try {
      return f();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidInput && std::string(e.what()).find(": at ") != std::string::npos) throw;
      fail(source_, path_, e.what());
    }
  }

  void require(bool ok, const std::string& what) const {
    if (!ok) fail(source_, path_, what);
  }

 private:
  const Json& node_;
  std::string source_;
  std::string path_;
};

std::vector<CurveDecl> read_curves(const Reader& r) {
  std::vector<CurveDecl> curves;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Reader c = r.at(i);
    const std::string kind = c.field("kind").str();
    if (kind != "line" && kind != "conic") c.field("kind").require(false, "kind must be \"line\" or \"conic\"");
    curves.push_back({c.field("id").str(), kind == "line" ? CurveKind::Line : CurveKind::Conic});
  }
  return curves;
}

std::vector<PointDecl> read_points(const Reader& r) {
  std::vector<PointDecl> points;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Reader p = r.at(i);
    PointDecl decl;
    decl.ordinal = p.field("id").integer();
    if (p.has("on")) decl.on = p.field("on").strings();
    if (p.has("parent")) {
      const Reader parent = p.field("parent");
      const auto j = parse_exceptional_id(parent.str());
      parent.require(j.has_value(), "parent must be an exceptional id E<j>");
      decl.parent = *j;
      decl.on.erase(std::remove(decl.on.begin(), decl.on.end(), exceptional_id(*j)), decl.on.end());
    } else {
      int latest = 0;
      for (const auto& id : decl.on) latest = std::max(latest, parse_exceptional_id(id).value_or(0));
      if (latest > 0) {
        decl.parent = latest;
        decl.on.erase(std::remove(decl.on.begin(), decl.on.end(), exceptional_id(latest)), decl.on.end());
      }
    }
    points.push_back(std::move(decl));
  }
  return points;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json rational_map_json(const std::map<std::string, Rational>& m) {
  Json out = Json::object();
  for (const auto& [id, c] : m) out[id] = to_string(c);
  return out;
}

}  // namespace

ConstructionEntry parse_entry(std::string_view text, const std::string& source) {
  const Json doc = parse_json(text, source);
  const Reader root(doc, source, "");
  root.require(doc.is_object(), "expected an object");
  ConstructionEntry entry;
  entry.name = root.field("name").str();
  entry.degree = root.field("degree").integer();
  const Reader type = root.field("expected_type");
  entry.expected_type = type.guarded([&] { return parse_singularity_type(type.str(), entry.degree); });
  const Reader seed = root.field("seed");
  const Reader form = seed.field("form");
  entry.seed.form = form.guarded([&] { return parse_seed_form(form.str()); });
  entry.seed.coefficients = seed.field("coefficients").rational_map();
  entry.curves = read_curves(root.field("curves"));
  entry.points = read_points(root.field("points"));
  entry.tiger = QDivisor(root.field("tiger").rational_map());
  if (root.has("contraction")) entry.contraction = root.field("contraction").strings();
  const Reader complement = root.field("complement");
  entry.complement = complement.guarded([&] { return parse_complement(complement.str()); });
  return entry;
}

ConstructionEntry load_entry(const std::filesystem::path& path) { return parse_entry(read_file(path), path.string()); }

Json entry_to_json(const ConstructionEntry& entry) {
  Json out;
  out["name"] = entry.name;
  out["degree"] = entry.degree;
  out["expected_type"] = entry.expected_type.to_string();
  out["seed"] = {{"form", to_string(entry.seed.form)}, {"coefficients", rational_map_json(entry.seed.coefficients)}};
  Json curves = Json::array();
  for (const auto& c : entry.curves) {
    curves.push_back({{"id", c.id}, {"kind", c.kind == CurveKind::Line ? "line" : "conic"}});
  }
  out["curves"] = std::move(curves);
  Json points = Json::array();
  for (const auto& p : entry.points) {
    Json j;
    j["id"] = p.ordinal;
    if (p.parent) j["parent"] = exceptional_id(*p.parent);
    j["on"] = p.on;
    points.push_back(std::move(j));
  }
  out["points"] = std::move(points);
  out["tiger"] = rational_map_json(entry.tiger.terms());
  out["contraction"] = entry.contraction;
  out["complement"] = to_string(entry.complement);
  return out;
}

std::string serialize_entry(const ConstructionEntry& entry) { return entry_to_json(entry).dump(2) + "\n"; }

ConfigFile parse_config(std::string_view text, const std::string& source) {
  const Json doc = parse_json(text, source);
  const Reader root(doc, source, "");
  root.require(doc.is_object(), "expected an object");
  ConfigFile config;
  if (root.has("name")) config.name = root.field("name").str();
  config.curves = read_curves(root.field("curves"));
  config.points = read_points(root.field("points"));
  if (root.has("contraction")) config.contraction = root.field("contraction").strings();
  return config;
}

ConfigFile load_config(const std::filesystem::path& path) { return parse_config(read_file(path), path.string()); }

std::vector<ConstructionEntry> load_fixture_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  if (ec) throw Error(ErrorKind::InvalidInput, dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<ConstructionEntry> out;
  for (const auto& f : files) out.push_back(load_entry(f));
  return out;
}

Json report_to_json(const VerificationReport& report) {
  Json out;
  out["entry"] = report.entry;
  out["pass"] = report.passed();
  out["computed_type"] = report.computed_type ? Json(report.computed_type->to_string()) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  out["checks"] = std::move(checks);
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.entry << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name << ": " << c.detail << "\n";
  }
  return os.str();
}

}  // namespace dpcyl
