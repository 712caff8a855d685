#include "homnambu/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace homnambu {

using nlohmann::json;

HomNambuAlgebra AlgebraFile::algebra() const {
  if (!bracket) throw IoError("file declares no bracket");
  HomNambuAlgebra A;
  A.bracket = *bracket;
  for (const auto& [name, m] : twists) A.twists.push_back(m);
  A.validate();
  return A;
}

const LinearMap& AlgebraFile::map_or_throw(const std::string& name) const {
  for (const auto& [n, m] : twists)
    if (n == name) return m;
  auto it = maps.find(name);
  if (it == maps.end()) throw IoError("unknown map '" + name + "'");
  return it->second;
}

const TraceFunctional& AlgebraFile::trace_or_throw(
    const std::string& name) const {
  auto it = traces.find(name);
  if (it == traces.end()) throw IoError("unknown trace '" + name + "'");
  return it->second;
}

const PForm& AlgebraFile::pform_or_throw(const std::string& name) const {
  auto it = pforms.find(name);
  if (it == pforms.end()) throw IoError("unknown p-form '" + name + "'");
  return it->second;
}

namespace {

Scalar parse_scalar_or_throw(const json& j, const ParameterContext& ctx,
                             const std::string& where) {
  if (!j.is_string())
    throw IoError(where + ": scalars must be strings, got " +
                  std::string(j.type_name()));
  try {
    return parse_scalar(j.get<std::string>(), ctx);
  } catch (const ScalarParseError& e) {
    throw IoError(where + ": " + e.what());
  }
}

std::vector<int> parse_key(const std::string& key, int arity, int d,
                           const std::string& where) {
  std::vector<int> idx;
  std::istringstream is(key);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      idx.push_back(v - 1);  // file indices are 1-based
    } catch (const std::exception&) {
      throw IoError(where + ": bad index '" + part + "' in key '" + key + "'");
    }
  }
  if (static_cast<int>(idx.size()) != arity)
    throw IoError(where + ": key '" + key + "' has wrong arity");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= d)
      throw IoError(where + ": key '" + key + "' index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw IoError(where + ": key '" + key + "' must be strictly increasing");
  }
  return idx;
}

std::string key_text(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

Vector parse_vector_object(const json& j, const VectorSpaceDecl& space,
                           const ParameterContext& ctx,
                           const std::string& where) {
  if (!j.is_object())
    throw IoError(where + ": expected an object of basis coefficients");
  Vector v = Vector::zero(space.dim());
  for (const auto& [name, val] : j.items()) {
    int at = -1;
    for (int i = 0; i < space.dim(); ++i)
      if (space.basis[i] == name) {
        at = i;
        break;
      }
    if (at < 0) throw IoError(where + ": unknown basis name '" + name + "'");
    v.c[at] = parse_scalar_or_throw(val, ctx, where + "/" + name);
  }
  return v;
}

json vector_object(const Vector& v, const VectorSpaceDecl& space,
                   const ParameterContext& ctx) {
  json out = json::object();
  for (int i = 0; i < v.dim(); ++i)
    if (!v.c[i].is_zero()) out[space.basis[i]] = to_string(v.c[i], ctx);
  return out;
}

LinearMap parse_map(const json& j, const VectorSpaceDecl& space,
                    const ParameterContext& ctx, const std::string& where) {
  if (!j.is_object() || !j.contains("columns"))
    throw IoError(where + ": expected an object with 'columns'");
  const json& cols = j.at("columns");
  if (!cols.is_array() || static_cast<int>(cols.size()) != space.dim())
    throw IoError(where + ": 'columns' must list one column per basis vector");
  std::vector<Vector> columns;
  for (int c = 0; c < space.dim(); ++c) {
    const json& col = cols[c];
    if (!col.is_array() || static_cast<int>(col.size()) != space.dim())
      throw IoError(where + ": column " + std::to_string(c + 1) +
                    " has wrong length");
    Vector v = Vector::zero(space.dim());
    for (int r = 0; r < space.dim(); ++r)
      v.c[r] = parse_scalar_or_throw(col[r], ctx,
                                     where + "/column " + std::to_string(c + 1));
    columns.push_back(std::move(v));
  }
  return LinearMap(std::move(columns));
}

json map_json(const LinearMap& m, const ParameterContext& ctx) {
  json cols = json::array();
  for (const auto& col : m.columns) {
    json jc = json::array();
    for (const auto& s : col.c) jc.push_back(to_string(s, ctx));
    cols.push_back(std::move(jc));
  }
  json out = json::object();
  out["columns"] = std::move(cols);
  return out;
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw IoError("top level must be an object");
  if (!j.contains("format") || j.at("format") != "homnambu/1")
    throw IoError("missing or unsupported 'format' (expected \"homnambu/1\")");

  AlgebraFile f;
  std::string mode = j.value("scalar_mode", std::string("rational"));
  if (mode == "polynomial") {
    if (!j.contains("parameters") || !j.at("parameters").is_array())
      throw IoError("polynomial mode needs a 'parameters' array");
    std::vector<std::string> names;
    for (const auto& p : j.at("parameters")) {
      if (!p.is_string()) throw IoError("parameter names must be strings");
      names.push_back(p.get<std::string>());
    }
    if (names.empty()) throw IoError("polynomial mode needs parameters");
    f.params = ParameterContext(std::move(names));
  } else if (mode != "rational") {
    throw IoError("unknown scalar_mode '" + mode + "'");
  }

  if (!j.contains("basis") || !j.at("basis").is_array())
    throw IoError("missing 'basis' array");
  std::vector<std::string> basis;
  for (const auto& b : j.at("basis")) {
    if (!b.is_string()) throw IoError("basis names must be strings");
    basis.push_back(b.get<std::string>());
  }
  try {
    f.space = VectorSpaceDecl(std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
  if (j.contains("dimension") &&
      j.at("dimension") != json(f.space.dim()))
    throw IoError("'dimension' disagrees with the basis length");

  const int d = f.space.dim();
  if (j.contains("bracket")) {
    const json& jb = j.at("bracket");
    if (!jb.is_object() || !jb.contains("arity") ||
        !jb.at("arity").is_number_integer())
      throw IoError("'bracket' needs an integer 'arity'");
    int arity = jb.at("arity").get<int>();
    if (arity < 1 || arity > d)
      throw IoError("bracket arity out of range");
    SkewMap phi(f.space, arity);
    if (jb.contains("entries")) {
      for (const auto& [key, val] : jb.at("entries").items()) {
        auto idx = parse_key(key, arity, d, "bracket");
        phi.set_entry(idx,
                      parse_vector_object(val, f.space, f.params,
                                          "bracket/" + key));
      }
    }
    f.bracket = std::move(phi);
  }

  if (j.contains("twists")) {
    if (!j.at("twists").is_array()) throw IoError("'twists' must be an array");
    for (const auto& t : j.at("twists")) {
      if (!t.is_object() || !t.contains("name") || !t.at("name").is_string())
        throw IoError("each twist needs a 'name'");
      std::string name = t.at("name").get<std::string>();
      f.twists.emplace_back(name,
                            parse_map(t, f.space, f.params, "twist " + name));
    }
  }
  if (f.bracket &&
      static_cast<int>(f.twists.size()) != f.bracket->arity - 1)
    throw IoError("an arity-n bracket needs exactly n-1 twists");

  if (j.contains("maps")) {
    for (const auto& [name, jm] : j.at("maps").items())
      f.maps.emplace(name, parse_map(jm, f.space, f.params, "map " + name));
  }

  if (j.contains("traces")) {
    for (const auto& [name, jt] : j.at("traces").items()) {
      if (!jt.is_array() || static_cast<int>(jt.size()) != d)
        throw IoError("trace '" + name + "' must list one value per basis vector");
      std::vector<Scalar> cov;
      for (int i = 0; i < d; ++i)
        cov.push_back(parse_scalar_or_throw(jt[i], f.params, "trace " + name));
      f.traces.emplace(name, TraceFunctional(std::move(cov)));
    }
  }

  if (j.contains("pforms")) {
    for (const auto& [name, jp] : j.at("pforms").items()) {
      if (!jp.is_object() || !jp.contains("arity") ||
          !jp.at("arity").is_number_integer())
        throw IoError("p-form '" + name + "' needs an integer 'arity'");
      int arity = jp.at("arity").get<int>();
      if (arity < 1 || arity > d)
        throw IoError("p-form '" + name + "' arity out of range");
      PForm form(f.space, arity);
      if (jp.contains("entries")) {
        for (const auto& [key, val] : jp.at("entries").items()) {
          auto idx = parse_key(key, arity, d, "pform " + name);
          form.set_entry(idx, parse_scalar_or_throw(val, f.params,
                                                    "pform " + name + "/" + key));
        }
      }
      f.pforms.emplace(name, std::move(form));
    }
  }

  if (j.contains("notes")) {
    for (const auto& n : j.at("notes"))
      if (n.is_string()) f.notes.push_back(n.get<std::string>());
  }
  return f;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

std::string write_algebra_text(const AlgebraFile& f) {
  json j;
  j["format"] = "homnambu/1";
  j["scalar_mode"] = f.rational_mode() ? "rational" : "polynomial";
  if (!f.rational_mode()) j["parameters"] = f.params.names();
  j["dimension"] = f.space.dim();
  j["basis"] = f.space.basis;

  if (f.bracket) {
    json entries = json::object();
    for (const auto& [key, val] : f.bracket->table)
      entries[key_text(key)] = vector_object(val, f.space, f.params);
    j["bracket"] = {{"arity", f.bracket->arity}, {"entries", std::move(entries)}};
  }
  if (!f.twists.empty()) {
    json tw = json::array();
    for (const auto& [name, m] : f.twists) {
      json jt = map_json(m, f.params);
      jt["name"] = name;
      tw.push_back(std::move(jt));
    }
    j["twists"] = std::move(tw);
  }
  if (!f.maps.empty()) {
    json jm = json::object();
    for (const auto& [name, m] : f.maps) jm[name] = map_json(m, f.params);
    j["maps"] = std::move(jm);
  }
  if (!f.traces.empty()) {
    json jt = json::object();
    for (const auto& [name, t] : f.traces) {
      json arr = json::array();
      for (const auto& s : t.cov) arr.push_back(to_string(s, f.params));
      jt[name] = std::move(arr);
    }
    j["traces"] = std::move(jt);
  }
  if (!f.pforms.empty()) {
    json jp = json::object();
    for (const auto& [name, form] : f.pforms) {
      json entries = json::object();
      for (const auto& [key, val] : form.table)
        entries[key_text(key)] = to_string(val, f.params);
      jp[name] = {{"arity", form.arity}, {"entries", std::move(entries)}};
    }
    j["pforms"] = std::move(jp);
  }
  if (!f.notes.empty()) j["notes"] = f.notes;
  return j.dump(2) + "\n";
}

void write_algebra_file(const AlgebraFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << write_algebra_text(f);
}

}  // namespace homnambu
