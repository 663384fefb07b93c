#include "hopfkit/io.hpp"

#include <fstream>
#include <set>

#include "hopfkit/double.hpp"

namespace hk {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Error::Code::Parse, what); }

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  for (auto& [k, v] : j.items())
    if (!allowed.count(k)) bad(where + ": unknown key '" + k + "'");
}

Scalar scalar_from(const Field& F, const json& j) {
  if (j.is_string()) return F.parse(j.get<std::string>());
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  bad("scalar must be a string or integer");
}

std::size_t index_from(const json& j, std::size_t bound, const std::string& what) {
  if (!j.is_number_integer()) bad(what + ": index must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) bad(what + ": index out of range");
  return static_cast<std::size_t>(v);
}

json sparse_to_json(const Field& F, const LinMap& f, std::size_t split_in, std::size_t split_out) {
  // Entries [i(, j), k(, l), c] for f: column index split by split_in, row by split_out.
  json out = json::array();
  for (std::size_t c = 0; c < f.in_dim(); ++c)
    for (auto& t : f.col(c)) {
      json e = json::array();
      if (split_in) e.push_back(c / split_in), e.push_back(c % split_in);
      else e.push_back(c);
      if (split_out) e.push_back(t.idx / split_out), e.push_back(t.idx % split_out);
      else e.push_back(t.idx);
      e.push_back(F.str(t.c));
      out.push_back(e);
    }
  return out;
}

LinMap sparse_from_json(const Field& F, const json& j, std::size_t in, std::size_t out, std::size_t split_in,
                        std::size_t split_out, const std::string& what) {
  if (!j.is_array()) bad(what + ": expected an array");
  std::size_t width = (split_in ? 2 : 1) + (split_out ? 2 : 1) + 1;
  LinMap f(in, out);
  for (auto& e : j) {
    if (!e.is_array() || e.size() != width) bad(what + ": entries need " + std::to_string(width) + " fields");
    std::size_t p = 0, c, r;
    if (split_in) {
      std::size_t a = index_from(e[p++], in / split_in, what);
      c = a * split_in + index_from(e[p++], split_in, what);
    } else {
      c = index_from(e[p++], in, what);
    }
    if (split_out) {
      std::size_t a = index_from(e[p++], out / split_out, what);
      r = a * split_out + index_from(e[p++], split_out, what);
    } else {
      r = index_from(e[p++], out, what);
    }
    Scalar v = scalar_from(F, e[p]);
    if (!v.is_zero()) f.col(c).push_back({r, v});
  }
  for (std::size_t c = 0; c < in; ++c) normalize(F, f.col(c));
  return f;
}

Vector vector_from(const Field& F, const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) bad(what + ": expected " + std::to_string(n) + " scalars");
  Vector v;
  for (auto& e : j) v.push_back(scalar_from(F, e));
  return v;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long long r = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    bad("'" + key + "' needs an integer, got '" + v + "'");
  }
}

}  // namespace

json field_to_json(const Field& F) {
  json j;
  if (F.is_prime()) j["p"] = F.p();
  else j["p"] = "Q";
  j["root_order"] = F.root_order();
  return j;
}

Field field_from_json(const json& j) {
  require_keys(j, {"p", "root_order"}, "field");
  std::int64_t p = 0;
  if (j.at("p").is_string()) {
    if (j.at("p") != "Q") bad("field: p must be an integer or \"Q\"");
  } else {
    p = j.at("p").get<std::int64_t>();
    if (p == 0) bad("field: use \"Q\" for the rationals");
  }
  return make_field(p, j.value("root_order", 1));
}

json scalar_to_json(const Field& F, Scalar s) { return F.str(s); }

json vector_to_json(const Field& F, const Vector& v) {
  json a = json::array();
  for (auto& s : v) a.push_back(F.str(s));
  return a;
}

json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.field().str(m.at(i, k)));
    a.push_back(row);
  }
  return a;
}

json report_to_json(const Report& r) {
  json checks = json::object();
  for (auto& c : r.checks) {
    json e = {{"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks[c.name] = e;
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

json hopf_to_json(const HopfData& H) {
  const Field& F = H.field;
  const std::size_t d = H.dim;
  json j;
  j["field"] = field_to_json(F);
  j["dim"] = d;
  j["basis"] = H.basis;
  j["mult"] = sparse_to_json(F, H.mult, d, 0);
  j["unit"] = vector_to_json(F, H.unit);
  // comult entries [i, j, k, c]: Δ(e_i) ∋ c e_j⊗e_k
  j["comult"] = sparse_to_json(F, H.comult, 0, d);
  j["counit"] = vector_to_json(F, H.counit);
  json s = json::array();
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r)
      if (!H.antipode.at(r, c).is_zero()) s.push_back({c, r, F.str(H.antipode.at(r, c))});
  j["antipode"] = s;
  return j;
}

HopfData hopf_from_json(const json& j) {
  require_keys(j, {"schema_version", "field", "dim", "basis", "mult", "unit", "comult", "counit", "antipode"},
               "algebra");
  HopfData H;
  H.field = field_from_json(j.at("field"));
  const Field& F = H.field;
  if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 1) bad("algebra: dim must be positive");
  const std::size_t d = j.at("dim").get<std::size_t>();
  H.dim = d;
  if (j.contains("basis")) {
    H.basis = j.at("basis").get<std::vector<std::string>>();
    if (H.basis.size() != d) bad("algebra: basis has the wrong length");
  } else {
    for (std::size_t i = 0; i < d; ++i) H.basis.push_back("e" + std::to_string(i));
  }
  H.mult = sparse_from_json(F, j.at("mult"), d * d, d, d, 0, "mult");
  H.unit = vector_from(F, j.at("unit"), d, "unit");
  H.comult = sparse_from_json(F, j.at("comult"), d, d * d, 0, d, "comult");
  H.counit = vector_from(F, j.at("counit"), d, "counit");
  H.antipode = sparse_from_json(F, j.at("antipode"), d, d, 0, 0, "antipode").to_matrix(F);
  return H;
}

json module_to_json(const YDModule& M) {
  const Field& F = M.field();
  json j = hopf_to_json(*M.base);
  j["module_dim"] = M.dim;
  j["action"] = sparse_to_json(F, M.act, M.dim, 0);
  j["coaction"] = sparse_to_json(F, M.coact, 0, M.dim);
  return j;
}

YDModule module_from_json(const json& j) {
  require_keys(j, {"schema_version", "field", "dim", "basis", "mult", "unit", "comult", "counit", "antipode",
                   "module_dim", "action", "coaction"},
               "module");
  json base = j;
  for (auto k : {"module_dim", "action", "coaction"}) base.erase(k);
  YDModule M;
  M.base = share(hopf_from_json(base));
  const Field& F = M.field();
  const std::size_t h = M.hdim();
  M.dim = j.at("module_dim").get<std::size_t>();
  M.act = sparse_from_json(F, j.at("action"), h * M.dim, M.dim, M.dim, 0, "action");
  M.coact = sparse_from_json(F, j.at("coaction"), M.dim, h * M.dim, 0, M.dim, "coaction");
  return M;
}

json braided_to_json(const BraidedHopf& B) {
  json j = hopf_to_json(B.alg);
  j["object"] = module_to_json(B.obj);
  return j;
}

BraidedHopf braided_from_json(const json& j) {
  json a = j;
  if (!j.contains("object")) bad("braided algebra: missing 'object'");
  a.erase("object");
  BraidedHopf B;
  B.alg = hopf_from_json(a);
  B.obj = module_from_json(j.at("object"));
  if (B.obj.dim != B.alg.dim) bad("braided algebra: object dimension differs from dim");
  if (!(B.obj.field() == B.alg.field)) bad("braided algebra: fields differ");
  return B;
}

Field parse_field_spec(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = part.find('=');
    if (eq == std::string::npos) bad("field spec: expected key=value, got '" + part + "'");
    std::string k = part.substr(0, eq);
    if (k != "p" && k != "root") bad("field spec: unknown key '" + k + "'");
    kv[k] = part.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (!kv.count("p")) bad("field spec: missing p");
  std::int64_t p = kv["p"] == "Q" ? 0 : to_int("p", kv["p"]);
  if (kv["p"] != "Q" && p == 0) bad("field spec: use p=Q for the rationals");
  int root = kv.count("root") ? static_cast<int>(to_int("root", kv["root"])) : 1;
  return make_field(p, root);
}

AlgebraSpec parse_algebra_spec(const std::string& s) {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"group", {"r"}},   {"taft", {"n"}},    {"family", {"m", "n", "d"}}, {"sweedler", {}},
      {"nichols", {"n"}}, {"radford", {"m"}}, {"file", {"path"}}};
  AlgebraSpec a;
  auto colon = s.find(':');
  a.name = s.substr(0, colon);
  if (a.name == "double") {
    if (colon == std::string::npos) bad("algebra spec: double needs an inner spec");
    a.inner = s.substr(colon + 1);
    parse_algebra_spec(a.inner);
    return a;
  }
  auto it = keys.find(a.name);
  if (it == keys.end()) bad("algebra spec: unknown algebra '" + a.name + "'");
  if (a.name == "file") {
    if (colon == std::string::npos) bad("algebra spec: file needs a path");
    a.params["path"] = s.substr(colon + 1);
    return a;
  }
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    std::string last;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string part = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = part.find('=');
      if (eq == std::string::npos) {
        // d=1,3 continues a list value
        if (last == "d") a.params["d"] += "," + part;
        else bad("algebra spec: expected key=value, got '" + part + "'");
      } else {
        last = part.substr(0, eq);
        if (!it->second.count(last)) bad("algebra spec: unknown key '" + last + "' for " + a.name);
        a.params[last] = part.substr(eq + 1);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  for (auto& k : it->second)
    if (!a.params.count(k) && !(a.name == "family" && k == "d")) bad("algebra spec: missing '" + k + "' for " + a.name);
  for (auto& [k, v] : a.params)
    if (k != "path" && k != "d") to_int(k, v);
  return a;
}

BuiltAlgebra build_algebra(const AlgebraSpec& a, const Field& F, bool braided) {
  auto num = [&](const std::string& k) { return static_cast<int>(to_int(k, a.params.at(k))); };
  BuiltAlgebra out;
  if (a.name == "double") {
    if (braided) {
      BuiltAlgebra in = build_algebra(parse_algebra_spec(a.inner), F, true);
      out.H = drinfeld_double(in.ext->B).D.alg;
    } else {
      out.H = drinfeld_double(base_level(build_algebra(parse_algebra_spec(a.inner), F).H)).D.alg;
    }
    return out;
  }
  if (a.name == "file") {
    std::ifstream in(a.params.at("path"));
    if (!in) bad("cannot open '" + a.params.at("path") + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      bad(std::string("invalid JSON: ") + e.what());
    }
    out.H = hopf_from_json(j);
    if (!(out.H.field == F)) bad("file field differs from --field");
    return out;
  }
  if (a.name == "group") out.H = group_algebra(num("r"), F);
  else if (a.name == "taft") out.H = taft(num("n"), F);
  else {
    if (a.name == "sweedler") out.family = family_params(1, {1}, F);
    else if (a.name == "nichols") out.family = family_params(1, std::vector<int>(num("n"), 1), F);
    else if (a.name == "radford") out.family = family_params(num("m"), {1}, F);
    else {
      int n = num("n");
      std::vector<int> d;
      if (a.params.count("d")) {
        std::string s = a.params.at("d");
        std::size_t pos = 0;
        while (true) {
          std::size_t c = s.find(',', pos);
          d.push_back(static_cast<int>(to_int("d", s.substr(pos, c == std::string::npos ? std::string::npos : c - pos))));
          if (c == std::string::npos) break;
          pos = c + 1;
        }
      } else {
        d.assign(n, 1);
      }
      if (static_cast<int>(d.size()) != n) bad("algebra spec: d needs n entries");
      out.family = family_params(num("m"), d, F);
    }
    out.H = family_hopf(*out.family);
  }
  if (braided) {
    if (!out.family || out.family->n < 1) bad("--braided needs a family algebra with n >= 1");
    out.ext = exterior_factor(*out.family);
  }
  return out;
}

}  // namespace hk
