#include "tri3d4/json_io.hpp"

#include <sstream>

namespace tri3d4 {

namespace {

Json index_list(const std::vector<std::uint32_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::uint32_t read_index(const Json& j, std::uint32_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a non-negative integer");
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v >= bound) throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " is out of range");
  return static_cast<std::uint32_t>(v);
}

Fq read_fq(const FieldTower& F, const Json& j, const char* what) {
  const std::uint32_t v = read_index(j, F.q3(), what);
  if (v >= F.q()) throw Error(ErrorKind::NotInFq, std::string(what) + " must lie in F_q");
  return Fq{v};
}

Fq3 read_fq3(const FieldTower& F, const Json& j, const char* what) { return Fq3{read_index(j, F.q3(), what)}; }

Json bigint_json(const BigInt& b) {
  if (b >= std::numeric_limits<std::int64_t>::min() && b <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(b);
  return b.str();
}

int param_count(ClassFamily f) {
  switch (f) {
    case ClassFamily::C0:
      return 0;
    case ClassFamily::C13:
    case ClassFamily::C12:
      return 2;
    default:
      return 1;
  }
}

int param_count(CharFamily f) { return f == CharFamily::Lin || f == CharFamily::F3 ? 2 : 1; }

template <class Id>
std::string label_of(const Id& id, int n) {
  std::string s = to_string(id.family);
  s += "[" + std::to_string(id.a.v);
  if (n == 2) s += "," + std::to_string(id.b.v);
  return s + "]";
}

std::string cell_text(const TableEntry& e) {
  if (e.coef == 0) return "0";
  if (e.exp == 0) return std::to_string(e.coef);
  return std::to_string(e.coef) + "z^" + std::to_string(e.exp);
}

std::string power(std::uint64_t q, int e) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) v *= q;
  return std::to_string(v);
}

}  // namespace

Json field_meta(const FieldTower& F) {
  Json m;
  m["p"] = F.p();
  m["k"] = F.k();
  m["q"] = F.q();
  m["mod_q"] = index_list(F.mod_q());
  Json m3 = Json::array();
  for (Fq c : F.mod_q3()) m3.push_back(c.v);
  m["mod_q3"] = m3;
  m["mod_q_conway"] = F.mod_q_is_conway();
  m["mod_q3_conway"] = F.mod_q3_is_conway();
  m["eta"] = F.eta().v;
  m["theta"] = "zeta_p^trace";
  m["element_encoding"] = "index";
  return m;
}

Json to_json(const UElem& u) { return Json{{"t", {u.t1.v, u.t2.v, u.t3.v, u.t4.v, u.t5.v, u.t6.v}}}; }

UElem uelem_from_json(const FieldTower& F, const Json& j) {
  if (!j.is_object() || !j.contains("t") || !j["t"].is_array() || j["t"].size() != 6)
    throw Error(ErrorKind::InvalidArgument, "element must be {\"t\": [t1, ..., t6]}");
  const Json& t = j["t"];
  return UElem{read_fq3(F, t[0], "t1"), read_fq(F, t[1], "t2"), read_fq3(F, t[2], "t3"),
               read_fq3(F, t[3], "t4"), read_fq(F, t[4], "t5"), read_fq(F, t[5], "t6")};
}

Json to_json(const Pattern& A) {
  return Json{{"a12", A.a12.v}, {"a13", A.a13.v}, {"a15", A.a15.v},
              {"a16", A.a16.v}, {"a17", A.a17.v}, {"a23", A.a23.v}};
}

Pattern pattern_from_json(const FieldTower& F, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "pattern must be an object");
  auto get = [&](const char* key) -> Json { return j.contains(key) ? j[key] : Json(0); };
  return Pattern{read_fq3(F, get("a12"), "a12"), read_fq3(F, get("a13"), "a13"), read_fq3(F, get("a15"), "a15"),
                 read_fq(F, get("a16"), "a16"),  read_fq(F, get("a17"), "a17"),  read_fq(F, get("a23"), "a23")};
}

Json to_json(const CycInt& c) {
  Json a = Json::array();
  for (const auto& x : c.coeffs()) a.push_back(bigint_json(x));
  return a;
}

std::string label(const SuperclassId& id) {
  const int n = param_count(id.family);
  if (n == 0) return to_string(id.family);
  return label_of(id, n);
}

std::string label(const SupercharId& id) {
  if (id.family == CharFamily::Lin) return "Lin[" + std::to_string(id.a.v) + "," + std::to_string(id.b.v) + "]";
  return label_of(id, param_count(id.family));
}

Json to_json(const FieldTower& F, const SuperclassId& id) {
  Json params = Json::array();
  if (param_count(id.family) >= 1) params.push_back(id.a.v);
  if (param_count(id.family) == 2) params.push_back(id.b.v);
  return Json{{"id", label(id)},
              {"family", to_string(id.family)},
              {"params", params},
              {"size", superclass_size(F, id.family)}};
}

Json to_json(const FieldTower& F, const SupercharId& id) {
  Json params = Json::array();
  params.push_back(id.a.v);
  if (param_count(id.family) == 2) params.push_back(id.b.v);
  return Json{{"id", label(id)}, {"family", to_string(id.family)}, {"params", params}, {"degree", basis_size(F, id)}};
}

Json table_to_json(const FieldTower& F, const SupercharTable& t) {
  Json out;
  out["meta"] = field_meta(F);
  Json cls = Json::array();
  for (const auto& c : t.cols) cls.push_back(to_json(F, c));
  out["superclasses"] = cls;
  Json chars = Json::array();
  for (const auto& r : t.rows) chars.push_back(to_json(F, r));
  out["supercharacters"] = chars;
  Json values = Json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.cols.size(); ++c) row.push_back(to_json(to_cyc(t.p, t.at(r, c))));
    values.push_back(std::move(row));
  }
  out["values"] = std::move(values);
  return out;
}

std::string table_to_csv(const SupercharTable& t) {
  std::ostringstream os;
  os << "character";
  for (const auto& c : t.cols) os << ",\"" << label(c) << '"';
  os << "\nsize";
  for (auto s : t.class_sizes) os << ',' << s;
  os << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << '"' << label(t.rows[r]) << '"';
    for (std::size_t c = 0; c < t.cols.size(); ++c) os << ',' << cell_text(t.at(r, c));
    os << '\n';
  }
  return os.str();
}

std::string table_to_latex(const FieldTower& F) {
  const std::uint64_t q = F.q();
  const std::string q7 = power(q, 7), q10 = power(q, 10), sq = std::to_string(q);
  std::ostringstream os;
  os << "% q = " << q << ", \\vartheta(t) = \\zeta_" << F.p() << "^{\\mathrm{Tr}(t)}\n";
  os << "\\begin{tabular}{l|cccccccc}\n";
  os << " & $C_0$ & $C_{1,3}(t_1^*,\\bar t_3)$ & $C_2(t_2^*)$ & $C_{1,2}(t_1^*,t_2^*)$ & $C_3(t_3^*)$ & "
        "$C_4(t_4^*)$ & $C_5(t_5^*)$ & $C_6(t_6^*)$ \\\\\n\\hline\n";
  os << "$\\Psi_{M(A_{12}e_{12}+A_{23}e_{23})}$ & $1$ & $\\vartheta\\pi_q(A_{12}t_1^*)$ & "
        "$\\vartheta(A_{23}t_2^*)$ & $\\vartheta\\pi_q(A_{12}t_1^*)\\vartheta(A_{23}t_2^*)$ & $1$ & $1$ & $1$ & $1$ "
        "\\\\\n";
  os << "$\\Psi_{M(A_{13}^*e_{13}+\\bar A_{12}e_{12})}$ & $" << sq
     << "$ & $\\vartheta\\pi_q(\\bar A_{12}t_1^*-\\bar t_3A_{13}^*)\\sum_{r_2\\in\\mathbb{F}_{" << sq
     << "}}\\vartheta\\pi_q(-A_{13}^*t_1^*r_2)$ & $0$ & $0$ & $" << sq << "\\,\\vartheta\\pi_q(-A_{13}^*t_3^*)$ & $"
     << sq << "$ & $" << sq << "$ & $" << sq << "$ \\\\\n";
  os << "$\\Psi_{M(A_{15}^*)}$ & $" << q7 << "$ & $0$ & $0$ & $0$ & $0$ & $" << q7
     << "\\,\\vartheta\\pi_q(A_{15}^{*q}t_4^*)\\vartheta\\pi_q(A_{15}^*t_4^{*q^2})$ & $" << q7 << "$ & $" << q7
     << "$ \\\\\n";
  os << "$\\Psi_{M(A_{16}^*)}$ & $" << q10 << "$ & $0$ & $0$ & $0$ & $0$ & $0$ & $" << q10
     << "\\,\\vartheta(A_{16}^*t_5^*)$ & $" << q10 << "$ \\\\\n";
  os << "$\\Psi_{M(A_{17}^*)}$ & $" << q10 << "$ & $0$ & $0$ & $0$ & $0$ & $0$ & $0$ & $" << q10
     << "\\,\\vartheta(A_{17}^*t_6^*)$ \\\\\n";
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace tri3d4
