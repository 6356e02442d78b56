#include "lieosc/export.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lieosc/error.hpp"

namespace lieosc {

using json = nlohmann::json;

namespace {

json surd_json(const Surd& s) {
  json terms = json::array();
  for (const auto& t : s.terms())
    terms.push_back({{"d", t.radicand}, {"re", t.re.to_string()}, {"im", t.im.to_string()}});
  return {{"terms", terms}};
}

Surd surd_from(const json& j) {
  std::vector<Surd::RawTerm> raw;
  for (const auto& t : j.at("terms"))
    raw.push_back({t.at("d").get<std::int64_t>(), Rational::parse(t.at("re").get<std::string>()),
                   Rational::parse(t.at("im").get<std::string>())});
  return Surd::normalize(raw);
}

json matrix_json(const Matrix& m) {
  json entries = json::array();
  m.for_each([&](std::size_t r, std::size_t c, const Surd& v) {
    entries.push_back({{"r", r + 1}, {"c", c + 1}, {"v", surd_json(v)}});
  });
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from(const json& j) {
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries"))
    m.set(e.at("r").get<std::size_t>() - 1, e.at("c").get<std::size_t>() - 1, surd_from(e.at("v")));
  return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json check_json(const CheckResult& c) {
  json j = {{"identity", c.identity},
            {"description", c.description},
            {"pass", c.pass},
            {"max_residual", c.max_residual.to_string()},
            {"checked", c.checked},
            {"detail", c.detail}};
  if (c.interior_columns) j["interior_columns"] = *c.interior_columns;
  return j;
}

std::string family_name(Family f) { return std::string(1, family_letter(f)); }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  fail(ErrorCode::InvalidArgument, "unknown format '" + text + "' (expected json or csv)");
}

std::string export_surd(const Surd& s) { return dump(surd_json(s)); }
Surd import_surd(const std::string& text) { return surd_from(parse_json(text)); }

std::string export_matrix(const Matrix& m) { return dump(matrix_json(m)); }
Matrix import_matrix(const std::string& text) { return matrix_from(parse_json(text)); }

std::string export_tensor(const SparseTensor& t, Format f) {
  const std::size_t r = t.rank();
  if (f == Format::Csv) {
    static const char* letters[] = {"i", "j", "k", "l"};
    std::ostringstream out;
    for (std::size_t k = 0; k < r; ++k) out << letters[k] << ",";
    out << "value\n";
    for (const auto& [idx, v] : t.entries()) {
      for (std::size_t k = 0; k < r; ++k) out << idx[k] + 1 << ",";
      out << csv_field(v.to_string()) << "\n";
    }
    return out.str();
  }
  json entries = json::array();
  for (const auto& [idx, v] : t.entries()) {
    json index = json::array();
    for (std::size_t k = 0; k < r; ++k) index.push_back(idx[k] + 1);
    entries.push_back({{"index", index}, {"v", surd_json(v)}});
  }
  return dump({{"dims", t.dims()}, {"entries", entries}});
}

SparseTensor import_tensor(const std::string& text) {
  json j = parse_json(text);
  SparseTensor t(j.at("dims").get<std::vector<std::size_t>>());
  for (const auto& e : j.at("entries")) {
    SparseTensor::Index idx{};
    const auto& index = e.at("index");
    for (std::size_t k = 0; k < index.size(); ++k) idx[k] = index[k].get<std::uint32_t>() - 1;
    t.set(idx, surd_from(e.at("v")));
  }
  return t;
}

std::string export_rep(const RepBundle& rep, Format f) {
  if (f == Format::Csv) {
    std::ostringstream out;
    out << "generator,row,col,value\n";
    for (std::size_t i = 0; i < rep.basis.size(); ++i)
      rep.basis[i].for_each([&](std::size_t r, std::size_t c, const Surd& v) {
        out << csv_field(rep.basis_names[i]) << "," << r + 1 << "," << c + 1 << "," << csv_field(v.to_string()) << "\n";
      });
    return out.str();
  }
  json gens = json::array();
  for (std::size_t i = 0; i < rep.basis.size(); ++i)
    gens.push_back({{"name", rep.basis_names[i]}, {"matrix", matrix_json(rep.basis[i])}});
  json roots = json::array();
  for (const auto& r : rep.roots.positive) roots.push_back({{"label", r.label}, {"vector", r.vector}});
  return dump({{"family", family_name(rep.family)},
               {"rank", rep.rank},
               {"dim_v", rep.dim_v},
               {"gamma", rep.gamma.to_string()},
               {"metric", matrix_json(rep.metric)},
               {"positive_roots", roots},
               {"generators", gens}});
}

std::string export_oscillator(const OperatorRep& op, const RepBundle& rep, Format f) {
  if (f == Format::Csv) {
    std::ostringstream out;
    out << "generator,row,col,value\n";
    for (std::size_t i = 0; i < op.X.size(); ++i)
      op.X[i].for_each([&](std::size_t r, std::size_t c, const Surd& v) {
        out << csv_field(rep.basis_names[i]) << "," << r + 1 << "," << c + 1 << "," << csv_field(v.to_string()) << "\n";
      });
    return out.str();
  }
  json gens = json::array();
  for (std::size_t i = 0; i < op.X.size(); ++i)
    gens.push_back({{"name", rep.basis_names[i]}, {"matrix", matrix_json(op.X[i])}});
  json space = {{"kind", op.space.kind == FockSpace::Kind::Bosonic ? "bosonic" : "fermionic"},
                {"modes", op.space.modes},
                {"dim", op.dim()},
                {"basis", op.space.basis}};
  if (op.space.kind == FockSpace::Kind::Bosonic)
    space["cutoff"] = op.space.cutoff;
  else
    space["majorana"] = op.space.majorana;
  return dump({{"family", family_name(op.family)},
               {"rank", op.rank},
               {"interior_depth", op.interior_depth},
               {"space", space},
               {"generators", gens}});
}

std::string export_report(const Report& r, Format f) {
  if (f == Format::Csv) {
    std::ostringstream out;
    out << "subject,identity,pass,checked,interior_columns,max_residual,detail\n";
    for (const auto& c : r.checks)
      out << csv_field(r.subject) << "," << csv_field(c.identity) << "," << (c.pass ? "true" : "false") << ","
          << c.checked << "," << (c.interior_columns ? std::to_string(*c.interior_columns) : "") << ","
          << csv_field(c.max_residual.to_string()) << "," << csv_field(c.detail) << "\n";
    return out.str();
  }
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return dump({{"subject", r.subject}, {"parameters", params}, {"checks", checks}, {"pass", r.passed()}});
}

Report import_report(const std::string& text) {
  json j = parse_json(text);
  Report r;
  r.subject = j.at("subject").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) r.param(k, v.get<std::string>());
  for (const auto& c : j.at("checks")) {
    CheckResult cr;
    cr.identity = c.at("identity").get<std::string>();
    cr.description = c.at("description").get<std::string>();
    cr.pass = c.at("pass").get<bool>();
    cr.max_residual = Surd::parse(c.at("max_residual").get<std::string>());
    cr.checked = c.at("checked").get<std::size_t>();
    cr.detail = c.at("detail").get<std::string>();
    if (c.contains("interior_columns")) cr.interior_columns = c.at("interior_columns").get<std::size_t>();
    r.checks.push_back(std::move(cr));
  }
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) fail(ErrorCode::Io, "failed writing '" + path + "'");
}

}  // namespace lieosc
