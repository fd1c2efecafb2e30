#include "leala/io.hpp"

#include <json.hpp>

namespace leala {
namespace {

using nlohmann::json;

std::string rat_text(const Rational& r) { return Scalar(r).to_string(); }

Scalar parse_scalar(const std::string& text) {
  auto s = Scalar::from_string(text);
  if (!s) throw AlgebraError("unparsable scalar: " + text);
  return *s;
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (const auto& c : w) out.push_back(c.to_string());
  return out;
}

Weight parse_weight(const json& j) {
  Weight w;
  for (const auto& c : j) w.push_back(parse_scalar(c.get<std::string>()));
  return w;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& [id, c] : v)
    out.push_back(json{{"coeff", c.to_string()}, {"id", id}});
  return out;
}

Vector parse_vector(const json& j) {
  Vector v;
  for (const auto& term : j)
    v[term.at("id").get<std::string>()] =
        parse_scalar(term.at("coeff").get<std::string>());
  return v;
}

} // namespace

std::string algebra_to_json(const GradedAlgebra& a) {
  json out;
  out["format"] = "leala-algebra v1";
  out["field"] = a.field() == FieldKind::Q ? "Q" : "Q(t)";
  json window;
  window["bounds"] = a.window().bounds;
  window["params"] = a.window().params;
  out["window"] = window;
  out["cartan"] = a.cartan();
  json basis = json::array();
  for (const auto& sym : a.basis()) {
    json entry;
    entry["id"] = sym.id;
    entry["grade"] = sym.grade.coords;
    if (sym.grade.tag) entry["tag"] = sym.grade.tag->to_string();
    entry["weight"] = weight_json(sym.weight);
    basis.push_back(std::move(entry));
  }
  out["basis"] = basis;
  json structure = json::array();
  for (const auto& [key, value] : a.structure())
    structure.push_back(json{{"left", key.first},
                             {"result", vector_json(value)},
                             {"right", key.second}});
  out["structure"] = structure;
  json form = json::array();
  for (const auto& [key, value] : a.gram())
    form.push_back(json{{"left", key.first},
                        {"right", key.second},
                        {"value", value.to_string()}});
  out["form"] = form;
  return out.dump(2) + "\n";
}

GradedAlgebra algebra_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("bad JSON: ") + e.what());
  }
  try {
    if (in.at("format").get<std::string>() != "leala-algebra v1")
      throw AlgebraError("unknown format tag");
    AlgebraBuilder b;
    std::string field = in.at("field").get<std::string>();
    if (field == "Q")
      b.set_field(FieldKind::Q);
    else if (field == "Q(t)")
      b.set_field(FieldKind::Qt);
    else
      throw AlgebraError("unknown field: " + field);
    Window w;
    w.bounds = in.at("window").at("bounds").get<std::vector<long long>>();
    w.params = in.at("window")
                   .at("params")
                   .get<std::map<std::string, std::string>>();
    b.set_window(w);
    for (const auto& entry : in.at("basis")) {
      GradeLabel g(entry.at("grade").get<std::vector<long long>>());
      if (entry.contains("tag"))
        g.tag = parse_scalar(entry.at("tag").get<std::string>());
      b.add_symbol(entry.at("id").get<std::string>(), g,
                   parse_weight(entry.at("weight")));
    }
    b.set_cartan(in.at("cartan").get<std::vector<std::string>>());
    for (const auto& entry : in.at("structure"))
      b.set_bracket(entry.at("left").get<std::string>(),
                    entry.at("right").get<std::string>(),
                    parse_vector(entry.at("result")));
    for (const auto& entry : in.at("form"))
      b.set_form(entry.at("left").get<std::string>(),
                 entry.at("right").get<std::string>(),
                 parse_scalar(entry.at("value").get<std::string>()));
    return b.build();
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("malformed algebra file: ") + e.what());
  }
}

std::string report_to_json(const CheckReport& r) {
  json out;
  out["check"] = r.check_name;
  out["verdict"] = to_string(r.verdict);
  out["window"] = r.window;
  out["witnesses"] = r.witnesses;
  out["notes"] = r.notes;
  return out.dump(2) + "\n";
}

namespace {

json cert_json(const PsdCertificate& c) {
  json out;
  out["psd"] = c.psd;
  out["perm"] = c.perm;
  json diag = json::array();
  for (const auto& d : c.diag) diag.push_back(rat_text(d));
  out["diag"] = diag;
  json lower = json::array();
  for (const auto& row : c.lower) {
    json r = json::array();
    for (const auto& e : row) r.push_back(rat_text(e));
    lower.push_back(std::move(r));
  }
  out["lower"] = lower;
  json witness = json::array();
  for (const auto& e : c.witness) witness.push_back(rat_text(e));
  out["witness"] = witness;
  return out;
}

json rational_rows_json(const std::vector<std::vector<Rational>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& e : row) r.push_back(rat_text(e));
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace

std::string psd_certificate_to_json(const PsdCertificate& c) {
  return cert_json(c).dump(2) + "\n";
}

std::string radical_report_to_json(const RadicalReport& r) {
  json out;
  out["nullity"] = r.nullity;
  out["radical_basis"] = rational_rows_json(r.radical_basis);
  out["psd"] = cert_json(r.psd);
  json q;
  q["complement"] = r.quotient.complement;
  q["form_bar"] = rational_rows_json(r.quotient.form_bar);
  json classes = json::array();
  for (const auto& [root, cls] : r.quotient.classes) {
    json row = json::array();
    for (const auto& e : cls) row.push_back(rat_text(e));
    classes.push_back(json{{"class", row}, {"root", weight_json(root)}});
  }
  q["classes"] = classes;
  json roots_bar = json::array();
  for (const auto& v : r.quotient.roots_bar) {
    json row = json::array();
    for (const auto& e : v) row.push_back(rat_text(e));
    roots_bar.push_back(std::move(row));
  }
  q["roots_bar"] = roots_bar;
  out["quotient"] = q;
  return out.dump(2) + "\n";
}

std::string gram_csv(const ScalarMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += row[j].to_string();
    }
    out += "\n";
  }
  return out;
}

std::string gram_csv(const RationalMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += rat_text(row[j]);
    }
    out += "\n";
  }
  return out;
}

} // namespace leala
