#include "weilform/serialize.hpp"

#include "weilform/errors.hpp"

namespace weilform {

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw Error(Errc::ParseError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_string(q));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_string(e.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(const Cyclotomic& x) { return {{"order", x.order()}, {"coeffs", rationals(x.coeffs())}}; }

Json to_json(const CycExt& x) {
  return {{"order", x.radicand()}, {"a", rationals(x.a().coeffs())}, {"b", rationals(x.b().coeffs())}};
}

CycExt cycext_from_json(const Json& j, const FieldPtr& field) {
  return guarded([&] {
    const std::int64_t order = j.at("order").get<std::int64_t>();
    if (order < 1) throw Error(Errc::ParseError, "order must be positive");
    FieldPtr f = field ? field : CyclotomicField::make(order);
    if (f->order() != order) throw Error(Errc::OrderMismatch, "serialized order differs from the field");
    const auto a = rationals_from(j.at("a")), b = rationals_from(j.at("b"));
    if (static_cast<int>(a.size()) != f->degree() || static_cast<int>(b.size()) != f->degree())
      throw Error(Errc::ParseError, "coefficient vectors must have length phi(order)");
    return CycExt(Cyclotomic(f, a), Cyclotomic(f, b));
  });
}

Json to_json(const QExpansion& f) {
  Json coeffs = Json::array();
  for (const auto& [n, c] : f.coeffs()) coeffs.push_back(Json::array({n, rational_to_string(c)}));
  Json out = {{"den", f.den()}, {"trunc", f.trunc()}, {"coeffs", coeffs}};
  if (!f.uncertified().empty()) out["uncertified"] = f.uncertified();
  return out;
}

QExpansion series_from_json(const Json& j) {
  return guarded([&] {
    QExpansion f(j.at("den").get<std::int64_t>(), j.at("trunc").get<std::int64_t>());
    for (const auto& e : j.at("coeffs")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "coefficient entries are [n, \"p/q\"]");
      const std::int64_t n = e[0].get<std::int64_t>();
      if (n >= f.trunc()) throw Error(Errc::ParseError, "coefficient at or beyond trunc");
      f.set(n, rational_from_string(e[1].get<std::string>()));
    }
    if (j.contains("uncertified"))
      for (const auto& n : j.at("uncertified")) f.mark_uncertified(n.get<std::int64_t>());
    return f;
  });
}

Json to_json(const VectorForm& F) {
  Json classes = Json::object();
  for (const auto& [r, comp] : F.classes) classes[std::to_string(r)] = to_json(comp);
  Json out = {{"n1", F.form.field().n1}, {"weight", F.weight}};
  if (F.form.is_negated()) out["negated"] = true;
  out["classes"] = classes;
  return out;
}

VectorForm vector_form_from_json(const Json& j) {
  return guarded([&] {
    DiscriminantForm form = DiscriminantForm::build(j.at("n1").get<std::int64_t>());
    if (j.value("negated", false)) form = form.negated();
    VectorForm F{form, j.at("weight").get<std::int64_t>(), {}};
    for (const auto& [key, value] : j.at("classes").items()) {
      std::int64_t r = 0;
      try {
        std::size_t used = 0;
        r = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "class key '" + key + "' is not an integer");
      }
      F.classes.emplace(r, series_from_json(value));
    }
    return F;
  });
}

Json to_json(const WeilMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return {{"order", m.field()->order()}, {"dim", m.dim()}, {"entries", rows}};
}

WeilMatrix weil_matrix_from_json(const Json& j) {
  return guarded([&] {
    const FieldPtr field = CyclotomicField::make(j.at("order").get<std::int64_t>());
    const std::size_t dim = j.at("dim").get<std::size_t>();
    const Json& rows = j.at("entries");
    if (rows.size() != dim) throw Error(Errc::ParseError, "row count differs from dim");
    WeilMatrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (rows[i].size() != dim) throw Error(Errc::ParseError, "row length differs from dim");
      for (std::size_t k = 0; k < dim; ++k) m(i, k) = cycext_from_json(rows[i][k], field);
    }
    return m;
  });
}

}  // namespace weilform
