#include "gauss_hodge/io.hpp"

#include <stdexcept>
#include <string>

#include "gauss_hodge/errors.hpp"

namespace gauss_hodge {

namespace {

template <class S>
const char* scalar_kind() {
  return is_complex_v<S> ? "complex" : "real";
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

Json real_to_json(const Rational& x) { return format_real(x); }
Json real_to_json(double x) { return x; }

template <class R>
R real_from_json(const Json& j) {
  if (j.is_string()) return parse_real<R>(j.get<std::string>());
  if (j.is_number_integer()) return R(j.get<long>());
  if (j.is_number_float()) {
    if constexpr (std::is_same_v<R, Rational>)
      return parse_real<Rational>(j.dump());
    else
      return j.get<double>();
  }
  throw std::invalid_argument("expected a number or numeric string, got " + j.dump());
}

template <class S>
Json series_to_json(const HermiteSeries<S>& s) {
  Json out = Json::object();
  for (int k = 0; k <= s.degree(); ++k) {
    const S& c = s.coeffs()[k];
    if (is_zero(c)) continue;
    if constexpr (is_complex_v<S>)
      out[std::to_string(k)] = Json{{"re", format_real(c.re)}, {"im", format_real(c.im)}};
    else
      out[std::to_string(k)] = format_real(c);
  }
  return out;
}

template <class S>
HermiteSeries<S> series_from_json(const Json& j, int capacity) {
  using R = RealOf<S>;
  if (!j.is_object()) throw std::invalid_argument("a series is a JSON object");
  std::vector<S> coeffs;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(key, &used);
    } catch (const std::exception&) {
    }
    if (k < 0 || used != key.size()) throw std::invalid_argument("bad series index '" + key + "'");
    if (k > capacity) throw DegreeOverflow(k, capacity);
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, S(0));
    if constexpr (is_complex_v<S>) {
      if (value.is_object()) {
        coeffs[k] = S(value.contains("re") ? real_from_json<R>(value.at("re")) : R(0),
                      value.contains("im") ? real_from_json<R>(value.at("im")) : R(0));
        continue;
      }
    }
    coeffs[k] = S(real_from_json<R>(value));
  }
  return HermiteSeries<S>(capacity, std::move(coeffs));
}

template <class S>
Json field_to_json(const ScalarField<S>& f) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : f.coeffs())
    coeffs.push_back(
        Json{{"deg", k}, {"re", format_real(real_part(c))}, {"im", format_real(imag_part(c))}});
  return Json{{"m", f.dim()},
              {"max_total_degree", f.capacity()},
              {"scalar", scalar_kind<S>()},
              {"coeffs", std::move(coeffs)}};
}

template <class S>
ScalarField<S> field_from_json(const Json& j) {
  using R = RealOf<S>;
  const int m = int_field(j, "m");
  const int cap = int_field(j, "max_total_degree");
  ScalarField<S> f(m, cap);
  if (!j.contains("coeffs")) return f;
  for (const auto& term : j.at("coeffs")) {
    const auto k = term.at("deg").get<Degree>();
    if (static_cast<int>(k.size()) != m)
      throw std::invalid_argument("degree vector length differs from m");
    for (int ki : k)
      if (ki < 0) throw std::invalid_argument("negative Hermite degree");
    const R re = term.contains("re") ? real_from_json<R>(term.at("re")) : R(0);
    const R im = term.contains("im") ? real_from_json<R>(term.at("im")) : R(0);
    if constexpr (!is_complex_v<S>) {
      if (!is_zero(im)) throw std::invalid_argument("complex coefficient in a real field");
    }
    f.add_term(k, make_scalar<S>(re, im));
  }
  return f;
}

template <class S>
Json form_to_json(const PForm<S>& f) {
  Json comps = Json::array();
  for (const auto& [I, field] : f.components())
    comps.push_back(Json{{"index", I.axes()}, {"field", field_to_json(field)}});
  return Json{{"n", f.dim()},
              {"p", f.degree()},
              {"max_total_degree", f.capacity()},
              {"components", std::move(comps)}};
}

template <class S>
PForm<S> form_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int p = int_field(j, "p");
  int cap = j.contains("max_total_degree") ? int_field(j, "max_total_degree") : 0;
  std::vector<std::pair<MultiIndex, ScalarField<S>>> parts;
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      MultiIndex I(n, c.at("index").get<std::vector<int>>());
      auto field = field_from_json<S>(c.at("field"));
      if (field.dim() != n) throw std::invalid_argument("component field has m != n");
      cap = std::max(cap, field.capacity());
      parts.emplace_back(std::move(I), std::move(field));
    }
  }
  PForm<S> out(n, p, cap);
  for (auto& [I, field] : parts) out.add_to_component(I, field);
  return out;
}

template <class R>
Json complex_form_to_json(const ComplexForm<R>& f) {
  const int n = f.n();
  if (f.p() == 1 && f.q() == 1) {
    Json rows = Json::array();
    for (int i = 1; i <= n; ++i) {
      Json row = Json::array();
      for (int j = 1; j <= n; ++j) row.push_back(field_to_json(f.entry(i, j)));
      rows.push_back(std::move(row));
    }
    return Json{{"n", n}, {"max_total_degree", f.capacity()}, {"entries", std::move(rows)}};
  }
  if (f.p() + f.q() == 1) {
    Json comps = Json::array();
    for (int j = 1; j <= n; ++j) comps.push_back(field_to_json(f.coefficient(j)));
    return Json{{"n", n},
                {"bidegree", {f.p(), f.q()}},
                {"max_total_degree", f.capacity()},
                {"components", std::move(comps)}};
  }
  throw std::invalid_argument("only (1,0), (0,1) and (1,1) forms have a JSON encoding");
}

template <class R>
ComplexForm<R> complex_form_from_json(const Json& j) {
  const int n = int_field(j, "n");
  int cap = j.contains("max_total_degree") ? int_field(j, "max_total_degree") : 0;
  auto read = [&](const Json& fj) {
    auto f = field_from_json<Complex<R>>(fj);
    if (f.dim() != 2 * n) throw std::invalid_argument("complex coefficients must have m = 2n");
    cap = std::max(cap, f.capacity());
    return f;
  };
  if (j.contains("entries")) {
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("entries must be an n x n array");
    std::vector<std::vector<ComplexField<R>>> cells;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument("entries must be an n x n array");
      cells.emplace_back();
      for (const auto& cell : row) cells.back().push_back(read(cell));
    }
    ComplexForm<R> out(n, 1, 1, cap);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) out.set_entry(i, k, cells[i - 1][k - 1]);
    return out;
  }
  const auto bideg = j.at("bidegree").get<std::vector<int>>();
  if (bideg.size() != 2 || bideg[0] + bideg[1] != 1)
    throw std::invalid_argument("bidegree must be [1,0] or [0,1]");
  const auto& comps = j.at("components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != n)
    throw std::invalid_argument("a (1,0) or (0,1) form needs n components");
  std::vector<ComplexField<R>> fields;
  for (const auto& c : comps) fields.push_back(read(c));
  ComplexForm<R> out(n, bideg[0], bideg[1], cap);
  for (int k = 1; k <= n; ++k) out.set_coefficient(k, fields[k - 1]);
  return out;
}

template <class R>
Json report_to_json(const SolveReport<R>& r) {
  return Json{{"residual", real_to_json(r.residual_sq)},
              {"input_norm_sq", real_to_json(r.input_norm_sq)},
              {"output_norm_sq", real_to_json(r.output_norm_sq)},
              {"bound_constant", real_to_json(r.bound_constant)},
              {"ratio", real_to_json(r.ratio)},
              {"bound_satisfied", r.bound_satisfied},
              {"blocks_solved", r.blocks_solved}};
}

template <class R>
Json lelong_report_to_json(const LelongReport<R>& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages)
    stages.push_back(Json{{"stage", s.stage},
                          {"value", real_to_json(s.value)},
                          {"reference", real_to_json(s.reference)},
                          {"constant", real_to_json(s.constant)},
                          {"pass", s.pass}});
  return Json{{"summary", report_to_json(r.summary)},
              {"closedness_sq", real_to_json(r.closedness_sq)},
              {"type_defect_sq", real_to_json(r.type_defect_sq)},
              {"d_solves", {report_to_json(r.d_solves[0]), report_to_json(r.d_solves[1])}},
              {"dbar_solves", {report_to_json(r.dbar_solves[0]), report_to_json(r.dbar_solves[1])}},
              {"stages", std::move(stages)}};
}

template Rational real_from_json<Rational>(const Json&);
template double real_from_json<double>(const Json&);

#define GAUSS_HODGE_INSTANTIATE(S)                      \
  template Json series_to_json(const HermiteSeries<S>&);  \
  template HermiteSeries<S> series_from_json<S>(const Json&, int); \
  template Json field_to_json(const ScalarField<S>&);   \
  template ScalarField<S> field_from_json<S>(const Json&); \
  template Json form_to_json(const PForm<S>&);          \
  template PForm<S> form_from_json<S>(const Json&);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)
GAUSS_HODGE_INSTANTIATE(Complex<Rational>)
GAUSS_HODGE_INSTANTIATE(Complex<double>)

#undef GAUSS_HODGE_INSTANTIATE

#define GAUSS_HODGE_INSTANTIATE(R)                                 \
  template Json complex_form_to_json(const ComplexForm<R>&);       \
  template ComplexForm<R> complex_form_from_json<R>(const Json&);  \
  template Json report_to_json(const SolveReport<R>&);             \
  template Json lelong_report_to_json(const LelongReport<R>&);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)

#undef GAUSS_HODGE_INSTANTIATE

}  // namespace gauss_hodge
