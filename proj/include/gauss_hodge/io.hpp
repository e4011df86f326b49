#pragma once

// JSON encodings of fields, forms and reports.  Exact scalars are written
// as "p/q" strings, floats as shortest round-trip decimal strings; readers
// accept either strings or JSON numbers.

#include <json.hpp>

#include "gauss_hodge/bridge.hpp"
#include "gauss_hodge/identities.hpp"
#include "gauss_hodge/solver.hpp"

namespace gauss_hodge {

using Json = nlohmann::ordered_json;

// "p/q" string for rationals, a JSON number for doubles.
Json real_to_json(const Rational& x);
Json real_to_json(double x);

template <class R>
R real_from_json(const Json& j);

// Sparse {"k": coefficient} map; complex values as {"re", "im"}.
template <class S>
Json series_to_json(const HermiteSeries<S>& s);
template <class S>
HermiteSeries<S> series_from_json(const Json& j, int capacity);

template <class S>
Json field_to_json(const ScalarField<S>& f);
template <class S>
ScalarField<S> field_from_json(const Json& j);

// {"n", "p", "components": [{"index": [...], "field": {...}}]}
template <class S>
Json form_to_json(const PForm<S>& f);
template <class S>
PForm<S> form_from_json(const Json& j);

// (1,1): {"n", "entries": [[field, ...], ...]}
// (0,1) and (1,0): {"n", "bidegree": [p, q], "components": [field, ...]}
template <class R>
Json complex_form_to_json(const ComplexForm<R>& f);
template <class R>
ComplexForm<R> complex_form_from_json(const Json& j);

template <class R>
Json report_to_json(const SolveReport<R>& r);
template <class R>
Json lelong_report_to_json(const LelongReport<R>& r);

}  // namespace gauss_hodge
