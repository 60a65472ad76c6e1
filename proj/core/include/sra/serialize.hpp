#pragma once

#include <json.hpp>

#include "sra/genfun.hpp"
#include "sra/singular.hpp"
#include "sra/traces.hpp"

namespace sra {

using json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"order": N, "coeffs": ["p/q", ...], "str": "..."}; "str" is ignored on input.
json to_json(const CycloNum& c);
CycloNum cyclo_from_json(const json& j);

json to_json(const AlgebraParams& p);
AlgebraParams params_from_json(const json& j);

// {"e": [a0, a1, b0, b1], "g": "S1"}
json to_json(const Monomial& m, int n);
Monomial monomial_from_json(const json& j, int n);

// [{"e": ..., "g": ..., "c": CycloNum}, ...]
json to_json(const AlgElem& x);
AlgElem alg_elem_from_json(const json& j, const AlgebraPtr& alg);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);
json to_json(const ExpPolyFn& f);
ExpPolyFn exppoly_from_json(const json& j);

// [{"omega": "i*p/q", "coeff": CycloNum}, ...]
json to_json(const QuasiPolyForm& q);
QuasiPolyForm quasipoly_from_json(const json& j);

json to_json(const GramReport& g, const AlgebraPtr& alg, bool with_matrix = true);
GramReport gram_from_json(const json& j, const AlgebraPtr& alg);

json to_json(const SingularVerdict& v);
SingularVerdict verdict_from_json(const json& j);

json to_json(const IdealCompareReport& r);
IdealCompareReport ideal_report_from_json(const json& j);

json to_json(const NullVectorCandidate& c);
NullVectorCandidate null_candidate_from_json(const json& j, const AlgebraPtr& alg);

}  // namespace sra
