#pragma once

#include "seqlab/linear_recurrences.hpp"
#include "seqlab/quadratic_map.hpp"
#include "seqlab/rational.hpp"
#include "seqlab/ring_elem.hpp"
#include "seqlab/row_vec.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace seqlab {

// Rationals travel as "p" or "p/q" strings so no consumer ever sees a
// truncated bigint.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// A ring element is an array of term objects, descending (xexp, lexp),
// matching the canonical text order. num/den are decimal strings.
nlohmann::json ring_to_json(const RingElem& e);
RingElem ring_from_json(const nlohmann::json& j);

nlohmann::json rowvec_to_json(const RowVec& v);
RowVec rowvec_from_json(const nlohmann::json& j);

nlohmann::json coeff_table_to_json(const CoeffTable& t);
CoeffTable coeff_table_from_json(const nlohmann::json& j);

nlohmann::json kappa_to_json(const KappaTable& t);
KappaTable kappa_from_json(const nlohmann::json& j);

nlohmann::json genpoly_to_json(const GenPolyReport& r);
nlohmann::json eq2_to_json(const Eq2Report& r);
nlohmann::json kappa_reconcile_to_json(const KappaReconcileReport& r);
nlohmann::json hypothesis_to_json(const HypothesisReport& r);

// Shape check for the hypothesis report consumers depend on. Returns false
// and fills `why` instead of throwing, so callers can report precisely.
bool validate_hypothesis_json(const nlohmann::json& j, std::string* why = nullptr);

// RFC 4180: quote when needed, double embedded quotes, CRLF records.
std::string csv_field(const std::string& s);
std::string csv_record(const std::vector<std::string>& fields);
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

// Flat term-per-row layout (n,k,xexp,lexp,num,den); a zero coefficient
// keeps its k visible through a row with empty term fields.
std::string coeff_table_to_csv(const CoeffTable& t);
CoeffTable coeff_table_from_csv(const std::string& text);

// One row per n with counts in the k columns, short rows padded with empty
// fields. Plain decimal integers, so the rows can be searched directly.
std::string kappa_rows_to_csv(const std::vector<KappaTable>& tables);
std::vector<KappaTable> kappa_rows_from_csv(const std::string& text);

// Coefficient files: {"x1": "p/q", "x2": ..., "a": {"3": ...}, "b": {...},
// "c": {...}}, the a/b/c maps keyed by the recurrence index as a string.
Order2Problem order2_from_coeff_json(const nlohmann::json& j, long n_need);
nlohmann::json order2_to_coeff_json(const Order2Problem& p);

// Instance snapshots for mismatch records; values go out in text form.
nlohmann::json order2_instance_json(const Order2Problem& p);
nlohmann::json full_history_instance_json(const FullHistoryProblem& p);
nlohmann::json affine_instance_json(const AffineVectorProblem& p);

} // namespace seqlab
