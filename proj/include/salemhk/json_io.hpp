#pragma once

#include "salemhk/classify.hpp"
#include "salemhk/periods.hpp"
#include "salemhk/qforms.hpp"
#include "salemhk/salem.hpp"
#include "salemhk/transfer.hpp"
#include "salemhk/verdict.hpp"

#include <json.hpp>

namespace salemhk {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" or "p"; plain JSON integers are also
// accepted on input.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const SquareClass& c);
Json to_json(const PlaceSet& places);
Json to_json(const Signature& s);
Json to_json(const FormInvariants& inv);
Json to_json(const RatMatrix& m);
Json to_json(const Evidence& e);
Json to_json(const Verdict& v);
Json to_json(const TransferResult& t);
Json to_json(const SalemPolynomial& S);
Json to_json(const RealizationResult& r);
Json to_json(const PeriodData& p);
Json to_json(const PeriodReport& r);

Json poly_to_json(const IntPoly& p);
Json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

Json form_to_json(const QuadraticFormQ& f);
// {"diag": [...]}, {"gram": [[...]]} or {"named": "BBF", "type": "og10", "n": 2}.
QuadraticFormQ form_from_json(const Json& j);

Json element_to_json(const FieldElement& e);
// {"coeffs": [...]} on the power basis, or a polynomial string in x.
FieldElement element_from_json(const FieldPtr& F, const Json& j);

} // namespace salemhk
