#include "salemhk/json_io.hpp"

#include "salemhk/errors.hpp"

namespace salemhk {

Json rat_to_json(const Rat& q)
{
    return to_string(q);
}

Rat rat_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    throw InvalidInput("expected a rational as a string or integer, got " + j.dump());
}

Json to_json(const SquareClass& c)
{
    return Json{{"sign", c.sign}, {"radical", c.radical.get_str()}};
}

Json to_json(const PlaceSet& places)
{
    Json out = Json::array();
    for (const auto& v : places) {
        if (v.is_real())
            out.push_back("inf");
        else if (v.p.fits_slong_p())
            out.push_back(v.p.get_si());
        else
            out.push_back(v.p.get_str());
    }
    return out;
}

Json to_json(const Signature& s)
{
    return Json::array({s.pos, s.neg});
}

Json to_json(const FormInvariants& inv)
{
    return Json{{"dim", inv.dim}, {"det", to_json(inv.det)}, {"signature", to_json(inv.signature)},
                {"hasse", to_json(inv.hasse)}};
}

Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Evidence& e)
{
    return Json{{"condition", e.condition}, {"value", e.value}, {"pass", e.pass}};
}

Json to_json(const Verdict& v)
{
    Json ev = Json::array();
    for (const auto& e : v.evidence) ev.push_back(to_json(e));
    Json out{{"answer", to_string(v.answer)}, {"evidence", ev}};
    if (!v.witness.empty()) {
        Json w = Json::object();
        for (const auto& [k, val] : v.witness) w[k] = val;
        out["witness"] = w;
    }
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

Json to_json(const TransferResult& t)
{
    Json out{{"gram", to_json(t.gram)}, {"invariants", to_json(t.form.invariants())}};
    if (t.closed_form) out["closed_form_signature"] = to_json(*t.closed_form);
    return out;
}

Json to_json(const SalemPolynomial& S)
{
    return Json{{"coeffs", poly_to_json(S.poly)["coeffs"]},
                {"degree", S.degree()},
                {"trace_polynomial", poly_to_json(S.trace_poly)["coeffs"]},
                {"lambda_interval", Json::array({rat_to_json(S.lambda.lo), rat_to_json(S.lambda.hi)})},
                {"S(1)", S.s_at_1.get_str()},
                {"S(-1)", S.s_at_minus1.get_str()},
                {"disc_class", to_json(S.disc_class)}};
}

Json to_json(const RealizationResult& r)
{
    Json ev = Json::array();
    for (const auto& e : r.evidence) ev.push_back(to_json(e));
    Json out{{"outcome", to_string(r.outcome)}, {"evidence", ev}};
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (!r.unresolved.empty()) {
        Json u = Json::array();
        for (const auto& p : r.unresolved) u.push_back(p.get_str());
        out["unresolved_primes"] = u;
    }
    return out;
}

namespace {

int digits_for(mpfr_prec_t bits)
{
    return static_cast<int>(bits * 0.30103) + 2;
}

Json complex_to_json(const BigComplex& z, int digits)
{
    return Json::array({z.re.to_string(digits), z.im.to_string(digits)});
}

Json residuals_to_json(const PeriodResiduals& r)
{
    return Json{{"isotropy", r.isotropy}, {"pairing", r.pairing}, {"t11", r.t11}, {"eigen", r.eigen}};
}

} // namespace

Json to_json(const PeriodData& p)
{
    int digits = digits_for(p.precision);
    Json omega = Json::array();
    for (const auto& z : p.omega) omega.push_back(complex_to_json(z, digits));
    return Json{{"precision_bits", p.precision},
                {"embedding_index", p.embedding_index},
                {"eigenvalue", complex_to_json(p.eigenvalue, digits)},
                {"family_dimension", p.family_dimension},
                {"omega", omega},
                {"residuals", residuals_to_json(p.residuals)}};
}

Json to_json(const PeriodReport& r)
{
    return Json{{"isotropic", r.isotropic}, {"positive", r.positive}, {"orthogonal", r.orthogonal},
                {"residuals", residuals_to_json(r.residuals)}};
}

Json poly_to_json(const IntPoly& p)
{
    Json c = Json::array();
    for (const auto& v : p.coeffs()) c.push_back(v.get_str());
    return Json{{"coeffs", c}};
}

Json poly_to_json(const RatPoly& p)
{
    Json c = Json::array();
    for (const auto& v : p.coeffs()) c.push_back(rat_to_json(v));
    return Json{{"coeffs", c}};
}

RatPoly poly_from_json(const Json& j)
{
    if (j.is_string()) return parse_polynomial(j.get<std::string>());
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw InvalidInput("polynomial must be {\"coeffs\": [...]}");
    std::vector<Rat> c;
    for (const auto& v : j["coeffs"]) c.push_back(rat_from_json(v));
    return RatPoly(std::move(c));
}

Json form_to_json(const QuadraticFormQ& f)
{
    if (f.diagonal_representation()) {
        Json d = Json::array();
        for (const auto& v : f.diagonal()) d.push_back(rat_to_json(v));
        return Json{{"diag", d}};
    }
    return Json{{"gram", to_json(f.gram())}};
}

QuadraticFormQ form_from_json(const Json& j)
{
    if (!j.is_object()) throw InvalidInput("form must be a JSON object");
    if (j.contains("diag")) {
        if (!j["diag"].is_array()) throw InvalidInput("field 'diag' must be an array");
        std::vector<Rat> d;
        for (const auto& v : j["diag"]) d.push_back(rat_from_json(v));
        return QuadraticFormQ::from_diag(std::move(d));
    }
    if (j.contains("gram")) {
        if (!j["gram"].is_array()) throw InvalidInput("field 'gram' must be an array of rows");
        std::vector<std::vector<Rat>> rows;
        for (const auto& r : j["gram"]) {
            if (!r.is_array()) throw InvalidInput("field 'gram' must be an array of rows");
            std::vector<Rat> row;
            for (const auto& v : r) row.push_back(rat_from_json(v));
            rows.push_back(std::move(row));
        }
        return QuadraticFormQ::from_gram(RatMatrix::from_rows(rows));
    }
    if (j.contains("named")) {
        NamedFormParams params;
        if (j.contains("n")) {
            if (!j["n"].is_number_integer()) throw InvalidInput("field 'n' must be an integer");
            params.n = j["n"].get<long>();
        }
        if (j.contains("type")) params.type = j["type"].get<std::string>();
        return named_form(j["named"].get<std::string>(), params);
    }
    throw InvalidInput("form needs one of the fields 'diag', 'gram' or 'named'");
}

Json element_to_json(const FieldElement& e)
{
    Json c = Json::array();
    for (const auto& v : e.coeffs()) c.push_back(rat_to_json(v));
    return Json{{"coeffs", c}};
}

FieldElement element_from_json(const FieldPtr& F, const Json& j)
{
    return F->from_poly(poly_from_json(j));
}

} // namespace salemhk
