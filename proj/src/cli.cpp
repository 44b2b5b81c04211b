#include "salemhk/cli.hpp"

#include "salemhk/acceptance.hpp"
#include "salemhk/bigfloat.hpp"
#include "salemhk/classify.hpp"
#include "salemhk/corpus.hpp"
#include "salemhk/errors.hpp"
#include "salemhk/json_io.hpp"
#include "salemhk/periods.hpp"
#include "salemhk/salem.hpp"
#include "salemhk/transfer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace salemhk::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs are parsed eagerly; any failure there is the caller's fault.
template <class F>
auto as_usage(const std::string& what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(what + ": " + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_file(const std::string& s)
{
    std::error_code ec;
    return std::filesystem::is_regular_file(s, ec);
}

Json parse_json_text(const std::string& what, const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(what + ": malformed JSON (" + e.what() + ")");
    }
}

RatPoly load_poly(const std::string& arg, const std::string& what)
{
    if (arg.rfind("corpus:", 0) == 0) {
        auto e = find_corpus_entry(arg.substr(7));
        if (!e) throw UsageError(what + ": no corpus entry named '" + arg.substr(7) + "'");
        return to_rat(e->poly);
    }
    if (is_file(arg)) {
        Json j = parse_json_text(what, read_file(arg));
        return as_usage(what + " (" + arg + ")", [&] { return poly_from_json(j); });
    }
    return as_usage(what, [&] { return parse_polynomial(arg); });
}

IntPoly load_int_poly(const std::string& arg, const std::string& what)
{
    RatPoly p = load_poly(arg, what);
    return as_usage(what, [&] { return to_int(p); });
}

SalemPolynomial load_salem(const std::string& arg)
{
    RatPoly p = load_poly(arg, "polynomial");
    auto v = validate_salem(p);
    if (!v.valid()) {
        std::string msg = "not a Salem polynomial:";
        for (const auto& r : v.reasons) msg += " " + r + ";";
        throw InvalidInput(msg);
    }
    return *v.salem;
}

QuadraticFormQ load_form(const std::string& arg, const std::string& what)
{
    std::string text;
    if (!arg.empty() && arg.front() == '{')
        text = arg;
    else if (is_file(arg))
        text = read_file(arg);
    else
        throw UsageError(what + ": expected a JSON form or a file, got '" + arg + "'");
    Json j = parse_json_text(what, text);
    return as_usage(what, [&] { return form_from_json(j); });
}

FieldPtr load_field(const std::string& arg, const std::string& what)
{
    IntPoly f = load_int_poly(arg, what);
    return NumberField::create(f);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
    return out;
}

FieldElement parse_element(const FieldPtr& F, const std::string& text, const std::string& what)
{
    return as_usage(what, [&] { return F->from_poly(parse_polynomial(text)); });
}

// Salem-field elements may be given as h(y) with y = x + 1/x.
FieldElement parse_salem_element(const SalemPolynomial& S, const std::string& text)
{
    if (text.find('y') != std::string::npos) {
        RatPoly h = as_usage("--alpha", [&] { return parse_polynomial(text, "y"); });
        return salem_fixed_element(S, h);
    }
    return parse_element(S.field, text, "--alpha");
}

DiagonalFormOverField parse_diag(const FieldPtr& F, const std::string& text)
{
    DiagonalFormOverField W{F, {}};
    for (const auto& e : split(text, ';')) W.entries.push_back(parse_element(F, e, "--diag"));
    if (W.entries.empty()) throw UsageError("--diag: no entries");
    return W;
}

Int parse_int(const std::string& text, const std::string& what)
{
    Rat q = as_usage(what, [&] { return parse_rational(text); });
    if (q.get_den() != 1) throw UsageError(what + ": expected an integer, got " + text);
    return q.get_num();
}

std::string decimal(const Rat& q, unsigned bits)
{
    return BigFloat(q, bits + 8).to_string(static_cast<int>(bits * 0.30103) + 1);
}

// Human-readable rendering of the JSON payload.
std::string scalar_text(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

bool flat(const Json& j)
{
    if (!j.is_structured()) return true;
    if (!j.is_array()) return false;
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
}

std::string flat_text(const Json& j)
{
    if (!j.is_array()) return scalar_text(j);
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        if (!first) s += ", ";
        s += scalar_text(e);
        first = false;
    }
    return s + "]";
}

void render(const Json& j, std::ostream& out, int indent)
{
    std::string pad(2 * indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (flat(it.value())) {
                out << pad << it.key() << ": " << flat_text(it.value()) << "\n";
            } else {
                out << pad << it.key() << ":\n";
                render(it.value(), out, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() && std::all_of(e.begin(), e.end(), [](const Json& v) { return flat(v); }) &&
                e.contains("condition")) {
                out << pad << "- " << scalar_text(e["condition"]) << ": " << scalar_text(e["value"])
                    << (e.value("pass", false) ? " (pass)" : " (fail)") << "\n";
            } else if (flat(e)) {
                out << pad << "- " << flat_text(e) << "\n";
            } else {
                out << pad << "-\n";
                render(e, out, indent + 1);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Salem numbers, rational quadratic forms and K3/hyperkaehler multiplication"};
    app.name("salemhk");
    app.fallthrough();
    app.require_subcommand(1);

    bool json = false;
    unsigned long prime_bound = 0;
    std::size_t budget = 256;
    app.add_flag("--json", json, "emit JSON");
    app.add_option("--prime-bound", prime_bound, "trial division bound used by factorization");
    app.add_option("--search-budget", budget, "candidate budget for element searches");

    std::string poly, poly2, form_a, form_b, name, type, primes, field, diag, alpha, witness, disc, value;
    std::optional<long> n;
    unsigned bits = 64, period_bits = 53;
    int degree = 0, m = 0, sigma = 0;
    std::uint64_t seed = 0;
    bool totally_positive = false;

    // salem
    auto* salem = app.add_subcommand("salem", "Salem polynomial certificates");
    salem->require_subcommand(1);
    auto* s_validate = salem->add_subcommand("validate", "certify a Salem polynomial");
    s_validate->add_option("poly", poly, "polynomial, file or corpus:<name>")->required();
    auto* s_lambda = salem->add_subcommand("lambda", "isolate the Salem number");
    s_lambda->add_option("poly", poly)->required();
    s_lambda->add_option("--bits", bits, "interval width 2^-bits");
    auto* s_disc = salem->add_subcommand("disc", "discriminant square class");
    s_disc->add_option("poly", poly)->required();
    auto* s_split = salem->add_subcommand("split", "splitting behaviour at primes");
    s_split->add_option("poly", poly)->required();
    s_split->add_option("--primes", primes, "comma-separated primes")->required();
    auto* s_realize = salem->add_subcommand("realize", "check a rational form against the realization conditions");
    s_realize->add_option("poly", poly)->required();
    s_realize->add_option("form", form_a, "JSON form or file")->required();

    // form
    auto* form = app.add_subcommand("form", "rational quadratic forms");
    form->require_subcommand(1);
    auto* f_inv = form->add_subcommand("invariants", "dimension, determinant, signature, Hasse support");
    f_inv->add_option("form", form_a)->required();
    auto* f_equiv = form->add_subcommand("equiv", "equivalence over Q");
    f_equiv->add_option("a", form_a)->required();
    f_equiv->add_option("b", form_b)->required();
    auto* f_named = form->add_subcommand("named", "H, I, negI, VK3 or BBF");
    f_named->add_option("name", name)->required();
    f_named->add_option("--n", n);
    f_named->add_option("--type", type);

    // transfer
    auto* transfer = app.add_subcommand("transfer", "trace-form transfers");
    transfer->require_subcommand(1);
    auto* t_quad = transfer->add_subcommand("quad", "transfer of a diagonal form over a totally real field");
    t_quad->add_option("--field", field)->required();
    t_quad->add_option("--diag", diag, "entries separated by ';'")->required();
    auto* t_salem = transfer->add_subcommand("salem", "transfer of a rank-one hermitian form over a Salem field");
    t_salem->add_option("--poly", poly)->required();
    t_salem->add_option("--alpha", alpha, "element in x, or h(y) with y = x + 1/x")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "existence verdicts");
    classify->require_subcommand(1);
    auto* c_k3 = classify->add_subcommand("k3", "K3 surfaces with Salem multiplication or automorphism");
    c_k3->add_option("poly", poly)->required();
    auto* c_hk = classify->add_subcommand("hk", "hyperkaehler manifolds with Salem multiplication");
    c_hk->add_option("--type", type)->required();
    c_hk->add_option("--n", n);
    c_hk->add_option("poly", poly)->required();
    auto* c_rmk3 = classify->add_subcommand("rm-k3", "K3 surfaces with real multiplication");
    c_rmk3->add_option("--degree", degree)->required();
    c_rmk3->add_option("--m", m)->required();
    auto* c_rmhk = classify->add_subcommand("rm-hk", "hyperkaehler manifolds with real multiplication");
    c_rmhk->add_option("--type", type)->required();
    c_rmhk->add_option("--n", n);
    c_rmhk->add_option("--disc", disc, "d with E = Q(sqrt d)");
    c_rmhk->add_option("--degree", degree, "field degree when no --disc or --field is given");
    c_rmhk->add_option("--m", m)->required();
    c_rmhk->add_option("--field", field, "defining polynomial of E, for witness checks");
    c_rmhk->add_option("--witness", witness, "element of E");

    auto* norm_cmd = app.add_subcommand("norm", "norms from real quadratic fields");
    norm_cmd->add_option("--disc", disc)->required();
    norm_cmd->add_option("--value", value)->required();
    norm_cmd->add_flag("--totally-positive", totally_positive);

    auto* period = app.add_subcommand("period", "numeric period points");
    period->require_subcommand(1);
    auto* p_salem = period->add_subcommand("salem", "period of a Salem transfer");
    p_salem->add_option("poly", poly)->required();
    p_salem->add_option("--alpha", alpha);
    p_salem->add_option("--bits", period_bits);
    auto* p_rm = period->add_subcommand("rm", "period in a real-multiplication family");
    p_rm->add_option("--field", field)->required();
    p_rm->add_option("--diag", diag)->required();
    p_rm->add_option("--sigma", sigma)->required();
    p_rm->add_option("--seed", seed)->required();
    p_rm->add_option("--bits", period_bits);

    auto* entropy_cmd = app.add_subcommand("entropy", "enclosure of log(lambda)");
    entropy_cmd->add_option("poly", poly)->required();
    entropy_cmd->add_option("--bits", bits);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (bits < 8 || bits > 4096 || period_bits < 8 || period_bits > 4096) {
        err << "usage error: --bits must lie in [8, 4096]\n";
        return 1;
    }
    ArithConfig saved = arith_config();
    if (prime_bound) {
        ArithConfig cfg = saved;
        cfg.trial_division_bound = prime_bound;
        set_arith_config(cfg);
    }
    struct Restore {
        ArithConfig cfg;
        ~Restore() { set_arith_config(cfg); }
    } restore{saved};

    auto hk_type = [&] { return as_usage("--type", [&] { return HKType::parse(type, n); }); };

    try {
        Json result;
        if (s_validate->parsed()) {
            RatPoly p = load_poly(poly, "polynomial");
            auto v = validate_salem(p);
            Json reasons = Json::array();
            for (const auto& r : v.reasons) reasons.push_back(r);
            result = Json{{"valid", v.valid()}, {"reasons", reasons}};
            if (v.valid()) result["salem"] = to_json(*v.salem);
        } else if (s_lambda->parsed()) {
            SalemPolynomial S = load_salem(poly);
            RootInterval iv = salem_lambda(S, bits);
            result = Json{{"lambda_interval", Json::array({rat_to_json(iv.lo), rat_to_json(iv.hi)})},
                          {"lambda", decimal((iv.lo + iv.hi) / 2, bits)},
                          {"bits", bits}};
        } else if (s_disc->parsed()) {
            SalemPolynomial S = load_salem(poly);
            result = Json{{"S(1)", S.s_at_1.get_str()},
                          {"S(-1)", S.s_at_minus1.get_str()},
                          {"disc_class", to_json(salem_disc_class(S))},
                          {"field_disc_class", to_json(field_disc_class(*S.field))},
                          {"polynomial_disc", S.disc.get_str()}};
        } else if (s_split->parsed()) {
            SalemPolynomial S = load_salem(poly);
            Json rows = Json::array();
            for (const auto& t : split(primes, ',')) {
                Int p = parse_int(t, "--primes");
                if (!is_prime(p)) throw UsageError("--primes: " + t + " is not prime");
                rows.push_back(Json{{"p", p.get_str()}, {"status", to_string(split_status(S, p))}});
            }
            result = Json{{"primes", rows}};
        } else if (s_realize->parsed()) {
            SalemPolynomial S = load_salem(poly);
            result = to_json(realization_check(S, load_form(form_a, "form")));
        } else if (f_inv->parsed()) {
            QuadraticFormQ f = load_form(form_a, "form");
            result = to_json(f.invariants());
        } else if (f_equiv->parsed()) {
            QuadraticFormQ a = load_form(form_a, "first form"), b = load_form(form_b, "second form");
            result = Json{{"equivalent", equivalent_over_Q(a, b)},
                          {"witt_torsion", witt_is_torsion(a, b)},
                          {"a", to_json(a.invariants())},
                          {"b", to_json(b.invariants())}};
        } else if (f_named->parsed()) {
            QuadraticFormQ f = as_usage("name", [&] { return named_form(name, NamedFormParams{n, type}); });
            result = Json{{"form", form_to_json(f)}, {"invariants", to_json(f.invariants())}};
        } else if (t_quad->parsed()) {
            FieldPtr F = load_field(field, "--field");
            if (!is_totally_real(*F)) throw InvalidInput("--field must define a totally real field");
            DiagonalFormOverField W = parse_diag(F, diag);
            TransferResult t = transfer_quadratic(W);
            result = to_json(t);
            result["det_check"] = check_transfer_det(W, t);
        } else if (t_salem->parsed()) {
            SalemPolynomial S = load_salem(poly);
            FieldElement a = parse_salem_element(S, alpha);
            TransferResult t = transfer_hermitian_rank1(S, a);
            result = to_json(t);
            result["det_check"] = check_transfer_det({S.field, {a}}, Involution::reciprocal(S.field), t);
        } else if (c_k3->parsed()) {
            SalemPolynomial S = load_salem(poly);
            result = Json{{"sm", to_json(classify_k3_sm(S))},
                          {"automorphism", to_json(classify_k3_salem_automorphism(S))}};
        } else if (c_hk->parsed()) {
            HKType t = hk_type();
            result = to_json(classify_hk_sm(load_salem(poly), t));
        } else if (c_rmk3->parsed()) {
            if (degree < 1 || m < 1) throw UsageError("--degree and --m must be positive");
            result = to_json(rm_k3_exists(degree, m));
        } else if (c_rmhk->parsed()) {
            HKType t = hk_type();
            if (m < 1) throw UsageError("--m must be positive");
            RMFieldSpec arg;
            std::optional<FieldElement> w;
            if (!disc.empty()) {
                arg.degree = 2;
                arg.disc = parse_int(disc, "--disc");
            } else if (!field.empty()) {
                FieldPtr F = load_field(field, "--field");
                arg.degree = F->degree();
                if (!witness.empty()) w = parse_element(F, witness, "--witness");
            } else if (degree > 0) {
                arg.degree = degree;
            } else {
                throw UsageError("give one of --disc, --field or --degree");
            }
            if (!witness.empty() && field.empty()) throw UsageError("--witness needs --field");
            result = to_json(rm_hk_exists(t, arg, m, w));
        } else if (norm_cmd->parsed()) {
            Int d = parse_int(disc, "--disc");
            Rat v = as_usage("--value", [&] { return parse_rational(value); });
            if (d < 2 || squarefree_part(d) != d) throw UsageError("--disc must be a squarefree integer >= 2");
            if (v == 0) throw UsageError("--value must be nonzero");
            result = to_json(quad_norm_solvable(d, v, totally_positive));
        } else if (p_salem->parsed()) {
            SalemPolynomial S = load_salem(poly);
            std::optional<FieldElement> a;
            if (!alpha.empty()) {
                a = parse_salem_element(S, alpha);
            } else {
                auto found = find_alpha_with_signature(S, 1, budget);
                if (!found.alpha)
                    throw Error("no alpha with one positive complex place within a budget of " +
                                std::to_string(budget));
                a = found.alpha;
            }
            PeriodData P = period_from_salem(S, *a, period_bits);
            result = to_json(P);
            result["alpha"] = element_to_json(*a);
            result["companion_isometry"] = companion_isometry_check(S, *a);
        } else if (p_rm->parsed()) {
            FieldPtr F = load_field(field, "--field");
            if (!is_totally_real(*F)) throw InvalidInput("--field must define a totally real field");
            DiagonalFormOverField W = parse_diag(F, diag);
            result = to_json(period_from_rm(W, sigma, seed, period_bits));
        } else if (entropy_cmd->parsed()) {
            SalemPolynomial S = load_salem(poly);
            RealInterval iv = entropy(S, bits);
            result = Json{{"entropy_interval", Json::array({rat_to_json(iv.lo), rat_to_json(iv.hi)})},
                          {"entropy", decimal((iv.lo + iv.hi) / 2, bits)},
                          {"bits", bits}};
        } else if (selftest->parsed()) {
            auto results = run_acceptance();
            bool ok = report_acceptance(results, out);
            return ok ? 0 : 2;
        }
        if (json)
            out << result.dump(2) << "\n";
        else
            render(result, out, 0);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace salemhk::cli
