#include "ramseg/arrangement_io.hpp"

using nlohmann::json;

namespace ramseg {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

Rational parse_rational(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ArithmeticError& e) {
        fail(where, e.what());
    }
}

EpsPolynomial parse_polynomial(const json& j, const std::string& where) {
    std::vector<EpsTerm> terms;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string at = where + "[" + std::to_string(k) + "]";
        const json& term = j[k];
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned())
            fail(at, "expected [degree, \"p/q\"]");
        const auto degree = term[0].get<unsigned>();
        if (!terms.empty() && degree <= terms.back().degree) fail(at, "degrees must be strictly ascending");
        Rational coeff = parse_rational(term[1], at + "[1]");
        if (coeff.is_zero()) fail(at, "zero coefficient");
        terms.push_back({degree, std::move(coeff)});
    }
    return EpsPolynomial(std::move(terms));
}

EpsPolynomial parse_coordinate(const json& j, const std::string& where, bool& symbolic) {
    if (j.is_array()) {
        symbolic = true;
        return parse_polynomial(j, where);
    }
    return EpsPolynomial(parse_rational(j, where));
}

Point<EpsPolynomial> parse_point(const json& j, const std::string& where, bool& symbolic) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
    return {parse_coordinate(j[0], where + "[0]", symbolic), parse_coordinate(j[1], where + "[1]", symbolic)};
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

json polynomial_to_json(const EpsPolynomial& p) {
    json out = json::array();
    for (const auto& t : p.terms()) out.push_back(json::array({t.degree, t.coeff.str()}));
    return out;
}

json arrangement_to_json(const NumericArrangement& arr, const std::optional<Rational>& parameter) {
    json doc = json::object();
    if (parameter) doc["parameter"] = parameter->str();
    json segs = json::array();
    for (const auto& s : arr)
        segs.push_back({{"left", {s.left.x.str(), s.left.y.str()}}, {"right", {s.right.x.str(), s.right.y.str()}}});
    doc["segments"] = std::move(segs);
    return doc;
}

json arrangement_to_json(const SymbolicArrangement& arr) {
    json segs = json::array();
    for (const auto& s : arr) {
        segs.push_back({{"left", {polynomial_to_json(s.left.x), polynomial_to_json(s.left.y)}},
                        {"right", {polynomial_to_json(s.right.x), polynomial_to_json(s.right.y)}}});
    }
    return {{"segments", std::move(segs)}};
}

ArrangementDocument parse_arrangement(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte) + ": invalid JSON");
    }
    if (!doc.is_object()) fail("$", "expected an object");

    ArrangementDocument out;
    if (auto it = doc.find("parameter"); it != doc.end()) out.parameter = parse_rational(*it, "$.parameter");

    auto segs = doc.find("segments");
    if (segs == doc.end() || !segs->is_array()) fail("$.segments", "expected an array of segments");
    if (segs->empty()) fail("$.segments", "arrangement has no segments");
    for (std::size_t i = 0; i < segs->size(); ++i) {
        const std::string at = "$.segments[" + std::to_string(i) + "]";
        const json& s = (*segs)[i];
        if (!s.is_object() || !s.contains("left") || !s.contains("right")) fail(at, "expected {\"left\", \"right\"}");
        out.segments.push_back({parse_point(s["left"], at + ".left", out.symbolic),
                                parse_point(s["right"], at + ".right", out.symbolic)});
    }
    return out;
}

NumericArrangement ArrangementDocument::numeric(const std::optional<Rational>& eps) const {
    std::optional<Rational> at = eps ? eps : parameter;
    if (symbolic && !at) throw ParseError("$: symbolic arrangement needs a parameter or --epsilon");
    NumericArrangement out = instantiate(segments, at.value_or(Rational(0)));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (is_degenerate(out[i]))
            throw ParseError("$.segments[" + std::to_string(i) + "]: endpoints coincide");
    return out;
}

}  // namespace ramseg
