#ifndef RAMSEG_ARRANGEMENT_IO_HPP
#define RAMSEG_ARRANGEMENT_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ramseg/geometry.hpp"

namespace ramseg {

/// Malformed arrangement file; what() starts with the offending location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arrangement file schema (one schema for both kinds of coordinates):
//
//   { "parameter": "p/q",                       (optional)
//     "segments": [ { "left": [x, y], "right": [x, y] }, ... ] }
//
// Each coordinate is a rational string "p/q" / "p", or a polynomial in eps
// written as [[degree, "p/q"], ...] with strictly ascending degrees and
// nonzero coefficients ([] is the zero polynomial).

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json polynomial_to_json(const EpsPolynomial& p);

nlohmann::json arrangement_to_json(const NumericArrangement& arr, const std::optional<Rational>& parameter = {});
nlohmann::json arrangement_to_json(const SymbolicArrangement& arr);

struct ArrangementDocument {
    std::optional<Rational> parameter;
    /// Every coordinate, constants included, as a polynomial.
    SymbolicArrangement segments;
    /// True if any coordinate was written as a polynomial.
    bool symbolic = false;

    /// Concrete coordinates: symbolic documents are evaluated at `eps`, or
    /// at the stored parameter when `eps` is empty. Throws ParseError if a
    /// symbolic document has neither, or a segment is degenerate.
    NumericArrangement numeric(const std::optional<Rational>& eps = {}) const;
};

/// Parses the schema above; throws ParseError naming the location.
ArrangementDocument parse_arrangement(std::string_view text);

}  // namespace ramseg

#endif
