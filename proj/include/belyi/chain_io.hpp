#ifndef BELYI_CHAIN_IO_HPP
#define BELYI_CHAIN_IO_HPP

#include <string>

#include <json.hpp>

#include "belyi/pipeline.hpp"

namespace belyi {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kChainDocumentVersion = "1";

// ChainDocument JSON: {version, steps: [{kind: "poly", coeffs: [...]} |
// {kind: "mobius", matrix: [[a,b],[c,d]]}], total_degree, provenance}
nlohmann::json chain_to_json(const MapChain& chain, const std::string& provenance);
MapChain chain_from_json(const nlohmann::json& doc);

// Polynomial text: sums of terms over variable z, "^" powers, integer or
// a/b coefficients, e.g. "z^3 - 3z" or "27/4*z*(1-z)^2".
RatPoly parse_poly(const std::string& text);

// Comma-separated points, each a rational or "oo".
std::vector<ExtPoint> parse_points(const std::string& text);

}  // namespace belyi

#endif
