#pragma once

#include <string>
#include <variant>

#include "rackbi/finite_rack.hpp"
#include "rackbi/leibniz.hpp"
#include "rackbi/starprod.hpp"

namespace rackbi {

/// A deformed-product evaluation problem: an algebra together with two
/// polynomial functions on its dual.
struct StarInput {
  LeibnizAlgebra h;
  PolyFun<Rational> f;
  PolyFun<Rational> g;
};

using ParsedInput = std::variant<LeibnizAlgebra, FiniteRack, StarInput>;

/// Parses one of the three input schemas, detected by their keys:
///   {"dim": n, "names": [...], "c": [[i, j, k, "p/q"], ...]}  algebra,
///     1-based indices, exact rational entries as strings or integers;
///     repeated (i,j,k) entries accumulate. The bracket identity is NOT
///     checked here so that the `validate` command can report violations.
///   {"size": m, "unit": e, "op": [[...], ...]}  finite pointed rack,
///     1-based table entries and unit; the table IS validated
///     (Error{InvalidRack} on a non-bijective row or broken axiom).
///   {"algebra": <algebra object or "catalog:NAME">, "f": [...], "g": [...]}
///     star input; polynomials as [["p/q", [exponent vector]], ...].
/// Floats are rejected everywhere. Throws Error{ParseError} carrying a
/// JSON-pointer location for malformed documents.
ParsedInput parse_input_text(const std::string& text);

/// Resolves "catalog:NAME" (built-in algebra), "dihedral:m" (dihedral rack
/// with adjoined unit), or a path to a JSON file.
ParsedInput ingest(const std::string& input);

/// Serializers, inverse to the parsers, with stable key order.
std::string leibniz_json(const LeibnizAlgebra& h);
std::string rack_json(const FiniteRack& x);

}  // namespace rackbi
