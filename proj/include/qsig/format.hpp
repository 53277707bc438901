#pragma once

#include <json.hpp>

#include "qsig/int_poly.hpp"
#include "qsig/limit.hpp"
#include "qsig/partition.hpp"
#include "qsig/rat_fun.hpp"
#include "qsig/rational.hpp"
#include "qsig/zexpr.hpp"

namespace qsig {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, text };

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& x);
/// "p/q", or "p" for integers.
Json to_json(const Rational& x);
/// Coefficient array, index = power of t.
Json to_json(const IntPoly& p);
/// {"numerator": [...], "denominator": [...] | "(1-t)^k"}
Json to_json(const RatFun& r);
/// [{"indices": [...], "coeff": c}, ...] in graded lexicographic order.
Json to_json(const ZExpr& e);
Json to_json(const Partition& p);
/// Array of rational strings, index = power of a.
Json to_json(const SymbolicPoly& p);

/// Inverses of the above; throw InvalidInput on malformed input.
BigInt bigint_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntPoly intpoly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);
ZExpr zexpr_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SymbolicPoly symbolic_from_json(const Json& j);

}  // namespace qsig
