#pragma once

#include <json.hpp>

#include "zs/element_set.hpp"
#include "zs/families.hpp"
#include "zs/tree.hpp"
#include "zs/zerosum.hpp"

namespace zs {

// Insertion-ordered JSON keeps field order fixed, which the CLI's
// byte-determinism contract relies on.
using ojson = nlohmann::ordered_json;

// Integers beyond 2^53-1 in magnitude are emitted as decimal strings so that
// consumers reading JSON numbers as doubles cannot corrupt them; both forms
// are accepted on input.
ojson int_to_json(i64 v);
ojson uint_to_json(std::uint64_t v);
i64 int_from_json(const ojson& j, const char* what);

ojson group_to_json(const GroupContext& ctx);
GroupContext group_from_json(const ojson& j);

ojson elem_to_json(const GroupContext& ctx, const GroupElement& e);
ojson elems_to_json(const GroupContext& ctx, std::span<const GroupElement> elems);

// Full set document {"schema":1,"group":...,"elems":[...]}. Parsing accepts
// rational entries ({"num":..,"den":..}) for Z and Z^k and clears
// denominators by their least common multiple.
ojson set_to_json(const ElementSet& D);
ElementSet set_from_json(const ojson& j);

ojson certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const GroupContext& ctx, const ojson& j);

ojson table_to_json(const ElementSet& D, const DecompositionTable& t);
ojson witness_to_json(const ElementSet& D, const ZeroSumWitness& w);
ojson weights_to_json(const ElementSet& D, const WeightFunction& f);
ojson reduction_to_json(const LineReduction& r);
ojson canonical_set_to_json(const CanonicalSet& c);
ojson report_to_json(const ClassificationReport& rep);
ojson hunt_to_json(const HuntResult& res);
ojson error_to_json(const std::string& code, const std::string& message);

}  // namespace zs
