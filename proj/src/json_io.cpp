#include "zs/json_io.hpp"

#include <charconv>

namespace zs {

namespace {

constexpr i64 kSafeJsonInt = (i64(1) << 53) - 1;

struct Rational {
    i64 num = 0;
    i64 den = 1;  // > 0, reduced
};

Rational reduce(i64 num, i64 den) {
    if (den == 0) throw DomainError("bad_element", "rational with zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    i64 g = gcd_i64(num < 0 ? checked_neg(num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

i64 parse_int_string(const std::string& s, const char* what) {
    i64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw DomainError("bad_element", std::string(what) + ": '" + s + "' is not an integer");
    return v;
}

i64 scalar_from_json(const ojson& j, const char* what) {
    if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if (u > (std::uint64_t)kI64Max)
            throw OverflowError(std::string(what) + " exceeds 64-bit range");
        return (i64)u;
    }
    if (j.is_number_integer()) return j.get<i64>();
    if (j.is_string()) return parse_int_string(j.get<std::string>(), what);
    if (j.is_number_float())
        throw DomainError("bad_element",
                          std::string(what) + ": non-integer numbers are not representable; "
                                              "use {\"num\":..,\"den\":..} or a string");
    throw DomainError("bad_element", std::string(what) + ": expected an integer");
}

Rational rational_from_json(const ojson& j, const char* what) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw DomainError("bad_element",
                              std::string(what) + ": rational needs \"num\" and \"den\"");
        return reduce(scalar_from_json(j.at("num"), what), scalar_from_json(j.at("den"), what));
    }
    return {scalar_from_json(j, what), 1};
}

i64 lcm_i64(i64 a, i64 b) { return checked_mul(a / gcd_i64(a, b), b); }

}  // namespace

ojson int_to_json(i64 v) {
    if (v >= -kSafeJsonInt && v <= kSafeJsonInt) return ojson(v);
    return ojson(std::to_string(v));
}

ojson uint_to_json(std::uint64_t v) {
    if (v <= (std::uint64_t)kSafeJsonInt) return ojson(v);
    return ojson(std::to_string(v));
}

i64 int_from_json(const ojson& j, const char* what) { return scalar_from_json(j, what); }

ojson group_to_json(const GroupContext& ctx) {
    ojson g;
    switch (ctx.kind()) {
        case GroupKind::Integers:
            g["kind"] = "Z";
            break;
        case GroupKind::IntVectors:
            g["kind"] = "Z^k";
            g["rank"] = ctx.rank();
            break;
        case GroupKind::Cyclic:
            g["kind"] = "Z_m";
            g["modulus"] = int_to_json(ctx.modulus());
            break;
        case GroupKind::Boolean:
            g["kind"] = "Z2^k";
            g["rank"] = ctx.rank();
            break;
    }
    return g;
}

GroupContext group_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw DomainError("bad_group", "group descriptor needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return GroupContext::integers();
    if (kind == "Z^k") {
        if (!j.contains("rank")) throw DomainError("bad_group", "Z^k needs a \"rank\"");
        return GroupContext::int_vectors((int)int_from_json(j.at("rank"), "rank"));
    }
    if (kind == "Z_m") {
        if (!j.contains("modulus")) throw DomainError("bad_group", "Z_m needs a \"modulus\"");
        return GroupContext::cyclic(int_from_json(j.at("modulus"), "modulus"));
    }
    if (kind == "Z2^k") {
        if (!j.contains("rank")) throw DomainError("bad_group", "Z2^k needs a \"rank\"");
        return GroupContext::boolean((int)int_from_json(j.at("rank"), "rank"));
    }
    throw DomainError("bad_group", "unknown group kind '" + kind + "'");
}

ojson elem_to_json(const GroupContext& ctx, const GroupElement& e) {
    if (ctx.rank() == 1 && ctx.kind() != GroupKind::Boolean && ctx.kind() != GroupKind::IntVectors)
        return int_to_json(e.scalar());
    ojson arr = ojson::array();
    for (i64 v : e.payload()) arr.push_back(int_to_json(v));
    return arr;
}

ojson elems_to_json(const GroupContext& ctx, std::span<const GroupElement> elems) {
    ojson arr = ojson::array();
    for (const auto& e : elems) arr.push_back(elem_to_json(ctx, e));
    return arr;
}

ojson set_to_json(const ElementSet& D) {
    ojson j;
    j["schema"] = 1;
    j["group"] = group_to_json(D.ctx());
    j["elems"] = elems_to_json(D.ctx(), D.elems());
    return j;
}

ElementSet set_from_json(const ojson& j) {
    if (!j.is_object()) throw DomainError("bad_document", "set document must be a JSON object");
    if (j.contains("schema") && int_from_json(j.at("schema"), "schema") != 1)
        throw DomainError("bad_document", "unsupported schema version");
    if (!j.contains("group") || !j.contains("elems"))
        throw DomainError("bad_document", "set document needs \"group\" and \"elems\"");
    GroupContext ctx = group_from_json(j.at("group"));
    const ojson& elems = j.at("elems");
    if (!elems.is_array()) throw DomainError("bad_document", "\"elems\" must be an array");

    const bool rationals_ok =
        ctx.kind() == GroupKind::Integers || ctx.kind() == GroupKind::IntVectors;

    // first pass: exact rationals per coordinate
    std::vector<std::vector<Rational>> raw;
    raw.reserve(elems.size());
    for (const auto& entry : elems) {
        std::vector<Rational> coords;
        if (ctx.rank() == 1 && !entry.is_array()) {
            coords.push_back(rational_from_json(entry, "element"));
        } else {
            if (!entry.is_array() || (int)entry.size() != ctx.rank())
                throw ContextMismatchError("element needs " + std::to_string(ctx.rank()) +
                                           " coordinates in context " + ctx.describe());
            for (const auto& c : entry) coords.push_back(rational_from_json(c, "coordinate"));
        }
        for (const auto& r : coords)
            if (r.den != 1 && !rationals_ok)
                throw DomainError("bad_element",
                                  "rational elements are only meaningful over Z and Z^k");
        raw.push_back(std::move(coords));
    }

    // clear denominators with one global positive scaling
    i64 scale = 1;
    for (const auto& coords : raw)
        for (const auto& r : coords) scale = lcm_i64(scale, r.den);

    std::vector<GroupElement> parsed;
    parsed.reserve(raw.size());
    for (const auto& coords : raw) {
        std::vector<i64> p(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            p[i] = checked_mul(coords[i].num, scale / coords[i].den);
        parsed.emplace_back(std::move(p));
    }
    return ElementSet(ctx, std::move(parsed));
}

ojson certificate_to_json(const Certificate& c) {
    ojson j;
    j["schema"] = 1;
    j["A"] = elems_to_json(c.A.ctx(), c.A.elems());
    j["B"] = elems_to_json(c.B.ctx(), c.B.elems());
    return j;
}

Certificate certificate_from_json(const GroupContext& ctx, const ojson& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B"))
        throw DomainError("bad_document", "certificate needs \"A\" and \"B\"");
    auto side = [&](const ojson& arr) {
        ojson doc;
        doc["group"] = group_to_json(ctx);
        doc["elems"] = arr;
        return set_from_json(doc);
    };
    return Certificate{side(j.at("A")), side(j.at("B"))};
}

ojson table_to_json(const ElementSet& D, const DecompositionTable& t) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < D.size(); ++i) {
        ojson row;
        row["d"] = elem_to_json(D.ctx(), D[i]);
        ojson pairs = ojson::array();
        for (auto [a, b] : t.rows[i]) {
            ojson pair = ojson::array();
            pair.push_back(elem_to_json(D.ctx(), D[a]));
            pair.push_back(elem_to_json(D.ctx(), D[b]));
            pairs.push_back(std::move(pair));
        }
        row["pairs"] = std::move(pairs);
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson witness_to_json(const ElementSet& D, const ZeroSumWitness& w) {
    ojson j;
    j["schema"] = 1;
    j["z"] = w.z;
    j["witness"] =
        w.witness ? elems_to_json(D.ctx(), w.witness->elems()) : ojson(nullptr);
    return j;
}

ojson weights_to_json(const ElementSet& D, const WeightFunction& f) {
    ojson j;
    j["schema"] = 1;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < D.size(); ++i) {
        ojson row;
        row["x"] = elem_to_json(D.ctx(), D[i]);
        row["f"] = int_to_json(f.weights[i]);
        rows.push_back(std::move(row));
    }
    j["weights"] = std::move(rows);
    return j;
}

ojson reduction_to_json(const LineReduction& r) {
    ojson j;
    j["schema"] = 1;
    j["m"] = int_to_json(r.bound);
    j["base"] = int_to_json(r.base);
    ojson w = ojson::array();
    for (i64 v : r.weights) w.push_back(int_to_json(v));
    j["weights"] = std::move(w);
    ojson image;
    image["group"] = group_to_json(r.image.ctx());
    image["elems"] = elems_to_json(r.image.ctx(), r.image.elems());
    j["image"] = std::move(image);
    return j;
}

ojson canonical_set_to_json(const CanonicalSet& c) {
    ojson arr = ojson::array();
    for (i64 v : c.elems) arr.push_back(int_to_json(v));
    return arr;
}

ojson report_to_json(const ClassificationReport& rep) {
    ojson j;
    j["schema"] = 1;
    j["size"] = rep.size;
    j["window"] = int_to_json(rep.window);
    j["decomposable_count"] = rep.decomposable_count;
    j["max_z"] = rep.max_z;
    ojson verdicts = ojson::array();
    for (const auto& v : rep.verdicts) {
        ojson vj;
        vj["id"] = v.id;
        vj["claim"] = v.claim;
        vj["status"] =
            v.counterexample_free ? "no counterexample in window" : "counterexample found";
        vj["counterexample_free"] = v.counterexample_free;
        vj["hypothesis_count"] = v.hypothesis_sets.size();
        ojson hyp = ojson::array();
        for (const auto& s : v.hypothesis_sets) hyp.push_back(canonical_set_to_json(s));
        vj["hypothesis_sets"] = std::move(hyp);
        ojson cex = ojson::array();
        for (const auto& s : v.counterexamples) cex.push_back(canonical_set_to_json(s));
        vj["counterexamples"] = std::move(cex);
        verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

ojson hunt_to_json(const HuntResult& res) {
    ojson j;
    j["schema"] = 1;
    j["size"] = res.size;
    j["seed"] = uint_to_json(res.seed);
    j["trials"] = uint_to_json(res.trials);
    j["candidates"] = uint_to_json(res.candidates);
    if (res.best_z == 0) {
        j["best"] = nullptr;
    } else {
        ojson best;
        best["z"] = res.best_z;
        i64 g = gcd_i64(res.best_z, res.size);
        best["ratio"] = std::to_string(res.best_z / g) + "/" + std::to_string(res.size / g);
        ojson set = ojson::array();
        for (i64 v : res.best_set) set.push_back(int_to_json(v));
        best["set"] = std::move(set);
        j["best"] = std::move(best);
    }
    return j;
}

ojson error_to_json(const std::string& code, const std::string& message) {
    ojson j;
    j["schema"] = 1;
    ojson e;
    e["code"] = code;
    e["message"] = message;
    j["error"] = std::move(e);
    return j;
}

}  // namespace zs
