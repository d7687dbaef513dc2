#include "qfano/io.hpp"

#include <charconv>

namespace qfano::io {

namespace {

Int json_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<Int>();
}

Json pairs_to_json(const std::vector<std::pair<Int, Int>>& pairs) {
    Json out = Json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("quiver JSON must be an object");
    if (!j.contains("n")) throw ParseError("quiver JSON lacks \"n\"");
    const Int n = json_int(j.at("n"), "\"n\"");
    if (n < 1 || n > 1'000'000) throw ParseError("\"n\" out of range");
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        const Json& list = j.at("arrows");
        if (!list.is_array()) throw ParseError("\"arrows\" must be an array");
        for (const Json& a : list) {
            if (!a.is_array() || a.size() != 3) throw ParseError("each arrow must be [src, dst, mult]");
            const Int s = json_int(a[0], "arrow source");
            const Int t = json_int(a[1], "arrow target");
            const Int m = json_int(a[2], "arrow multiplicity");
            if (s < 0 || s >= n || t < 0 || t >= n) {
                throw IndexError("arrow " + std::to_string(s) + "->" + std::to_string(t) + " out of range");
            }
            arrows.push_back({static_cast<int>(s), static_cast<int>(t), m});
        }
    }
    return Quiver(static_cast<int>(n), arrows);
}

Quiver parse_quiver(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed quiver JSON: ") + ex.what());
    }
    return quiver_from_json(j);
}

Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.source, a.target, a.multiplicity});
    return Json{{"n", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    if (text.empty()) throw ParseError("empty integer list");
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        std::string_view token = text.substr(start, stop - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError("invalid integer '" + std::string(token) + "' in list '" + std::string(text) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Json to_json(const DimVector& d) { return Json(std::vector<Int>(d.begin(), d.end())); }
Json to_json(const LinearForm& theta) { return Json(std::vector<Int>(theta.begin(), theta.end())); }

Json to_json(const FanoCertificate& cert) {
    Json j;
    j["status"] = std::string(to_string(cert.status));
    j["dimension"] = cert.dimension;
    j["picard_rank"] = cert.picard_rank;
    j["index"] = cert.index;
    j["theta"] = to_json(cert.canonical_theta);
    j["witness"] = cert.witness ? to_json(*cert.witness) : Json(nullptr);
    j["notes"] = cert.notes;
    return j;
}

Json to_json(const SignVector& signs) {
    Json out = Json::array();
    for (const SignVector::Run& r : signs.runs()) out.push_back({r.sign, r.length});
    return out;
}

Json to_json(const ToricCatalogEntry& entry) {
    Json j;
    j["spec"] = to_json(entry.spec.to_quiver());
    j["dim"] = entry.invariants.dimension;
    j["rank"] = entry.invariants.picard_rank;
    j["index"] = entry.invariants.index;
    return j;
}

Json catalog_to_json(const std::vector<ToricCatalogEntry>& catalog) {
    Json out = Json::array();
    for (const auto& e : catalog) out.push_back(to_json(e));
    return out;
}

Json to_json(const SubspacePrediction& p) {
    Json j;
    j["theta"] = to_json(p.theta);
    j["dimension"] = p.dimension;
    j["picard_rank"] = p.picard_rank;
    j["index"] = p.index;
    j["coprime"] = p.coprime;
    j["nonempty"] = p.nonempty;
    j["fano_expected"] = p.fano_expected;
    return j;
}

Json to_json(const KroneckerPrediction& p) {
    Json j;
    j["theta"] = to_json(p.theta);
    j["dimension"] = p.dimension;
    j["picard_rank"] = p.picard_rank;
    j["index"] = p.index;
    j["fano_expected"] = p.fano_expected;
    return j;
}

Json to_json(const ThickenedPrediction& p) {
    Json j;
    j["theta"] = to_json(p.theta);
    j["dimension"] = p.dimension;
    j["picard_rank"] = p.picard_rank;
    j["index"] = p.index;
    j["stable_exists"] = p.stable_exists;
    j["excluded"] = p.excluded;
    j["excluded_reason"] = p.excluded ? Json(p.excluded_reason) : Json(nullptr);
    return j;
}

Json to_json(const KroneckerMinDimReport& r) {
    Json j;
    j["m"] = r.m;
    j["bound"] = r.bound;
    j["pairs_checked"] = r.pairs_checked;
    j["equality_pairs"] = pairs_to_json(r.equality_pairs);
    j["counterexamples"] = pairs_to_json(r.counterexamples);
    j["pass"] = r.pass;
    return j;
}

Json to_json(const MukaiReport& r) {
    Json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    j["equality_expected"] = r.equality_expected;
    j["note"] = "lhs uses the index as a lower bound for the pseudo-index";
    return j;
}

}  // namespace qfano::io
