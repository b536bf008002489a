#include "schubert/properties.hpp"

#include "schubert/bruhat.hpp"

#include <json.hpp>

#include <algorithm>

namespace schubert {

namespace {

std::vector<Permutation> parse_list(const std::vector<std::string>& texts) {
    std::vector<Permutation> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_permutation(t));
    return out;
}

}  // namespace

const std::vector<Permutation>& smooth_patterns() {
    static const auto v = parse_list({"3412", "4231"});
    return v;
}

const std::vector<Permutation>& inclusions_patterns() {
    static const auto v = parse_list({"4231", "35142", "42513", "351624"});
    return v;
}

const std::vector<Permutation>& lci_patterns() {
    static const auto v = parse_list({"53241", "52341", "52431", "35142", "42513", "426153"});
    return v;
}

const std::vector<Permutation>& hexagon_patterns() {
    static const auto v = parse_list({"321", "56781234", "56718234", "46781235", "46718235"});
    return v;
}

const std::vector<Permutation>& boolean_patterns() {
    static const auto v = parse_list({"321", "3412"});
    return v;
}

const std::vector<Permutation>& two_vexillary_patterns() {
    static const auto v = parse_list({
        "32154",    "21543",    "214365",   "241365",   "314265",   "312645",   "214635",
        "241635",   "231564",   "215364",   "315264",   "426153",   "5271436",  "5173264",
        "4265173",  "2547163",  "5472163",  "5276143",  "61832547", "26481537", "64821537",
        "26581437", "65821437", "51736284", "51763284", "61837254", "61873254", "25476183",
        "54726183", "54762183", "26487153", "64872153", "26587143", "65827143", "65872143",
    });
    return v;
}

const std::vector<Permutation>& kl2_patterns() {
    static const auto v = parse_list({
        "45123",    "34512",    "53412",    "52341",    "45231",    "351624",   "523614",
        "526314",   "624153",   "524613",   "462513",   "526413",   "546213",   "361452",
        "461352",   "364152",   "463152",   "536142",   "465132",   "426351",   "632541",
        "635241",   "642531",   "653421",   "3612745",  "6231745",  "6241735",  "3416725",
        "4236715",  "4263715",  "4267315",  "3712564",  "7231564",  "3715264",  "3751264",
        "7523164",  "6251734",  "7261453",  "3417562",  "3517462",  "4517362",  "4237561",
        "5347261",  "4275631",  "34127856", "42317856", "34172856", "42371856", "42731856",
        "35127846", "52317846", "52417836", "34128675", "42318675", "34182675", "42381675",
        "42831675", "34186275", "42386175", "42863175", "35128674", "52318674", "36128574",
        "62318574", "52418673", "62518473",
    });
    return v;
}

const std::vector<Permutation>& kl_exactly_two_patterns() {
    static const auto v = parse_list({"653421", "632541", "463152", "526413", "546213", "465132"});
    return v;
}

const PatternSpec& factorial_adjacency_pattern() {
    static const PatternSpec s = parse_pattern_spec("3_41_2");
    return s;
}

const std::vector<PatternSpec>& gorenstein_restricted_patterns() {
    static const std::vector<PatternSpec> v = {parse_pattern_spec("35142!t15,t23"),
                                               parse_pattern_spec("42513!t15,t34")};
    return v;
}

bool is_smooth(const Permutation& w) { return avoids_all(w, smooth_patterns()); }

bool is_factorial(const Permutation& w) {
    return avoids_classical(w, parse_permutation("4231")) &&
           !contains_adjacency(w, factorial_adjacency_pattern());
}

namespace {

// Union-find with node offsets relative to the root.
struct OffsetForest {
    std::vector<int> parent;
    std::vector<int> offset;

    explicit OffsetForest(int n) : parent(n), offset(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int v) {
        if (parent[v] == v) return {v, 0};
        auto [root, off] = find(parent[v]);
        parent[v] = root;
        offset[v] += off;
        return {root, offset[v]};
    }

    // Impose b = a + 1; false on contradiction.
    bool relate(int a, int b) {
        auto [ra, oa] = find(a);
        auto [rb, ob] = find(b);
        if (ra == rb) return ob - oa == 1;
        parent[rb] = ra;
        offset[rb] = oa + 1 - ob;
        return true;
    }
};

}  // namespace

bool gorenstein_divisor_condition(const Permutation& w) {
    // Each cover w t_ab contributes the constraint beta_{b-1} = beta_{a-1} + 1.
    const int n = w.size();
    OffsetForest beta(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (w(a) < w(b)) continue;
            bool cover = true;
            for (int k = a + 1; k < b && cover; ++k) cover = !(w(b) < w(k) && w(k) < w(a));
            if (cover && !beta.relate(a - 1, b - 1)) return false;
        }
    return true;
}

bool is_gorenstein(const Permutation& w) {
    for (const auto& spec : gorenstein_restricted_patterns())
        if (contains_bruhat_restricted(w, spec)) return false;
    return gorenstein_divisor_condition(w);
}

bool is_defined_by_inclusions(const Permutation& w) { return avoids_all(w, inclusions_patterns()); }

bool is_lci(const Permutation& w) { return avoids_all(w, lci_patterns()); }

bool is_321_hexagon_avoiding(const Permutation& w) { return avoids_all(w, hexagon_patterns()); }

bool is_boolean(const Permutation& w) { return avoids_all(w, boolean_patterns()); }

bool is_vexillary(const Permutation& w) { return avoids_classical(w, parse_permutation("2143")); }

bool is_2_vexillary(const Permutation& w) { return avoids_all(w, two_vexillary_patterns()); }

bool kl_filtration_level_le2(const Permutation& w) { return avoids_all(w, kl2_patterns()); }

namespace {

// First violating occurrence over a pattern list, scanning patterns in order.
std::optional<Occurrence> witness_from_list(const Permutation& w,
                                            const std::vector<Permutation>& patterns) {
    for (const auto& p : patterns) {
        auto occ = occurrences_classical(w, p, 1);
        if (!occ.empty()) return occ.front();
    }
    return std::nullopt;
}

}  // namespace

PropertyReport classify(const Permutation& w) {
    PropertyReport r;
    r.subject = w;

    auto record = [&](const std::string& name, bool value, std::optional<Occurrence> witness) {
        r.flags[name] = value;
        if (!value && witness) r.witnesses.emplace(name, std::move(*witness));
    };

    record("smooth", is_smooth(w), witness_from_list(w, smooth_patterns()));

    std::optional<Occurrence> factorial_witness =
        witness_from_list(w, {parse_permutation("4231")});
    if (!factorial_witness) factorial_witness = find_occurrence(w, factorial_adjacency_pattern());
    record("factorial", is_factorial(w), std::move(factorial_witness));

    std::optional<Occurrence> gor_witness;
    for (const auto& spec : gorenstein_restricted_patterns()) {
        gor_witness = find_occurrence(w, spec);
        if (gor_witness) break;
    }
    record("gorenstein", is_gorenstein(w), std::move(gor_witness));

    record("defined_by_inclusions", is_defined_by_inclusions(w),
           witness_from_list(w, inclusions_patterns()));
    record("lci", is_lci(w), witness_from_list(w, lci_patterns()));
    record("hexagon_321_avoiding", is_321_hexagon_avoiding(w),
           witness_from_list(w, hexagon_patterns()));
    record("boolean", is_boolean(w), witness_from_list(w, boolean_patterns()));
    record("vexillary", is_vexillary(w), witness_from_list(w, {parse_permutation("2143")}));
    record("two_vexillary", is_2_vexillary(w), witness_from_list(w, two_vexillary_patterns()));
    record("kl2", kl_filtration_level_le2(w), witness_from_list(w, kl2_patterns()));

    const IntPolynomial p = poincare(w);
    r.palindromic = is_palindromic(p);
    r.factor_exponents = factor_q_integers(p);
    r.singular_components = singular_locus(w);
    return r;
}

std::string PropertyReport::to_json() const {
    nlohmann::json j;
    j["subject"] = subject.to_string();
    nlohmann::json jf = nlohmann::json::object();
    for (const auto& [name, value] : flags) jf[name] = value;
    j["flags"] = jf;
    nlohmann::json jw = nlohmann::json::object();
    for (const auto& [name, occ] : witnesses) jw[name] = occ.positions;
    j["witnesses"] = jw;
    j["palindromic"] = palindromic;
    if (factor_exponents) j["factor_exponents"] = *factor_exponents;
    else j["factor_exponents"] = nullptr;
    nlohmann::json loci = nlohmann::json::array();
    for (const auto& v : singular_components) loci.push_back(v.to_string());
    j["singular_locus"] = loci;
    return j.dump(2);
}

}  // namespace schubert
