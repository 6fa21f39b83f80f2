#include "zczkit/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace zczkit {

namespace {

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string("expected array for ") + what);
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

}  // namespace

Json sequence_to_json(const SncSequence& s) {
    Json j;
    j["p"] = s.modulus();
    j["length"] = s.length();
    Json syms = Json::array();
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (s.is_null(i)) syms.push_back(nullptr);
        else syms.push_back(s.symbol(i));
    }
    j["symbols"] = std::move(syms);
    return j;
}

SncSequence sequence_from_json(const Json& j) {
    const int p = j.at("p").get<int>();
    std::vector<std::int16_t> syms;
    for (const auto& v : j.at("symbols")) {
        if (v.is_null()) syms.push_back(SncSequence::kNull);
        else syms.push_back(v.get<std::int16_t>());
    }
    if (j.contains("length") && j.at("length").get<std::size_t>() != syms.size())
        throw std::invalid_argument("sequence JSON: declared length != symbol count");
    return SncSequence(p, std::move(syms));
}

std::string kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::Ccc: return "ccc";
        case SetKind::SncCcc: return "snc-ccc";
        case SetKind::Mogcs: return "mogcs";
        case SetKind::Zcz: return "zcz";
    }
    return "?";
}

SetKind kind_from_name(const std::string& name) {
    if (name == "ccc") return SetKind::Ccc;
    if (name == "snc-ccc") return SetKind::SncCcc;
    if (name == "mogcs") return SetKind::Mogcs;
    if (name == "zcz") return SetKind::Zcz;
    throw std::invalid_argument("unknown set kind '" + name + "'");
}

namespace {

Json meta_to_json(const BuilderMeta& m) {
    Json j;
    j["n"] = m.n;
    j["t"] = m.t;
    j["J"] = m.J;
    j["c"] = m.c;
    return j;
}

BuilderMeta meta_from_json(const Json& j) {
    BuilderMeta m;
    m.n = j.at("n").get<int>();
    m.t = j.at("t").get<int>();
    m.J = int_vector(j.at("J"), "meta.J");
    m.c = int_vector(j.at("c"), "meta.c");
    return m;
}

}  // namespace

Json code_set_to_json(const CodeSet& set) {
    Json j;
    j["kind"] = kind_name(set.kind);
    j["p"] = set.p;
    j["K"] = set.K();
    j["M"] = set.M();
    j["L"] = set.L();
    if (set.meta) j["meta"] = meta_to_json(*set.meta);
    Json codes = Json::array();
    for (const auto& code : set.codes) {
        Json rows = Json::array();
        for (const auto& row : code) rows.push_back(sequence_to_json(row));
        codes.push_back(std::move(rows));
    }
    j["codes"] = std::move(codes);
    return j;
}

CodeSet code_set_from_json(const Json& j) {
    CodeSet set;
    set.kind = kind_from_name(j.at("kind").get<std::string>());
    if (set.kind == SetKind::Zcz)
        throw std::invalid_argument("code_set_from_json: file holds a ZCZ set");
    set.p = j.at("p").get<int>();
    if (j.contains("meta")) set.meta = meta_from_json(j.at("meta"));
    for (const auto& code : j.at("codes")) {
        std::vector<SncSequence> rows;
        for (const auto& row : code) rows.push_back(sequence_from_json(row));
        set.codes.push_back(std::move(rows));
    }
    if (set.codes.empty() || set.codes[0].empty())
        throw std::invalid_argument("code_set_from_json: empty set");
    for (const auto& code : set.codes) {
        if (code.size() != set.M())
            throw std::invalid_argument("code_set_from_json: ragged codes");
        for (const auto& row : code) {
            if (row.length() != set.L() || row.modulus() != set.p)
                throw std::invalid_argument("code_set_from_json: inconsistent sequence");
        }
    }
    return set;
}

Json zcz_set_to_json(const ZczSet& set) {
    Json j;
    j["kind"] = "zcz";
    j["p"] = set.p;
    j["N"] = set.N();
    j["Z"] = set.zone;
    j["L"] = set.L();
    j["support"] = set.support;
    if (set.meta) j["meta"] = meta_to_json(*set.meta);
    Json seqs = Json::array();
    for (const auto& s : set.sequences) seqs.push_back(sequence_to_json(s));
    j["sequences"] = std::move(seqs);
    return j;
}

ZczSet zcz_set_from_json(const Json& j) {
    if (j.at("kind").get<std::string>() != "zcz")
        throw std::invalid_argument("zcz_set_from_json: file holds a code set");
    ZczSet set;
    set.p = j.at("p").get<int>();
    set.zone = j.at("Z").get<std::size_t>();
    for (const auto& v : j.at("support")) set.support.push_back(v.get<std::size_t>());
    if (j.contains("meta")) set.meta = meta_from_json(j.at("meta"));
    for (const auto& s : j.at("sequences")) set.sequences.push_back(sequence_from_json(s));
    if (set.sequences.empty()) throw std::invalid_argument("zcz_set_from_json: empty set");
    for (const auto& s : set.sequences)
        if (s.length() != set.L() || s.modulus() != set.p)
            throw std::invalid_argument("zcz_set_from_json: inconsistent sequence");
    return set;
}

bool spec_json_has_g(const Json& j) { return j.contains("g"); }

CccSpec ccc_spec_from_json(const Json& j) {
    CccSpec spec;
    spec.p = j.at("p").get<int>();
    spec.n = j.at("n").get<int>();
    if (j.contains("J")) spec.J = int_vector(j.at("J"), "J");
    if (j.contains("c")) spec.c = int_vector(j.at("c"), "c");
    for (const auto& blk : j.at("blocks"))
        spec.partition.blocks.push_back(int_vector(blk, "blocks"));
    if (j.contains("linear")) spec.linear = int_vector(j.at("linear"), "linear");
    if (j.contains("constant")) spec.constant = j.at("constant").get<int>();
    if (j.contains("extra_quadratic")) {
        const auto text = j.at("extra_quadratic").get<std::string>();
        if (!text.empty())
            spec.extra_quadratic = Poly::parse(text, spec.p, spec.n);
    }
    return spec;
}

ZczSpec zcz_spec_from_json(const Json& j) {
    ZczSpec spec;
    spec.base = ccc_spec_from_json(j);
    const Json& g = j.at("g");
    spec.g.c = int_vector(g.at("c"), "g.c");
    if (g.contains("d"))
        for (const auto& term : g.at("d")) {
            if (!term.is_array() || term.size() != 3)
                throw std::invalid_argument("spec JSON: g.d entries must be [mu, nu, value]");
            spec.g.d.push_back({term[0].get<int>(), term[1].get<int>(), term[2].get<int>()});
        }
    if (g.contains("e")) spec.g.e = int_vector(g.at("e"), "g.e");
    if (g.contains("e_prime")) spec.g.e_prime = g.at("e_prime").get<int>();
    return spec;
}

Json ccc_spec_to_json(const CccSpec& spec) {
    Json j;
    j["p"] = spec.p;
    j["n"] = spec.n;
    j["J"] = spec.J;
    j["c"] = spec.c;
    j["blocks"] = spec.partition.blocks;
    j["linear"] = spec.linear;
    j["constant"] = spec.constant;
    j["extra_quadratic"] = spec.extra_quadratic ? spec.extra_quadratic->to_string() : "0";
    return j;
}

Json zcz_spec_to_json(const ZczSpec& spec) {
    Json j = ccc_spec_to_json(spec.base);
    Json g;
    g["c"] = spec.g.c;
    Json d = Json::array();
    for (const auto& [mu, nu, v] : spec.g.d) d.push_back(Json::array({mu, nu, v}));
    g["d"] = std::move(d);
    g["e"] = spec.g.e;
    g["e_prime"] = spec.g.e_prime;
    j["g"] = std::move(g);
    return j;
}

Json report_to_json(const VerificationReport& rep) {
    Json j;
    j["property"] = rep.property;
    j["pass"] = rep.pass;
    j["peak"] = rep.peak;
    if (rep.property == "ccc") {
        j["K"] = rep.K;
        j["M"] = rep.M;
        j["L"] = rep.L;
        j["is_ccc"] = rep.is_ccc;
    } else if (rep.property == "zcz") {
        j["N"] = rep.N;
        j["L"] = rep.L;
        j["Z_claimed"] = rep.Z_claimed;
        j["Z_measured"] = rep.Z_measured;
    } else {
        j["sequences"] = rep.N;
    }
    Json ws = Json::array();
    for (const auto& w : rep.witnesses) {
        Json wj;
        wj["a"] = w.a;
        wj["b"] = w.b;
        wj["shift"] = w.shift;
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

Json bound_to_json(const BoundVerdict& v) {
    Json j;
    j["property"] = "bound";
    j["N"] = v.N;
    j["Z"] = v.Z;
    j["L"] = v.L;
    j["p"] = v.p;
    j["N_times_Z_plus_1"] = v.N * (v.Z + 1);
    if (v.p == 2) j["binary_lhs_2NZ"] = 2 * v.N * v.Z;
    j["ratio"] = v.ratio.to_string();
    {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(4);
        os << v.ratio.to_double();
        j["ratio_decimal"] = os.str();
    }
    j["classification"] = to_string(v.classification);
    return j;
}

namespace {

void sequence_to_csv(const SncSequence& s, std::string& out) {
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (i) out += ',';
        if (!s.is_null(i)) out += std::to_string(s.symbol(i));
    }
    out += '\n';
}

}  // namespace

std::string code_set_to_csv(const CodeSet& set) {
    std::string out;
    for (std::size_t mu = 0; mu < set.codes.size(); ++mu) {
        if (mu) out += '\n';
        for (const auto& row : set.codes[mu]) sequence_to_csv(row, out);
    }
    return out;
}

std::string zcz_set_to_csv(const ZczSet& set) {
    std::string out;
    for (const auto& s : set.sequences) sequence_to_csv(s, out);
    return out;
}

}  // namespace zczkit
