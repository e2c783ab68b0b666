#include "moricone/certificate_io.hpp"

#include "moricone/errors.hpp"

#include <fstream>

namespace moricone::nefcert {

using json_io::Json;

namespace {

Json step_json(const ChainStep& st) {
    Json j;
    j["id"] = st.stratum.id;
    j["rank"] = st.stratum.rank;
    j["restriction"] = json_io::matrix(st.restriction);
    j["next_class"] = st.next_class ? json_io::vector(*st.next_class) : Json(nullptr);
    j["oracle_curves"] = json_io::vectors(st.stratum.oracle);
    return j;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("certificate is missing field '") + key + "'");
    return j.at(key);
}

std::size_t count_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

Stratum stratum_from(const Json& j, const std::string& fallback_id) {
    Stratum s;
    s.id = j.contains("id") && j.at("id").is_string() ? j.at("id").get<std::string>() : fallback_id;
    s.rank = count_field(j, "rank");
    s.oracle = json_io::parse_vectors(field(j, "oracle_curves"));
    return s;
}

std::optional<ClassVector> optional_vector(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return json_io::parse_vector(j.at(key));
}

std::vector<ChainStep> steps_from(const Json& arr, std::size_t root_rank, const char* prefix) {
    if (!arr.is_array()) throw InputError(std::string("'") + prefix + "' must be an array");
    std::vector<ChainStep> out;
    std::size_t prev = root_rank;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const Json& s = arr[i];
        ChainStep st;
        st.stratum = stratum_from(s, std::string(prefix) + " " + std::to_string(i));
        st.restriction = json_io::parse_matrix(field(s, "restriction"), prev);
        st.next_class = optional_vector(s, "next_class");
        prev = st.stratum.rank;
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace

Json to_json(const ChainCertificate& cert, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    j["root_rank"] = cert.root_rank;
    j["steps"] = Json::array();
    for (const auto& st : cert.steps) j["steps"].push_back(step_json(st));
    j["divisor"] = json_io::vector(cert.divisor);
    return j;
}

Json to_json(const GridCertificate& cert) {
    Json j;
    j["kind"] = "grid";
    j["root_rank"] = cert.root_rank;
    j["outer"] = Json::array();
    for (const auto& st : cert.outer) j["outer"].push_back(step_json(st));
    Json g;
    g["rows"] = cert.rows;
    g["cols"] = cert.cols;
    g["cells"] = Json::array();
    for (const auto& c : cert.cells) {
        Json cj;
        cj["id"] = c.stratum.id;
        cj["rank"] = c.stratum.rank;
        if (c.from_outer) cj["from_outer"] = json_io::matrix(*c.from_outer);
        if (c.from_prev_a) cj["from_prev_a"] = json_io::matrix(*c.from_prev_a);
        if (c.from_prev_b) cj["from_prev_b"] = json_io::matrix(*c.from_prev_b);
        cj["next_a"] = json_io::vector(c.next_a);
        cj["next_b"] = json_io::vector(c.next_b);
        cj["oracle_curves"] = json_io::vectors(c.stratum.oracle);
        g["cells"].push_back(std::move(cj));
    }
    j["grid"] = std::move(g);
    j["divisor"] = json_io::vector(cert.divisor);
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["passed"] = v.passed;
    j["conclusion"] = v.passed ? Json(v.conclusion) : Json(nullptr);
    j["first_failure"] = v.first_failure ? Json(*v.first_failure) : Json(nullptr);
    j["steps"] = Json::array();
    for (const auto& s : v.steps) {
        Json sj;
        sj["label"] = s.label;
        sj["stratum"] = s.stratum;
        sj["tested_class"] = json_io::vector(s.tested);
        Json p = Json::array();
        for (const auto& q : s.pairings) p.push_back(json_io::rational(q));
        sj["pairings"] = std::move(p);
        sj["passed"] = s.passed;
        if (s.witness_curve) {
            sj["witness"] = {{"oracle_index", *s.witness_index}, {"curve", json_io::vector(*s.witness_curve)}};
        }
        j["steps"].push_back(std::move(sj));
    }
    return j;
}

CertificateDocument document_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("certificate must be a JSON object");
    CertificateDocument doc;
    if (j.contains("kind")) {
        if (!j.at("kind").is_string()) throw InputError("'kind' must be a string");
        doc.kind = j.at("kind").get<std::string>();
    }
    const std::size_t root = count_field(j, "root_rank");
    ClassVector divisor = json_io::parse_vector(field(j, "divisor"));
    if (doc.kind == "chain" || doc.kind == "he") {
        ChainCertificate c;
        c.root_rank = root;
        c.divisor = std::move(divisor);
        c.steps = steps_from(field(j, "steps"), root, "step");
        c.validate();
        doc.chain = std::move(c);
    } else if (doc.kind == "grid") {
        GridCertificate g;
        g.root_rank = root;
        g.divisor = std::move(divisor);
        g.outer = steps_from(field(j, "outer"), root, "outer");
        const Json& grid = field(j, "grid");
        g.rows = count_field(grid, "rows");
        g.cols = count_field(grid, "cols");
        const Json& cells = field(grid, "cells");
        if (!cells.is_array() || cells.size() != g.rows * g.cols)
            throw CertificateShapeError("grid cell count does not match rows x cols");
        std::size_t outer_rank = g.outer.empty() ? root : g.outer.back().stratum.rank;
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            const Json& cj = cells[idx];
            std::size_t u = idx / g.cols, w = idx % g.cols;
            GridCell c;
            c.stratum = stratum_from(cj, "cell (" + std::to_string(u) + "," + std::to_string(w) + ")");
            auto matrix = [&](const char* key, std::size_t cols) -> std::optional<RationalMatrix> {
                if (!cj.contains(key) || cj.at(key).is_null()) return std::nullopt;
                return json_io::parse_matrix(cj.at(key), cols);
            };
            c.from_outer = matrix("from_outer", outer_rank);
            if (u > 0) c.from_prev_a = matrix("from_prev_a", g.cells[idx - g.cols].stratum.rank);
            if (w > 0) c.from_prev_b = matrix("from_prev_b", g.cells[idx - 1].stratum.rank);
            c.next_a = json_io::parse_vector(field(cj, "next_a"));
            c.next_b = json_io::parse_vector(field(cj, "next_b"));
            g.cells.push_back(std::move(c));
        }
        g.validate();
        doc.grid = std::move(g);
    } else {
        throw InputError("unknown certificate kind '" + doc.kind + "'");
    }
    return doc;
}

CertificateDocument load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open certificate file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("certificate file '" + path + "' is not valid JSON: " + e.what());
    }
    return document_from_json(j);
}

Verdict verify(const CertificateDocument& doc) {
    if (doc.kind == "grid") return verify_HEF_hypotheses(*doc.grid);
    if (doc.kind == "he") return verify_HE_hypotheses(*doc.chain);
    return verify_chain(*doc.chain);
}

}  // namespace moricone::nefcert
