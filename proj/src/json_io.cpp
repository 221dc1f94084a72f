#include "racah/json_io.hpp"

#include <stdexcept>

namespace racah {

namespace {

std::string family_str(Family f) {
    switch (f) {
    case Family::R: return "R";
    case Family::E: return "E";
    case Family::O: return "O";
    }
    return "?";
}

Family family_from(const std::string& s) {
    if (s == "R") return Family::R;
    if (s == "E") return Family::E;
    if (s == "O") return Family::O;
    throw std::invalid_argument("json: unknown family '" + s + "'");
}

json meta_to_json(const ModuleMeta& m) {
    std::string eps;
    eps += m.eps.first == 1 ? '+' : '-';
    eps += m.eps.second == 1 ? '+' : '-';
    return json{{"family", family_str(m.family)}, {"d", m.d},     {"a", m.a.str()},
                {"b", m.b.str()},                 {"c", m.c.str()}, {"eps", eps}};
}

ModuleMeta meta_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: meta must be an object");
    ModuleMeta m;
    m.family = family_from(j.at("family").get<std::string>());
    m.d = j.at("d").get<int>();
    m.a = Rat::parse(j.at("a").get<std::string>());
    m.b = Rat::parse(j.at("b").get<std::string>());
    m.c = Rat::parse(j.at("c").get<std::string>());
    const std::string eps = j.value("eps", "++");
    if (eps.size() != 2) throw std::invalid_argument("json: malformed eps");
    m.eps = {eps[0] == '+' ? 1 : -1, eps[1] == '+' ? 1 : -1};
    return m;
}

} // namespace

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw std::invalid_argument("json: matrix rows must be arrays");
        cols = j[0].size();
    }
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("json: ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_string())
                throw std::invalid_argument("json: matrix entries must be rational strings");
            m.at(i, k) = Rat::parse(j[i][k].get<std::string>());
        }
    }
    return m;
}

bool json_is_hrep(const json& j) { return j.is_object() && j.contains("t0"); }

json hrep_to_json(const HRep& h) {
    json j{{"dim", h.dim},
           {"t0", matrix_to_json(h.t0)},
           {"t1", matrix_to_json(h.t1)},
           {"t0v", matrix_to_json(h.t0v)},
           {"t1v", matrix_to_json(h.t1v)}};
    if (h.meta) j["meta"] = meta_to_json(*h.meta);
    return j;
}

namespace {

RatMatrix square_matrix_field(const json& j, const char* key, std::size_t dim) {
    RatMatrix m = matrix_from_json(j.at(key));
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument(std::string("json: ") + key + " must be dim x dim");
    return m;
}

} // namespace

HRep hrep_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: module document must be an object");
    HRep h;
    h.dim = j.at("dim").get<std::size_t>();
    h.t0 = square_matrix_field(j, "t0", h.dim);
    h.t1 = square_matrix_field(j, "t1", h.dim);
    h.t0v = square_matrix_field(j, "t0v", h.dim);
    h.t1v = square_matrix_field(j, "t1v", h.dim);
    if (j.contains("meta")) h.meta = meta_from_json(j.at("meta"));
    return h;
}

json racahrep_to_json(const RacahRep& r) {
    json j{{"dim", r.dim},
           {"A", matrix_to_json(r.A)},
           {"B", matrix_to_json(r.B)},
           {"C", matrix_to_json(r.C)}};
    if (r.delta) j["delta"] = r.delta->str();
    if (r.meta) j["meta"] = meta_to_json(*r.meta);
    return j;
}

RacahRep racahrep_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: module document must be an object");
    RacahRep r;
    r.dim = j.at("dim").get<std::size_t>();
    r.A = square_matrix_field(j, "A", r.dim);
    r.B = square_matrix_field(j, "B", r.dim);
    r.C = square_matrix_field(j, "C", r.dim);
    if (j.contains("delta")) r.delta = Rat::parse(j.at("delta").get<std::string>());
    if (j.contains("meta")) r.meta = meta_from_json(j.at("meta"));
    return r;
}

json relation_report_to_json(const RelationReport& rep) {
    json j{{"ok", rep.ok}};
    if (rep.h_sum_ok) j["h_sum_ok"] = *rep.h_sum_ok;
    if (rep.central_squares) {
        const auto& k = *rep.central_squares;
        j["central_squares"] =
            json{{"k0", k[0].str()}, {"k1", k[1].str()}, {"k0v", k[2].str()}, {"k1v", k[3].str()}};
    }
    if (rep.racah_d_ok) j["racah_d_ok"] = *rep.racah_d_ok;
    if (rep.central_elements_ok) j["central_elements_ok"] = *rep.central_elements_ok;
    if (rep.alpha) j["alpha"] = rep.alpha->str();
    if (rep.beta) j["beta"] = rep.beta->str();
    if (rep.gamma) j["gamma"] = rep.gamma->str();
    json v = json::array();
    for (const auto& viol : rep.violations)
        v.push_back(json{{"name", viol.name}, {"residual", matrix_to_json(viol.residual)}});
    j["violations"] = std::move(v);
    return j;
}

json lattice_report_to_json(const LatticeReport& rep) {
    json nodes = json::array();
    for (const auto& s : rep.nodes)
        nodes.push_back(json{{"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}});
    json edges = json::array();
    for (const auto& [i, j2] : rep.hasse_edges) edges.push_back(json::array({i, j2}));
    json eigen = json::object();
    for (const auto& [theta, info] : rep.eigen)
        eigen[theta.str()] = json{{"geo", info.geometric}, {"alg", info.algebraic}};
    json subq = json::array();
    for (const auto& et : rep.subquotients) {
        json t{{"node", et.upper},
               {"lower", et.lower},
               {"d", et.tag.d_prime},
               {"a", et.tag.a_prime.str()},
               {"b", et.tag.b_prime.str()},
               {"c", et.tag.c_prime.str()},
               {"verified", et.tag.verified}};
        if (!et.tag.note.empty()) t["note"] = et.tag.note;
        subq.push_back(std::move(t));
    }
    return json{{"shape", to_string(rep.shape)},
                {"t0_diagonalizable", rep.t0_diagonalizable},
                {"nodes", std::move(nodes)},
                {"hasse_edges", std::move(edges)},
                {"eigen", std::move(eigen)},
                {"factors", rep.factor_dims},
                {"subquotients", std::move(subq)}};
}

} // namespace racah
