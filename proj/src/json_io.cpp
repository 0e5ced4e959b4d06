#include "ttstar/json_io.hpp"

namespace ttstar {

Json to_json(const Rational& r) { return rational_to_string(r); }

Json to_json(const APoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_json(c);
    return j;
}

Json to_json(const ZLoop& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_json(c);
    return j;
}

Json to_json(const BiSeries& s) {
    Json j;
    j["truncation"] = s.truncation();
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) {
        Json t;
        t["n"] = k.first;
        t["m"] = k.second;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const LoopMatrix& m) {
    Json j;
    j["dim"] = m.dim();
    j["truncation"] = m.truncation();
    Json rows = Json::array();
    for (long i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (long k = 0; k < m.dim(); ++k) row.push_back(to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Rational rational_from_json(const Json& j) { return rational_from_string(j.get<std::string>()); }

APoly apoly_from_json(const Json& j) {
    APoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p += APoly::monomial(rational_from_json(it.value()), std::stol(it.key()));
    return p;
}

ZLoop zloop_from_json(const Json& j) {
    ZLoop p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p += ZLoop::monomial(apoly_from_json(it.value()), std::stol(it.key()));
    return p;
}

BiSeries biseries_from_json(const Json& j) {
    BiSeries s(j.at("truncation").get<long>());
    for (const auto& t : j.at("terms"))
        s += BiSeries::monomial(s.truncation(), t.at("n").get<long>(), t.at("m").get<long>(),
                                zloop_from_json(t.at("coeff")));
    return s;
}

LoopMatrix loop_matrix_from_json(const Json& j) {
    LoopMatrix m(j.at("dim").get<long>(), j.at("truncation").get<long>());
    const auto& rows = j.at("entries");
    for (long i = 0; i < m.dim(); ++i)
        for (long k = 0; k < m.dim(); ++k) m.at(i, k) = biseries_from_json(rows.at(i).at(k));
    return m;
}

}  // namespace ttstar
