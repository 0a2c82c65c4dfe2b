// JSON forms of the library types (nlohmann/json).
//
// LaurentPoly: object mapping exponent (string key) -> coefficient
// (decimal string), keys in exponent-ascending order.
// ChainComplex: {"ranks":[...], "boundaries":[[[row-major ints]],...]}.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "corkal/constellation.hpp"
#include "corkal/homology.hpp"
#include "corkal/laurent.hpp"
#include "corkal/matrix.hpp"
#include "corkal/twobridge.hpp"

namespace corkal {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
    return j;
}

inline LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
    LaurentPoly p;
    for (const auto& [key, val] : j.items()) {
        long long e = 0;
        size_t i = 0;
        if (!detail::parse_ll(key, i, e) || i != key.size())
            throw ParseError("bad exponent key '" + key + "'");
        Int c;
        if (val.is_string()) {
            try {
                c = Int(val.get<std::string>());
            } catch (const std::exception&) {
                throw ParseError("bad coefficient '" + val.get<std::string>() + "'");
            }
        } else if (val.is_number_integer()) {
            c = Int(val.get<long long>());
        } else {
            throw ParseError("coefficient must be a decimal string or integer");
        }
        p.add_term(e, c);
    }
    return p;
}

// Accepts the text grammar or the JSON object form.
inline LaurentPoly parse_poly(const std::string& s) {
    size_t i = 0;
    detail::skip_ws(s, i);
    if (i < s.size() && s[i] == '{') {
        Json j = Json::parse(s, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed polynomial JSON");
        return poly_from_json(j);
    }
    return parse_poly_text(s);
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) {
            const Int& v = m.at(r, c);
            if (v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max())
                row.push_back(static_cast<long long>(v));
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j, size_t expect_rows = SIZE_MAX,
                                  size_t expect_cols = SIZE_MAX) {
    if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
    const size_t rows = j.size();
    size_t cols = rows ? j[0].size() : 0;
    if (expect_rows != SIZE_MAX && rows != expect_rows)
        throw ParseError("matrix has wrong number of rows");
    if (expect_cols != SIZE_MAX) {
        if (rows == 0) cols = expect_cols;
        else if (cols != expect_cols) throw ParseError("matrix has wrong number of columns");
    }
    IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix JSON");
        for (size_t c = 0; c < cols; ++c) {
            const auto& v = j[r][c];
            if (v.is_string()) {
                try {
                    m.at(r, c) = Int(v.get<std::string>());
                } catch (const std::exception&) {
                    throw ParseError("bad matrix entry '" + v.get<std::string>() + "'");
                }
            } else if (v.is_number_integer()) {
                m.at(r, c) = Int(v.get<long long>());
            } else {
                throw ParseError("matrix entries must be integers");
            }
        }
    }
    return m;
}

inline Json complex_to_json(const ChainComplex& c) {
    Json j;
    j["ranks"] = c.ranks;
    Json bs = Json::array();
    for (const auto& b : c.boundaries) bs.push_back(matrix_to_json(b));
    j["boundaries"] = std::move(bs);
    return j;
}

inline ChainComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ranks") || !j.contains("boundaries"))
        throw ParseError("chain complex JSON needs 'ranks' and 'boundaries'");
    ChainComplex c;
    for (const auto& r : j["ranks"]) {
        if (!r.is_number_integer() || r.get<long long>() < 0)
            throw ParseError("ranks must be nonnegative integers");
        c.ranks.push_back(r.get<size_t>());
    }
    if (c.ranks.empty()) throw ParseError("chain complex needs at least one rank");
    const auto& bs = j["boundaries"];
    if (!bs.is_array() || bs.size() + 1 != c.ranks.size())
        throw ParseError("need exactly one boundary matrix per consecutive degree pair");
    for (size_t i = 0; i < bs.size(); ++i)
        c.boundaries.push_back(matrix_from_json(bs[i], c.ranks[i], c.ranks[i + 1]));
    validate_shapes(c);
    return c;
}

inline Json homology_to_json(const HomologyGroups& h, const ChainComplex& c) {
    Json j;
    Json betti = Json::array(), torsion = Json::array();
    for (const auto& g : h.groups) {
        betti.push_back(g.betti);
        Json t = Json::array();
        for (const Int& d : g.torsion) t.push_back(d.str());
        torsion.push_back(std::move(t));
    }
    j["betti"] = std::move(betti);
    j["torsion"] = std::move(torsion);
    j["euler"] = euler_characteristic(c);
    j["sphere4"] = is_homotopy_sphere_homology(h, 4);
    return j;
}

inline Json injectivity_to_json(const InjectivityReport& rep) {
    Json j;
    j["k"] = rep.k;
    j["bound"] = rep.bound;
    j["count"] = rep.count;
    Json groups = Json::array();
    for (const auto& g : rep.collisions) groups.push_back(g);
    j["collisions"] = std::move(groups);
    return j;
}

}  // namespace corkal
