#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of arrangements, weights, faces, lattices and spectra.
 *
 * Rationals are always written as strings "p/q" (or "p").
 */

#include <arrspec/spectra.hpp>
#include <arrspec/walk.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace arrspec::io {

using json = nlohmann::json;

/// Reads a JSON document; syntax errors report line and column.
inline json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError,
                    origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw Error(ErrorKind::ParseError, where + ": expected a rational string");
}

inline json to_json(const Arrangement& a) {
    json hs = json::array();
    for (const auto& n : a.normals()) {
        json row = json::array();
        for (const auto& x : n) row.push_back(to_string(x));
        hs.push_back(row);
    }
    return {{"dim", a.dim()}, {"hyperplanes", hs}};
}

/// {"dim": l, "hyperplanes": [["1","0"], ...]}; non-essential input is
/// essentialized when `essentialize_input` is set and rejected otherwise.
inline Arrangement arrangement_from_json(const json& j, bool essentialize_input = false) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes"))
        throw Error(ErrorKind::ParseError, "arrangement: expected an object with \"dim\" and \"hyperplanes\"");
    if (!j["dim"].is_number_unsigned()) throw Error(ErrorKind::ParseError, "arrangement: \"dim\" must be a count");
    const auto dim = j["dim"].get<std::size_t>();
    if (!j["hyperplanes"].is_array()) throw Error(ErrorKind::ParseError, "arrangement: \"hyperplanes\" must be a list");
    std::vector<RationalVector> normals;
    std::size_t i = 0;
    for (const auto& row : j["hyperplanes"]) {
        const std::string where = "hyperplanes[" + std::to_string(i) + "]";
        if (!row.is_array()) throw Error(ErrorKind::ParseError, where + ": expected a list");
        RationalVector v;
        std::size_t k = 0;
        for (const auto& x : row) v.push_back(rational_from_json(x, where + "[" + std::to_string(k++) + "]"));
        normals.push_back(std::move(v));
        ++i;
    }
    return essentialize_input ? essentialize(dim, std::move(normals)) : build(dim, std::move(normals));
}

/// Explicit list in canonical face order, e.g. "1/2,1/4,1/4".
inline WeightAssignment weights_from_list(const Skeleton& sk, const std::string& text) {
    WeightAssignment w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) w.weights.push_back(parse_rational(item));
    if (w.weights.size() != sk.face_count())
        throw Error(ErrorKind::DimensionMismatch, "weight list has " + std::to_string(w.weights.size()) +
                                                      " entries but the arrangement has " +
                                                      std::to_string(sk.face_count()) + " faces");
    return w;
}

/// Either {"mode": "uniform"}, {"mode": "random", "seed": u64}, or a map
/// from every face sign string to a rational string.
inline WeightAssignment weights_from_json(const Skeleton& sk, const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "weights: expected an object");
    if (j.contains("mode")) {
        const auto mode = j["mode"].get<std::string>();
        if (mode == "uniform") return WeightAssignment::uniform(sk);
        if (mode == "random") {
            if (!j.contains("seed") || !j["seed"].is_number_unsigned())
                throw Error(ErrorKind::ParseError, "weights: random mode needs an unsigned \"seed\"");
            return WeightAssignment::random(sk, j["seed"].get<std::uint64_t>());
        }
        throw Error(ErrorKind::ParseError, "weights: unknown mode '" + mode + "'");
    }
    WeightAssignment w{RationalVector(sk.face_count())};
    std::vector<bool> seen(sk.face_count(), false);
    for (const auto& [key, value] : j.items()) {
        auto idx = sk.find(parse_sign_string(key));
        if (!idx) throw Error(ErrorKind::ParseError, "weights: '" + key + "' is not a face");
        w.weights[*idx] = rational_from_json(value, "weights[" + key + "]");
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw Error(ErrorKind::ParseError, "weights: no weight given for face " + sign_string(sk.face(i).signs));
    return w;
}

inline json weights_to_json(const Skeleton& sk, const WeightAssignment& w) {
    json j = json::object();
    for (std::size_t i = 0; i < sk.face_count(); ++i) j[sign_string(sk.face(i).signs)] = to_string(w.weights[i]);
    return j;
}

inline json index_set_json(IndexSet s) {
    json a = json::array();
    for (auto i : s.to_vector()) a.push_back(i);
    return a;
}

inline json vector_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json faces_to_json(const Skeleton& sk) {
    json faces = json::array();
    for (const auto& f : sk.faces())
        faces.push_back({{"signs", sign_string(f.signs)},
                         {"codim", f.codim},
                         {"flat", index_set_json(sk.lattice().flat(f.flat).contains)},
                         {"chamber", f.is_chamber()}});
    return {{"faces", faces}, {"face_count", sk.face_count()}, {"chamber_count", sk.chamber_count()}};
}

inline json lattice_to_json(const Skeleton& sk) {
    const auto& lat = sk.lattice();
    json flats = json::array();
    for (const auto& fl : lat.flats()) {
        json covers = json::array();
        for (auto y : lat.covers_up(fl.id)) covers.push_back(index_set_json(lat.flat(y).contains));
        flats.push_back({{"flat", index_set_json(fl.contains)},
                         {"codim", fl.codim},
                         {"mobius", fl.mobius},
                         {"restricted_chambers", lat.restriction_chambers(fl.id).size()},
                         {"covered_by", covers}});
    }
    return {{"flats", flats}, {"betti", lat.betti()}};
}

inline json flat_flag_json(const Skeleton& sk, const FlatFlag& f) {
    json a = json::array();
    for (auto x : f.flats) a.push_back(index_set_json(sk.lattice().flat(x).contains));
    return a;
}

inline json face_flag_json(const Skeleton& sk, const FaceFlag& f) {
    json a = json::array();
    for (auto x : f.faces) a.push_back(sign_string(sk.face(x).signs));
    return a;
}

/// [{flat, lambda, multiplicity, eigenvectors, flags}] in lattice order.
inline json spectrum_to_json(const Skeleton& sk, const SpectrumReport& rep) {
    json out = json::array();
    for (const auto& pkg : rep.packages) {
        json vecs = json::array();
        json flags = json::array();
        for (const auto& v : pkg.basis) vecs.push_back(vector_json(v.coeffs));
        for (const auto& f : pkg.spanning_flags) flags.push_back(flat_flag_json(sk, f));
        out.push_back({{"flat", index_set_json(sk.lattice().flat(pkg.flat).contains)},
                       {"lambda", to_string(pkg.lambda)},
                       {"multiplicity", pkg.multiplicity},
                       {"eigenvectors", vecs},
                       {"flags", flags}});
    }
    return out;
}

inline json chamber_vector_json(const Skeleton& sk, const ChamberVector& v) {
    json j = json::object();
    const auto& ch = sk.lattice().restriction_chambers(v.domain);
    for (std::size_t i = 0; i < ch.size(); ++i) j[sign_string(sk.face(ch[i]).signs)] = to_string(v.coeffs[i]);
    return j;
}

inline json empirical_json(const Skeleton& sk, const EmpiricalDistribution& emp) {
    json j = json::object();
    for (std::size_t i = 0; i < emp.counts.size(); ++i) j[sign_string(sk.face(sk.chambers()[i]).signs)] = emp.counts[i];
    return j;
}

} // namespace arrspec::io
