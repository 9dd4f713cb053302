// Wire formats. Writing goes through a small fixed-order emitter so that a
// given value always serializes to the same bytes (keys in documented order,
// floats with 17 significant digits). Reading uses nlohmann/json and accepts
// any finite floats.
#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zc/cmatrix.hpp"
#include "zc/detect.hpp"
#include "zc/errors.hpp"
#include "zc/states.hpp"
#include "zc/symmetries.hpp"

namespace zc {

// ---- emit ----

inline std::string fmt_double(double x) {
    if (!std::isfinite(x)) throw InvalidInput("refusing to serialize a non-finite float");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string json_complex(const cplx& z) {
    return "[" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + "]";
}

// {"rows": R, "cols": C, "data": [[re, im], ...]} row-major
inline std::string json_matrix(const CMatrix& m) {
    std::string s = "{\"rows\":" + std::to_string(m.rows()) +
                    ",\"cols\":" + std::to_string(m.cols()) + ",\"data\":[";
    for (std::size_t k = 0; k < m.data().size(); ++k) {
        if (k) s += ",";
        s += json_complex(m.data()[k]);
    }
    s += "]}";
    return s;
}

inline std::string json_vector(const CVector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += json_complex(v[k]);
    }
    s += "]";
    return s;
}

// {"A": <matrix>, "b": [re, im], "t": float}
inline std::string json_cartan(const CartanParams& p) {
    return "{\"A\":" + json_matrix(p.a()) + ",\"b\":" + json_complex(p.b()) +
           ",\"t\":" + fmt_double(p.t()) + "}";
}

inline std::string json_rank_two(const RankTwoState& s) {
    return "{\"lambda\":" + fmt_double(s.lambda()) + ",\"psi1\":" + json_vector(s.psi1()) +
           ",\"psi2\":" + json_vector(s.psi2()) + "}";
}

// State file; the rank-2 representation is emitted alongside the matrix
// whenever the structure is known.
inline std::string json_state(const DensityMatrix& rho,
                              const std::optional<RankTwoState>& rank_two = std::nullopt) {
    std::string s = "{\"n_a\":" + std::to_string(rho.n_a()) +
                    ",\"n_b\":" + std::to_string(rho.n_b()) +
                    ",\"matrix\":" + json_matrix(rho.mat());
    if (rank_two) s += ",\"rank_two\":" + json_rank_two(*rank_two);
    s += "}";
    return s;
}

inline std::string json_canonical(const CanonicalForm& cf, double residual) {
    std::string s = "{\"both_separable\":false,\"lambda\":" + fmt_double(cf.lambda) +
                    ",\"q1\":" + fmt_double(cf.q1) + ",\"q6\":" + fmt_double(cf.q6) + ",\"p\":[";
    for (int i = 0; i < 8; ++i) {
        if (i) s += ",";
        s += json_complex(cf.p[static_cast<std::size_t>(i)]);
    }
    s += "],\"x1\":" + json_matrix(cf.x1) + ",\"x2\":" + json_matrix(cf.x2) +
         ",\"residual\":" + fmt_double(residual) + "}";
    return s;
}

inline std::string json_both_separable() { return "{\"both_separable\":true}"; }

// {"tag", "ppt_min_eig", "concurrence", "witness_params", "thresholds"}
inline std::string json_verdict(const DetectionVerdict& v) {
    std::string s = "{\"tag\":\"" + std::string(to_string(v.tag)) + "\"";
    s += ",\"ppt_min_eig\":" + fmt_double(v.ppt_min_eig);
    s += ",\"concurrence\":";
    s += v.concurrence ? fmt_double(*v.concurrence) : "null";
    s += ",\"witness_params\":";
    s += v.witness_params ? json_cartan(*v.witness_params) : "null";
    s += ",\"thresholds\":{\"zero\":" + fmt_double(kZeroThreshold) +
         ",\"witness\":" + fmt_double(kWitnessThreshold) + "}";
    if (!v.notes.empty()) {
        std::string esc;
        for (char c : v.notes) {
            if (c == '"' || c == '\\') esc += '\\';
            esc += c;
        }
        s += ",\"notes\":\"" + esc + "\"";
    }
    s += "}";
    return s;
}

// ---- parse ----

namespace detail {

inline double get_finite(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
    return x;
}

inline cplx get_complex(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + " must be a [re, im] pair");
    return cplx(get_finite(j[0], what), get_finite(j[1], what));
}

}  // namespace detail

inline CMatrix parse_matrix(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix object needs rows, cols, data");
    const auto rows = j["rows"].get<std::int64_t>();
    const auto cols = j["cols"].get<std::int64_t>();
    if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols))
        throw ParseError("matrix data length must equal rows*cols");
    CMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t k = 0; k < data.size(); ++k)
        m.data()[k] = detail::get_complex(data[k], "matrix entry");
    return m;
}

inline CVector parse_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    CVector v(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) v[k] = detail::get_complex(j[k], what);
    return v;
}

inline CartanParams parse_cartan(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("b") || !j.contains("t"))
        throw ParseError("parameter object needs A, b, t");
    try {
        return CartanParams(parse_matrix(j["A"]), detail::get_complex(j["b"], "b"),
                            detail::get_finite(j["t"], "t"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

struct ParsedState {
    DensityMatrix rho;
    std::optional<RankTwoState> rank_two;
};

inline ParsedState parse_state(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("state file must be a JSON object");
    std::size_t n_a = 2, n_b = 4;
    if (j.contains("n_a")) n_a = j["n_a"].get<std::size_t>();
    if (j.contains("n_b")) n_b = j["n_b"].get<std::size_t>();
    try {
        if (j.contains("rank_two")) {
            const auto& r = j["rank_two"];
            if (!r.is_object() || !r.contains("lambda") || !r.contains("psi1") ||
                !r.contains("psi2"))
                throw ParseError("rank_two object needs lambda, psi1, psi2");
            RankTwoState s(n_a, n_b, detail::get_finite(r["lambda"], "lambda"),
                           parse_vector(r["psi1"], "psi1"), parse_vector(r["psi2"], "psi2"));
            return ParsedState{s.assemble(), s};
        }
        if (!j.contains("matrix")) throw ParseError("state file needs matrix or rank_two");
        return ParsedState{DensityMatrix(n_a, n_b, parse_matrix(j["matrix"])), std::nullopt};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline nlohmann::json parse_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace zc
