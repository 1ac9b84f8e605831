#include "fls/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fls/errors.hpp"

namespace fls {

namespace {

using json = nlohmann::ordered_json;

json parse_text_or_throw(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {  // syntax errors and numeric overflow
        throw ParseError(origin + ": " + ex.what());
    }
}

double finite_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ParseError(field + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(field + ": non-finite value");
    return v;
}

std::string at(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

Vector parse_vector(const json& j, std::size_t want, const std::string& field) {
    if (!j.is_array() || j.size() != want) {
        throw ParseError(field + ": expected an array of " + std::to_string(want) + " numbers");
    }
    Vector v(want);
    for (std::size_t i = 0; i < want; ++i) v[i] = finite_number(j[i], at(field, i));
    return v;
}

Matrix parse_matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(field + ": expected a nonempty array of rows");
    }
    const std::size_t n = j.size();
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != n) {
            throw ParseError(at(field, i) + ": expected a row of " + std::to_string(n) +
                             " numbers (matrix must be square)");
        }
        for (std::size_t k = 0; k < n; ++k) {
            a(i, k) = finite_number(row[k], at(field, i) + "[" + std::to_string(k) + "]");
        }
    }
    return a;
}

FuzzyNumber parse_fuzzy(const json& j, const std::string& field) {
    if (j.is_object() && j.contains("trapezoidal")) {
        const Vector t = parse_vector(j.at("trapezoidal"), 4, field + ".trapezoidal");
        try {
            return to_parametric({t[0], t[1], t[2], t[3]});
        } catch (const InvalidFuzzyNumberError& ex) {
            throw ParseError(field + ".trapezoidal: " + ex.what());
        }
    }
    if (j.is_object() && j.contains("parametric")) {
        const json& p = j.at("parametric");
        if (!p.is_object() || !p.contains("lower") || !p.contains("upper")) {
            throw ParseError(field + ".parametric: expected \"lower\" and \"upper\" pairs");
        }
        const Vector lo = parse_vector(p.at("lower"), 2, field + ".parametric.lower");
        const Vector up = parse_vector(p.at("upper"), 2, field + ".parametric.upper");
        return {lo[0], lo[1], up[0], up[1]};
    }
    throw ParseError(field + ": expected an object with \"trapezoidal\" or \"parametric\"");
}

void parse_solver_block(const json& j, const std::string& field, SolveOptions& opt) {
    if (!j.is_object()) throw ParseError(field + ": expected an object");
    if (j.contains("method")) {
        const json& m = j.at("method");
        if (m == "lu") {
            opt.method = SolveMethod::lu;
        } else if (m == "aor") {
            opt.method = SolveMethod::aor;
        } else {
            throw ParseError(field + ".method: expected \"lu\" or \"aor\"");
        }
    }
    if (j.contains("gamma")) opt.aor.gamma = finite_number(j.at("gamma"), field + ".gamma");
    if (j.contains("omega")) opt.aor.omega = finite_number(j.at("omega"), field + ".omega");
    if (j.contains("tol")) {
        opt.aor.tol = finite_number(j.at("tol"), field + ".tol");
        if (opt.aor.tol <= 0.0) throw ParseError(field + ".tol: must be positive");
    }
    if (j.contains("max_iter")) {
        const json& m = j.at("max_iter");
        if (!m.is_number_integer() || m.get<std::int64_t>() < 1) {
            throw ParseError(field + ".max_iter: expected a positive integer");
        }
        opt.aor.max_iter = m.get<std::size_t>();
    }
}

bool parse_bool(const json& j, const std::string& field) {
    if (!j.is_boolean()) throw ParseError(field + ": expected a boolean");
    return j.get<bool>();
}

ProblemFile parse_problem_json(const json& root, const std::string& origin) {
    if (!root.is_object()) throw ParseError(origin + ": top level must be an object");
    if (!root.contains("A")) throw ParseError(origin + ": missing required field \"A\"");
    if (!root.contains("b")) throw ParseError(origin + ": missing required field \"b\"");

    ProblemFile p;
    p.a = parse_matrix(root.at("A"), origin + ": A");
    const std::size_t n = p.a.size();

    const json& b = root.at("b");
    if (!b.is_array() || b.size() != n) {
        throw ParseError(origin + ": b: expected " + std::to_string(n) +
                         " fuzzy components to match A, got " +
                         (b.is_array() ? std::to_string(b.size()) : std::string("a non-array")));
    }
    p.b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.b.push_back(parse_fuzzy(b[i], at(origin + ": b", i)));

    if (root.contains("solver")) parse_solver_block(root.at("solver"), origin + ": solver", p.options);
    if (root.contains("flags")) {
        const json& f = root.at("flags");
        if (!f.is_object()) throw ParseError(origin + ": flags: expected an object");
        if (f.contains("check_inverse")) {
            p.options.check_inverse = parse_bool(f.at("check_inverse"), origin + ": flags.check_inverse");
        }
        if (f.contains("dump_embedding")) {
            p.dump_embedding = parse_bool(f.at("dump_embedding"), origin + ": flags.dump_embedding");
        }
    }
    return p;
}

// --- deterministic writer ---------------------------------------------------

/// Reals that are exactly integral dump as integers (golden embeddings stay
/// integer-for-integer); everything else keeps 17 significant digits.
json number(double v) {
    if (v == std::floor(v) && std::abs(v) <= 9007199254740992.0) {
        return json(static_cast<std::int64_t>(v));
    }
    return json(v);
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(number(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool scalars_only(const json& a) {
    for (const auto& v : a) {
        if (v.is_structured()) return false;
    }
    return true;
}

void write_value(const json& j, std::string& out, int depth) {
    constexpr int kIndent = 2;
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                out.append(static_cast<std::size_t>(depth + 1) * kIndent, ' ');
                out += json(it.key()).dump();
                out += ": ";
                write_value(it.value(), out, depth + 1);
                if (k + 1 < j.size()) out += ',';
                out += '\n';
            }
            out.append(static_cast<std::size_t>(depth) * kIndent, ' ');
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            if (scalars_only(j)) {  // numeric rows read better on one line
                out += '[';
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i > 0) out += ", ";
                    write_value(j[i], out, depth);
                }
                out += ']';
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out.append(static_cast<std::size_t>(depth + 1) * kIndent, ' ');
                write_value(j[i], out, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out.append(static_cast<std::size_t>(depth) * kIndent, ' ');
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
            out += buf;
            return;
        }
        case json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case json::value_t::null:
            out += "null";
            return;
        default:  // strings and integers: nlohmann's own dump is exact
            out += j.dump();
            return;
    }
}

std::string write_document(const json& j) {
    std::string out;
    write_value(j, out, 0);
    out += '\n';
    return out;
}

json classification_json(const Classification& c) {
    json j;
    j["verdict"] = matrix_class_name(c.verdict);
    j["flags"] = {{"sdd", c.sdd}, {"m_matrix", c.m_matrix}, {"h_matrix", c.h_matrix}};
    j["witness"] = c.witness ? vector_json(*c.witness) : json(nullptr);
    j["jacobi_radius_estimate"] =
        c.jacobi_radius_estimate ? number(*c.jacobi_radius_estimate) : json(nullptr);
    return j;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text, const std::string& origin) {
    return parse_problem_json(parse_text_or_throw(text, origin), origin);
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path);
}

ProblemFile problem_from_embedding_text(const std::string& text, const std::string& origin) {
    const json root = parse_text_or_throw(text, origin);
    if (!root.is_object()) throw ParseError(origin + ": top level must be an object");
    for (const char* key : {"s1", "s2", "y_intercept", "y_slope"}) {
        if (!root.contains(key)) {
            throw ParseError(origin + ": missing required field \"" + key + "\"");
        }
    }
    const Matrix s1 = parse_matrix(root.at("s1"), origin + ": s1");
    const Matrix s2 = parse_matrix(root.at("s2"), origin + ": s2");
    if (s1.size() != s2.size()) throw ParseError(origin + ": s1 and s2 differ in size");
    const std::size_t n = s1.size();

    ProblemFile p;
    p.a = Matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) p.a(i, k) = s1(i, k) + s2(i, k);
    }
    const Vector yi = parse_vector(root.at("y_intercept"), 2 * n, origin + ": y_intercept");
    const Vector ys = parse_vector(root.at("y_slope"), 2 * n, origin + ": y_slope");
    p.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.b[i] = {yi[i], ys[i], yi[n + i], ys[n + i]};
    }
    return p;
}

std::string classification_to_json(const Classification& c) {
    return write_document(classification_json(c));
}

std::string embedding_to_json(const Embedding& e) {
    json j;
    j["n"] = static_cast<std::int64_t>(e.n);
    j["s1"] = matrix_json(e.s1);
    j["s2"] = matrix_json(e.s2);
    j["s"] = matrix_json(e.s);
    json sigma = json::array();
    for (std::size_t i : e.perm) sigma.push_back(static_cast<std::int64_t>(i));
    j["sigma"] = std::move(sigma);
    j["p"] = matrix_json(permutation_matrix(e.perm));
    j["s_tilde"] = matrix_json(e.s_tilde);
    j["y_intercept"] = vector_json(e.y_intercept);
    j["y_slope"] = vector_json(e.y_slope);
    return write_document(j);
}

std::string report_to_json(const SolutionReport& r) {
    json j;
    j["classification"] = classification_json(r.classification);
    json sigma = json::array();
    for (std::size_t i : r.permutation) sigma.push_back(static_cast<std::int64_t>(i));
    j["permutation"] = std::move(sigma);

    json solution = json::array();
    for (const FuzzyNumber& u : r.solution) {
        json c;
        c["lower"] = json::array({number(u.lower_intercept), number(u.lower_slope)});
        c["upper"] = json::array({number(u.upper_intercept), number(u.upper_slope)});
        solution.push_back(std::move(c));
    }
    j["solution"] = std::move(solution);

    json validity = json::array();
    for (const ValidityReport& v : r.component_validity) {
        json c;
        c["lower_nondecreasing"] = v.lower_nondecreasing;
        c["upper_nonincreasing"] = v.upper_nonincreasing;
        c["ordered_at_one"] = v.ordered_at_one;
        c["fuzzy"] = v.ok();
        validity.push_back(std::move(c));
    }
    j["component_validity"] = std::move(validity);
    j["all_fuzzy"] = r.all_fuzzy;
    j["s_inverse_nonneg"] = r.s_inverse_nonneg ? json(*r.s_inverse_nonneg) : json(nullptr);
    j["residual_intercept"] = number(r.residual_intercept);
    j["residual_slope"] = number(r.residual_slope);

    json t;
    t["method"] = solve_method_name(r.telemetry.method);
    t["iterations"] = static_cast<std::int64_t>(r.telemetry.iterations);
    t["final_relative_residual"] = number(r.telemetry.final_relative_residual);
    t["converged"] = r.telemetry.converged;
    j["telemetry"] = std::move(t);
    return write_document(j);
}

}  // namespace fls
