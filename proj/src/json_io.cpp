#include "cgm/json_io.hpp"

namespace cgm {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) bad(std::string("field \"") + key + "\" must be a boolean");
    return v.get<bool>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

// Shared frame of the two matrix formats; scalar parsing differs per field.
template <typename K, typename ParseEntry>
Matrix<K> matrix_from_entries(const Json& j, ParseEntry parse_entry) {
    int rows = int_field(j, "rows");
    int cols = int_field(j, "cols");
    if (rows < 1 || cols < 1) bad("matrix dimensions must be positive");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) bad("entries must be an array of row arrays");
    std::vector<std::vector<K>> grid;
    grid.reserve(static_cast<std::size_t>(rows));
    for (const Json& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("entries rows must have length cols");
        std::vector<K> r;
        r.reserve(static_cast<std::size_t>(cols));
        for (const Json& cell : row) {
            if (!cell.is_string()) bad("matrix entries must be strings");
            r.push_back(parse_entry(cell.get<std::string>()));
        }
        grid.push_back(std::move(r));
    }
    return Matrix<K>(grid);
}

std::uint32_t parse_residue(const std::string& s, std::uint32_t p) {
    if (s.empty() || s.size() > 9) bad("residue \"" + s + "\" is not a canonical value");
    std::uint64_t v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') bad("residue \"" + s + "\" is not a canonical value");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    if (s.size() > 1 && s[0] == '0') bad("residue \"" + s + "\" has a leading zero");
    if (v >= p) bad("residue " + s + " is out of range for modulus " + std::to_string(p));
    return static_cast<std::uint32_t>(v);
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        if (offset > text.size()) offset = text.size();
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        bad("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

Json matrix_to_json(const QMatrix& m) {
    Json j = Json::object();
    j["field"] = "Q";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json matrix_to_json(const Matrix<Fp>& m) {
    Json j = Json::object();
    j["field"] = "Fp";
    j["p"] = m.field_exemplar().modulus();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

QMatrix qmatrix_from_json(const Json& j) {
    if (string_field(j, "field") != "Q") bad("expected a matrix over field Q");
    return matrix_from_entries<Rational>(j, [](const std::string& s) { return Rational::parse(s); });
}

Matrix<Fp> fpmatrix_from_json(const Json& j) {
    if (string_field(j, "field") != "Fp") bad("expected a matrix over field Fp");
    int p = int_field(j, "p");
    if (p < 2) bad("modulus must be at least 2");
    std::uint32_t pu = static_cast<std::uint32_t>(p);
    return matrix_from_entries<Fp>(j, [pu](const std::string& s) { return Fp(parse_residue(s, pu), pu); });
}

Json qpoly_to_json(const QPoly& f) {
    Json j = Json::array();
    for (int i = 0; i <= f.degree(); ++i) j.push_back(f.coeff(i).str());
    return j;
}

QPoly qpoly_from_json(const Json& j) {
    if (!j.is_array()) bad("polynomial must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    for (const Json& c : j) {
        if (!c.is_string()) bad("polynomial coefficients must be strings");
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    if (coeffs.empty()) return QPoly(Rational(0));
    return QPoly(std::move(coeffs));
}

Json structure_report_to_json(const StructureReport& r) {
    Json j = Json::object();
    j["min_poly"] = qpoly_to_json(r.min_poly);
    j["factor_pattern"] = factor_pattern_name(r.factor_pattern);
    j["has_real_eigenvalue"] = r.has_real_eigenvalue;
    j["diagonalizable_over_C"] = r.diagonalizable_over_C;
    return j;
}

Json witness_to_json(const PathWitness& pw) {
    Json j = Json::object();
    Json verts = Json::array();
    for (const QMatrix& v : pw.vertices) verts.push_back(matrix_to_json(v));
    j["vertices"] = std::move(verts);
    j["certified"] = pw.certified;
    j["length"] = pw.vertices.empty() ? 0 : static_cast<int>(pw.vertices.size()) - 1;
    return j;
}

PathWitness witness_from_json(const Json& j) {
    const Json& verts = field(j, "vertices");
    if (!verts.is_array() || verts.empty()) bad("witness vertices must be a non-empty array");
    PathWitness pw;
    for (const Json& v : verts) pw.vertices.push_back(qmatrix_from_json(v));
    pw.certified = bool_field(j, "certified");
    int length = int_field(j, "length");
    if (length != static_cast<int>(pw.vertices.size()) - 1) bad("witness length does not match its vertex count");
    return pw;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json j = Json::object();
    j["pass"] = r.pass;
    j["edge_commutes"] = r.edge_commutes;
    j["vertex_nonscalar"] = r.vertex_nonscalar;
    j["vertices_distinct"] = r.vertices_distinct;
    j["endpoints_match"] = r.endpoints_match;
    j["shortcut_available"] = r.shortcut_available;
    j["failures"] = r.failures;
    return j;
}

Json diameter_to_json(const RingSpec& spec, const DiameterResult& d) {
    Json j = Json::object();
    j["ring"] = Json{{"n", spec.n}, {"p", spec.p}};
    j["finite"] = d.finite;
    if (d.finite) j["diameter"] = d.value;
    else j["diameter"] = "infinity";
    j["witness_indices"] = Json::array({d.from, d.to});
    j["witness"] = Json::array({matrix_to_json(decode_matrix(spec, d.from)), matrix_to_json(decode_matrix(spec, d.to))});
    return j;
}

Json prop3_to_json(const Prop3Report& r) {
    Json j = Json::object();
    j["ring"] = Json{{"n", r.spec.n}, {"p", r.spec.p}};
    j["idempotents_nontrivial"] = r.idempotents_nontrivial;
    j["square_zero_nonzero"] = r.square_zero_nonzero;
    j["pairs"] = r.pairs;
    j["algorithm_successes"] = r.algorithm_successes;
    j["algorithm_failures"] = r.algorithm_failures;
    j["brute_force_exists"] = r.brute_force_exists;
    j["discrepancies"] = r.discrepancies;
    Json dp = Json::array();
    for (const auto& [a, b] : r.discrepancy_pairs) dp.push_back(Json::array({a, b}));
    j["discrepancy_pairs"] = std::move(dp);
    return j;
}

} // namespace cgm
