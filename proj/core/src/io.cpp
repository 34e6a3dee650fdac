#include "linkhom/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace linkhom {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ParseError("field '" + path + "': " + what);
}

Rational parse_rational_field(const json& j, const std::string& path) {
    if (!j.is_string()) field_error(path, "expected a rational string such as \"3\" or \"-1/2\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        field_error(path, e.what());
    } catch (const ZeroDenominator&) {
        field_error(path, "zero denominator");
    }
}

Poly parse_poly_field(const json& j, const std::string& path) {
    if (j.is_string()) return Poly(parse_rational_field(j, path));
    if (!j.is_array()) field_error(path, "expected a polynomial (array of rational strings)");
    std::vector<Rational> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(parse_rational_field(j[k], path + "[" + std::to_string(k) + "]"));
    return Poly(std::move(c));
}

MatrixP parse_matrix_field(const json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Poly> data;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        const json& row = j[i];
        if (!row.is_array()) field_error(rp, "expected a row (array of polynomials)");
        if (i == 0) cols = row.size();
        if (row.size() != cols)
            throw ShapeMismatch(rp, i, std::to_string(cols) + " entries per row", std::to_string(row.size()));
        for (std::size_t k = 0; k < row.size(); ++k) data.push_back(parse_poly_field(row[k], rp + "[" + std::to_string(k) + "]"));
    }
    return MatrixP(rows, cols, std::move(data));
}

std::vector<MatrixP> parse_matrix_list(const json& j, const std::string& name) {
    if (!j.is_array()) field_error(name, "expected an array of matrices");
    std::vector<MatrixP> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_matrix_field(j[k], name + "[" + std::to_string(k) + "]"));
    return out;
}

long parse_positive(const json& j, const std::string& name) {
    if (!j.is_number_integer()) field_error(name, "expected an integer");
    long v = j.get<long>();
    if (v <= 0) field_error(name, "expected a positive integer");
    return v;
}

std::string location(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

ChainFile parse_chain_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("syntax error at " + location(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("chain spec must be a JSON object");

    static const std::set<std::string> known{"r", "m", "n", "s", "f_fwd", "f_bwd", "g_fwd", "g_bwd", "extra_points"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw ParseError("unknown field '" + key + "'");
    for (const char* required : {"r", "m", "n", "s", "f_fwd", "f_bwd", "g_fwd", "g_bwd"})
        if (!doc.contains(required)) throw ParseError("missing field '" + std::string(required) + "'");

    ChainSpec spec;
    spec.r = parse_positive(doc["r"], "r");
    spec.m = parse_positive(doc["m"], "m");
    spec.n = parse_positive(doc["n"], "n");
    spec.s = parse_poly_field(doc["s"], "s");
    spec.f_fwd = parse_matrix_list(doc["f_fwd"], "f_fwd");
    spec.f_bwd = parse_matrix_list(doc["f_bwd"], "f_bwd");
    spec.g_fwd = parse_matrix_list(doc["g_fwd"], "g_fwd");
    spec.g_bwd = parse_matrix_list(doc["g_bwd"], "g_bwd");

    std::vector<Rational> extra;
    if (doc.contains("extra_points")) {
        const json& pts = doc["extra_points"];
        if (!pts.is_array()) field_error("extra_points", "expected an array of rational strings");
        for (std::size_t k = 0; k < pts.size(); ++k)
            extra.push_back(parse_rational_field(pts[k], "extra_points[" + std::to_string(k) + "]"));
    }
    return ChainFile{build_chain(std::move(spec)), std::move(extra)};
}

ChainFile parse_chain_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_chain_text(buf.str());
}

std::string rational_to_text(const Rational& q) { return q.to_string(); }

namespace {

json poly_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.to_string());
    return a;
}

json matrix_json(const MatrixP& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_list(std::ostringstream& os, const char* name, const std::vector<MatrixP>& list, bool last) {
    os << "  \"" << name << "\": [";
    for (std::size_t k = 0; k < list.size(); ++k) os << (k ? ",\n    " : "\n    ") << matrix_json(list[k]).dump();
    os << (list.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

}  // namespace

std::string poly_to_text(const Poly& p) { return poly_json(p).dump(); }

std::string matrix_to_text(const MatrixP& m) { return matrix_json(m).dump(); }

std::string matrix_to_text(const MatrixQ& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string matrix_to_text(const MatrixRF& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string chain_to_text(const LinkedChain& chain, const std::vector<Rational>& extra_points) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"r\": " << chain.r() << ",\n";
    os << "  \"m\": " << chain.m() << ",\n";
    os << "  \"n\": " << chain.n() << ",\n";
    os << "  \"s\": " << poly_to_text(chain.s()) << ",\n";
    const bool has_extra = !extra_points.empty();
    write_list(os, "f_fwd", chain.f_fwd(), false);
    write_list(os, "f_bwd", chain.f_bwd(), false);
    write_list(os, "g_fwd", chain.g_fwd(), false);
    write_list(os, "g_bwd", chain.g_bwd(), !has_extra);
    if (has_extra) {
        json pts = json::array();
        for (const auto& q : extra_points) pts.push_back(q.to_string());
        os << "  \"extra_points\": " << pts.dump() << "\n";
    }
    os << "}\n";
    return os.str();
}

Poly parse_poly_argument(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '[') {
        json j;
        try {
            j = json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed polynomial: ") + e.what());
        }
        return parse_poly_field(j, "polynomial");
    }
    std::vector<Rational> c;
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view piece = rest.substr(0, comma);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        c.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return Poly(std::move(c));
}

}  // namespace linkhom
