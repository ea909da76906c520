#include "stabpoly/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>

namespace stabpoly {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " is not a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + " is not finite");
    return v;
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " is not an integer");
    return j.get<int>();
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError(std::string(what) + " has the wrong number of rows");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(std::string(what) + " has a row of the wrong length");
        for (int k = 0; k < n; ++k) m(i, k) = number(row[static_cast<std::size_t>(k)], what);
    }
    return m;
}

}  // namespace

Json poly_to_json(const MultiPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exp", e}, {"re", c.real()}, {"im", c.imag()}});
    return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
    const int nvars = integer(field(j, "nvars"), "nvars");
    if (nvars < 0) throw ParseError("nvars is negative");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms is not an array");
    MultiPoly f(nvars);
    std::set<ExponentVector> seen;
    for (const Json& t : terms) {
        const Json& ej = field(t, "exp");
        if (!ej.is_array() || static_cast<int>(ej.size()) != nvars)
            throw ParseError("exponent length differs from nvars");
        ExponentVector e;
        for (const Json& x : ej) {
            const int v = integer(x, "exponent");
            if (v < 0) throw ParseError("negative exponent");
            e.push_back(v);
        }
        if (!seen.insert(e).second) throw ParseError("duplicate exponent vector");
        const double re = number(field(t, "re"), "re");
        const double im = number(field(t, "im"), "im");
        if (std::abs(re) < 1e-300 && std::abs(im) < 1e-300)
            throw ParseError("coefficient below 1e-300 in magnitude");
        f.add_term(e, Complex(re, im));
    }
    return f;
}

Json line_to_json(const AffineLine& line) { return {{"a", line.a}, {"b", line.b}}; }

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["tag"] = to_string(v.tag);
    j["lines_checked"] = v.lines_checked;
    j["lines_inconclusive"] = v.lines_inconclusive;
    j["min_margin"] = std::isfinite(v.min_margin) ? Json(v.min_margin) : Json(nullptr);
    if (v.witness) {
        Json w = line_to_json(v.witness->line);
        w["root"] = {{"re", v.witness->root.real()}, {"im", v.witness->root.imag()}};
        j["witness"] = std::move(w);
    }
    return j;
}

Json pencil_to_json(const MatrixPencil& p) {
    Json j;
    j["n"] = p.n();
    j["S"] = matrix_to_json(p.S);
    if (p.E.size() > 0) j["E"] = matrix_to_json(p.E);
    Json ds = Json::array();
    for (const auto& d : p.Ds) ds.push_back(matrix_to_json(d));
    j["Ds"] = std::move(ds);
    return j;
}

MatrixPencil pencil_from_json(const Json& j) {
    const int n = integer(field(j, "n"), "n");
    if (n < 1) throw ParseError("n must be positive");
    MatrixPencil p;
    p.S = matrix_from_json(field(j, "S"), n, "S");
    if (j.contains("E")) p.E = matrix_from_json(j.at("E"), n, "E");
    const Json& ds = field(j, "Ds");
    if (!ds.is_array()) throw ParseError("Ds is not an array");
    for (const Json& d : ds) p.Ds.push_back(matrix_from_json(d, n, "D"));
    return p;
}

Json symbol_to_json(const DiffOperatorSymbol& s) {
    Json j = poly_to_json(s.symbol());
    j["block_split"] = s.block();
    return j;
}

DiffOperatorSymbol symbol_from_json(const Json& j) {
    MultiPoly f = poly_from_json(j);
    const int block = integer(field(j, "block_split"), "block_split");
    if (block < 1 || 2 * block != f.nvars()) throw ParseError("block_split does not halve nvars");
    return DiffOperatorSymbol(std::move(f), block);
}

Json diagonal_to_json(const DiagonalOperator& t) {
    if (t.nvars != 2) throw std::invalid_argument("diagonal_to_json: only two-variable grids have a JSON form");
    int n1 = 0, n2 = 0;
    for (const auto& [e, a] : t.grid) {
        n1 = std::max(n1, e[0] + 1);
        n2 = std::max(n2, e[1] + 1);
    }
    Json grid = Json::array();
    for (int i = 0; i < n1; ++i) {
        Json row = Json::array();
        for (int k = 0; k < n2; ++k) {
            auto it = t.grid.find({i, k});
            row.push_back(it == t.grid.end() ? 0.0 : it->second);
        }
        grid.push_back(std::move(row));
    }
    return {{"dims", {n1, n2}}, {"grid", std::move(grid)}};
}

DiagonalOperator diagonal_from_json(const Json& j) {
    const Json& dims = field(j, "dims");
    if (!dims.is_array() || dims.size() != 2) throw ParseError("dims must have two entries");
    const int n1 = integer(dims[0], "dims"), n2 = integer(dims[1], "dims");
    if (n1 < 1 || n2 < 1) throw ParseError("dims must be positive");
    const Json& grid = field(j, "grid");
    if (!grid.is_array() || static_cast<int>(grid.size()) != n1) throw ParseError("grid rows differ from dims");
    std::vector<std::vector<double>> table;
    for (const Json& row : grid) {
        if (!row.is_array() || static_cast<int>(row.size()) != n2)
            throw ParseError("grid columns differ from dims");
        std::vector<double> r;
        for (const Json& x : row) r.push_back(number(x, "grid entry"));
        table.push_back(std::move(r));
    }
    return diagonal_from_table(table);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const Json& j) {
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

MultiPoly read_poly_file(const std::string& path) {
    const Json j = read_json_file(path);
    try {
        return poly_from_json(j);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace stabpoly
