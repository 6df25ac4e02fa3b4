#include "prseq/matrix_io.hpp"

#include <fstream>

namespace prseq {

using nlohmann::json;

json matrix_to_json(const SymMatrix& b) {
    json entries = json::array();
    for (int i = 1; i <= b.order(); ++i) {
        json row = json::array();
        for (int j = 1; j <= b.order(); ++j) {
            const Rational& v = b.at(i, j);
            if (v.is_integer() && v.numerator().fits_slong_p())
                row.push_back(v.numerator().get_si());
            else
                row.push_back(v.str());
        }
        entries.push_back(std::move(row));
    }
    return json{{"n", b.order()}, {"entries", std::move(entries)}};
}

SymMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix json: expected {\"n\", \"entries\"}");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("matrix json: \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("matrix json: n must be positive");
    const json& entries = j["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("matrix json: entries must be an n x n grid");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (const auto& jrow : entries) {
        if (!jrow.is_array() || static_cast<int>(jrow.size()) != n)
            throw std::invalid_argument("matrix json: entries must be an n x n grid");
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n));
        for (const auto& cell : jrow) {
            if (cell.is_number_integer())
                row.emplace_back(static_cast<long>(cell.get<long long>()));
            else if (cell.is_string())
                row.push_back(Rational::parse(cell.get<std::string>()));
            else
                throw std::invalid_argument("matrix json: entries must be integers or \"p/q\"");
        }
        rows.push_back(std::move(row));
    }
    return SymMatrix::from_rows(rows);  // symmetry check happens here
}

SymMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    json j;
    in >> j;
    return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const SymMatrix& b) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file '" + path + "'");
    out << matrix_to_json(b).dump(2) << "\n";
}

}  // namespace prseq
