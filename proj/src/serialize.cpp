#include "hilbk/serialize.hpp"

namespace hilbk {

std::string scalar_text(const Rational& c) { return c.str(); }

std::string scalar_text(const QFrac& c) {
    if (c.is_rational_constant()) return c.num().coeff(0).str();
    if (c.is_polynomial()) return "(" + c.num().canonical_text() + ")";
    return "(" + c.num().canonical_text() + ")/(" + c.den().canonical_text() + ")";
}

std::string scalar_text(const QTFrac& c) {
    if (c.num().is_constant() && c.den().is_one())
        return c.num().is_zero() ? "0" : c.num().t_coeff(0).coeff(0).str();
    if (c.num().is_t_free() && c.den().is_t_free())
        return scalar_text(QFrac(c.num().t_coeff(0), c.den().t_coeff(0)));
    if (c.den().is_one()) return "(" + c.num().canonical_text() + ")";
    return "(" + c.num().canonical_text() + ")/(" + c.den().canonical_text() + ")";
}

bool scalar_is_negative_constant(const Rational& c) { return c.sign() < 0; }

bool scalar_is_negative_constant(const QFrac& c) {
    return c.is_rational_constant() && c.num().coeff(0).sign() < 0;
}

bool scalar_is_negative_constant(const QTFrac& c) {
    return c.num().is_constant() && c.den().is_one() && !c.num().is_zero() &&
           c.num().t_coeff(0).coeff(0).sign() < 0;
}

Json partition_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

namespace {

Json poly_json(const QPoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

Json poly2_json(const QTPoly& p) {
    Json j = Json::array();
    for (const auto& row : p.t_coeffs()) j.push_back(poly_json(row));
    return j;
}

} // namespace

Json coeff_json(const Rational& c) {
    Json j;
    j["num"] = Json::array({c.str()});
    j["den"] = Json::array({"1"});
    return j;
}

Json coeff_json(const QFrac& c) {
    Json j;
    j["num"] = poly_json(c.num());
    j["den"] = poly_json(c.den());
    return j;
}

Json coeff_json(const QTFrac& c) {
    Json j;
    j["num"] = poly2_json(c.num());
    j["den"] = poly2_json(c.den());
    return j;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

Json structure_table_json(const StructureTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r;
        r["lambda1"] = partition_json(t.parts[row.i1]);
        r["lambda2"] = partition_json(t.parts[row.i2]);
        Json entries = Json::array();
        for (std::size_t im = 0; im < t.parts.size(); ++im) {
            Json e;
            e["mu"] = partition_json(t.parts[im]);
            e["c"] = row.c[im].str();
            if (t.equivariant) e["c_q"] = coeff_json(row.c_q[im]);
            entries.push_back(std::move(e));
        }
        r["entries"] = std::move(entries);
        rows.push_back(std::move(r));
    }
    Json j;
    j["n"] = t.n;
    j["equivariant"] = t.equivariant;
    j["rows"] = std::move(rows);
    return j;
}

std::string structure_table_csv(const StructureTable& t) {
    std::string out = t.equivariant ? "n,lambda1,lambda2,mu,c,c_q\n" : "n,lambda1,lambda2,mu,c\n";
    for (const auto& row : t.rows) {
        const std::string l1 = csv_quote(t.parts[row.i1].str());
        const std::string l2 = csv_quote(t.parts[row.i2].str());
        bool any = false;
        for (std::size_t im = 0; im < t.parts.size(); ++im) {
            if (row.c[im].is_zero() && (!t.equivariant || row.c_q[im].is_zero())) continue;
            any = true;
            out += std::to_string(t.n) + "," + l1 + "," + l2 + "," +
                   csv_quote(t.parts[im].str()) + "," + row.c[im].str();
            if (t.equivariant) out += "," + csv_quote(scalar_text(row.c_q[im]));
            out += "\n";
        }
        if (!any) {
            // whole expansion vanishes: one aggregate row
            out += std::to_string(t.n) + "," + l1 + "," + l2 + ",\"*\",0";
            if (t.equivariant) out += ",\"0\"";
            out += "\n";
        }
    }
    return out;
}

Json taut_table_json(int n, int k) {
    Json rows = Json::array();
    for (const auto& lambda : partitions_of(n)) {
        TautRestriction r = taut_restriction(lambda, k);
        Json row;
        row["lambda"] = partition_json(lambda);
        row["value_qt"] = coeff_json(r.value_qt);
        row["value_q"] = coeff_json(r.value_q);
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["rows"] = std::move(rows);
    return j;
}

std::string taut_table_csv(int n, int k) {
    std::string out = "n,k,lambda,value_qt,value_q\n";
    for (const auto& lambda : partitions_of(n)) {
        TautRestriction r = taut_restriction(lambda, k);
        out += std::to_string(n) + "," + std::to_string(k) + "," + csv_quote(lambda.str()) +
               "," + csv_quote(r.value_qt.num().canonical_text()) + "," +
               csv_quote(r.value_q.num().canonical_text()) + "\n";
    }
    return out;
}

} // namespace hilbk
