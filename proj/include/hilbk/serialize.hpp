#pragma once

#include <string>

#include "hilbk/operators.hpp"
#include "hilbk/product.hpp"
#include "hilbk/symfunc.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace hilbk {

using Json = nlohmann::ordered_json;

// ---- canonical text ------------------------------------------------------

std::string scalar_text(const Rational& c);
std::string scalar_text(const QFrac& c);
std::string scalar_text(const QTFrac& c);

/// Negative rational constants join with " - " instead of " + -".
bool scalar_is_negative_constant(const Rational& c);
bool scalar_is_negative_constant(const QFrac& c);
bool scalar_is_negative_constant(const QTFrac& c);

/// Canonical text of a symmetric function: terms in canonical partition
/// order, "coeff*p[parts]" (bare coefficient for the constant term), joined
/// by " + " / " - "; "0" when zero.  The output reparses to the same
/// function.
template <class K>
std::string symfunc_text(const SymFunc<K>& f, char basis_letter = 'p');

/// Same text form for a plain coordinate map (used for h/m/s output).
template <class K>
std::string terms_text(const std::map<Partition, K>& terms, char basis_letter);

// ---- JSON ------------------------------------------------------------

Json partition_json(const Partition& p);
Json coeff_json(const Rational& c);
Json coeff_json(const QFrac& c);
Json coeff_json(const QTFrac& c);

template <class K>
Json symfunc_json(const SymFunc<K>& f);

template <class K>
Json matrix_json(const OperatorMatrix<K>& m);

Json structure_table_json(const StructureTable& t);
Json taut_table_json(int n, int k);

// ---- CSV ------------------------------------------------------------

/// CSV field quoting: partition lists and polynomial texts are always
/// quoted so embedded commas stay inside one column.
std::string csv_quote(const std::string& field);

std::string structure_table_csv(const StructureTable& t);
std::string taut_table_csv(int n, int k);

template <class K>
std::string matrix_csv(const OperatorMatrix<K>& m);

// ---- implementation (templates) ---------------------------------------

template <class K>
std::string terms_text(const std::map<Partition, K>& terms, char basis_letter) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : terms) {
        K value = c;
        if (!first) {
            if (scalar_is_negative_constant(c)) {
                out += " - ";
                value = -c;
            } else {
                out += " + ";
            }
        }
        first = false;
        out += scalar_text(value);
        if (!lambda.empty()) {
            out += "*";
            out += basis_letter;
            out += "[" + lambda.str() + "]";
        }
    }
    return out;
}

template <class K>
std::string symfunc_text(const SymFunc<K>& f, char basis_letter) {
    return terms_text(f.terms(), basis_letter);
}

template <class K>
Json symfunc_json(const SymFunc<K>& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        Json term;
        term["partition"] = partition_json(lambda);
        term["coeff"] = coeff_json(c);
        terms.push_back(std::move(term));
    }
    Json j;
    j["basis"] = "p";
    j["terms"] = std::move(terms);
    return j;
}

template <class K>
Json matrix_json(const OperatorMatrix<K>& m) {
    Json j;
    j["n"] = m.n;
    Json order = Json::array();
    for (const auto& p : m.order) order.push_back(partition_json(p));
    j["order"] = std::move(order);
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.order.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.order.size(); ++k)
            row.push_back(coeff_json(m.at(i, k)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

template <class K>
std::string matrix_csv(const OperatorMatrix<K>& m) {
    std::string out = "row,col,value\n";
    for (std::size_t i = 0; i < m.order.size(); ++i)
        for (std::size_t k = 0; k < m.order.size(); ++k) {
            out += csv_quote(m.order[i].str()) + "," + csv_quote(m.order[k].str()) + "," +
                   csv_quote(scalar_text(m.at(i, k))) + "\n";
        }
    return out;
}

} // namespace hilbk
