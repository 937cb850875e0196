#include "ncconj/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ncconj::io {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered qrat_obj(const QRat& v) {
    ordered num = ordered::array();
    for (const auto& c : v.num().coeffs()) num.push_back(c.str());
    if (v.num().is_zero()) num.push_back("0");
    ordered den = ordered::array();
    for (const auto& c : v.den().coeffs()) den.push_back(c.str());
    return ordered{{"num", num}, {"den", den}};
}

IntPoly poly_from(const json& arr) {
    std::vector<Int> coeffs;
    for (const auto& c : arr) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else
            coeffs.emplace_back(static_cast<long long>(c.get<long long>()));
    }
    return IntPoly(std::move(coeffs));
}

QRat qrat_from(const json& obj) { return QRat(poly_from(obj.at("num")), poly_from(obj.at("den"))); }

ordered nsym_obj(const NSymElement& e) {
    ordered terms = ordered::array();
    for (const auto& [key, c] : e.terms()) {
        ordered idx = ordered::array();
        for (int part : key) idx.push_back(part);
        terms.push_back(ordered{{"index", idx}, {"coeff", qrat_obj(c)}});
    }
    return ordered{{"basis", e.basis() == Basis::S ? "S" : "R"}, {"terms", terms}};
}

NSymElement nsym_from(const json& obj) {
    Basis basis = obj.at("basis").get<std::string>() == "R" ? Basis::R : Basis::S;
    NSymElement e(basis);
    for (const auto& term : obj.at("terms")) {
        PseudoComposition key;
        for (const auto& part : term.at("index")) key.push_back(part.get<int>());
        e.add_term(key, qrat_from(term.at("coeff")));
    }
    return e;
}

}  // namespace

std::string qrat_json(const QRat& v) { return qrat_obj(v).dump(); }

QRat qrat_from_json(const std::string& text) { return qrat_from(json::parse(text)); }

std::string nsym_json(const NSymElement& e) { return nsym_obj(e).dump(); }

NSymElement nsym_from_json(const std::string& text) { return nsym_from(json::parse(text)); }

std::string series_json(const std::vector<NSymElement>& per_degree, const std::string& basis) {
    ordered arr = ordered::array();
    for (size_t n = 0; n < per_degree.size(); ++n) {
        ordered entry = nsym_obj(per_degree[n]);
        ordered wrapped;
        wrapped["n"] = n;
        wrapped["basis"] = basis;
        wrapped["terms"] = entry["terms"];
        arr.push_back(std::move(wrapped));
    }
    return arr.dump(2);
}

std::string tree_series_json(const TreeSeries& s) {
    ordered arr = ordered::array();
    for (const auto& [code, c] : s.terms) {
        ordered codej = ordered::array();
        for (int e : code) codej.push_back(e);
        arr.push_back(ordered{{"code", codej}, {"coeff", qrat_obj(c)}});
    }
    return ordered{{"truncation", s.degree}, {"terms", arr}}.dump(2);
}

std::string plane_series_json(const PlaneTreeSeries& s) {
    ordered arr = ordered::array();
    for (const auto& [code, c] : s.terms) {
        ordered codej = ordered::array();
        for (int e : code) codej.push_back(e);
        arr.push_back(ordered{{"code", codej}, {"coeff", qrat_obj(c)}});
    }
    return ordered{{"truncation", s.degree}, {"terms", arr}}.dump(2);
}

namespace {

std::string perm_str(const Permutation& p) {
    std::string s;
    for (int v : p) {
        if (!s.empty()) s += ",";
        s += std::to_string(v);
    }
    return s;
}

std::string comp_str(const Composition& I) {
    std::string s;
    for (int v : I) {
        if (!s.empty()) s += ",";
        s += std::to_string(v);
    }
    return s;
}

}  // namespace

std::string ribbon_table_json(const RibbonTable& t) {
    ordered cols = ordered::array();
    for (const auto& I : t.columns) cols.push_back(comp_str(I));
    ordered rows = ordered::array();
    for (const auto& row : t.rows) {
        ordered exps = ordered::array();
        for (long long e : row.exponents) exps.push_back(e);
        rows.push_back(ordered{
            {"sigma", perm_str(row.sigma)}, {"top", perm_str(row.top)}, {"exponents", exps}});
    }
    return ordered{{"n", t.n}, {"columns", cols}, {"rows", rows}}.dump(2);
}

RibbonTable ribbon_table_from_json(const std::string& text) {
    json obj = json::parse(text);
    RibbonTable t;
    t.n = obj.at("n").get<int>();
    auto parse_ints = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    for (const auto& c : obj.at("columns")) t.columns.push_back(parse_ints(c.get<std::string>()));
    for (const auto& r : obj.at("rows")) {
        RibbonTableRow row;
        row.sigma = parse_ints(r.at("sigma").get<std::string>());
        row.top = parse_ints(r.at("top").get<std::string>());
        for (const auto& e : r.at("exponents")) row.exponents.push_back(e.get<long long>());
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ncconj::io
