#pragma once

#include "ncconj/catalan.hpp"
#include "ncconj/conjugacy.hpp"
#include "ncconj/nsym.hpp"
#include "ncconj/operad.hpp"
#include "ncconj/qfield.hpp"

#include <string>

namespace ncconj::io {

/// {"num": ["c0","c1",...], "den": ["d0",...]} with decimal-string integers.
std::string qrat_json(const QRat& v);
QRat qrat_from_json(const std::string& text);

/// {"basis": "S"|"R", "terms": [{"index": [...], "coeff": {...}}]}.
std::string nsym_json(const NSymElement& e);
NSymElement nsym_from_json(const std::string& text);

/// {"n": k, "basis": ..., "terms": [...]} per degree, wrapped in an array.
std::string series_json(const std::vector<NSymElement>& per_degree, const std::string& basis);

/// [{"code": [...], "coeff": {...}}, ...] with the truncation recorded.
std::string tree_series_json(const TreeSeries& s);
std::string plane_series_json(const PlaneTreeSeries& s);

/// C_I table: rows grouped by sylvester class, entries are exponents of q.
std::string ribbon_table_json(const RibbonTable& t);
RibbonTable ribbon_table_from_json(const std::string& text);

/// Read a whole file; throws std::runtime_error when missing.
std::string read_file(const std::string& path);

}  // namespace ncconj::io
