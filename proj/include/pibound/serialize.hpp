#pragma once

#include "pibound/bounds.hpp"
#include "pibound/products.hpp"
#include "pibound/sequences.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace pibound {

// Key order is fixed and every exact value is a string ("num" or "num/den"),
// so serialized output is byte-stable across platforms and runs. Decimal
// companions are fixed-point strings computed in integer arithmetic; no
// binary floating point is emitted anywhere.
using Json = nlohmann::ordered_json;

Json interval_to_json(const RationalInterval& v);

Json to_json(const Factorization& f);
Json to_json(const ProductRecord& r);
Json to_json(const BoundReport& r);
Json to_json(const SequenceTerm& t);
Json to_json(const HarmonicPoint& p);

// Exact inverse of to_json(ProductRecord): fractions and valuations round
// trip bit for bit. Throws std::invalid_argument on malformed input.
ProductRecord product_record_from_json(const Json& j);

// Column layouts shared by the CSV and table renderers.
std::vector<std::string> product_columns();
std::vector<std::string> product_cells(const ProductRecord& r);
std::vector<std::string> bound_columns();
std::vector<std::string> bound_cells(const BoundReport& r);
std::vector<std::string> sequence_columns();
std::vector<std::string> sequence_cells(const SequenceTerm& t);
std::vector<std::string> harmonic_columns();
std::vector<std::string> harmonic_cells(const HarmonicPoint& p);

// One CSV line; cells containing separators or quotes are quoted.
std::string csv_line(const std::vector<std::string>& cells);

// Fixed-width text table: header, rule, rows.
std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace pibound
