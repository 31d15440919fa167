#include "pibound/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pibound {

namespace {

constexpr std::size_t kJsonDecimals = 20;
constexpr std::size_t kCellDecimals = 12;

std::string int_string(const Int& v) { return v.get_str(); }

std::uint64_t read_u64(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
  const Json& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) return std::stoull(v.get<std::string>());
  throw std::invalid_argument(std::string("expected unsigned number for key: ") + key);
}

std::string read_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw std::invalid_argument(std::string("missing string key: ") + key);
  return j.at(key).get<std::string>();
}

}  // namespace

Json interval_to_json(const RationalInterval& v) {
  Json j;
  j["lo"] = to_string(v.lo);
  j["hi"] = to_string(v.hi);
  j["lo_decimal"] = decimal_string(v.lo, kJsonDecimals);
  j["hi_decimal"] = decimal_string(v.hi, kJsonDecimals);
  return j;
}

Json to_json(const Factorization& f) {
  Json j;
  j["n"] = int_string(f.n);
  Json factors = Json::array();
  for (const FactorEntry& e : f.factors) {
    Json fe;
    fe["prime"] = int_string(e.prime);
    fe["exponent"] = e.exponent;
    fe["certified"] = e.certified;
    factors.push_back(std::move(fe));
  }
  j["factors"] = std::move(factors);
  j["cofactor"] = int_string(f.cofactor);
  j["complete"] = f.complete;
  j["certified"] = f.certified;
  return j;
}

Json to_json(const ProductRecord& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["s"] = r.s;
  j["x"] = r.x;
  j["pi_x"] = r.pi_x;
  j["fraction"] = to_string(r.fraction);
  j["fraction_decimal"] = decimal_string(r.fraction, kJsonDecimals);
  j["v2_raw_numerator"] = r.v2_raw_num;
  j["v2_raw_denominator"] = r.v2_raw_den;
  j["empty_product"] = r.empty_product;
  return j;
}

ProductRecord product_record_from_json(const Json& j) {
  ProductRecord r;
  auto kind = product_kind_from_string(read_string(j, "kind"));
  if (!kind) throw std::invalid_argument("unknown product kind");
  r.kind = *kind;
  r.s = static_cast<unsigned>(read_u64(j, "s"));
  r.x = read_u64(j, "x");
  r.pi_x = read_u64(j, "pi_x");
  r.fraction = parse_rational(read_string(j, "fraction"));
  r.v2_raw_num = static_cast<unsigned long>(read_u64(j, "v2_raw_numerator"));
  r.v2_raw_den = static_cast<unsigned long>(read_u64(j, "v2_raw_denominator"));
  if (!j.contains("empty_product") || !j.at("empty_product").is_boolean())
    throw std::invalid_argument("missing boolean key: empty_product");
  r.empty_product = j.at("empty_product").get<bool>();
  return r;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["chain"] = to_string(r.chain);
  j["s"] = r.s;
  j["x"] = r.x;
  j["pi_x"] = r.pi_x;
  j["mu"] = to_string(r.params.mu);
  j["eps"] = to_string(r.params.eps);
  if (r.chain == ProductKind::ratio) {
    j["c4"] = to_string(r.c4);
    j["safety"] = to_string(r.safety);
  } else {
    j["terms"] = r.terms;
  }
  Json links = Json::array();
  for (const BoundLink& l : r.links) {
    Json lj;
    lj["name"] = l.name;
    lj["verdict"] = to_string(l.verdict);
    lj["lhs"] = interval_to_json(l.lhs);
    lj["rhs"] = interval_to_json(l.rhs);
    lj["slack"] = to_string(l.slack);
    lj["slack_decimal"] = decimal_string(l.slack, kJsonDecimals);
    if (!l.note.empty()) lj["note"] = l.note;
    links.push_back(std::move(lj));
  }
  j["links"] = std::move(links);
  j["bound"] = interval_to_json(r.bound);
  j["theorem"] = to_string(r.theorem);
  j["all_links_hold"] = r.all_links_hold();
  return j;
}

Json to_json(const SequenceTerm& t) {
  Json j;
  j["index"] = t.index;
  j["source"] = int_string(t.source);
  j["source_digits"] = t.source.get_str().size();
  j["factorization"] = to_json(t.factorization);
  j["extracted"] = int_string(t.extracted);
  j["complete"] = t.complete;
  j["paper_match"] = to_string(t.paper_match);
  return j;
}

Json to_json(const HarmonicPoint& p) {
  Json j;
  j["x"] = p.x;
  j["sum"] = to_string(p.sum);
  j["sum_decimal"] = decimal_string(p.sum, kJsonDecimals);
  j["loglog"] = interval_to_json(p.loglog);
  j["drift"] = interval_to_json(p.drift);
  return j;
}

std::vector<std::string> product_columns() {
  return {"kind", "s", "x", "pi_x", "numerator", "denominator",
          "value",  // decimal display
          "v2_raw_num", "v2_raw_den", "empty"};
}

std::vector<std::string> product_cells(const ProductRecord& r) {
  return {to_string(r.kind),
          std::to_string(r.s),
          std::to_string(r.x),
          std::to_string(r.pi_x),
          int_string(r.fraction.get_num()),
          int_string(r.fraction.get_den()),
          decimal_string(r.fraction, kCellDecimals),
          std::to_string(r.v2_raw_num),
          std::to_string(r.v2_raw_den),
          r.empty_product ? "yes" : "no"};
}

std::vector<std::string> bound_columns() {
  return {"chain", "s", "x", "pi_x", "bound_lo", "bound_hi", "slack", "theorem",
          "all_links"};
}

std::vector<std::string> bound_cells(const BoundReport& r) {
  // slack of the final link: pi(x) minus the bound's upper endpoint
  Rational slack = Rational(static_cast<unsigned long>(r.pi_x)) - r.bound.hi;
  return {to_string(r.chain),
          std::to_string(r.s),
          std::to_string(r.x),
          std::to_string(r.pi_x),
          decimal_string(r.bound.lo, kCellDecimals),
          decimal_string(r.bound.hi, kCellDecimals),
          decimal_string(slack, kCellDecimals),
          to_string(r.theorem),
          r.all_links_hold() ? "yes" : "no"};
}

std::vector<std::string> sequence_columns() {
  return {"index", "source_digits", "extracted", "complete", "paper_match"};
}

std::vector<std::string> sequence_cells(const SequenceTerm& t) {
  return {std::to_string(t.index),
          std::to_string(t.source.get_str().size()),
          int_string(t.extracted),
          t.complete ? "yes" : "no",
          to_string(t.paper_match)};
}

std::vector<std::string> harmonic_columns() {
  return {"x", "sum", "sum_decimal", "loglog_lo", "loglog_hi", "drift_lo",
          "drift_hi"};
}

std::vector<std::string> harmonic_cells(const HarmonicPoint& p) {
  return {std::to_string(p.x),
          to_string(p.sum),
          decimal_string(p.sum, kCellDecimals),
          decimal_string(p.loglog.lo, kCellDecimals),
          decimal_string(p.loglog.hi, kCellDecimals),
          decimal_string(p.drift.lo, kCellDecimals),
          decimal_string(p.drift.hi, kCellDecimals)};
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      out += '"';
      for (char ch : c) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    } else {
      out += c;
    }
  }
  out += '\n';
  return out;
}

std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      if (i) out << "  ";
      std::string cell = i < row.size() ? row[i] : "";
      out << cell << std::string(width[i] - cell.size(), ' ');
    }
    out << '\n';
  };
  emit(columns);
  std::size_t total = 0;
  for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
  out << std::string(total, '-') << '\n';
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace pibound
