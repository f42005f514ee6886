#include "fleck/json_io.hpp"

#include <fstream>

namespace fleck {

namespace {

// Reads an n*n table of small integers; entries may be numbers or booleans.
std::vector<Elem> read_table(const Json& j, const std::string& key, int n) {
  const Json& t = j.at(key);
  if (!t.is_array() || static_cast<int>(t.size()) != n)
    throw MalformedTableError("'" + key + "' must be an array of " +
                              std::to_string(n) + " rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const Json& row : t) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw MalformedTableError("'" + key + "' rows must have length " +
                                std::to_string(n));
    for (const Json& cell : row) {
      if (cell.is_boolean())
        out.push_back(cell.get<bool>() ? 1 : 0);
      else if (cell.is_number_integer())
        out.push_back(cell.get<int>());
      else
        throw MalformedTableError("'" + key + "' entries must be integers");
    }
  }
  return out;
}

Elem read_elem(const Json& j, const std::string& key, int n) {
  const Json& v = j.at(key);
  if (!v.is_number_integer())
    throw MalformedTableError("'" + key + "' must be an element index");
  const int e = v.get<int>();
  if (e < 0 || e >= n)
    throw MalformedTableError("'" + key + "' is out of range");
  return e;
}

Json table_rows(const std::vector<Elem>& t, int n) {
  Json rows = Json::array();
  for (int x = 0; x < n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < n; ++y) row.push_back(t[x * n + y]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json named_values_json(const NamedValues& vals) {
  Json arr = Json::array();
  for (const auto& [name, value] : vals)
    arr.push_back(Json{{"name", name}, {"value", value}});
  return arr;
}

void put_flag(Json& out, const std::string& name, const Flag& f) {
  out[name] = f.value;
  if (!f.witness.empty()) out[name + "_witness"] = named_values_json(f.witness);
}

}  // namespace

BuildResult build_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedTableError("algebra must be an object");
  if (!j.contains("size") || !j.at("size").is_number_integer())
    throw MalformedTableError("'size' must be an integer");
  const int n = j.at("size").get<int>();
  if (n < 1 || n > 64) throw MalformedTableError("'size' is out of range");

  FiniteLattice lat = [&] {
    if (j.contains("leq")) {
      std::vector<Elem> raw = read_table(j, "leq", n);
      std::vector<std::uint8_t> leq(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != 0 && raw[i] != 1)
          throw MalformedTableError("'leq' entries must be 0 or 1");
        leq[i] = static_cast<std::uint8_t>(raw[i]);
      }
      return FiniteLattice::from_leq(n, std::move(leq));
    }
    if (j.contains("meet") && j.contains("join"))
      return FiniteLattice::from_meet_join(n, read_table(j, "meet", n),
                                           read_table(j, "join", n));
    throw MalformedTableError("need either 'leq' or 'meet'+'join'");
  }();

  std::vector<Elem> prod = read_table(j, "prod", n);
  for (Elem v : prod)
    if (v < 0 || v >= n)
      throw MalformedTableError("'prod' entries are out of range");
  const Elem unit = read_elem(j, "unit", n);
  const Elem zero = read_elem(j, "zero", n);

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& ls = j.at("labels");
    if (!ls.is_array() || static_cast<int>(ls.size()) != n)
      throw MalformedTableError("'labels' must list one string per element");
    for (const Json& l : ls) {
      if (!l.is_string())
        throw MalformedTableError("'labels' entries must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  std::vector<Elem> supplied;
  const std::vector<Elem>* supplied_ptr = nullptr;
  if (j.contains("arrow")) {
    supplied = read_table(j, "arrow", n);
    supplied_ptr = &supplied;
  }

  return build_algebra(std::move(lat), std::move(prod), unit, zero,
                       std::move(labels), supplied_ptr);
}

FleAlgebra algebra_from_json(const Json& j) {
  BuildResult r = build_from_json(j);
  if (!r.algebra) {
    std::string msg = "algebra rejected: " + r.report.rule;
    for (const auto& [name, value] : r.report.witness)
      msg += " " + name + "=" + value;
    if (!r.report.note.empty()) msg += " (" + r.report.note + ")";
    throw MalformedTableError(msg);
  }
  return *std::move(r.algebra);
}

FleAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw MalformedTableError("bad JSON in '" + path + "': " + e.what());
  }
  return algebra_from_json(j);
}

Json algebra_to_json(const FleAlgebra& a) {
  const int n = a.size();
  Json j;
  j["size"] = n;
  Json leq = Json::array();
  for (Elem x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Elem y = 0; y < n; ++y) row.push_back(a.leq(x, y) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["prod"] = table_rows(a.prod_table(), n);
  j["arrow"] = table_rows(a.arrow_table(), n);
  j["unit"] = a.unit();
  j["zero"] = a.zero();
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

void save_algebra(const FleAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << algebra_to_json(a).dump(2) << "\n";
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["rule"] = r.rule;
  if (!r.witness.empty()) j["witness"] = named_values_json(r.witness);
  if (!r.trace.empty()) j["trace"] = named_values_json(r.trace);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  put_flag(j, "integral", c.integral);
  put_flag(j, "zero_bounded", c.zero_bounded);
  put_flag(j, "involutive", c.involutive);
  put_flag(j, "pc", c.pc);
  put_flag(j, "spc", c.spc);
  put_flag(j, "boolean", c.boolean_alg);
  put_flag(j, "zero_greatest", c.zero_greatest);
  put_flag(j, "dm1_greatest", c.dm1_greatest);
  put_flag(j, "glivenko_ba", c.glivenko_ba);
  put_flag(j, "glivenko_ba_int_route", c.glivenko_ba_int_route);
  put_flag(j, "proto_cnx_meet", c.proto_cnx_meet);
  put_flag(j, "proto_cnx_prod", c.proto_cnx_prod);
  put_flag(j, "weakly_cnx_meet", c.weakly_cnx_meet);
  put_flag(j, "weakly_cnx_prod", c.weakly_cnx_prod);
  put_flag(j, "ns_meet", c.ns_meet);
  put_flag(j, "ns_prod", c.ns_prod);
  put_flag(j, "k1_refuted", c.k1_refuted);
  put_flag(j, "k2_refuted", c.k2_refuted);
  put_flag(j, "one_leq_zero", c.one_leq_zero);
  return j;
}

Json interval_report_to_json(const IntervalReport& r) {
  Json j;
  j["member_count"] = r.count_saturated ? Json("overflow")
                                        : Json(r.member_count);
  j["exhaustive"] = r.exhaustive;
  j["capped_out"] = r.capped_out;
  j["checked"] = r.checked;
  j["lower_endpoint"] = report_to_json(r.lo);
  j["upper_endpoint"] = report_to_json(r.hi);
  j["all_proto"] = r.all_proto;
  if (r.failing_member) j["failing_verdict"] = report_to_json(r.failing_verdict);
  return j;
}

Json delta_forcing_to_json(const DeltaForcingReport& r) {
  Json j;
  j["delta_count"] = r.delta_count;
  j["dm_index"] = r.dm_index;
  j["meet_bt_passing"] = r.meet_bt_passing;
  j["prod_bt_passing"] = r.prod_bt_passing;
  j["meet_forced"] = r.meet_forced;
  return j;
}

}  // namespace fleck
