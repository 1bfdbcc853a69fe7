#include "lsa/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lsa {

namespace {

json coefficient_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::ParseError, "coefficient must be an integer, got " + j.dump());
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

json to_json(const HalfLaurent& f) {
  json j = json::object();
  for (const auto& [e, v] : f.terms()) j[std::to_string(e)] = coefficient_to_json(v);
  return j;
}

HalfLaurent half_laurent_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "polynomial must be a JSON object, got " + j.dump());
  HalfLaurent::Terms terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw Error(ErrorKind::ParseError, "bad exponent key \"" + key + "\"");
    terms[e] += coefficient_from_json(value);
  }
  return HalfLaurent(std::move(terms));
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix poly_matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.front().size());
  PolyMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::ShapeMismatch, "matrix rows have different lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = half_laurent_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json to_json(const CharTable& table) {
  json classes = json::array();
  for (const auto& c : table.classes)
    classes.push_back({{"id", c.id}, {"size", coefficient_to_json(c.size)}, {"molien_det", to_json(c.molien_det)}});
  json irreducibles = json::array();
  for (const auto& ch : table.irreducibles) irreducibles.push_back({{"id", ch.id}, {"values", ch.values}});
  return {{"group_order", coefficient_to_json(table.group_order)}, {"classes", classes}, {"irreducibles", irreducibles}};
}

CharTable char_table_from_json(const json& j) {
  return guarded("character table", [&] {
    CharTable table;
    table.group_order = coefficient_from_json(j.at("group_order"));
    for (const auto& c : j.at("classes"))
      table.classes.push_back(
          {c.at("id").get<std::string>(), coefficient_from_json(c.at("size")), half_laurent_from_json(c.at("molien_det"))});
    for (const auto& ch : j.at("irreducibles"))
      table.irreducibles.push_back({ch.at("id").get<std::string>(), ch.at("values").get<std::vector<std::int64_t>>()});
    return table;
  });
}

json to_json(const BlockData& block) {
  json orbits = json::array();
  for (const auto& o : block.orbits) orbits.push_back({{"id", o.id}, {"dim", o.dim}, {"covers", o.covers}});
  json labels = json::array();
  for (const auto& l : block.labels)
    labels.push_back({{"id", l.id}, {"orbit", l.orbit}, {"local_system", l.local_system}, {"dual", l.dual}});
  return {{"name", block.name},
          {"provenance", block.provenance},
          {"orbits", orbits},
          {"labels", labels},
          {"omega", {{"order", block.omega_order}, {"entries", to_json(block.omega)}}}};
}

BlockData block_from_json(const json& j) {
  return guarded("block", [&] {
    BlockData block;
    block.name = j.at("name").get<std::string>();
    if (j.contains("provenance")) block.provenance = j.at("provenance");
    for (const auto& o : j.at("orbits"))
      block.orbits.push_back({o.at("id").get<std::string>(), o.at("dim").get<int>(),
                              o.contains("covers") ? strings(o.at("covers")) : std::vector<std::string>{}});
    for (const auto& l : j.at("labels")) {
      const auto id = l.at("id").get<std::string>();
      block.labels.push_back({id, l.at("orbit").get<std::string>(), l.value("local_system", std::string("trivial")),
                              l.value("dual", id)});
    }
    block.omega_order = strings(j.at("omega").at("order"));
    block.omega = poly_matrix_from_json(j.at("omega").at("entries"));
    return block;
  });
}

json dataset_to_json(const std::vector<BlockData>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(to_json(b));
  return out;
}

std::vector<BlockData> dataset_from_json(const json& j) {
  std::vector<BlockData> blocks;
  if (j.is_object()) {
    blocks.push_back(block_from_json(j));
    return blocks;
  }
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "dataset must be an array of blocks");
  for (const auto& b : j) blocks.push_back(block_from_json(b));
  return blocks;
}

json to_json(const SolveResult& result, const BlockData& block) {
  json labels = json::array();
  for (const auto& l : block.labels)
    labels.push_back({{"id", l.id},
                      {"orbit", l.orbit},
                      {"dim", block.orbits[*block.orbit_index(l.orbit)].dim},
                      {"dual", l.dual}});
  return {{"block", result.block},           {"order", result.order},   {"extension_order", result.extension_order},
          {"labels", labels},                {"p", to_json(result.p)},  {"lambda", to_json(result.lambda)},
          {"p_dual", to_json(result.p_dual)}};
}

SolveResult result_from_json(const json& j) {
  return guarded("result", [&] {
    SolveResult r;
    r.block = j.at("block").get<std::string>();
    r.order = strings(j.at("order"));
    if (j.contains("extension_order")) r.extension_order = strings(j.at("extension_order"));
    r.p = poly_matrix_from_json(j.at("p"));
    r.lambda = poly_matrix_from_json(j.at("lambda"));
    if (j.contains("p_dual")) r.p_dual = poly_matrix_from_json(j.at("p_dual"));
    return r;
  });
}

BlockData block_skeleton_from_result_json(const json& j) {
  return guarded("result labels", [&] {
    BlockData block;
    block.name = j.at("block").get<std::string>();
    for (const auto& l : j.at("labels")) {
      const auto orbit = l.at("orbit").get<std::string>();
      if (!block.orbit_index(orbit)) block.orbits.push_back({orbit, l.at("dim").get<int>(), {}});
      block.labels.push_back({l.at("id").get<std::string>(), orbit, "", l.at("dual").get<std::string>()});
      block.omega_order.push_back(block.labels.back().id);
    }
    if (strings(j.at("order")) != block.omega_order)
      throw Error(ErrorKind::ShapeMismatch, "result labels disagree with its order");
    return block;
  });
}

json to_json(const GradedDims& dims) {
  json values = json::array();
  for (const auto& d : dims.dims) values.push_back(coefficient_to_json(d));
  return values;
}

std::string results_to_csv(const std::vector<SolveResult>& results) {
  std::ostringstream os;
  os << "block,matrix,row,col,value\n";
  for (const auto& r : results) {
    const std::pair<const char*, const PolyMatrix*> matrices[] = {{"p", &r.p}, {"lambda", &r.lambda}, {"p_dual", &r.p_dual}};
    for (const auto& [name, m] : matrices)
      for (Eigen::Index i = 0; i < m->rows(); ++i)
        for (Eigen::Index j = 0; j < m->cols(); ++j)
          os << csv_quote(r.block) << ',' << name << ',' << csv_quote(r.order[static_cast<std::size_t>(i)]) << ','
             << csv_quote(r.order[static_cast<std::size_t>(j)]) << ',' << csv_quote(to_string((*m)(i, j))) << '\n';
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace lsa
