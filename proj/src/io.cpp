#include "wgo/io.hpp"

#include <sstream>

namespace wgo {

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParameterError("malformed integer: " + j.get<std::string>());
    return x;
  }
  throw ParameterError("expected an integer, got " + j.dump());
}

Json weights_to_json(std::span<const Integer> b) {
  Json out = Json::array();
  for (const auto& x : b) out.push_back(integer_to_json(x));
  return out;
}

WeightVector weights_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("weight vector must be a JSON array");
  WeightVector b;
  for (const auto& x : j) b.push_back(integer_from_json(x));
  return b;
}

WeightVector parse_weights(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParameterError("malformed JSON: " + std::string(text));
  return weights_from_json(j);
}

Json permutation_to_json(std::span<const std::size_t> sigma) {
  Json out = Json::array();
  for (auto s : sigma) out.push_back(s);
  return out;
}

namespace {

std::string cell_key(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

std::pair<std::size_t, std::size_t> parse_key(const std::string& key, std::size_t size) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw ParameterError("malformed table key: " + key);
  try {
    std::size_t i = std::stoul(key.substr(0, comma)), j = std::stoul(key.substr(comma + 1));
    if (i >= size || j >= size) throw ParameterError("table key out of range: " + key);
    return {i, j};
  } catch (const std::logic_error&) {
    throw ParameterError("malformed table key: " + key);
  }
}

std::size_t parse_index(const std::string& s, std::size_t size) {
  std::size_t pos = 0;
  std::size_t l = 0;
  try {
    l = std::stoul(s, &pos);
  } catch (const std::logic_error&) {
    throw ParameterError("malformed index: " + s);
  }
  if (pos != s.size() || l >= size) throw ParameterError("malformed index: " + s);
  return l;
}

}  // namespace

Json table_to_json(const StructureTable& table) {
  Json out = Json::object();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      const auto& row = table.at(i, j);
      if (row.empty()) continue;
      Json cell = Json::object();
      for (const auto& [l, p] : row) cell[std::to_string(l)] = p.to_string();
      out[cell_key(i, j)] = std::move(cell);
    }
  }
  return out;
}

StructureTable structure_table_from_json(const Json& j, std::size_t size) {
  if (!j.is_object()) throw ParameterError("table must be a JSON object");
  StructureTable table(size);
  for (const auto& [key, cell] : j.items()) {
    auto [a, b] = parse_key(key, size);
    for (const auto& [l, p] : cell.items()) {
      table.at(a, b).emplace(parse_index(l, size), Polynomial::parse(p.get<std::string>()));
    }
  }
  return table;
}

Json table_to_json(const OrdinaryTable& table) {
  Json out = Json::object();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      const auto& row = table.at(i, j);
      if (row.empty()) continue;
      Json cell = Json::object();
      for (const auto& [l, c] : row) cell[std::to_string(l)] = integer_to_json(c.get_num());
      out[cell_key(i, j)] = std::move(cell);
    }
  }
  return out;
}

OrdinaryTable ordinary_table_from_json(const Json& j, std::size_t size) {
  if (!j.is_object()) throw ParameterError("table must be a JSON object");
  OrdinaryTable table(size);
  for (const auto& [key, cell] : j.items()) {
    auto [a, b] = parse_key(key, size);
    for (const auto& [l, c] : cell.items()) table.at(a, b).emplace(parse_index(l, size), Rational(integer_from_json(c)));
  }
  return table;
}

std::string table_to_csv(const StructureTable& table) {
  std::ostringstream out;
  out << "i,j,l,coefficient\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto& [l, p] : table.at(i, j)) out << i << ',' << j << ',' << l << ",\"" << p.to_string() << "\"\n";
    }
  }
  return out.str();
}

std::string table_to_csv(const OrdinaryTable& table) {
  std::ostringstream out;
  out << "i,j,l,coefficient\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto& [l, c] : table.at(i, j)) out << i << ',' << j << ',' << l << ',' << c.get_str() << '\n';
    }
  }
  return out.str();
}

Json cohomology_to_json(const CohomologyGroups& groups) {
  Json out = Json::object();
  for (const auto& [deg, g] : groups) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
    out[std::to_string(deg)] = Json{{"rank", g.rank}, {"torsion", torsion}};
  }
  return out;
}

}  // namespace wgo
