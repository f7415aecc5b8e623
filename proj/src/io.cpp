#include "oppo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oppo {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw LoadError(std::string("invalid JSON in ") + what);
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

RawStructure structure_from_json_text(const std::string& text) {
  const json j = parse(text, "structure");
  if (!j.is_object()) throw LoadError("structure file must hold a JSON object");

  RawStructure s;
  s.name = j.value("name", "unnamed");

  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
    throw LoadError("structure needs a nonempty 'elements' array");
  }
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw LoadError("element names must be strings");
    s.labels.push_back(e.get<std::string>());
  }
  const std::size_t n = s.labels.size();

  auto index_of = [&](const std::string& label, const char* where) {
    auto idx = s.index_of(label);
    if (!idx) {
      throw LoadError("unknown element name '" + label + "' in " + where);
    }
    return *idx;
  };

  if (!j.contains("neg") || !j["neg"].is_object()) {
    throw LoadError("structure needs a 'neg' object");
  }
  s.neg.assign(n, n);  // n marks "unset"
  for (const auto& [from, to] : j["neg"].items()) {
    if (!to.is_string()) throw LoadError("neg values must be element names");
    s.neg[index_of(from, "neg")] = index_of(to.get<std::string>(), "neg");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s.neg[i] == n) {
      throw LoadError("neg is not total: element '" + s.labels[i] + "' has no image");
    }
  }

  if (!j.contains("order") || !j["order"].is_object()) {
    throw LoadError("structure needs an 'order' object");
  }
  const json& order = j["order"];
  const std::string kind = order.value("kind", "cover");
  OrderInputKind input_kind;
  if (kind == "cover") {
    input_kind = OrderInputKind::Cover;
  } else if (kind == "full") {
    input_kind = OrderInputKind::Full;
  } else {
    throw LoadError("order kind must be 'cover' or 'full', got '" + kind + "'");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (order.contains("pairs")) {
    if (!order["pairs"].is_array()) throw LoadError("'pairs' must be an array");
    for (const auto& p : order["pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw LoadError("each order pair must be [name, name]");
      }
      pairs.emplace_back(index_of(p[0].get<std::string>(), "order"),
                         index_of(p[1].get<std::string>(), "order"));
    }
  }
  s.leq = close_order(pairs, input_kind, n);
  return s;
}

RawStructure load_structure_file(const std::string& path) {
  return structure_from_json_text(slurp(path));
}

SignedMultiset multiset_from_json_text(const std::string& text) {
  const json j = parse(text, "multiset");
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_object()) {
    throw LoadError("multiset file must hold {\"entries\": {key: integer, ...}}");
  }
  SignedMultiset out;
  for (const auto& [k, v] : j["entries"].items()) {
    if (!v.is_number_integer()) {
      throw LoadError("multiplicity of '" + k + "' must be an integer");
    }
    out.entries.emplace(k, v.get<Mult>());
  }
  return out;
}

SignedMultiset load_multiset_file(const std::string& path) {
  return multiset_from_json_text(slurp(path));
}

ComplexMatrix matrix_from_json_text(const std::string& text) {
  const json j = parse(text, "matrix");
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() ||
      !j.contains("entries") || !j["entries"].is_array()) {
    throw LoadError("matrix file must hold {\"n\": dim, \"entries\": [[re,im],...]}");
  }
  const std::size_t n = j["n"].get<std::size_t>();
  if (n == 0) throw LoadError("matrix dimension must be positive");
  if (j["entries"].size() != n * n) {
    throw LoadError("matrix needs " + std::to_string(n * n) + " row-major entries, got " +
                    std::to_string(j["entries"].size()));
  }
  ComplexMatrix m(n);
  std::size_t k = 0;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw LoadError("matrix entries must be [re, im] pairs");
    }
    m.a[k++] = {e[0].get<double>(), e[1].get<double>()};
  }
  return m;
}

ComplexMatrix load_matrix_file(const std::string& path) {
  return matrix_from_json_text(slurp(path));
}

NegationGenerator phi_from_json_text(const std::string& text) {
  const json j = parse(text, "phi");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw LoadError("phi file needs a 'kind' string");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "identity") return NegationGenerator::identity();
    if (kind == "power") {
      if (!j.contains("p") || !j["p"].is_number()) throw LoadError("power phi needs 'p'");
      return NegationGenerator::power(j["p"].get<double>());
    }
    if (kind == "table") {
      if (!j.contains("xs") || !j.contains("ys")) throw LoadError("table phi needs xs/ys");
      return NegationGenerator::table(j["xs"].get<std::vector<double>>(),
                                      j["ys"].get<std::vector<double>>());
    }
  } catch (const std::invalid_argument& e) {
    throw LoadError(std::string("invalid phi: ") + e.what());
  }
  throw LoadError("phi kind must be identity, power or table, got '" + kind + "'");
}

NegationGenerator load_phi_file(const std::string& path) {
  return phi_from_json_text(slurp(path));
}

}  // namespace oppo
