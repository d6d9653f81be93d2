#include "posetcoh/json_io.hpp"

#include <fstream>

namespace posetcoh {

namespace {

mpq_class parse_rational(const Json& j, const Field& field, const std::string& what) {
  if (j.is_string()) return parse_scalar(field, j.get<std::string>()).value;
  if (j.is_number_integer()) return field.canonical(mpq_class(j.get<long>()));
  throw input_error("BadScalar", "expected a rational string or integer in " + what);
}

std::pair<std::string, std::string> split_relation(const std::string& key) {
  const auto pos = key.find('<');
  if (pos == std::string::npos || key.find('<', pos + 1) != std::string::npos)
    throw input_error("BadRelationKey", "expected \"q<p\", got '" + key + "'");
  return {key.substr(0, pos), key.substr(pos + 1)};
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("FileNotFound", path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("BadJson", path + ": " + e.what());
  }
  return j;
}

BoundedPoset PosetFile::bounded() const {
  return BoundedPoset::wrap(poset, bottom.value_or(""), top.value_or(""));
}

PosetFile parse_poset(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw input_error("BadPoset", "expected {\"elements\": [...], \"covers\": [...]}");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw input_error("BadPoset", "element ids must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw input_error("BadPoset", "covers must be [\"q\",\"p\"] pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  PosetFile out{Poset::validate(elements, covers), {}, {}};
  if (j.contains("bottom")) out.bottom = j.at("bottom").get<std::string>();
  if (j.contains("top")) out.top = j.at("top").get<std::string>();
  return out;
}

Json poset_to_json(const Poset& p, const std::optional<std::string>& bottom,
                   const std::optional<std::string>& top) {
  Json j;
  j["elements"] = p.ids();
  Json covers = Json::array();
  for (const auto& [q, pp] : p.cover_pairs()) covers.push_back({p.id(q), p.id(pp)});
  j["covers"] = covers;
  if (bottom) j["bottom"] = *bottom;
  if (top) j["top"] = *top;
  return j;
}

Matrix parse_matrix(const Json& j, const Field& field, int rows, int cols,
                    const std::string& what) {
  if (!j.is_array())
    throw input_error("BadMatrix", what + ": expected an array of rows");
  if (static_cast<int>(j.size()) != rows)
    throw input_error("ShapeMismatch",
                      what + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(j.size()));
  Matrix m(field, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw input_error("ShapeMismatch", what + ": row " + std::to_string(r) + " needs " +
                                             std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m.set(r, c, parse_rational(row[c], field, what));
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

FunctorFile parse_functor(const Json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("variance") ||
      !j.contains("field") || !j.contains("dims"))
    throw input_error("BadFunctor",
                      "expected {\"poset\", \"variance\", \"field\", \"dims\", \"maps\"}");

  PosetFile pf = j.at("poset").is_string()
                     ? parse_poset(load_json_file(base_dir + "/" + j.at("poset").get<std::string>()))
                     : parse_poset(j.at("poset"));

  const std::string var = j.at("variance").get<std::string>();
  if (var != "contra" && var != "co")
    throw input_error("BadFunctor", "variance must be \"contra\" or \"co\"");
  const Field field = Field::parse(j.at("field").get<std::string>());

  FunctorOnPoset f(pf.poset, var == "contra" ? Variance::Contravariant : Variance::Covariant,
                   field);
  for (const auto& [id, dim] : j.at("dims").items()) {
    if (!dim.is_number_integer() || dim.get<long>() < 0)
      throw input_error("BadFunctor", "dimension of '" + id + "' must be a natural number");
    f.set_dim(pf.poset.index(id), dim.get<int>());
  }
  if (j.contains("maps"))
    for (const auto& [key, entries] : j.at("maps").items()) {
      const auto [q_id, p_id] = split_relation(key);
      const int q = pf.poset.index(q_id), p = pf.poset.index(p_id);
      if (!pf.poset.is_cover(q, p))
        throw input_error("NotACover", "map key '" + key + "' is not a cover");
      const int target = f.variance() == Variance::Contravariant ? f.dim(q) : f.dim(p);
      const int source = f.variance() == Variance::Contravariant ? f.dim(p) : f.dim(q);
      f.set_cover_map(q, p, parse_matrix(entries, field, target, source, "map '" + key + "'"));
    }
  // Covers without a stored map get the only possible one when either side
  // is zero-dimensional; everything else must be explicit.
  for (const auto& [q, p] : pf.poset.cover_pairs()) {
    if (f.has_cover_map(q, p)) continue;
    const int target = f.variance() == Variance::Contravariant ? f.dim(q) : f.dim(p);
    const int source = f.variance() == Variance::Contravariant ? f.dim(p) : f.dim(q);
    if (target == 0 || source == 0)
      f.set_cover_map(q, p, Matrix::zero(field, target, source));
  }
  return FunctorFile{std::move(f), std::move(pf)};
}

Json functor_to_json(const FunctorOnPoset& f) {
  Json j;
  j["poset"] = poset_to_json(f.base());
  j["variance"] = variance_name(f.variance());
  j["field"] = f.field().tag();
  Json dims = Json::object();
  for (int e = 0; e < f.base().size(); ++e) dims[f.base().id(e)] = f.dim(e);
  j["dims"] = dims;
  Json maps = Json::object();
  for (const auto& [q, p] : f.base().cover_pairs())
    maps[f.base().id(q) + "<" + f.base().id(p)] = matrix_to_json(f.cover_map(q, p));
  j["maps"] = maps;
  return j;
}

MackeyData parse_mackey(const Json& j, const std::string& base_dir) {
  FunctorFile ff = parse_functor(j, base_dir);
  if (ff.functor.variance() != Variance::Contravariant)
    throw input_error("WrongVariance", "Mackey data needs a contravariant functor");
  MackeyData m{std::move(ff.functor), {}};
  if (!j.contains("transfers"))
    throw input_error("BadFunctor", "Mackey data needs \"transfers\"");
  const Poset& base = m.g.base();
  for (const auto& [key, entries] : j.at("transfers").items()) {
    const auto [j_id, i_id] = split_relation(key);
    const int jj = base.index(j_id), ii = base.index(i_id);
    if (!base.less(jj, ii))
      throw input_error("BadRelationKey", "transfer key '" + key + "' is not a strict relation");
    m.transfers[{jj, ii}] =
        parse_matrix(entries, m.g.field(), m.g.dim(ii), m.g.dim(jj), "transfer '" + key + "'");
  }
  // Zero-dimensional ends force the zero transfer.
  for (int a = 0; a < base.size(); ++a)
    for (int b = 0; b < base.size(); ++b)
      if (base.less(a, b) && !m.transfers.count({a, b}) && (m.g.dim(a) == 0 || m.g.dim(b) == 0))
        m.transfers[{a, b}] = Matrix::zero(m.g.field(), m.g.dim(b), m.g.dim(a));
  return m;
}

OrderingFamily parse_ordering(const Json& j) {
  if (j.is_object() && j.contains("global")) {
    std::vector<std::string> priority;
    for (const auto& e : j.at("global")) priority.push_back(e.get<std::string>());
    return OrderingFamily::global(priority);
  }
  if (j.is_object() && j.contains("chains")) {
    std::map<std::string, std::vector<std::string>> orders;
    for (const auto& [key, arr] : j.at("chains").items()) {
      std::vector<std::string> order;
      for (const auto& e : arr) order.push_back(e.get<std::string>());
      orders[key] = order;
    }
    return OrderingFamily::explicit_chains(orders);
  }
  throw input_error("BadOrdering", "expected {\"global\": [...]} or {\"chains\": {...}}");
}

Json ordering_to_json(const OrderingFamily& f) {
  Json j;
  if (f.is_global()) {
    j["global"] = *f.global_priority();
  } else {
    Json chains = Json::object();
    for (const auto& [key, order] : f.chain_orders()) chains[key] = order;
    j["chains"] = chains;
  }
  return j;
}

Arrangement parse_arrangement(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("hyperplanes"))
    throw input_error("BadArrangement", "expected {\"ambient_dim\", \"hyperplanes\"}");
  Arrangement a;
  a.ambient_dim = j.at("ambient_dim").get<int>();
  const Field q = Field::rationals();
  for (const auto& row : j.at("hyperplanes")) {
    std::vector<mpq_class> co;
    for (const auto& v : row) co.push_back(parse_rational(v, q, "hyperplane"));
    a.hyperplanes.push_back(co);
  }
  a.validate();
  return a;
}

Json graded_dims_to_json(const GradedDims& dims) {
  Json j = Json::object();
  for (const auto& [degree, dim] : dims) j[std::to_string(degree)] = dim;
  return j;
}

}  // namespace posetcoh
