#include "whanoi/model_json.hpp"

#include <initializer_list>
#include <utility>

namespace whanoi::models {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string at_key(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
}

const json& require(const json& j, const std::string& path, std::string_view key) {
  const auto it = j.find(key);
  if (it == j.end()) throw SpecError(path, "missing required key \"" + std::string(key) + "\"");
  return *it;
}

void allow_only(const json& j, const std::string& path, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || k == key;
    if (!known) throw SpecError(at_key(path, key), "unknown key");
  }
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SpecError(path, "expected a rational string such as \"2\" or \"-3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SpecError(path, e.what());
  }
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw SpecError(path, "expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], at_index(path, i)));
  return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_to_string(v));
  return out;
}

WeightRow row_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw SpecError(path, "expected an array of three costs");
  return {cost_from_json(j[0], at_index(path, 0)), cost_from_json(j[1], at_index(path, 1)),
          cost_from_json(j[2], at_index(path, 2))};
}

json row_to_json(const WeightRow& row) {
  return json::array({cost_to_json(row[0]), cost_to_json(row[1]), cost_to_json(row[2])});
}

Polynomial polynomial_from_json(const json& j, const std::string& path) {
  return Polynomial(rationals_from_json(j, path));
}

const Polynomial& unit_side() {
  static const Polynomial p{1};
  return p;
}
const Polynomial& massive_side() {
  static const Polynomial p{1, 1};
  return p;
}

}  // namespace

json cost_to_json(const Cost& cost) { return cost.to_string(); }

Cost cost_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() || j.get<long>() >= 0) return Cost(j.get<long>());
    throw SpecError(path, "costs must be nonnegative");
  }
  if (!j.is_string()) throw SpecError(path, "expected a cost string such as \"7\", \"3/2\" or \"inf\"");
  try {
    return Cost::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SpecError(path, e.what());
  }
}

json seq_spec_to_json(const SeqSpec& spec) {
  return json{{"a", rationals_to_json(spec.coeffs)},
              {"b", rational_to_string(spec.constant)},
              {"seeds", rationals_to_json(spec.seeds)}};
}

SeqSpec seq_spec_from_json(const json& j, const std::string& path) {
  expect_object(j, path);
  allow_only(j, path, {"a", "b", "seeds"});
  SeqSpec spec;
  spec.coeffs = rationals_from_json(require(j, path, "a"), at_key(path, "a"));
  if (const auto it = j.find("b"); it != j.end()) spec.constant = rational_from_json(*it, at_key(path, "b"));
  spec.seeds = rationals_from_json(require(j, path, "seeds"), at_key(path, "seeds"));
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
  return spec;
}

json alpha_to_json(const AlphaSource& alpha) {
  return std::visit(Overloaded{
                        [](const Polynomial& p) { return json{{"poly", rationals_to_json(p.coeffs())}}; },
                        [](const SeqSpec& s) { return json{{"recurrence", seq_spec_to_json(s)}}; },
                        [](Sequence s) { return json{{"seq", std::string(sequence_name(s))}}; },
                    },
                    alpha);
}

AlphaSource alpha_from_json(const json& j, const std::string& path) {
  expect_object(j, path);
  if (j.size() != 1) throw SpecError(path, "expected exactly one of \"poly\", \"seq\" or \"recurrence\"");
  if (const auto it = j.find("poly"); it != j.end()) return polynomial_from_json(*it, at_key(path, "poly"));
  if (const auto it = j.find("recurrence"); it != j.end()) return seq_spec_from_json(*it, at_key(path, "recurrence"));
  if (const auto it = j.find("seq"); it != j.end()) {
    if (!it->is_string()) throw SpecError(at_key(path, "seq"), "expected a sequence name");
    try {
      return parse_sequence(it->get<std::string>());
    } catch (const std::exception& e) {
      throw SpecError(at_key(path, "seq"), e.what());
    }
  }
  throw SpecError(path, "expected exactly one of \"poly\", \"seq\" or \"recurrence\"");
}

json model_to_json(const ModelSpec& model) {
  json out = std::visit(
      Overloaded{
          [](const Constant& m) { return json{{"w", row_to_json(m.w)}}; },
          [](const Table& m) {
            json rows = json::array();
            for (const auto& r : m.rows) rows.push_back(row_to_json(r));
            return json{{"rows", std::move(rows)}};
          },
          [](const MassiveSymmetric& m) { return json{{"alpha", alpha_to_json(m.alpha)}}; },
          [](const Geometric& m) { return json{{"c", cost_to_json(m.c)}, {"r", cost_to_json(m.r)}}; },
          [](const Arithmetic& m) { return json{{"a", cost_to_json(m.a)}, {"b", cost_to_json(m.b)}}; },
          [](const NaturalMasses&) { return json::object(); },
          [](const CheapIdleMassive&) { return json::object(); },
          [](const PolynomialCosts& m) { return json{{"coeffs", rationals_to_json(m.p.coeffs())}}; },
          [](const NamedSeqCosts& m) { return json{{"name", std::string(disc_sequence_name(m.name))}}; },
          [](const ForbiddenMiddle& m) {
            if (const auto* p = std::get_if<Polynomial>(&m.side)) {
              if (*p == unit_side()) return json{{"side", "unit"}};
              if (*p == massive_side()) return json{{"side", "massive"}};
            }
            return json{{"side", alpha_to_json(m.side)}};
          },
          [](const ConstantNonuniform& m) { return json{{"w", cost_to_json(m.w)}}; },
          [](const Consecutive& m) { return json{{"w", cost_to_json(m.w)}}; },
          [](const FastMiddle&) { return json::object(); },
      },
      model);
  out["kind"] = std::string(model_kind(model));
  return out;
}

ModelSpec model_from_json(const json& j) {
  const std::string root = "$";
  expect_object(j, root);
  const json& kind_json = require(j, root, "kind");
  if (!kind_json.is_string()) throw SpecError(at_key(root, "kind"), "expected a string");
  const std::string kind = kind_json.get<std::string>();

  auto cost = [&](std::string_view key) { return cost_from_json(require(j, root, key), at_key(root, key)); };
  auto finite_cost = [&](std::string_view key) {
    Cost c = cost(key);
    if (c.is_infinite()) throw SpecError(at_key(root, key), "must be finite");
    return c;
  };

  if (kind == "constant") {
    allow_only(j, root, {"kind", "w"});
    return Constant{row_from_json(require(j, root, "w"), at_key(root, "w"))};
  }
  if (kind == "table") {
    allow_only(j, root, {"kind", "rows"});
    const json& rows = require(j, root, "rows");
    const std::string path = at_key(root, "rows");
    if (!rows.is_array()) throw SpecError(path, "expected an array of rows");
    Table t;
    for (std::size_t i = 0; i < rows.size(); ++i) t.rows.push_back(row_from_json(rows[i], at_index(path, i)));
    return t;
  }
  if (kind == "massive") {
    allow_only(j, root, {"kind", "alpha"});
    return MassiveSymmetric{alpha_from_json(require(j, root, "alpha"), at_key(root, "alpha"))};
  }
  if (kind == "geometric") {
    allow_only(j, root, {"kind", "c", "r"});
    return Geometric{finite_cost("c"), finite_cost("r")};
  }
  if (kind == "arithmetic") {
    allow_only(j, root, {"kind", "a", "b"});
    return Arithmetic{finite_cost("a"), finite_cost("b")};
  }
  if (kind == "natural-masses") {
    allow_only(j, root, {"kind"});
    return NaturalMasses{};
  }
  if (kind == "cheap-idle-massive") {
    allow_only(j, root, {"kind"});
    return CheapIdleMassive{};
  }
  if (kind == "polynomial") {
    allow_only(j, root, {"kind", "coeffs"});
    Polynomial p = polynomial_from_json(require(j, root, "coeffs"), at_key(root, "coeffs"));
    if (p.is_zero()) throw SpecError(at_key(root, "coeffs"), "polynomial must be nonzero");
    return PolynomialCosts{std::move(p)};
  }
  if (kind == "named-seq") {
    allow_only(j, root, {"kind", "name"});
    const json& name = require(j, root, "name");
    if (!name.is_string()) throw SpecError(at_key(root, "name"), "expected a string");
    try {
      return NamedSeqCosts{parse_disc_sequence(name.get<std::string>())};
    } catch (const std::invalid_argument& e) {
      throw SpecError(at_key(root, "name"), e.what());
    }
  }
  if (kind == "forbidden-middle") {
    allow_only(j, root, {"kind", "side"});
    const json& side = require(j, root, "side");
    if (side.is_string()) {
      if (side == "unit") return ForbiddenMiddle{unit_side()};
      if (side == "massive") return ForbiddenMiddle{massive_side()};
      throw SpecError(at_key(root, "side"), "expected \"unit\", \"massive\" or an alpha object");
    }
    return ForbiddenMiddle{alpha_from_json(side, at_key(root, "side"))};
  }
  if (kind == "constant-nonuniform") {
    allow_only(j, root, {"kind", "w"});
    return ConstantNonuniform{finite_cost("w")};
  }
  if (kind == "consecutive") {
    allow_only(j, root, {"kind", "w"});
    return Consecutive{finite_cost("w")};
  }
  if (kind == "fast-middle") {
    allow_only(j, root, {"kind"});
    return FastMiddle{};
  }
  throw SpecError(at_key(root, "kind"),
                  "unknown kind \"" + kind +
                      "\" (expected constant, table, massive, geometric, arithmetic, natural-masses, "
                      "cheap-idle-massive, polynomial, named-seq, forbidden-middle, constant-nonuniform, "
                      "consecutive or fast-middle)");
}

ModelSpec parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("$", std::string("invalid JSON: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace whanoi::models
