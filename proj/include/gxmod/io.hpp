#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gxmod/cat1.hpp"
#include "gxmod/cover_lift.hpp"

namespace gxmod {

using json = nlohmann::json;

/// Malformed input. `location()` is a JSON pointer for schema problems, or
/// "line L, column C" for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// ----------------------------------------------------------------------------
// Writing
// ----------------------------------------------------------------------------

namespace detail {

inline json rows(std::span<const Elem> flat, std::size_t width) {
  json out = json::array();
  for (std::size_t i = 0; i < flat.size(); i += width) {
    out.push_back(std::vector<Elem>(flat.begin() + i, flat.begin() + i + width));
  }
  return out;
}

}  // namespace detail

inline json to_json(const GroupTable& g) {
  return {{"kind", "group"},
          {"name", g.name()},
          {"order", g.order()},
          {"op", detail::rows(g.table(), g.order())}};
}

inline json to_json(const GwaObject& x) {
  json j = to_json(x.group);
  j["kind"] = "gwa";
  j["self_action"] = detail::rows(x.action.table(), x.order());
  return j;
}

inline json to_json(const Hom& h) { return h.map; }

inline json to_json(const GXMod& x) {
  return {{"kind", "gxmod"},
          {"A", to_json(x.A)},
          {"B", to_json(x.B)},
          {"alpha", x.alpha.map},
          {"action", detail::rows(x.action.table(), x.A.order())}};
}

inline json to_json(const GCat1& c) {
  return {{"kind", "gcat1"}, {"G", to_json(c.G)}, {"s", c.s.map}, {"t", c.t.map}};
}

inline json to_json(const Covering& c) {
  return {{"kind", "covering"},
          {"total", to_json(c.total)},
          {"base", to_json(c.base)},
          {"f", c.f.map},
          {"g", c.g.map}};
}

inline json to_json(const Lifting& l) {
  return {{"kind", "lifting"},
          {"base", to_json(l.base)},
          {"X", to_json(l.X)},
          {"phi", l.phi.map},
          {"omega", l.omega.map}};
}

inline json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations()) {
    v.push_back({{"law", x.law}, {"witness", x.witness}, {"detail", x.detail}});
  }
  return {{"ok", r.ok()}, {"total", r.total()}, {"violations", v}};
}

// ----------------------------------------------------------------------------
// Reading
// ----------------------------------------------------------------------------

/// Any object a file can hold.
using AnyObject = std::variant<GroupTable, GwaObject, GXMod, GCat1, Covering, Lifting>;

namespace detail {

inline std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }

inline const json& field(const json& j, const std::string& at, const char* key) {
  if (!j.is_object()) throw ParseError(at.empty() ? "/" : at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at.empty() ? "/" : at, std::string("missing field '") + key + "'");
  return *it;
}

inline Elem element(const json& j, const std::string& at) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ParseError(at, "expected a non-negative integer");
  return j.get<Elem>();
}

inline std::vector<Elem> flat_list(const json& j, const std::string& at) {
  if (!j.is_array()) throw ParseError(at, "expected an array");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(j[i], at + "/" + std::to_string(i)));
  return out;
}

/// An n-by-m table given as rows (or as one flat list).
inline std::vector<Elem> table(const json& j, const std::string& at, std::size_t n, std::size_t m) {
  if (!j.is_array()) throw ParseError(at, "expected an array");
  std::vector<Elem> out;
  if (!j.empty() && j[0].is_array()) {
    if (j.size() != n) throw ParseError(at, "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Elem> row = flat_list(j[i], at + "/" + std::to_string(i));
      if (row.size() != m) {
        throw ParseError(at + "/" + std::to_string(i), "expected " + std::to_string(m) + " entries");
      }
      out.insert(out.end(), row.begin(), row.end());
    }
  } else {
    out = flat_list(j, at);
    if (out.size() != n * m) throw ParseError(at, "expected " + std::to_string(n * m) + " entries");
  }
  return out;
}

inline std::vector<Elem> map_list(const json& j, const std::string& at, std::size_t n) {
  std::vector<Elem> out = flat_list(j, at);
  if (out.size() != n) throw ParseError(at, "expected " + std::to_string(n) + " entries");
  return out;
}

/// A Gwa object together with the relabelling applied to move its identity
/// to index 0 (perm[old] = new).
struct Loaded {
  GwaObject object;
  Hom perm;
};

template <class Fn>
auto guard(const std::string& at, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StructuralError& e) {
    throw ParseError(at.empty() ? "/" : at, e.what());
  }
}

inline Loaded load_gwa(const json& j, const std::string& at) {
  const json& ord = field(j, at, "order");
  if (!ord.is_number_integer() || ord.get<std::int64_t>() <= 0) {
    throw ParseError(child(at, "order"), "expected a positive integer");
  }
  const std::size_t n = ord.get<std::size_t>();
  std::string name = "G";
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError(child(at, "name"), "expected a string");
    name = it->get<std::string>();
  }
  std::vector<Elem> op = table(field(j, at, "op"), child(at, "op"), n, n);
  for (std::size_t i = 0; i < op.size(); ++i) {
    if (op[i] >= n) throw ParseError(child(at, "op"), "entry " + std::to_string(i) + " out of range");
  }
  GroupTable g(name, n, std::move(op));
  SelfAction act = SelfAction::trivial(n);
  if (auto it = j.find("self_action"); it != j.end()) {
    act = guard(child(at, "self_action"), [&] {
      return SelfAction(n, table(*it, child(at, "self_action"), n, n));
    });
  }
  GwaObject raw(std::move(g), std::move(act));
  Hom perm = identity_first(raw.group);
  if (perm == Hom::identity(n)) return {std::move(raw), std::move(perm)};
  return {relabel(raw, perm), std::move(perm)};
}

/// Map read in source/target labelling, returned in normalized labelling.
inline Hom load_map(const json& j, const std::string& at, const Loaded& src, const Loaded& tgt) {
  Hom raw{map_list(j, at, src.object.order())};
  for (Elem v : raw.map) {
    if (v >= tgt.object.order()) throw ParseError(at, "entry out of range");
  }
  return compose(tgt.perm, compose(raw, inverse(src.perm)));
}

inline GXMod load_gxmod(const json& j, const std::string& at, Loaded* a_out = nullptr,
                        Loaded* b_out = nullptr) {
  Loaded a = load_gwa(field(j, at, "A"), child(at, "A"));
  Loaded b = load_gwa(field(j, at, "B"), child(at, "B"));
  Hom alpha = load_map(field(j, at, "alpha"), child(at, "alpha"), a, b);
  const std::size_t na = a.object.order(), nb = b.object.order();
  std::vector<Elem> raw = table(field(j, at, "action"), child(at, "action"), nb, na);
  const Hom ia = inverse(a.perm), ib = inverse(b.perm);
  std::vector<Elem> act(nb * na);
  for (Elem y = 0; y < nb; ++y) {
    for (Elem x = 0; x < na; ++x) {
      const Elem v = raw[ib(y) * na + ia(x)];
      if (v >= na) throw ParseError(child(at, "action"), "entry out of range");
      act[y * na + x] = a.perm(v);
    }
  }
  GXMod out{a.object, b.object, std::move(alpha), ExtAction(nb, na, std::move(act))};
  if (a_out) *a_out = std::move(a);
  if (b_out) *b_out = std::move(b);
  return out;
}

}  // namespace detail

/// Kind named by the "kind" field, or inferred from the fields present.
inline std::string infer_kind(const json& j) {
  if (!j.is_object()) throw ParseError("/", "expected an object");
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) throw ParseError("/kind", "expected a string");
    const std::string k = it->get<std::string>();
    for (const char* known : {"group", "gwa", "gxmod", "gcat1", "covering", "lifting"}) {
      if (k == known) return k;
    }
    throw ParseError("/kind", "unknown kind '" + k + "'");
  }
  if (j.contains("total")) return "covering";
  if (j.contains("X")) return "lifting";
  if (j.contains("G")) return "gcat1";
  if (j.contains("alpha")) return "gxmod";
  if (j.contains("self_action")) return "gwa";
  if (j.contains("op")) return "group";
  throw ParseError("/", "cannot infer the object kind");
}

inline GwaObject gwa_from_json(const json& j) { return detail::load_gwa(j, "").object; }

inline GroupTable group_from_json(const json& j) { return gwa_from_json(j).group; }

inline GXMod gxmod_from_json(const json& j) { return detail::load_gxmod(j, ""); }

inline GCat1 gcat1_from_json(const json& j) {
  detail::Loaded g = detail::load_gwa(detail::field(j, "", "G"), "/G");
  Hom s = detail::load_map(detail::field(j, "", "s"), "/s", g, g);
  Hom t = detail::load_map(detail::field(j, "", "t"), "/t", g, g);
  return {std::move(g.object), std::move(s), std::move(t)};
}

inline Covering covering_from_json(const json& j) {
  detail::Loaded ta, tb, ba, bb;
  GXMod total = detail::load_gxmod(detail::field(j, "", "total"), "/total", &ta, &tb);
  GXMod base = detail::load_gxmod(detail::field(j, "", "base"), "/base", &ba, &bb);
  Hom f = detail::load_map(detail::field(j, "", "f"), "/f", ta, ba);
  Hom g = detail::load_map(detail::field(j, "", "g"), "/g", tb, bb);
  return {std::move(total), std::move(base), std::move(f), std::move(g)};
}

inline Lifting lifting_from_json(const json& j) {
  detail::Loaded ba, bb;
  GXMod base = detail::load_gxmod(detail::field(j, "", "base"), "/base", &ba, &bb);
  detail::Loaded x = detail::load_gwa(detail::field(j, "", "X"), "/X");
  Hom phi = detail::load_map(detail::field(j, "", "phi"), "/phi", ba, x);
  Hom omega = detail::load_map(detail::field(j, "", "omega"), "/omega", x, bb);
  return {std::move(base), std::move(x.object), std::move(phi), std::move(omega)};
}

inline AnyObject object_from_json(const json& j) {
  const std::string k = infer_kind(j);
  if (k == "group") return group_from_json(j);
  if (k == "gwa") return gwa_from_json(j);
  if (k == "gxmod") return gxmod_from_json(j);
  if (k == "gcat1") return gcat1_from_json(j);
  if (k == "covering") return covering_from_json(j);
  return lifting_from_json(j);
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                     "malformed JSON");
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.location(), "malformed JSON");
  }
}

inline AnyObject load_object(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return object_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.location(),
                     std::string(e.what()).substr(e.location().size() + 2));
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace gxmod
