#pragma once

// Command-line front end. Exit codes: 0 pass, 1 axiom or precondition
// failure, 2 parse or usage error, 3 incomplete search pool.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gxmod.hpp"

namespace gxmod::cli {

enum Exit : int { kPass = 0, kFail = 1, kParse = 2, kIncomplete = 3 };

struct Config {
  std::vector<std::string> inputs;
  std::size_t bound = 8;
  std::string out;
  std::string format = "human";
  bool json() const { return format == "json"; }
};

inline std::string kind_of(const AnyObject& o) {
  static const char* names[] = {"group", "gwa", "gxmod", "gcat1", "covering", "lifting"};
  return names[o.index()];
}

inline ValidationReport validate_any(const AnyObject& o) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GroupTable>) return validate_group(x);
        else if constexpr (std::is_same_v<T, GwaObject>) return validate_gwa(x);
        else if constexpr (std::is_same_v<T, GXMod>) return validate_gxmod(x);
        else if constexpr (std::is_same_v<T, GCat1>) return validate_gcat1(x);
        else if constexpr (std::is_same_v<T, Covering>) return validate_covering(x);
        else return validate_lifting(x);
      },
      o);
}

inline std::string format_witness(const std::vector<Elem>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + ")";
}

inline void print_report(std::ostream& out, const std::string& what, const ValidationReport& r) {
  if (r.ok()) {
    out << what << ": ok\n";
    return;
  }
  out << what << ": " << r.total() << " violation" << (r.total() == 1 ? "" : "s") << "\n";
  for (const auto& v : r.violations()) {
    out << "  " << v.law << " at " << format_witness(v.witness);
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
}

/// Writes `text` to cfg.out when set, else to `out`.
inline void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

inline std::vector<Elem> parse_list(const std::string& text, const char* what) {
  std::vector<Elem> out;
  std::string s = text;
  for (char& c : s) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(s);
  long long v;
  while (in >> v) {
    if (v < 0) throw ParseError(what, "negative entry");
    out.push_back(static_cast<Elem>(v));
  }
  if (!in.eof()) throw ParseError(what, "expected a list of non-negative integers");
  return out;
}

template <class T>
T expect(const AnyObject& o, const std::string& path) {
  if (const T* x = std::get_if<T>(&o)) return *x;
  if constexpr (std::is_same_v<T, GwaObject>) {
    if (const auto* g = std::get_if<GroupTable>(&o)) return GwaObject(*g);
  }
  throw ParseError(path, "unexpected object kind '" + kind_of(o) + "'");
}

// ----------------------------------------------------------------------------

inline int cmd_validate(const Config& cfg, std::ostream& out) {
  int code = kPass;
  json all = json::array();
  std::string text;
  for (const auto& path : cfg.inputs) {
    const AnyObject o = load_object(path);
    const ValidationReport r = validate_any(o);
    if (!r.ok()) code = kFail;
    if (cfg.json()) {
      json j = to_json(r);
      j["file"] = path;
      j["kind"] = kind_of(o);
      all.push_back(std::move(j));
    } else {
      std::ostringstream s;
      print_report(s, path + " (" + kind_of(o) + ")", r);
      text += s.str();
    }
  }
  emit(cfg, out, cfg.json() ? all.dump(2) + "\n" : text);
  return code;
}

struct ConstructArgs {
  std::string what;
  std::vector<std::string> subgroup;
  std::string new_a, new_b, f, g;
};

inline int cmd_construct(const Config& cfg, const ConstructArgs& args, std::ostream& out,
                         std::ostream& err) {
  if (cfg.inputs.size() != 1) throw CLI::ValidationError("construct takes exactly one input file");
  const std::string& path = cfg.inputs[0];
  const AnyObject in = load_object(path);
  AnyObject result;
  const std::string& w = args.what;
  if (w == "kernel-gxmod") {
    result = kernel_gxmod(expect<GXMod>(in, path));
  } else if (w == "image-gxmod") {
    result = image_gxmod(expect<GXMod>(in, path));
  } else if (w == "cat1-to-gxmod") {
    result = cat1_to_gxmod(expect<GCat1>(in, path));
  } else if (w == "natural-lifting") {
    result = natural_lifting(expect<GXMod>(in, path));
  } else if (w == "quotient-lifting") {
    std::vector<Elem> members;
    for (const auto& s : args.subgroup) {
      for (Elem e : parse_list(s, "--subgroup")) members.push_back(e);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const GXMod x = expect<GXMod>(in, path);
    for (Elem e : members) {
      if (e >= x.A.order()) throw ParseError("--subgroup", "element out of range");
    }
    result = quotient_lifting(x, Subgroup{members});
  } else if (w == "lift-to-cover") {
    result = lifting_to_covering(expect<Lifting>(in, path));
  } else if (w == "cover-to-lift") {
    result = covering_to_lifting(expect<Covering>(in, path));
  } else if (w == "transport") {
    const GXMod x = expect<GXMod>(in, path);
    const bool codomain = !args.new_b.empty();
    const bool domain = !args.new_a.empty();
    if (!codomain && !domain) {
      throw CLI::ValidationError("transport needs --new-b/--f and/or --new-a/--g");
    }
    GwaObject nb = x.B, na = x.A;
    Hom f = Hom::identity(x.B.order()), g = Hom::identity(x.A.order());
    if (codomain) {
      nb = expect<GwaObject>(load_object(args.new_b), args.new_b);
      f = Hom{parse_list(args.f, "--f")};
    }
    if (domain) {
      na = expect<GwaObject>(load_object(args.new_a), args.new_a);
      g = Hom{parse_list(args.g, "--g")};
    }
    result = transport_both(x, nb, f, na, g).both.object;
  } else {
    throw CLI::ValidationError("unknown construction '" + w + "'");
  }
  const ValidationReport r = validate_any(result);
  emit(cfg, out, fixtures::to_json(result).dump(2) + "\n");
  if (!r.ok()) {
    print_report(err, w + " output", r);
    return kFail;
  }
  return kPass;
}

inline int cmd_enumerate(const Config& cfg, const std::string& what, std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (cfg.inputs.size() != n) {
      throw CLI::ValidationError("enumerate " + what + " takes " + std::to_string(n) + " input file(s)");
    }
  };
  auto gwa_at = [&](std::size_t i) { return expect<GwaObject>(load_object(cfg.inputs[i]), cfg.inputs[i]); };
  json items = json::array();
  if (what == "self-actions") {
    need(1);
    const GwaObject g = gwa_at(0);
    for (const auto& a : enumerate_gwa_objects(g.group)) items.push_back(to_json(a));
  } else if (what == "ext-actions") {
    need(2);
    const GwaObject b = gwa_at(0), a = gwa_at(1);
    for (const auto& act : enumerate_ext_actions(b, a)) {
      items.push_back(detail::rows(act.table(), a.order()));
    }
  } else if (what == "gxmods") {
    need(2);
    for (const auto& x : enumerate_gxmods(gwa_at(0), gwa_at(1))) items.push_back(to_json(x));
  } else if (what == "liftings" || what == "coverings") {
    need(1);
    const GXMod base = expect<GXMod>(load_object(cfg.inputs[0]), cfg.inputs[0]);
    const SearchPool pool = SearchPool::up_to(cfg.bound);
    if (what == "liftings") {
      for (const auto& l : enumerate_liftings(base, pool)) items.push_back(to_json(l));
    } else {
      for (const auto& c : enumerate_coverings(base, pool)) items.push_back(to_json(c));
    }
  } else if (what == "cat1") {
    need(1);
    for (const auto& c : enumerate_gcat1(gwa_at(0))) items.push_back(to_json(c));
  } else {
    throw CLI::ValidationError("unknown enumeration '" + what + "'");
  }
  if (cfg.json()) {
    emit(cfg, out, json{{"kind", what}, {"count", items.size()}, {"items", items}}.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << what << ": " << items.size() << "\n";
    for (std::size_t i = 0; i < items.size(); ++i) s << "  [" << i << "] " << items[i].dump() << "\n";
    emit(cfg, out, s.str());
  }
  return kPass;
}

inline int cmd_equivalence(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputs.size() != 1) throw CLI::ValidationError("equivalence takes one base file");
  const GXMod base = expect<GXMod>(load_object(cfg.inputs[0]), cfg.inputs[0]);
  const ValidationReport v = validate_gxmod(base);
  if (!v.ok()) {
    print_report(err, cfg.inputs[0], v);
    return kFail;
  }
  const EquivalenceReport r =
      verify_equivalence(base, SearchPool::up_to(cfg.bound), EquivalenceOptions::from_env());
  if (cfg.json()) {
    emit(cfg, out, to_json(r).dump(2) + "\n");
  } else {
    std::ostringstream s;
    auto line = [&](const char* name, const CheckCount& c) {
      s << "  " << name << ": " << c.passed << " passed, " << c.failed << " failed\n";
    };
    s << "order bound " << r.order_bound << ": " << r.liftings.size() << " liftings, "
      << r.coverings.size() << " coverings, " << r.lifting_morphisms.size()
      << " lifting morphisms, " << r.covering_morphisms.size() << " covering morphisms\n";
    line("objects valid", r.objects_valid);
    line("lifting round trip", r.roundtrip_lifting);
    std::size_t witnessed = 0;
    for (const auto& w : r.roundtrip_covering) witnessed += w.witness_valid;
    s << "  covering round trip: " << witnessed << " of " << r.roundtrip_covering.size()
      << " with isomorphism <f, 1>\n";
    line("functor on morphisms", r.morphism_images);
    line("morphism round trip", r.morphism_roundtrip);
    line("identity law", r.identity_law);
    line("composition law", r.composition_law);
    line("naturality", r.naturality);
    s << "  excluded maps (only omega' f = omega): " << r.excluded_lifting_maps << "\n";
    for (const auto& m : r.missing) s << "  incomplete: " << m << "\n";
    if (r.truncated) s << "  truncated: morphism cap reached\n";
    for (const auto& f : r.failures) s << "  FAILED: " << f << "\n";
    s << (r.ok() ? (r.incomplete() ? "incomplete\n" : "ok\n") : "failed\n");
    emit(cfg, out, s.str());
  }
  if (!r.ok()) return kFail;
  return r.incomplete() ? kIncomplete : kPass;
}

/// One JSON object per line: every Gwa object up to the bound, or every
/// generalized crossed module / cat¹-group between them.
inline int cmd_catalog(const Config& cfg, const std::string& what, std::ostream& out) {
  std::ostringstream s;
  std::vector<GwaObject> objects;
  for (const auto& g : small_groups(cfg.bound)) {
    for (auto& x : enumerate_gwa_objects(g)) objects.push_back(std::move(x));
  }
  if (what == "gwa") {
    for (const auto& x : objects) {
      json j = to_json(x);
      j["verdicts"] = {{"valid", validate_gwa(x).ok()},
                       {"trivial", x.action == SelfAction::trivial(x.order())},
                       {"conjugation", is_conjugation(x)}};
      s << j.dump() << "\n";
    }
  } else if (what == "gxmod") {
    for (const auto& a : objects) {
      for (const auto& b : objects) {
        for (const auto& x : enumerate_gxmods(a, b)) {
          json j = to_json(x);
          j["verdicts"] = {{"valid", validate_gxmod(x).ok()},
                           {"aspherical", is_aspherical(x)},
                           {"simply_connected", is_simply_connected(x)},
                           {"alpha_gwa", check_alpha_gwa_morphism(x)}};
          s << j.dump() << "\n";
        }
      }
    }
  } else if (what == "gcat1") {
    for (const auto& g : objects) {
      for (const auto& c : enumerate_gcat1(g)) {
        json j = to_json(c);
        j["verdicts"] = {{"valid", validate_gcat1(c).ok()},
                         {"ordinary", is_conjugation(c.G)},
                         {"kernels_commute", kernels_commute(c)},
                         {"gxmod_valid", validate_gxmod(cat1_to_gxmod(c)).ok()}};
        s << j.dump() << "\n";
      }
    }
  } else {
    throw CLI::ValidationError("unknown catalog '" + what + "'");
  }
  emit(cfg, out, s.str());
  return kPass;
}

// ----------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Finite generalized crossed modules: validation, constructions, enumeration"};
  app.require_subcommand(0, 1);
  Config cfg;
  std::string seed_dir;
  app.add_option("--seed-fixtures", seed_dir, "Write the shipped fixture set to DIR");

  auto common = [&](CLI::App* sub, bool bound) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--out", cfg.out, "Write output to PATH");
    if (bound) sub->add_option("--bound", cfg.bound, "Largest group order in the search pool")
          ->check(CLI::Range(std::size_t{1}, kMaxPoolOrder));
  };

  auto* validate = app.add_subcommand("validate", "Check the axioms of objects in JSON files");
  validate->add_option("files", cfg.inputs)->required();
  common(validate, false);

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Build a derived object");
  construct->add_option("what", cargs.what,
                        "kernel-gxmod, image-gxmod, transport, cat1-to-gxmod, natural-lifting, "
                        "quotient-lifting, lift-to-cover, cover-to-lift")
      ->required();
  construct->add_option("file", cfg.inputs)->required();
  construct->add_option("--subgroup", cargs.subgroup, "Members of N for quotient-lifting");
  construct->add_option("--new-b", cargs.new_b, "Gwa object B' for transport");
  construct->add_option("--f", cargs.f, "Isomorphism B -> B' as a list");
  construct->add_option("--new-a", cargs.new_a, "Gwa object A' for transport");
  construct->add_option("--g", cargs.g, "Isomorphism A' -> A as a list");
  common(construct, false);

  std::string ewhat;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate objects");
  enumerate->add_option("what", ewhat,
                        "self-actions, ext-actions, gxmods, liftings, coverings, cat1")
      ->required();
  enumerate->add_option("files", cfg.inputs);
  common(enumerate, true);

  auto* equivalence = app.add_subcommand("equivalence", "Check the coverings/liftings equivalence");
  equivalence->add_option("base", cfg.inputs)->required();
  common(equivalence, true);

  std::string cwhat = "gwa";
  auto* catalog = app.add_subcommand("catalog", "Emit a JSON-lines catalogue over the pool");
  catalog->add_option("what", cwhat, "gwa, gxmod or gcat1");
  common(catalog, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kParse;
  }

  try {
    if (!seed_dir.empty()) {
      for (const auto& p : fixtures::write_all(seed_dir)) out << p << "\n";
    }
    if (*validate) return cmd_validate(cfg, out);
    if (*construct) return cmd_construct(cfg, cargs, out, err);
    if (*enumerate) return cmd_enumerate(cfg, ewhat, out);
    if (*equivalence) return cmd_equivalence(cfg, out, err);
    if (*catalog) return cmd_catalog(cfg, cwhat, out);
    if (seed_dir.empty()) {
      out << app.help();
      return kParse;
    }
    return kPass;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const StructuralError& e) {
    err << "malformed table: " << e.what() << "\n";
    return kParse;
  } catch (const CLI::ValidationError& e) {
    err << "usage: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed [" << e.condition() << "]: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace gxmod::cli
