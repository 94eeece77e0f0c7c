#include "codec.hpp"

#include <fstream>
#include <map>
#include <set>

#include "layercake/error.hpp"

namespace layercake::codec {

namespace {

[[noreturn]] void fail(const std::string& detail) { throw Error("ParseError", detail); }

void check_fields(const Json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& what) {
  if (!j.is_object()) fail(what + " must be a JSON object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) fail(what + " is missing \"" + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [k, v] : j.items()) {
    if (!known.contains(k)) fail(what + " has unknown field \"" + k + "\"");
  }
}

std::size_t parse_index(const std::string& s, std::size_t bound, const std::string& what) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos) {
    fail(what + ": \"" + s + "\" is not an index");
  }
  std::size_t v = std::stoull(s);
  if (v >= bound) fail(what + ": index " + s + " is out of range");
  return v;
}

std::size_t json_index(const Json& v, std::size_t bound, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(what + " must be a non-negative integer");
  }
  auto x = v.get<std::size_t>();
  if (x >= bound) fail(what + ": index " + std::to_string(x) + " is out of range");
  return x;
}

Obj object_named(const FinCategory& c, const Json& v, const std::string& what) {
  if (!v.is_string()) fail(what + " must be an object label");
  auto x = c.find_object(v.get<std::string>());
  if (!x) fail(what + ": unknown object \"" + v.get<std::string>() + "\"");
  return *x;
}

Mor morphism_named(const FinCategory& c, const Json& v, const std::string& what) {
  if (!v.is_string()) fail(what + " must be a morphism label");
  auto f = c.find_morphism(v.get<std::string>());
  if (!f) fail(what + ": unknown morphism \"" + v.get<std::string>() + "\"");
  return *f;
}

std::vector<std::vector<std::size_t>> square_table(const Json& j, const std::string& what) {
  check_fields(j, {"order", "table"}, {}, what);
  auto n = j.at("order").get<std::size_t>();
  const Json& t = j.at("table");
  if (!t.is_array() || t.size() != n) fail(what + " table must have " + std::to_string(n) + " rows");
  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n) fail(what + " row " + std::to_string(a) + " has the wrong length");
    for (const auto& v : t[a]) table[a].push_back(json_index(v, n, what + " entry"));
  }
  return table;
}

Json table_json(const std::vector<std::vector<std::size_t>>& table) {
  return Json{{"order", table.size()}, {"table", table}};
}

AbElem elem_from_json(const Json& v, const FinAbGroup& a, const std::string& what) {
  if (!v.is_array() || v.size() != a.rank()) {
    fail(what + " must be an array of " + std::to_string(a.rank()) + " integers");
  }
  AbElem x;
  for (const auto& c : v) x.push_back(c.get<std::int64_t>());
  return a.reduce(x);
}

std::vector<std::vector<std::int64_t>> matrix_from_json(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be a row-major integer matrix");
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& row : v) {
    if (!row.is_array()) fail(what + " must be a row-major integer matrix");
    m.push_back(row.get<std::vector<std::int64_t>>());
  }
  return m;
}

std::vector<Elem> group_map(const Json& j, const FinGroup& from, const FinGroup& to, const std::string& what) {
  if (!j.is_object()) fail(what + " must map element indices to element indices");
  std::vector<Elem> map(from.order(), kNone);
  for (const auto& [k, v] : j.items()) map[parse_index(k, from.order(), what)] = json_index(v, to.order(), what);
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] == kNone) fail(what + " has no image for " + std::to_string(x));
  }
  return map;
}

Json group_map_json(const std::vector<Elem>& map) {
  Json out = Json::object();
  for (std::size_t x = 0; x < map.size(); ++x) out[std::to_string(x)] = map[x];
  return out;
}

}  // namespace

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

CategoryPtr category_from_json(const Json& j) {
  check_fields(j, {"objects", "morphisms", "identities", "composition"}, {}, "category");
  CategoryPresentation raw;
  std::map<std::string, Obj> objects;
  for (const auto& v : j.at("objects")) {
    auto label = v.get<std::string>();
    if (!objects.emplace(label, raw.objects.size()).second) fail("duplicate object \"" + label + "\"");
    raw.objects.push_back(label);
  }
  std::map<std::string, Mor> morphisms;
  for (const auto& m : j.at("morphisms")) {
    check_fields(m, {"id", "src", "tgt"}, {}, "morphism");
    auto label = m.at("id").get<std::string>();
    auto src = objects.find(m.at("src").get<std::string>());
    auto tgt = objects.find(m.at("tgt").get<std::string>());
    if (src == objects.end() || tgt == objects.end()) fail("morphism \"" + label + "\" has an unknown endpoint");
    if (!morphisms.emplace(label, raw.morphisms.size()).second) fail("duplicate morphism \"" + label + "\"");
    raw.morphisms.push_back({label, src->second, tgt->second});
  }
  auto mor = [&](const Json& v) {
    auto it = morphisms.find(v.get<std::string>());
    if (it == morphisms.end()) fail("unknown morphism \"" + v.get<std::string>() + "\"");
    return it->second;
  };
  const Json& ids = j.at("identities");
  if (!ids.is_object()) fail("identities must map objects to morphisms");
  raw.identities.assign(raw.objects.size(), kNone);
  for (const auto& [k, v] : ids.items()) {
    auto it = objects.find(k);
    if (it == objects.end()) fail("identity for unknown object \"" + k + "\"");
    raw.identities[it->second] = mor(v);
  }
  for (const auto& triple : j.at("composition")) {
    if (!triple.is_array() || triple.size() != 3) fail("composition entries are [g, f, g∘f]");
    raw.composition.push_back({mor(triple[0]), mor(triple[1]), mor(triple[2])});
  }
  return share(FinCategory::validate(raw));
}

Json to_json(const FinCategory& c) {
  Json out;
  out["objects"] = Json::array();
  for (Obj x = 0; x < c.num_objects(); ++x) out["objects"].push_back(c.object_label(x));
  out["morphisms"] = Json::array();
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    out["morphisms"].push_back(
        {{"id", c.morphism_label(f)}, {"src", c.object_label(c.src(f))}, {"tgt", c.object_label(c.tgt(f))}});
  }
  out["identities"] = Json::object();
  for (Obj x = 0; x < c.num_objects(); ++x) out["identities"][c.object_label(x)] = c.morphism_label(c.identity(x));
  out["composition"] = Json::array();
  for (Mor g = 0; g < c.num_morphisms(); ++g) {
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      out["composition"].push_back({c.morphism_label(g), c.morphism_label(f), c.morphism_label(c.compose(g, f))});
    }
  }
  return out;
}

FinFunctor functor_from_json(const Json& j) {
  check_fields(j, {"domain", "codomain", "objects", "morphisms"}, {}, "functor");
  auto dom = category_from_json(j.at("domain"));
  auto cod = category_from_json(j.at("codomain"));
  std::vector<Obj> objects(dom->num_objects(), kNone);
  std::vector<Mor> morphisms(dom->num_morphisms(), kNone);
  for (const auto& [k, v] : j.at("objects").items()) {
    objects[object_named(*dom, Json(k), "functor object")] = object_named(*cod, v, "functor object image");
  }
  for (const auto& [k, v] : j.at("morphisms").items()) {
    morphisms[morphism_named(*dom, Json(k), "functor morphism")] = morphism_named(*cod, v, "functor morphism image");
  }
  for (Obj x = 0; x < objects.size(); ++x) {
    if (objects[x] == kNone) fail("functor has no image for object \"" + dom->object_label(x) + "\"");
  }
  for (Mor f = 0; f < morphisms.size(); ++f) {
    if (morphisms[f] == kNone) fail("functor has no image for morphism \"" + dom->morphism_label(f) + "\"");
  }
  return FinFunctor::make(dom, cod, std::move(objects), std::move(morphisms));
}

Json to_json(const FinFunctor& f) {
  Json out{{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}};
  out["objects"] = Json::object();
  for (Obj x = 0; x < f.domain().num_objects(); ++x) {
    out["objects"][f.domain().object_label(x)] = f.codomain().object_label(f.on_object(x));
  }
  out["morphisms"] = Json::object();
  for (Mor g = 0; g < f.domain().num_morphisms(); ++g) {
    out["morphisms"][f.domain().morphism_label(g)] = f.codomain().morphism_label(f.on_morphism(g));
  }
  return out;
}

LiftingSquare square_from_json(const Json& j) {
  check_fields(j, {"p", "m", "top", "bottom", "iso"}, {}, "square");
  auto p = functor_from_json(j.at("p"));
  auto m = functor_from_json(j.at("m"));
  auto top = functor_from_json(j.at("top"));
  auto bottom = functor_from_json(j.at("bottom"));
  // Rebind so that shared corners are the same category objects.
  top = FinFunctor::make(p.domain_ptr(), m.domain_ptr(), {top.object_map().begin(), top.object_map().end()},
                         {top.morphism_map().begin(), top.morphism_map().end()});
  bottom = FinFunctor::make(p.codomain_ptr(), m.codomain_ptr(),
                            {bottom.object_map().begin(), bottom.object_map().end()},
                            {bottom.morphism_map().begin(), bottom.morphism_map().end()});
  const FinCategory& a = p.domain();
  const FinCategory& d = m.codomain();
  std::vector<Mor> components(a.num_objects(), kNone);
  for (const auto& [k, v] : j.at("iso").items()) {
    components[object_named(a, Json(k), "square iso")] = morphism_named(d, v, "square iso component");
  }
  for (Obj x = 0; x < components.size(); ++x) {
    if (components[x] == kNone) fail("square iso has no component at \"" + a.object_label(x) + "\"");
  }
  auto iso = NatTransformation::make(compose(m, top), compose(bottom, p), std::move(components));
  return LiftingSquare::make(std::move(p), std::move(m), std::move(top), std::move(bottom), std::move(iso));
}

FinGroup group_from_json(const Json& j) { return FinGroup::from_table(square_table(j, "group")); }

Json to_json(const FinGroup& g) { return table_json(g.table()); }

FinAbGroup abelian_from_json(const Json& j) {
  check_fields(j, {"invariant_factors"}, {}, "abelian group");
  return FinAbGroup::from_invariant_factors(j.at("invariant_factors").get<std::vector<std::int64_t>>());
}

Json to_json(const FinAbGroup& a) { return Json{{"invariant_factors", a.invariant_factors()}}; }

GModule module_from_json(const Json& j, const FinGroup& g) {
  check_fields(j, {"coefficients"}, {"action"}, "module");
  FinAbGroup a = abelian_from_json(j.at("coefficients"));
  std::vector<AbHom> action(g.order(), AbHom::identity(a));
  if (j.contains("action")) {
    for (const auto& [k, v] : j.at("action").items()) {
      action[parse_index(k, g.order(), "module action")] = AbHom::make(a, a, matrix_from_json(v, "action matrix"));
    }
  }
  return GModule::make(g, a, std::move(action));
}

Json module_to_json(const GModule& m) {
  Json action = Json::object();
  for (Elem g = 0; g < m.group.order(); ++g) {
    if (m.action[g].matrix == AbHom::identity(m.coefficients).matrix) continue;
    action[std::to_string(g)] = m.action[g].matrix;
  }
  return Json{{"coefficients", to_json(m.coefficients)}, {"action", action}};
}

Cochain cochain_from_json(const Json& j, const GModule& m) {
  check_fields(j, {"degree", "entries"}, {"normalized"}, "cochain");
  auto degree = j.at("degree").get<std::size_t>();
  bool normalized = j.value("normalized", true);
  if (degree > 8) throw Error("DegreeOverflow", "cochain degree " + std::to_string(degree) + " exceeds 8");
  Cochain c = Cochain::zero(m, degree, normalized);
  for (const auto& e : j.at("entries")) {
    check_fields(e, {"args", "value"}, {}, "cochain entry");
    std::vector<Elem> args;
    for (const auto& v : e.at("args")) args.push_back(json_index(v, m.group.order(), "cochain argument"));
    if (args.size() != degree) fail("cochain entry has " + std::to_string(args.size()) + " arguments");
    c.set_value(m, args, elem_from_json(e.at("value"), m.coefficients, "cochain value"));
  }
  return c;
}

Json cochain_to_json(const Cochain& c, const GModule& m) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    if (m.coefficients.is_zero(c.values[k])) continue;
    entries.push_back({{"args", cochain_arguments(m.group, c.degree, k, c.normalized)}, {"value", c.values[k]}});
  }
  Json out{{"degree", c.degree}, {"entries", entries}};
  if (!c.normalized) out["normalized"] = false;
  return out;
}

SkeletalTwoGroup twogroup_from_json(const Json& j) {
  check_fields(j, {"pi1", "pi2", "associator"}, {"action"}, "2-group");
  FinGroup g = group_from_json(j.at("pi1"));
  Json module{{"coefficients", j.at("pi2")}};
  if (j.contains("action")) module["action"] = j.at("action");
  GModule m = module_from_json(module, g);
  Cochain alpha = cochain_from_json(j.at("associator"), m);
  if (alpha.degree != 3 || !alpha.normalized) fail("associator must be a normalized 3-cochain");
  return {std::move(m), std::move(alpha)};
}

Json to_json(const SkeletalTwoGroup& t) {
  Json module = module_to_json(t.module);
  return Json{{"pi1", to_json(t.pi1())},
              {"pi2", to_json(t.pi2())},
              {"action", module["action"]},
              {"associator", cochain_to_json(t.alpha, t.module)}};
}

Extension extension_from_json(const Json& j) {
  check_fields(j, {"F", "E", "B", "i", "p"}, {}, "extension");
  FinGroup f = group_from_json(j.at("F"));
  FinGroup e = group_from_json(j.at("E"));
  FinGroup b = group_from_json(j.at("B"));
  auto i = group_map(j.at("i"), f, e, "extension map i");
  auto p = group_map(j.at("p"), e, b, "extension map p");
  return Extension::make(std::move(f), std::move(e), std::move(b), std::move(i), std::move(p));
}

Json to_json(const Extension& e) {
  return Json{{"F", to_json(e.f)},
              {"E", to_json(e.e)},
              {"B", to_json(e.b)},
              {"i", group_map_json(e.i.map)},
              {"p", group_map_json(e.p.map)}};
}

NonabelianCocycle cocycle_from_json(const Json& j) {
  check_fields(j, {"B", "F", "phi", "factor"}, {}, "cocycle");
  NonabelianCocycle c{group_from_json(j.at("B")), group_from_json(j.at("F")), {}, {}};
  std::vector<Elem> id(c.f.order());
  for (Elem x = 0; x < id.size(); ++x) id[x] = x;
  c.phi.assign(c.b.order(), id);
  for (const auto& [k, v] : j.at("phi").items()) {
    c.phi[parse_index(k, c.b.order(), "phi")] = group_map(v, c.f, c.f, "phi(" + k + ")");
  }
  c.factor.assign(c.b.order() * c.b.order(), c.f.identity());
  for (const auto& [k, v] : j.at("factor").items()) {
    auto comma = k.find(',');
    if (comma == std::string::npos) fail("factor keys have the form \"b,b'\"");
    std::size_t b1 = parse_index(k.substr(0, comma), c.b.order(), "factor");
    std::size_t b2 = parse_index(k.substr(comma + 1), c.b.order(), "factor");
    c.factor[b1 * c.b.order() + b2] = json_index(v, c.f.order(), "factor value");
  }
  return c;
}

Json to_json(const NonabelianCocycle& c) {
  Json phi = Json::object();
  for (Elem b = 0; b < c.b.order(); ++b) phi[std::to_string(b)] = group_map_json(c.phi[b]);
  Json factor = Json::object();
  for (Elem b1 = 0; b1 < c.b.order(); ++b1) {
    for (Elem b2 = 0; b2 < c.b.order(); ++b2) {
      factor[std::to_string(b1) + "," + std::to_string(b2)] = c.factor_at(b1, b2);
    }
  }
  return Json{{"B", to_json(c.b)}, {"F", to_json(c.f)}, {"phi", phi}, {"factor", factor}};
}

SetValuedFunctor set_functor_from_json(const Json& j) {
  check_fields(j, {"base", "sets", "maps"}, {}, "set-valued functor");
  auto base = category_from_json(j.at("base"));
  std::vector<std::vector<std::string>> sets(base->num_objects());
  std::vector<bool> seen(base->num_objects(), false);
  for (const auto& [k, v] : j.at("sets").items()) {
    Obj x = object_named(*base, Json(k), "sets");
    sets[x] = v.get<std::vector<std::string>>();
    seen[x] = true;
  }
  for (Obj x = 0; x < seen.size(); ++x) {
    if (!seen[x]) fail("no set given for object \"" + base->object_label(x) + "\"");
  }
  auto position = [&](Obj x, const std::string& label) {
    for (std::size_t i = 0; i < sets[x].size(); ++i) {
      if (sets[x][i] == label) return i;
    }
    fail("\"" + label + "\" is not an element of the set at \"" + base->object_label(x) + "\"");
  };
  std::vector<std::vector<std::size_t>> maps(base->num_morphisms());
  std::vector<bool> given(base->num_morphisms(), false);
  for (const auto& [k, v] : j.at("maps").items()) {
    Mor f = morphism_named(*base, Json(k), "maps");
    given[f] = true;
    maps[f].assign(sets[base->src(f)].size(), kNone);
    for (const auto& [x, y] : v.items()) {
      maps[f][position(base->src(f), x)] = position(base->tgt(f), y.get<std::string>());
    }
    for (std::size_t i = 0; i < maps[f].size(); ++i) {
      if (maps[f][i] == kNone) fail("map for \"" + k + "\" misses \"" + sets[base->src(f)][i] + "\"");
    }
  }
  // Identities may be left implicit.
  for (Mor f = 0; f < maps.size(); ++f) {
    if (given[f]) continue;
    if (!base->is_identity(f)) fail("no map given for morphism \"" + base->morphism_label(f) + "\"");
    for (std::size_t i = 0; i < sets[base->src(f)].size(); ++i) maps[f].push_back(i);
  }
  return SetValuedFunctor::make(base, std::move(sets), std::move(maps));
}

Json to_json(const SetValuedFunctor& f) {
  const FinCategory& b = *f.base;
  Json sets = Json::object();
  for (Obj x = 0; x < b.num_objects(); ++x) sets[b.object_label(x)] = f.sets[x];
  Json maps = Json::object();
  for (Mor g = 0; g < b.num_morphisms(); ++g) {
    Json m = Json::object();
    for (std::size_t i = 0; i < f.maps[g].size(); ++i) m[f.sets[b.src(g)][i]] = f.sets[b.tgt(g)][f.maps[g][i]];
    maps[b.morphism_label(g)] = m;
  }
  return Json{{"base", to_json(b)}, {"sets", sets}, {"maps", maps}};
}

Monoid monoid_from_json(const Json& j) { return Monoid::from_table(square_table(j, "monoid")); }

Json to_json(const Monoid& m) { return table_json(m.table()); }

PointedCategory pointed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basepoint")) fail("pointed category is missing \"basepoint\"");
  Json rest = j;
  rest.erase("basepoint");
  auto c = category_from_json(rest);
  return PointedCategory::make(c, object_named(*c, j.at("basepoint"), "basepoint"));
}

Json to_json(const PointedCategory& p) {
  Json out = to_json(*p.category);
  out["basepoint"] = p.category->object_label(p.basepoint);
  return out;
}

}  // namespace layercake::codec
