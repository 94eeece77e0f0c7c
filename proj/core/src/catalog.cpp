#include "layercake/catalog.hpp"

#include <string>

namespace layercake::catalog {

namespace {

std::string id_label(const std::string& x) { return "id_" + x; }

/// Thin category on labelled objects with a morphism x → y whenever `le(x, y)`.
/// `le` must be a preorder.
template <typename Le>
CategoryPtr thin_category(const std::vector<std::string>& objects, Le le) {
  const std::size_t n = objects.size();
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> identities(n);
  std::vector<Mor> index(n * n, kNone);
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      index[x * n + y] = morphisms.size();
      if (x == y) identities[x] = morphisms.size();
      morphisms.push_back({x == y ? id_label(objects[x]) : objects[x] + "->" + objects[y], x, y});
    }
  }
  std::vector<MorphismSpec> specs = morphisms;
  return share(FinCategory::from_rule(objects, std::move(morphisms), identities, [&](Mor g, Mor f) {
    return index[specs[f].src * n + specs[g].tgt];
  }));
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

CategoryPtr empty_category() { return share(FinCategory::from_rule({}, {}, {}, [](Mor, Mor) { return kNone; })); }

CategoryPtr terminal_category() {
  return thin_category({"*"}, [](Obj, Obj) { return true; });
}

CategoryPtr discrete_category(std::size_t n) {
  return thin_category(numbered(n), [](Obj x, Obj y) { return x == y; });
}

CategoryPtr codiscrete_category(std::size_t n) {
  return thin_category(numbered(n), [](Obj, Obj) { return true; });
}

CategoryPtr chain_category(std::size_t n) {
  return thin_category(numbered(n), [](Obj x, Obj y) { return x <= y; });
}

CategoryPtr parallel_pair() {
  std::vector<MorphismSpec> morphisms{{"id_a", 0, 0}, {"id_b", 1, 1}, {"u", 0, 1}, {"v", 0, 1}};
  return share(FinCategory::from_rule({"a", "b"}, morphisms, {0, 1}, [](Mor g, Mor f) {
    if (g <= 1) return f;  // identity on the left
    return g;              // f must be id_a
  }));
}

CategoryPtr span_category() {
  return thin_category({"a", "b", "c"}, [](Obj x, Obj y) { return x == y || x == 2; });
}

CategoryPtr group_category(const FinGroup& g) {
  std::vector<MorphismSpec> morphisms;
  for (Elem a = 0; a < g.order(); ++a) {
    morphisms.push_back({a == g.identity() ? "e" : "g" + std::to_string(a), 0, 0});
  }
  return share(FinCategory::from_rule({"*"}, std::move(morphisms), {g.identity()},
                                      [&](Mor x, Mor y) { return g.mul(x, y); }));
}

}  // namespace layercake::catalog
