#include "gwl/catalog.hpp"

namespace gwl {

namespace {

std::vector<CatalogEntry> build_catalog() {
  using GN = GroupName;
  std::vector<CatalogEntry> out;
  auto add = [&out](GroupName n, int order) {
    std::string name = n.str();
    out.push_back(CatalogEntry{std::move(name), std::move(n), order});
  };
  for (int n = 1; n <= 16; ++n) add(GN::cyclic(n), n);
  out.push_back(CatalogEntry{"klein4", GN::direct_product(GN::cyclic(2), GN::cyclic(2)), 4});
  for (int m = 3; m <= 8; ++m) add(GN::dihedral(m), 2 * m);
  add(GN::quaternion8(), 8);
  add(GN::symmetric(3), 6);
  add(GN::symmetric(4), 24);
  add(GN::symmetric(5), 120);
  add(GN::alternating(4), 12);
  add(GN::alternating(5), 60);
  add(GN::direct_product(GN::alternating(4), GN::cyclic(5)), 60);
  add(GN::dihedral(30), 60);
  add(GN::cyclic(60), 60);
  add(GN::direct_product(GN::alternating(5), GN::alternating(5)), 3600);
  add(GN::swap_wreath(GN::alternating(5)), 7200);
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<GroupName> catalog_lookup(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.ctor;
  }
  return std::nullopt;
}

Group catalog_group(const std::string& name) {
  auto ctor = catalog_lookup(name);
  if (!ctor) raise(errc::parameter_out_of_range, "unknown catalog group: " + name);
  return make_named(*ctor);
}

}  // namespace gwl
