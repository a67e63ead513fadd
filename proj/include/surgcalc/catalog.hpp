#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surgcalc/block.hpp"

namespace surgcalc {

/// Second-homology class of a rational elliptic surface in the basis
/// (H, E1, ..., E9), intersection form diag(1, -1, ..., -1).
struct HClass {
  std::array<long long, 10> c{};

  long long dot(const HClass& o) const {
    long long s = c[0] * o.c[0];
    for (int i = 1; i < 10; ++i) s -= c[i] * o.c[i];
    return s;
  }
  long long square() const { return dot(*this); }
  bool operator==(const HClass& o) const { return c == o.c; }
};

/// Elliptic-fibration structure on a catalog block whose classes are known
/// in the (H, E1..E9) basis: necklace components (a cycle of -2 spheres),
/// disjoint -1 sections, and fishtail counts.
struct CatalogFibration {
  std::string name;
  std::vector<std::size_t> components;  // indices into CatalogBlock::classes
  std::vector<std::size_t> sections;
  long long fishtails = 0;
  long long fishtails_class_a = 0;
};

/// Count-level fibration data (used where explicit classes are unavailable).
struct FibrationProfile {
  std::string name;
  long long sections = 0;
  long long section_square = 0;
  long long necklace_i6 = 0;
  long long necklace_i2 = 0;
  long long fishtails = 0;
  long long fishtails_class_a = 0;
  long long dual_minus2_per_section = 0;
};

struct CatalogSurface {
  long long genus = 0;
  long long self_int = 0;
  std::string complement_pi1;       // DSL
  std::vector<std::string> images;  // DSL words, 2*genus of them
  std::string meridian;             // DSL word

  EmbeddedSurfaceData materialize() const;
};

struct CatalogTorus {
  std::string complement_pi1;  // DSL
  std::string lambda;          // DSL word
  std::string mu;              // DSL word

  LagrangianTorusData materialize() const;
};

struct CatalogBlock {
  std::string label;
  long long e = 0;
  long long sigma = 0;
  std::string pi1;  // DSL
  std::vector<CatalogSurface> surfaces;
  std::vector<CatalogTorus> tori;
  std::vector<HClass> classes;
  std::vector<CatalogFibration> fibrations;
  std::vector<FibrationProfile> profiles;
  bool symbolic_generators = false;     // extra generators g_1..g_s exist
  std::string symbolic_normal_generator;  // word normally generating them

  ManifoldBlock materialize() const;
  const CatalogFibration& fibration(const std::string& name) const;
  const FibrationProfile& profile(const std::string& name) const;
};

struct Catalog {
  std::vector<CatalogBlock> blocks;

  const CatalogBlock& at(const std::string& label) const;
  bool has(const std::string& label) const;
};

/// The built-in catalog all pipelines default to.
const Catalog& builtin_catalog();

/// Canonical JSON serialization; load(save(c)) is the identity and the
/// shipped file round-trips byte-exactly.
std::string catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const std::string& text);
Catalog load_catalog_file(const std::string& path);
void save_catalog_file(const Catalog& c, const std::string& path);

/// Consistency checks: E(n) invariants, class squares (-2 components, -1
/// sections), necklace cycle adjacency, one section incidence each, surface
/// image arity, parsability of every presentation and word.
CheckReport check_catalog(const Catalog& c);

}  // namespace surgcalc
