#pragma once

// Skeletal 2-groups (G, A, ρ, α) and the finite monoidal groupoids they
// describe.
//
// In build_from_data the morphism (g, a) of hom(g, g) stands for a ⊗ id_g,
// so Aut(g) is identified with A = Aut(1) by tensoring on the left. With that
// identification
//   (g, a) ⊗ (h, b) = (gh, a + ρ(g)b),   ρ(g)(a) = id_g ⊗ a ⊗ id_{g⁻¹},
// and the associator a_{x,y,z} : (xy)z → x(yz) is (xyz, α(x, y, z)). The
// pentagon at (w, x, y, z) then fails exactly by dα(w, x, y, z).

#include <array>
#include <optional>
#include <vector>

#include "layercake/cohomology.hpp"
#include "layercake/fincat.hpp"

namespace layercake {

struct SkeletalTwoGroup {
  GModule module;  // π₁ = module.group, π₂ = module.coefficients, ρ = module.action
  Cochain alpha;   // normalized, degree 3

  const FinGroup& pi1() const { return module.group; }
  const FinAbGroup& pi2() const { return module.coefficients; }
};

/// Coordinates of the loops at the unit, in hom(unit, unit) order.
struct LoopCoordinates {
  FinAbGroup group;
  std::vector<AbElem> of_loop;
};

class FinMonoidalGroupoid {
 public:
  /// Validates groupoid, functoriality of ⊗ (interchange), naturality of the
  /// associator, strict units and a_{x,1,y} = id. The pentagon is not required.
  /// Throws MonoidalViolation or UnitNotStrict.
  static FinMonoidalGroupoid make(CategoryPtr category, std::vector<Obj> object_tensor,
                                  std::vector<Mor> morphism_tensor, Obj unit, std::vector<Mor> associator,
                                  std::optional<LoopCoordinates> loops = std::nullopt);

  const FinCategory& category() const { return *category_; }
  const CategoryPtr& category_ptr() const { return category_; }
  Obj unit() const { return unit_; }
  Obj tensor(Obj x, Obj y) const { return object_tensor_[x * n() + y]; }
  Mor tensor_morphisms(Mor f, Mor g) const { return morphism_tensor_[f * category_->num_morphisms() + g]; }
  Mor associator(Obj x, Obj y, Obj z) const { return associator_[(x * n() + y) * n() + z]; }
  const std::optional<LoopCoordinates>& loops() const { return loops_; }

 private:
  std::size_t n() const { return category_->num_objects(); }

  CategoryPtr category_;
  std::vector<Obj> object_tensor_;
  std::vector<Mor> morphism_tensor_;
  Obj unit_ = 0;
  std::vector<Mor> associator_;
  std::optional<LoopCoordinates> loops_;
};

/// Objects G, hom(g, g) ≅ A, strict units. α need not be a cocycle.
FinMonoidalGroupoid build_from_data(const SkeletalTwoGroup& t);

struct PentagonVerdict {
  bool holds = false;
  std::optional<std::array<Obj, 4>> counterexample;  // lowest (w, x, y, z)
};

/// (id_w ⊗ a_{x,y,z}) ∘ a_{w,xy,z} ∘ (a_{w,x,y} ⊗ id_z) = a_{w,x,yz} ∘ a_{wx,y,z}.
PentagonVerdict check_pentagon(const FinMonoidalGroupoid& t);

/// Throws NotSkeletal, UnitNotStrict, NotAbelian.
SkeletalTwoGroup skeletal_data(const FinMonoidalGroupoid& t);

/// Composition on Aut(unit) is commutative and agrees with ⊗.
bool eckmann_hilton_holds(const FinMonoidalGroupoid& t);

/// Isomorphism classes of objects under ⊗. Throws GroupViolation.
FinGroup decategorify(const FinMonoidalGroupoid& t);

enum class IsoScope {
  Any,                   // any isomorphisms G₁ ≅ G₂, A₁ ≅ A₂ compatible with ρ
  FixedIdentifications,  // G₁ = G₂, A₁ = A₂, ρ₁ = ρ₂ via identities
};

/// Throws BudgetExceeded.
bool equivalent_two_groups(const SkeletalTwoGroup& a, const SkeletalTwoGroup& b, IsoScope scope = IsoScope::Any,
                           std::size_t candidate_limit = 1'000'000);

/// Isomorphisms A → B of finite abelian groups, as homomorphisms.
std::vector<AbHom> abelian_isomorphisms(const FinAbGroup& a, const FinAbGroup& b,
                                        std::size_t candidate_limit = 1'000'000);

/// One representative per element of H³_ρ(G, A), in lexicographic order of
/// the class. Throws SizeGuard.
std::vector<SkeletalTwoGroup> classify(const GModule& m, const CohomologyLimits& limits = {});

}  // namespace layercake
