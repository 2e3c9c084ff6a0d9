#include <gtest/gtest.h>

#include <numeric>

#include "liecartan/error.hpp"
#include "liecartan/io.hpp"
#include "liecartan/oracles.hpp"
#include "liecartan/powermap.hpp"
#include "support.hpp"

namespace liecartan {
namespace {

GroupDensityInstance model(const std::string& name) {
  return load_instance(test::data_dir() / "models" / (name + ".json"));
}

TEST(PowerMap, ConnectedAbelianIsDivisible) {
  const CartanGroupModel torus{0, 2, {}};
  const CartanGroupModel vector_group{3, 0, {}};
  for (std::uint64_t k = 1; k <= 12; ++k) {
    EXPECT_TRUE(pk_surjective(torus, k));
    EXPECT_TRUE(pk_surjective(vector_group, k));
  }
}

TEST(PowerMap, ComponentGroupObstruction) {
  const CartanGroupModel split{1, 0, {2}};
  EXPECT_FALSE(pk_surjective(split, 2));
  EXPECT_TRUE(pk_surjective(split, 3));
  EXPECT_EQ(first_obstruction(split, 4), std::optional<std::uint64_t>(2));
  EXPECT_EQ(first_obstruction(split, 5), std::nullopt);

  const CartanGroupModel z6{0, 1, {6}};
  EXPECT_FALSE(pk_surjective(z6, 3));
  EXPECT_FALSE(pk_surjective(z6, 4));
  EXPECT_TRUE(pk_surjective(z6, 5));
}

TEST(PowerMap, Sl2rParity) {
  const GroupDensityInstance sl2r = model("sl2r");
  EXPECT_FALSE(density_from_cartans(sl2r, 2));
  EXPECT_TRUE(density_from_cartans(sl2r, 3));
  for (std::uint64_t k = 1; k <= 99; ++k) EXPECT_EQ(density_from_cartans(sl2r, k), k % 2 == 1) << k;
}

TEST(PowerMap, WeaklyExponential) {
  EXPECT_FALSE(weakly_exponential_model(model("sl2r"), 60));
  EXPECT_TRUE(weakly_exponential_model(model("psl2r"), 60));
  EXPECT_TRUE(weakly_exponential_model(model("se2"), 60));
  EXPECT_FALSE(weakly_exponential_model(model("cyclic3"), 60));
}

TEST(PowerMap, AgreesWithEnumeration) {
  const GroupDensityInstance mixed = model("mixed");
  for (const auto& m : mixed.cartan_models) {
    if (oracle::component_group_order(m) > oracle::kMaxEnumeratedGroupOrder) continue;
    for (std::uint64_t k = 1; k <= 30; ++k) EXPECT_EQ(pk_surjective(m, k), oracle::power_map_onto(m, k)) << k;
  }
}

TEST(PowerMap, Multiplicativity) {
  const CartanGroupModel m{0, 0, {12, 35}};
  for (std::uint64_t a = 1; a <= 20; ++a) {
    for (std::uint64_t b = 1; b <= 20; ++b) {
      EXPECT_EQ(pk_surjective(m, a * b), pk_surjective(m, a) && pk_surjective(m, b));
    }
  }
}

TEST(PowerMap, CompositionLaw) {
  static_assert(composition_holds(true, true, true));
  static_assert(!composition_holds(true, true, false));
  static_assert(composition_holds(false, true, false));
  static_assert(composition_holds(true, false, false));
  // SE(2) = R^2 x| SO(2): both pieces are divisible.
  const auto se2 = model("se2"), r2 = model("r2"), torus = model("torus1");
  for (std::uint64_t k = 1; k <= 20; ++k) {
    EXPECT_TRUE(composition_holds(density_from_cartans(r2, k), density_from_cartans(torus, k),
                                  density_from_cartans(se2, k)));
  }
}

TEST(PowerMap, ErrorPaths) {
  EXPECT_THROW((void)pk_surjective({0, 1, {}}, 0), Error);
  EXPECT_THROW((void)density_from_cartans({"empty", {}}, 2), Error);
  try {
    (void)parse_instance(nlohmann::json::parse(R"({"name":"x","cartan_classes":[{"vector_rank":0,"torus_rank":0,"component_orders":[1]}]})"));
    FAIL() << "expected InvalidOrder";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidOrder);
  }
}

}  // namespace
}  // namespace liecartan
