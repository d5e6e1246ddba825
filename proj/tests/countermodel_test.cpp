#include <gtest/gtest.h>

#include "houe/countermodel.hpp"
#include "test_util.hpp"

namespace houe {
namespace {

using testing::make_sig;
using testing::nf;

Signature sig() {
  return make_sig("a : e; b : e; f : e -> e; p : e -> t; r : e -> e -> t; q : t; g : (e -> t) -> t",
                  "X : e");
}

std::vector<Term> nfs(const std::vector<std::string>& texts) {
  Signature s = sig();
  std::vector<Term> out;
  for (const auto& t : texts) out.push_back(nf(s, t));
  return out;
}

TEST(SmallModel, FindsModels) {
  EXPECT_TRUE(small_model_exists(nfs({"p(a)", "~p(b)"}), 3));
  EXPECT_TRUE(small_model_exists(nfs({"forall x:e. r(x, f(x))", "~r(a, a)"}), 3));
  EXPECT_TRUE(small_model_exists(nfs({"q <=> p(a)", "q => ~p(b)"}), 3));
}

TEST(SmallModel, NoModelForContradictions) {
  EXPECT_FALSE(small_model_exists(nfs({"p(a)", "~p(a)"}), 3));
  EXPECT_FALSE(small_model_exists(nfs({"forall x:e. p(x)", "exists y:e. ~p(y)"}), 3));
  EXPECT_FALSE(small_model_exists(nfs({"a = b", "p(a)", "~p(b)"}), 3));
}

TEST(SmallModel, RespectsDomainBound) {
  auto three = nfs({"exists x:e. exists y:e. exists z:e. ~(x = y) & ~(y = z) & ~(x = z)"});
  EXPECT_FALSE(small_model_exists(three, 2));
  EXPECT_TRUE(small_model_exists(three, 3));
}

TEST(SmallModel, OutsideFragmentIsNotAModel) {
  EXPECT_FALSE(small_model_exists(nfs({"p(X)"}), 3));
  EXPECT_FALSE(small_model_exists(nfs({"g(lam x:e. p(x))"}), 3));
}

}  // namespace
}  // namespace houe
