#include <doctest.h>

#include <random>

#include "nimgroup/group_spec.hpp"
#include "nimgroup/kernels.hpp"
#include "nimgroup/lattice.hpp"
#include "reference.hpp"

using namespace nimgroup;

TEST_CASE("associativity search: serial and parallel agree") {
  std::mt19937 rng(3);
  const auto g = build_group(parse_group_spec("frobenius:7"));
  const std::size_t n = g.order();
  const std::vector<Element> table(g.table().begin(), g.table().end());
  CHECK_FALSE(kernels::find_nonassociative(table, n).has_value());
  CHECK_FALSE(kernels::find_nonassociative_serial(table, n).has_value());
  for (int trial = 0; trial < 20; ++trial) {
    auto broken = table;
    const std::size_t i = rng() % (n * n);
    broken[i] = static_cast<Element>((broken[i] + 1 + rng() % (n - 1)) % n);
    const auto a = kernels::find_nonassociative(broken, n);
    const auto b = kernels::find_nonassociative_serial(broken, n);
    REQUIRE(a.has_value());
    CHECK(a == b);
  }
}

TEST_CASE("join and extension kernels: serial and parallel agree") {
  for (const char* s : {"dihedral:6", "frobenius:7", "heisenberg:3"}) {
    CAPTURE(s);
    const auto g = build_group(parse_group_spec(s));
    const auto subs = all_subgroups(g).members;
    for (std::size_t i = 0; i < subs.size(); i += 3) {
      const auto a = kernels::join_each(g, subs[i], subs);
      CHECK(a == kernels::join_each_serial(g, subs[i], subs));
      for (std::size_t j = 0; j < subs.size(); ++j) {
        CHECK(ref::to_set(a[j]) == ref::closure(g, ref::to_set(subs[i] | subs[j])));
      }
    }
    const auto ext = kernels::one_step_extensions(g, subs);
    CHECK(ext == kernels::one_step_extensions_serial(g, subs));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::set<ref::Set> want;
      for (Element x = 0; x < g.order(); ++x) {
        if (!subs[i].contains(x)) want.insert(ref::closure(g, ref::to_set(subs[i].with(x))));
      }
      std::set<ref::Set> got;
      for (const auto& e : ext[i]) got.insert(ref::to_set(e));
      CHECK(got == want);
      CHECK(got.size() == ext[i].size());
    }
  }
}
