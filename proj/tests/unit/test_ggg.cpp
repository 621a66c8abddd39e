#include <doctest.h>

#include "multikostka/error.hpp"
#include "multikostka/ggg.hpp"
#include "oracles.hpp"

using namespace multikostka;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

ThetaMultipartition semisimple(std::initializer_list<int> sizes) {
  std::vector<ThetaEntry> entries;
  for (int s : sizes) entries.push_back({s, Partition{1}});
  return ThetaMultipartition(entries);
}

}  // namespace

TEST_CASE("construction") {
  const ThetaMultipartition t({{2, Partition{2, 1}}, {3, Partition{1}}});
  CHECK(t.size() == 9);
  CHECK(t.shapes() == Multipartition{{2, 1}, {1}});
  CHECK_FALSE(t.regular_semisimple());
  CHECK(semisimple({2, 3}).regular_semisimple());
  CHECK(kind_of([] { ThetaMultipartition({{2, Partition{}}}); }) == ErrorKind::EmptyShape);
  CHECK(kind_of([] { ThetaMultipartition({{0, Partition{1}}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("theta_kostka examples") {
  CHECK(theta_kostka(semisimple({2, 3}), Partition{3, 2}) == 1);
  CHECK(theta_kostka(semisimple({2, 3, 5}), Partition{5, 5}) == 2);
  CHECK(kind_of([] { theta_kostka(semisimple({2}), Partition{3}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("orbit size one reduces to kostka_multi") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& shapes : multipartitions_of(n, r)) {
        std::vector<ThetaEntry> entries;
        bool empty = false;
        for (const auto& p : shapes.components()) {
          empty = empty || p.empty();
          entries.push_back({1, p});
        }
        if (empty) continue;
        const ThetaMultipartition t(entries);
        for (const auto& mu : partitions_of(n)) {
          CHECK(theta_kostka(t, mu) == kostka_multi(shapes, mu));
          CHECK(zelcor_multiplicity_one(t, mu) == is_multiplicity_one_multi(shapes, mu).has_value());
        }
      }
    }
  }
}

TEST_CASE("theta_kostka against brute force on mixed orbits") {
  const ThetaMultipartition t({{2, Partition{2, 1}}, {1, Partition{1, 1}}, {3, Partition{1}}});
  for (const auto& mu : partitions_of(t.size())) {
    CHECK(theta_kostka(t, mu) == oracle::theta_brute(t, mu));
    CHECK(theta_positive(t, mu) == (oracle::theta_brute(t, mu) > 0));
  }
}

TEST_CASE("positivity") {
  CHECK(theta_positive(semisimple({2, 3, 5}), Partition{5, 5}));
  CHECK_FALSE(theta_positive(semisimple({2, 2}), Partition{3, 1}));
  CHECK(theta_positive(ThetaMultipartition({{2, Partition{2}}}), Partition{4}));
  CHECK_FALSE(theta_positive(ThetaMultipartition({{2, Partition{1, 1}}}), Partition{4}));
  CHECK(subset_sum_reachable(std::vector<int>{2, 3, 5}, 5));
  CHECK_FALSE(subset_sum_reachable(std::vector<int>{2, 2}, 3));
  CHECK(subset_sum_reachable(std::vector<int>{}, 0));
  CHECK(kind_of([] { theta_positive(semisimple({2}), Partition{1}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("zelcor") {
  CHECK(zelcor_multiplicity_one(semisimple({2, 2}), Partition{4}));
  CHECK_FALSE(zelcor_multiplicity_one(semisimple({2, 2}), Partition{2, 2}));
  CHECK(theta_kostka(semisimple({2, 2}), Partition{2, 2}) == 2);
  CHECK_FALSE(zelcor_multiplicity_one(semisimple({2, 2}), Partition{3, 1}));
  CHECK(kind_of([] { zelcor_multiplicity_one(semisimple({2, 3}), Partition{5}); }) == ErrorKind::UnequalOrbitSizes);
  CHECK(kind_of([] { zelcor_multiplicity_one(semisimple({2, 2}), Partition{5}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("canonical weight") {
  const ThetaMultipartition t({{2, Partition{2, 1}}, {3, Partition{1, 1}}});
  CHECK(canonical_weight(t) == Partition{7, 5});
  CHECK(theta_kostka(t, canonical_weight(t)) == 1);
}
