#include "liecartan/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace liecartan {

namespace {

void insert_unique(std::vector<Subspace>& list, Subspace s) {
  if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(std::move(s));
}

// Visits every subset of `pool` of size 1..max_size in lexicographic order.
void for_each_subset(const std::vector<Vector>& pool, std::size_t max_size,
                     const std::function<void(const std::vector<Vector>&)>& visit) {
  std::vector<Vector> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    if (!chosen.empty()) visit(chosen);
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      recurse(i + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
}

}  // namespace

std::vector<Vector> small_vector_pool(std::size_t dim) {
  std::vector<Vector> pool;
  for (std::size_t i = 0; i < dim; ++i) pool.push_back(unit_vector(dim, i));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector plus = unit_vector(dim, i);
      plus[j] = 1;
      Vector minus = unit_vector(dim, i);
      minus[j] = -1;
      pool.push_back(std::move(plus));
      pool.push_back(std::move(minus));
    }
  }
  return pool;
}

std::vector<Subspace> enumerate_ideals(const LieAlgebra& g) {
  std::vector<Subspace> ideals{Subspace::zero(g.dim())};
  for_each_subset(small_vector_pool(g.dim()), 2,
                  [&](const std::vector<Vector>& gens) { insert_unique(ideals, ideal_closure(g, gens)); });
  // Sums of ideals are ideals; close the list under pairwise sums.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) insert_unique(ideals, ideals[i] + ideals[j]);
  }
  return ideals;
}

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& g, std::size_t max_generators) {
  std::vector<Subspace> found{Subspace::zero(g.dim())};
  for_each_subset(small_vector_pool(g.dim()), max_generators, [&](const std::vector<Vector>& gens) {
    insert_unique(found, subalgebra_closure(g, gens));
  });
  return found;
}

}  // namespace liecartan
