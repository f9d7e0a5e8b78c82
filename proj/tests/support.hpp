#pragma once

#include <initializer_list>
#include <vector>

#include "leibniz/algebra.hpp"

namespace test_support {

using namespace leibniz;

inline Vector vec(Field f, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.emplace_back(f, x);
  return v;
}

inline Vector vec(std::initializer_list<long long> xs) { return vec(Field::rationals(), xs); }

inline Subspace span_of(std::size_t ambient, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(vec(r));
  return Subspace::span(Field::rationals(), ambient, vs);
}

inline Subspace span_units(std::size_t ambient, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (std::size_t i : idx) vs.push_back(unit_vector(Field::rationals(), ambient, i));
  return Subspace::span(Field::rationals(), ambient, vs);
}

}  // namespace test_support
