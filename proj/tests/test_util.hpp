#pragma once

#include <initializer_list>
#include <vector>

#include "afschur/pbw.hpp"

namespace afschur::testutil {

inline Composition comp(std::initializer_list<int> parts) {
  std::vector<Int> v;
  for (const int p : parts) v.emplace_back(p);
  return Composition(std::move(v));
}

inline ExponentVector expv(std::initializer_list<int> parts) {
  std::vector<Int> v;
  for (const int p : parts) v.emplace_back(p);
  return ExponentVector(std::move(v));
}

inline AffineMatrix unit(long long i, long long j, int n) {
  return AffineMatrix::unit(i, j, n);
}

inline AffineMatrix diag(std::initializer_list<int> parts) {
  return AffineMatrix::diagonal(comp(parts));
}

inline AlgebraElement basis(const AffineMatrix& A) {
  return AlgebraElement::basis(A);
}

}  // namespace afschur::testutil
