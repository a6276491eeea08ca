#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "pencil/error.hpp"
#include "pencil/gf.hpp"
#include "pencil/poly.hpp"

namespace pencil::test {

inline Matrix mat(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<int> values) {
  std::vector<Elem> e;
  for (int v : values) e.push_back(f.from_int(v));
  return Matrix(rows, cols, std::move(e));
}

inline Poly P(const Field& f, const std::string& text) { return parse_poly(f, text); }

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Elem{static_cast<std::uint16_t>(pick(rng))};
  return m;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected pencil::Error");
  return ErrorKind::ParseError;
}

}  // namespace pencil::test
