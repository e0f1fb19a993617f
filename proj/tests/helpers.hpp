#ifndef GREX_TESTS_HELPERS_HPP
#define GREX_TESTS_HELPERS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "grex/ideal.hpp"
#include "grex/io.hpp"
#include "grex/rng.hpp"

inline grex::Ring qring(const std::vector<std::string>& vars) {
  return grex::make_ring(grex::Field::rationals(), vars,
                         std::vector<int64_t>(vars.size(), 1));
}

inline grex::Ring pring(uint32_t p, const std::vector<std::string>& vars) {
  return grex::make_ring(grex::Field::prime(p), vars,
                         std::vector<int64_t>(vars.size(), 1));
}

inline grex::Poly pp(const grex::Ring& r, std::string_view text) {
  return grex::parse_poly(r, text);
}

inline grex::Ideal mk_ideal(const grex::Ring& r,
                            const std::vector<std::string>& gens) {
  std::vector<grex::Poly> polys;
  for (const std::string& g : gens) polys.push_back(grex::parse_poly(r, g));
  return grex::Ideal(r, polys);
}

template <typename T>
void shuffle_with(std::vector<T>& v, grex::Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = rng.below(i);
    std::swap(v[i - 1], v[j]);
  }
}

#endif
