#pragma once

#include <random>

#include "lpa/leavitt.hpp"

namespace lpa {

/// Bounds for random elements. Every generator takes its engine explicitly.
struct RandomShape {
  std::size_t max_path_len = 3;
  std::size_t max_support = 6;
};

/// Nonzero scalar with small numerator and denominator.
Scalar random_scalar(FieldSpec f, std::mt19937_64& rng);
Path random_path(const Graph& g, std::mt19937_64& rng, std::size_t max_len);
Monomial random_monomial(const Graph& g, std::mt19937_64& rng, std::size_t max_len);
Element random_element(const Graph& g, FieldSpec f, std::mt19937_64& rng, RandomShape shape = {});
/// y - y^*, plus random p p^* terms in characteristic 2.
Element random_skew_element(const Graph& g, FieldSpec f, std::mt19937_64& rng, RandomShape shape = {});

}  // namespace lpa
