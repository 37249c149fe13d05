#pragma once

#include "khtrans/braid.hpp"
#include "khtrans/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Circle count of the resolution `bits` of the closed braid, found by walking
/// along the smoothed diagram instead of by union-find.
int walk_circle_count(const khtrans::Diagram& d, std::uint32_t bits);

/// Kauffman bracket <D> in the variable A, with the A-smoothing taken as the
/// 0-resolution.
khtrans::LaurentPolynomial kauffman_bracket(const khtrans::Diagram& d);

/// (q + q^-1) (-A^3)^-w <D> at A^2 = -q^-1: the unnormalized Jones polynomial
/// in the grading convention of the Khovanov complex.
khtrans::LaurentPolynomial unnormalized_jones(const khtrans::Diagram& d);

/// Uniform random word: strands in [2, max_strands], length in [0, max_length].
khtrans::BraidWord random_word(std::mt19937& rng, int max_strands, int max_length);

/// Random word that contains -i but not +i for some generator i.
khtrans::BraidWord random_negative_only_word(std::mt19937& rng, int max_strands, int max_length);

/// Random word whose closure is a knot.
khtrans::BraidWord random_knot_word(std::mt19937& rng, int max_strands, int max_length);

/// Small fixed regression corpus of knots and links.
std::vector<khtrans::BraidWord> regression_words();

} // namespace oracle
