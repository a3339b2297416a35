#pragma once

// Graded dimensions of quadratically presented Lie algebras, computed inside
// the tensor algebra, and checks that generator maps are Lie morphisms.

#include "ybalg/ncalg.hpp"
#include "ybalg/presentations.hpp"

namespace ybalg {

/// Witt's necklace formula (1/d) sum_{e | d} mu(d/e) m^e.
Integer necklace_dim(std::size_t m, std::size_t d);
/// Rank of the span of left-normed brackets [[x1, x2], ...], xd] in the degree-d tensor slice.
std::size_t free_lie_dim_by_rank(std::size_t m, std::size_t d, const Caps& caps = {});
/// Both routes; throws std::logic_error if they disagree.
std::size_t free_lie_dim(std::size_t m, std::size_t d, const Caps& caps = {});

enum class Bracketing { Left, Right };

/// Rank of the degree-d part of the Lie ideal generated by the relations:
/// I_2 = span(relations), I_{k+1} = span [g, I_k] (Left) or [I_k, g] (Right).
std::size_t lie_ideal_rank(const Presentation& p, std::size_t d, Bracketing side = Bracketing::Left,
                           const Caps& caps = {});

std::size_t lie_graded_dim(const Presentation& p, std::size_t d, Bracketing side = Bracketing::Left,
                           const Caps& caps = {});

/// True iff every relation of `src` maps into the span of the relations of
/// `dst`. Throws InvalidArgument if an image is missing or not of degree 1.
bool check_morphism(const Presentation& src, const Presentation& dst, const GeneratorMap& gmap);

bool qtr0_dims_equal_qtr(int n, std::size_t max_degree, const Caps& caps = {});

}  // namespace ybalg
