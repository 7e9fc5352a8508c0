#pragma once

#include <gz/matrix.hpp>

#include <optional>
#include <vector>

namespace gz {

enum class UL { Upper, Lower };

/// Border data attached to one Jordan block: row segment z, column
/// segment y, both of length mult.
struct SolutionBlock {
    Scalar lambda;
    int mult = 1;
    std::vector<Scalar> z, y;
};

/// An element of the level-i solution variety in bordered coordinates:
/// Jordan blocks on the diagonal (eigenvalues strictly decreasing
/// lexicographically), y as last column, z as last row, corner w.
struct SolutionPoint {
    int level = 1;
    std::vector<SolutionBlock> blocks;
    Scalar w;

    Mode mode() const { return w.mode(); }
    Spectrum spectrum(const ToleranceContext& ctx = {}) const;
    double scale() const;
    void validate() const;
};

/// Element of Z_i: one invertible upper-triangular Toeplitz matrix per
/// block, given by its diagonal coefficients a_0 != 0, a_1, ...
struct ToeplitzElt {
    std::vector<std::vector<Scalar>> blocks;

    static ToeplitzElt identity_for(const SolutionPoint& p);
};

/// Per common root of the adjacent spectra: whether the border row
/// coordinate (Lower) or the border column coordinate (Upper) is the
/// free one.
struct BlockChoice {
    std::vector<std::pair<Scalar, UL>> entries;
};

struct StabilizerBlock {
    enum class Kind { Full, Unipotent, Trivial };
    Kind kind = Kind::Trivial;
    int dim = 0;
};

struct StabilizerPattern {
    std::vector<StabilizerBlock> blocks;
    int total_dim = 0;
};

/// Optional per-block override of the free border vector used by
/// xi_solve (z for Lower and non-common blocks, y for Upper blocks).
struct SolveParams {
    std::vector<std::optional<std::vector<Scalar>>> per_block;
};

/// The (i+1) x (i+1) bordered matrix of a solution point.
Mat assemble(const SolutionPoint& p);

/// Characteristic polynomial of the bordered matrix by the closed
/// formula; equals charpoly(assemble(p)).
MonicPoly xi_charpoly(const SolutionPoint& p);

/// Construct a point of Xi^i with prescribed characteristic polynomial:
/// per block, match Taylor coefficients of the target at the eigenvalue,
/// deconvolve by the complementary-block prefactor, then solve the
/// triangular Toeplitz system for the dependent border vector.
SolutionPoint xi_solve(const Spectrum& spec_i, const MonicPoly& target, const BlockChoice& choice,
                       const SolveParams& params = {}, const ToleranceContext& ctx = {});

/// Action of Z_i: per block y <- T y, z <- z T^{-1}; J and w unchanged.
SolutionPoint zi_act(const ToeplitzElt& k, const SolutionPoint& p);

/// Stabilizer of p under Z_i, block by block: Full when both border
/// segments vanish, else the solution space of the fixing equations
/// (unipotent once any border entry is nonzero).
StabilizerPattern stabilizer_pattern(const SolutionPoint& p, const ToleranceContext& ctx = {});

bool is_free(const SolutionPoint& p, const ToleranceContext& ctx = {});

/// Convolution values s_l = sum_j z_j y_{j+l} of one block.
std::vector<Scalar> block_convolution(const SolutionBlock& b);

} // namespace gz
