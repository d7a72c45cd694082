#pragma once

#include "fqg/types.hpp"

namespace fqg::lin {

/// Numerical rank with a relative singular-value cutoff.
int rank(const Mat& m, double rel_cutoff = 1e-9);

/// Orthonormal basis of the nullspace (columns), relative cutoff on
/// singular values.
Mat nullspace(const Mat& m, double rel_cutoff = 1e-9);

/// Least-squares solve min ||m x - b||; also reports the residual.
Vec lstsq(const Mat& m, const Vec& b, double* residual = nullptr);

/// Orthonormalize the columns of `cols` with respect to the inner product
/// <x,y> = x^H g y, dropping directions below the rank cutoff.
Mat gram_orthonormalize(const Mat& cols, const Mat& g, double rel_cutoff = 1e-9);

/// Orthogonal projector onto the column span of a g-orthonormal basis,
/// acting on coordinates: p = basis basis^H g.
Mat span_projector(const Mat& basis, const Mat& g);

/// Frobenius distance between the spans of two g-orthonormal bases.
double span_distance(const Mat& basis_a, const Mat& basis_b, const Mat& g);

/// True if span(inner) is contained in span(outer) up to tol.
bool span_contained(const Mat& inner, const Mat& outer, const Mat& g, double tol);

/// Hermitian square root of a positive semidefinite matrix (eigenvalues
/// clipped at zero). Throws if the matrix is not Hermitian PSD within tol.
Mat sqrt_psd(const Mat& m, double tol);

}  // namespace fqg::lin
