#pragma once

#include <cstddef>
#include <vector>

#include "vncore/category.hpp"
#include "vncore/mat.hpp"
#include "vncore/report.hpp"

namespace vncore {

/// A fibre functor into finite dimensional vector spaces: dimensions, the
/// matrices of basis morphisms, a monoidal structure (r, r0), a comonoidal
/// structure (i, i0), and the duality pairings u_A realizing U(A*) ~ UA*.
///
/// mor_mat[a][b][k] is the matrix of the k-th hom(a,b) basis morphism,
/// extended linearly by apply_functor. u[a] maps U(a*) coordinates to UA*
/// coordinates in the dual standard basis, so non-degeneracy of the pairing
/// is invertibility of u[a].
struct FibreFunctor {
    std::vector<std::size_t> dim_u;
    std::vector<std::vector<std::vector<Mat>>> mor_mat;
    std::vector<std::vector<Mat>> r;  // [a][b]: dimU(a@b) x dimU(a)*dimU(b)
    Mat r0;                           // dimU(I) x 1
    std::vector<std::vector<Mat>> i;  // [a][b]: dimU(a)*dimU(b) x dimU(a@b)
    Mat i0;                           // 1 x dimU(I)
    std::vector<Mat> u;               // [a]: dimU(a) x dimU(a*)
};

/// Shape consistency; rejects dim U(I) = 0.
void check_structure(const CatPresentation& cat, const MonoidalData& mon,
                     const FibreFunctor& uf);

/// U applied to the morphism of hom(a,b) with the given coordinates.
Mat apply_functor(const CatPresentation& cat, const FibreFunctor& uf,
                  std::size_t a, std::size_t b, const Mat& coords);

/// Coordinate coevaluation k -> V (x) V* as a dim^2 x 1 vector.
Mat coeval_vec(std::size_t dim);
/// Coordinate evaluation V* (x) V -> k as a 1 x dim^2 row.
Mat eval_row(std::size_t dim);

/// Functoriality, naturality of r and i, monoidal/comonoidal coherence, and
/// invertibility + naturality of the duality pairings.
ValidationReport validate_functor(const CatPresentation& cat,
                                  const MonoidalData& mon,
                                  const FibreFunctor& uf);

/// r i = 1 for all object pairs and i0 r0 = dim U(I).
CheckReport check_separability(const CatPresentation& cat,
                               const MonoidalData& mon, const FibreFunctor& uf);

/// The two Frobenius-style composites; informational only.
CheckReport check_frobenius(const CatPresentation& cat, const MonoidalData& mon,
                            const FibreFunctor& uf);

/// U(c_{A,B}) r_{A,B} = r_{B,A} swap.
CheckReport check_braided_compat(const CatPresentation& cat,
                                 const MonoidalData& mon,
                                 const FibreFunctor& uf);

/// The two triangles tying (r, r0) to coevaluation and (i, i0) to evaluation
/// through the pairings u.
CheckReport check_duality_compat(const CatPresentation& cat,
                                 const MonoidalData& mon,
                                 const FibreFunctor& uf);

/// dim U(I) * U(d(A)) * r0 = dim U(A) * r0 for every A, with d(A) invertible.
CheckReport check_utrace_compat(const CatPresentation& cat,
                                const MonoidalData& mon, const FibreFunctor& uf);

/// Partition of the objects by dim U(A), ordered by ascending dimension.
struct Grading {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> classes;
};

/// hom(A,B) != 0 implies dim U(A) = dim U(B); fills the grading either way.
CheckReport check_u_irreducibility(const CatPresentation& cat,
                                   const FibreFunctor& uf, Grading* grading);

}  // namespace vncore
