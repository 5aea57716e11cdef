#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vncore/axioms.hpp"
#include "vncore/fibre.hpp"
#include "vncore/mat.hpp"
#include "vncore/report.hpp"

namespace vncore {

/// A structure map's ambient formula failed to vanish on the relation
/// subspace (or produced a non-invertible antipode). Signals non-natural
/// input data rather than a malformed file.
struct DescentError : std::runtime_error {
    Witness witness;
    DescentError(const std::string& msg, Witness w)
        : std::runtime_error(msg), witness(std::move(w)) {}
};

/// The coend over all objects of UA* (x) UA, realized as an exact quotient
/// of the block direct sum by the span of the morphism relations.
struct CoendSpace {
    std::vector<std::size_t> block_offset;  // per object
    std::vector<std::size_t> block_size;    // (dim U(a))^2
    std::size_t ambient_dim = 0;
    Mat relations;        // ambient x n_rel, columns span the relation space
    QuotientSpace quot;   // proj: dim x ambient, sect: ambient x dim

    std::size_t dim() const { return quot.dim; }
    /// Coprojection of block a through the quotient: dim x (dim U(a))^2.
    Mat copr(std::size_t a) const {
        return quot.proj.block(0, block_offset[a], quot.dim, block_size[a]);
    }
};

CoendSpace build_coend(const CatPresentation& cat, const FibreFunctor& uf);

struct CoreMaps {
    Mat mu;     // dim x dim^2
    Mat eta;    // dim x 1
    Mat delta;  // dim^2 x dim
    Mat eps;    // 1 x dim
    std::vector<Mat> sigma_blocks;  // per object: (dim U(a*))^2 x (dim U(a))^2
    Mat antipode;                   // dim x dim, invertible
};

/// Multiplication and unit from (r, r0) and (i, i0); descent verified.
std::pair<Mat, Mat> build_mu_eta(const CatPresentation& cat,
                                 const MonoidalData& mon, const FibreFunctor& uf,
                                 const CoendSpace& e);

/// Augmentation and comultiplication from evaluation/coevaluation; descent
/// verified.
std::pair<Mat, Mat> build_eps_delta(const CatPresentation& cat,
                                    const FibreFunctor& uf, const CoendSpace& e);

/// Blockwise sigma from the pairings and the antipode scaled by
/// dim U(I) / dim U(A) per grading class; descent and invertibility verified.
std::pair<std::vector<Mat>, Mat> build_antipode(const CatPresentation& cat,
                                                const MonoidalData& mon,
                                                const FibreFunctor& uf,
                                                const CoendSpace& e,
                                                const Grading& grading);

CoreMaps build_core_maps(const CatPresentation& cat, const MonoidalData& mon,
                         const FibreFunctor& uf, const CoendSpace& e,
                         const Grading& grading);

/// For each object C, the coend over `gens` of hom(A,C) (x) UA must evaluate
/// isomorphically onto UC.
CheckReport check_density(const CatPresentation& cat, const FibreFunctor& uf,
                          const std::vector<std::size_t>& gens);

AlgebraDatum export_algebra_datum(const CoendSpace& e, const CoreMaps& maps,
                                  std::size_t dim_ui);

}  // namespace vncore
