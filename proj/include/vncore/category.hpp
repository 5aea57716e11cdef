#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vncore/mat.hpp"

namespace vncore {

/// Inconsistent shapes, unknown identifiers, and other input-structure
/// problems. A SpecError means the data could not even be interpreted.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finitely presented k-linear category over chosen hom bases.
/// comp[a][b][c] carries the bilinear composition hom(b,c) x hom(a,b) ->
/// hom(a,c) as a matrix with columns indexed g * hom_dim[a][b] + f, matching
/// the kron flattening of (g, f) coordinate vectors.
struct CatPresentation {
    std::vector<std::string> objects;
    std::vector<std::vector<std::size_t>> hom_dim;
    std::vector<std::vector<std::vector<Mat>>> comp;
    std::vector<Mat> id_vec;  // [a]: hom(a,a) x 1

    std::size_t size() const { return objects.size(); }
    std::size_t index_of(const std::string& id) const;
};

/// Strict monoidal structure on a CatPresentation: object-level tensor and
/// dual tables plus coordinate vectors for braiding and (co)evaluation.
/// tensor_mor[a][b][c][d] is the bilinear map hom(a,b) x hom(c,d) ->
/// hom(a@c, b@d) with columns indexed f * hom_dim[c][d] + g.
struct MonoidalData {
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> tensor_obj;
    std::vector<std::vector<std::vector<std::vector<Mat>>>> tensor_mor;
    std::vector<std::vector<Mat>> braid;  // [a][b] in hom(a@b, b@a)
    std::vector<std::size_t> dual_obj;
    std::vector<Mat> ev;    // [a] in hom(a*@a, I)
    std::vector<Mat> coev;  // [a] in hom(I, a@a*)
};

/// Element of hom(I,I) with its invertibility flag (invertibility meaning
/// the left-multiplication operator on hom(I,I) is invertible).
struct EndoOfI {
    Mat vec;
    bool invertible = false;
};

struct ValidationReport {
    std::string name;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

void check_structure(const CatPresentation& cat);
void check_structure(const CatPresentation& cat, const MonoidalData& mon);

/// g after f, for f in hom(a,b) and g in hom(b,c), as coordinate vectors.
Mat compose_mor(const CatPresentation& cat, std::size_t a, std::size_t b,
                std::size_t c, const Mat& g, const Mat& f);

/// f otimes g for f in hom(a,b), g in hom(c,d).
Mat tensor_mor_apply(const CatPresentation& cat, const MonoidalData& mon,
                     std::size_t a, std::size_t b, std::size_t c,
                     std::size_t d, const Mat& f, const Mat& g);

/// The dual f* in hom(b*, a*) of f in hom(a,b), built from ev/coev.
Mat dual_morphism(const CatPresentation& cat, const MonoidalData& mon,
                  std::size_t a, std::size_t b, const Mat& f);

ValidationReport validate_category(const CatPresentation& cat);
ValidationReport validate_monoidal(const CatPresentation& cat,
                                   const MonoidalData& mon);

/// dim hom(I,I) together with the unit element of that algebra.
std::pair<std::size_t, Mat> hom_unit_algebra(const CatPresentation& cat,
                                             const MonoidalData& mon);

bool invertible_in_hom_unit(const CatPresentation& cat, const MonoidalData& mon,
                            const Mat& v);

/// d(A) = ev_A . braid_{A,A*} . coev_A in hom(I,I).
EndoOfI compute_utrace(const CatPresentation& cat, const MonoidalData& mon,
                       std::size_t a);

}  // namespace vncore
