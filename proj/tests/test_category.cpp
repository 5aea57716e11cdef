#include "doctest.h"
#include "helpers.hpp"
#include "vncore/category.hpp"
#include "vncore/fixtures.hpp"

using namespace vncore;

TEST_CASE("category laws on the fixtures") {
    CHECK(validate_category(make_trivial().cat).ok());
    CHECK(validate_category(make_rep_group(1).cat).ok());
    CHECK(validate_category(make_rep_group(2).cat).ok());
    CHECK(validate_category(vntest::make_arrow().cat).ok());
    CHECK(validate_category(vntest::make_two_dim_unit().cat).ok());
}

TEST_CASE("zero identity vector fails the identity law") {
    SpecData spec = make_trivial();
    spec.cat.id_vec[0] = Mat::zero(1, 1);
    ValidationReport rep = validate_category(spec.cat);
    CHECK(!rep.ok());
    CHECK(rep.failures.front().find("identity") != std::string::npos);
}

TEST_CASE("monoidal laws on the fixtures") {
    SpecData rep2 = make_rep_group(1);
    CHECK(validate_monoidal(rep2.cat, rep2.mon).ok());
    SpecData rep4 = make_rep_group(2);
    CHECK(validate_monoidal(rep4.cat, rep4.mon).ok());
    SpecData ho = make_ho_c2();  // same underlying category as rep-c2
    CHECK(validate_monoidal(ho.cat, ho.mon).ok());
    SpecData tdu = vntest::make_two_dim_unit();
    CHECK(validate_monoidal(tdu.cat, tdu.mon).ok());
}

TEST_CASE("scaled braid component breaks naturality or a hexagon") {
    SpecData spec = make_rep_group(1);
    spec.mon.braid[1][1] = Rational(2) * spec.mon.braid[1][1];
    ValidationReport rep = validate_monoidal(spec.cat, spec.mon);
    CHECK(!rep.ok());
    bool hexagon_or_natural = false;
    for (const auto& f : rep.failures)
        if (f.find("hexagon") != std::string::npos ||
            f.find("braid_natural") != std::string::npos)
            hexagon_or_natural = true;
    CHECK(hexagon_or_natural);
}

TEST_CASE("structural errors throw") {
    SpecData spec = make_rep_group(1);
    spec.cat.comp[0][0][0] = Mat::zero(2, 2);
    CHECK_THROWS_AS(validate_category(spec.cat), SpecError);
}

TEST_CASE("hom(I,I) algebra") {
    SpecData tr = make_trivial();
    CHECK(hom_unit_algebra(tr.cat, tr.mon).first == 1);
    SpecData rep2 = make_rep_group(1);
    CHECK(hom_unit_algebra(rep2.cat, rep2.mon).first == 1);
    SpecData tdu = vntest::make_two_dim_unit();
    CHECK(hom_unit_algebra(tdu.cat, tdu.mon).first == 2);
}

TEST_CASE("U-trace composites") {
    SpecData tr = make_trivial();
    EndoOfI d = compute_utrace(tr.cat, tr.mon, 0);
    CHECK(d.invertible);
    CHECK(d.vec == tr.cat.id_vec[0]);

    SpecData rep2 = make_rep_group(1);
    EndoOfI ds = compute_utrace(rep2.cat, rep2.mon, 1);
    CHECK(ds.invertible);
    CHECK(ds.vec == rep2.cat.id_vec[0]);

    SUBCASE("rescaling ev by 3 rescales the trace by 3") {
        rep2.mon.ev[1] = Rational(3) * rep2.mon.ev[1];
        EndoOfI d3 = compute_utrace(rep2.cat, rep2.mon, 1);
        CHECK(d3.invertible);
        CHECK(d3.vec == Rational(3) * rep2.cat.id_vec[0]);
    }

    SUBCASE("two-dimensional hom(I,I)") {
        SpecData tdu = vntest::make_two_dim_unit();
        EndoOfI dt = compute_utrace(tdu.cat, tdu.mon, 0);
        CHECK(dt.invertible);
        CHECK(dt.vec == tdu.cat.id_vec[0]);
    }
}

TEST_CASE("dual morphism of identities is the identity") {
    SpecData rep2 = make_rep_group(1);
    for (std::size_t a = 0; a < 2; ++a) {
        Mat fstar = dual_morphism(rep2.cat, rep2.mon, a, a, rep2.cat.id_vec[a]);
        CHECK(fstar == rep2.cat.id_vec[rep2.mon.dual_obj[a]]);
    }
}
