#include <random>

#include "doctest.h"
#include "uqaw/embedding.hpp"
#include "uqaw/golden.hpp"

using namespace uqaw;

TEST_CASE("flat generator images match the reference tables") {
    const FlatImages& im = flat_generators();
    CHECK(im.a == golden::flat_image("A"));
    CHECK(im.b == golden::flat_image("B"));
    CHECK(im.c == golden::flat_image("C"));
    CHECK(im.alpha == golden::flat_image("alpha"));
    CHECK(im.beta == golden::flat_image("beta"));
    CHECK(im.gamma == golden::flat_image("gamma"));

    CheckReport tables = component_tables_check();
    CHECK(tables.all_pass());
}

TEST_CASE("a_flat and gamma_flat are built from the expected pieces") {
    const FlatImages& im = flat_generators();
    CHECK(im.a == t_embed(comultiply(u_casimir()), 0, 3));
    UElement lam = u_casimir();
    TElement expected_gamma =
        t_multiply(t_inject(lam, 0, 3), t_inject(lam, 2, 3)) +
        t_multiply(t_inject(lam, 1, 3), n_fold_comultiply(2, lam));
    CHECK(im.gamma == expected_gamma);
}

TEST_CASE("apply_flat is a unital homomorphism") {
    CHECK(apply_flat(AWElement::one()) == TElement::one(3));
    const FlatImages& im = flat_generators();
    CHECK(apply_flat(aw_normal_form("A*B")) == t_multiply(im.a, im.b));
    CHECK(apply_flat(AWElement::gamma()) == im.gamma);

    // respects the algebra relations: the image of a word equals the product
    // of letter images, for random words
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> letter(0, 5);
    for (int trial = 0; trial < 12; ++trial) {
        int n = len(rng);
        AWElement word = AWElement::one();
        TElement image = TElement::one(3);
        for (int i = 0; i < n; ++i) {
            AWLetter l = static_cast<AWLetter>(letter(rng));
            word = aw_multiply(word, AWElement::letter(l));
            image = t_multiply(image, flat_generators().of(l));
        }
        CHECK(apply_flat(word) == image);
    }
}

TEST_CASE("embedding verification and negative control") {
    CheckReport report = verify_embedding();
    CHECK(report.all_pass());
    CHECK(report.items.size() == 12);

    // sign-flipped mutant of the beta identity is nonzero
    const FlatImages& im = flat_generators();
    Scalar q = Scalar::q();
    TElement mutant = im.beta.scaled((q + q.inverse()).inverse()) - im.b -
                      (t_multiply(im.c, im.a).scaled(q.inverse()) -
                       t_multiply(im.a, im.c).scaled(q))
                          .scaled((q.pow(2) - q.pow(-2)).inverse());
    CHECK(!mutant.is_zero());
}

TEST_CASE("casimir image") {
    CheckReport report = casimir_image_check();
    CHECK(report.all_pass());

    // partial-sum negative control: the constant term alone does not match
    Scalar q = Scalar::q();
    TElement partial = TElement::one(3).scaled((q + q.inverse()).pow(2));
    CHECK(!(apply_flat(aw_casimir()) - partial).is_zero());
}

TEST_CASE("centralizer") {
    CheckReport report = centralizer_check();
    CHECK(report.all_pass());
    CHECK(report.items.size() == 12);

    // E (x) 1 (x) 1 is not in the centralizer
    TElement e00 = t_inject(UElement::E(), 0, 3);
    TElement d2e = n_fold_comultiply(2, UElement::E());
    CHECK(!(t_multiply(e00, d2e) - t_multiply(d2e, e00)).is_zero());
}

TEST_CASE("leading components of small monomial images") {
    // empty monomial
    auto [d0, c0] = leading_data(0, 0, 0, 0, 0, 0);
    CHECK(d0 == MultiDegree({0, 0, 0}));
    CHECK(c0 == TElement::one(3));

    // A-image alone: degree (1,-1,0) with component (q-q^-1)^2 E (x) F (x) 1
    auto [d1, c1] = leading_data(1, 0, 0, 0, 0, 0);
    CHECK(d1 == MultiDegree({1, -1, 0}));
    Scalar q = Scalar::q();
    TElement expected(3);
    expected.add_term({UMonomial{0, 0, 1}, UMonomial{1, 0, 0}, UMonomial{}},
                      (q - q.inverse()).pow(2));
    CHECK(c1 == expected);
    auto [dc1, cc1] = leading_closed_form(1, 0, 0, 0, 0, 0);
    CHECK(dc1 == d1);
    CHECK(cc1 == c1);

    // AB: degree (1,0,-1) with the h = 1 product factor
    auto [d2, c2] = leading_data(1, 1, 0, 0, 0, 0);
    CHECK(d2 == MultiDegree({1, 0, -1}));
    auto [dc2, cc2] = leading_closed_form(1, 1, 0, 0, 0, 0);
    CHECK(dc2 == d2);
    CHECK(cc2 == c2);
}

TEST_CASE("leading components match the closed form on random tuples") {
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<int> e(0, 2);
    int done = 0;
    while (done < 15) {
        int32_t i = e(rng), j = e(rng), k = e(rng), r = e(rng), s = e(rng), t = e(rng);
        if (i + j + k + r + s + t > 4) continue;
        ++done;
        auto got = leading_data(i, j, k, r, s, t);
        auto want = leading_closed_form(i, j, k, r, s, t);
        CHECK(got.first == want.first);
        CHECK(got.second == want.second);
    }
}

TEST_CASE("images of distinct small monomials are linearly independent") {
    auto [rank, count] = flat_independence_rank(2);
    CHECK(rank == count);
    CHECK(count == 28);  // C(2+5,5) + C(1+5,5) + 1 = 21 + 6 + 1
}
