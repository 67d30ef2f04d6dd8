#include "ganz/certificates.hpp"

#include <gtest/gtest.h>

#include "ganz/parse.hpp"
#include "ganz/probe.hpp"
#include "ganz/random_values.hpp"

namespace ganz {
namespace {

SetDescription interval() {
    return SetDescription(1, {parse_ratfunc("x1", 1).num(), parse_ratfunc("1 - x1", 1).num()});
}

TEST(ConeValue, Examples) {
    SetDescription s = interval();
    ConeCert c;
    c.set_term({0, 1}, SOS({parse_ratfunc("1", 1)}));
    EXPECT_EQ(cone_value(c, s), parse_ratfunc("x1*(1 - x1)", 1));

    EXPECT_TRUE(cone_value(ConeCert{}, s).zero());

    SetDescription none(1, {});
    ConeCert sq;
    sq.set_term({}, SOS({parse_ratfunc("x1", 1)}));
    EXPECT_EQ(cone_value(sq, none), parse_ratfunc("x1^2", 1));

    ConeCert bad;
    bad.set_term({5}, SOS({parse_ratfunc("1", 1)}));
    EXPECT_THROW(cone_value(bad, s), IndexOutOfRange);
}

TEST(ConePointwise, Examples) {
    SetDescription s = interval();
    ConeCert c;
    c.set_term({0, 1}, SOS({parse_ratfunc("1", 1)}));
    EXPECT_TRUE(verify_cone_pointwise(c, s, Point({KElem(rat(1, 2))})));
    EXPECT_EQ(eval(cone_value(c, s), Point({KElem(rat(1, 2))})), KElem(rat(1, 4)));

    SetDescription none(1, {});
    ConeCert sq;
    sq.set_term({}, SOS({parse_ratfunc("x1", 1)}));
    EXPECT_TRUE(verify_cone_pointwise(sq, none, Point({KElem(-3)})));

    ConeCert pole;
    pole.set_term({}, SOS({parse_ratfunc("1/x1", 1)}));
    EXPECT_THROW(verify_cone_pointwise(pole, none, Point({KElem(0)})), NotDefinedAt);

    EXPECT_THROW(verify_cone_pointwise(c, s, Point({KElem(2)})), std::invalid_argument);
}

TEST(GeneratorValue, Examples) {
    SetDescription s = interval();
    ConeCert c;
    c.set_term({0, 1}, SOS({parse_ratfunc("1", 1)}));
    RatFunc gen = generator_value(c, s);
    EXPECT_EQ(gen, parse_ratfunc("1/(1 + x1 - x1^2)", 1));
    KElem at_half = eval(gen, Point({KElem(rat(1, 2))}));
    EXPECT_EQ(at_half, KElem(rat(4, 5)));
    EXPECT_EQ(at_half.val(), KVal(0));

    EXPECT_EQ(generator_value(ConeCert{}, s), RatFunc::constant(1, KElem(1)));

    SetDescription none(1, {});
    ConeCert sq;
    sq.set_term({}, SOS({parse_ratfunc("x1", 1)}));
    EXPECT_EQ(generator_value(sq, none), parse_ratfunc("1/(1 + x1^2)", 1));

    // squares cannot reach -1, so route through a negative constraint
    SetDescription with_neg(1, {parse_ratfunc("-1", 1).num()});
    ConeCert direct;
    direct.set_term({0}, SOS({parse_ratfunc("1", 1)}));
    EXPECT_THROW(generator_value(direct, with_neg), IdenticallyMinusOne);
}

RadicalCert reciprocal_cert() {
    // h = 1/(1+x1^2), generator g = 1/(1+x1^2): h - g = 0
    RadicalCert cert;
    cert.h = parse_ratfunc("1/(1 + x1^2)", 1);
    ConeCert g;
    g.set_term({}, SOS({parse_ratfunc("x1", 1)}));
    cert.generators.push_back(g);
    LocalizedElem c0;
    c0.a.add_term({1}, KElem(-1));
    c0.t_m = KElem::eps();
    cert.coeffs.push_back(c0);
    return cert;
}

TEST(RadicalVerifier, DegreeOneValid) {
    SetDescription s(1, {});
    EXPECT_TRUE(verify_radical_cert(reciprocal_cert(), s).valid);
}

TEST(RadicalVerifier, DegreeTwoValid) {
    // h = x1/(1+x1^2): h^2 - (g - g^2) = 0
    SetDescription s(1, {});
    RadicalCert cert;
    cert.h = parse_ratfunc("x1/(1 + x1^2)", 1);
    ConeCert g;
    g.set_term({}, SOS({parse_ratfunc("x1", 1)}));
    cert.generators.push_back(g);
    LocalizedElem c0;
    c0.a.add_term({1}, KElem(-1));
    c0.a.add_term({2}, KElem(1));
    c0.t_m = KElem::eps();
    LocalizedElem c1;
    c1.t_m = KElem::eps();
    cert.coeffs.push_back(c0);
    cert.coeffs.push_back(c1);
    EXPECT_TRUE(verify_radical_cert(cert, s).valid);
}

TEST(RadicalVerifier, InvalidWithNonzeroResidual) {
    // h = x1 is not integral over the algebra of 1/(1+x1)
    SetDescription s(1, {parse_ratfunc("x1", 1).num()});
    RadicalCert cert;
    cert.h = parse_ratfunc("x1", 1);
    ConeCert g;
    g.set_term({0}, SOS({parse_ratfunc("1", 1)}));
    cert.generators.push_back(g);
    LocalizedElem c0;
    c0.a.add_term({1}, KElem(-1));
    c0.t_m = KElem::eps();
    cert.coeffs.push_back(c0);
    RadicalVerdict v = verify_radical_cert(cert, s);
    EXPECT_FALSE(v.valid);
    EXPECT_EQ(v.residual, parse_ratfunc("x1 - 1/(1 + x1)", 1));
}

TEST(RadicalVerifier, StructuralErrorsAreNotVerdicts) {
    SetDescription s(1, {});
    RadicalCert cert = reciprocal_cert();
    cert.coeffs[0].t_m = KElem(1);  // not an infinitesimal
    EXPECT_THROW(verify_radical_cert(cert, s), StructuralError);

    RadicalCert cert2 = reciprocal_cert();
    cert2.coeffs[0].a.add_term({0}, KElem(1) / KElem::eps());  // coefficient outside O_K
    EXPECT_THROW(verify_radical_cert(cert2, s), StructuralError);

    RadicalCert cert3 = reciprocal_cert();
    cert3.coeffs.clear();
    EXPECT_THROW(verify_radical_cert(cert3, s), StructuralError);
}

// necessity at desk scale: wherever a valid certificate exists, sampled
// members of S only see integral values of h
TEST(RadicalVerifier, SoundnessChainAgainstSampling) {
    SetDescription s(1, {});
    RadicalCert cert = reciprocal_cert();
    ASSERT_TRUE(verify_radical_cert(cert, s).valid);
    ProbeReport rep =
        integrality_probe(cert.h, s, SampleStrategy::pseudorandom(99, 300, {1, 2, -1}));
    EXPECT_FALSE(rep.violation);
}

// any algebra element h satisfies the monic identity Y - h at Y = h, giving
// a valid certificate by construction; the probe must then never refute it
TEST(RadicalVerifier, RandomAlgebraElementsStayConsistentWithProbing) {
    SetDescription s = interval();
    SplitMix64 rng(19);
    for (int i = 0; i < 10; ++i) {
        RadicalCert cert;
        cert.generators.push_back(rand_cone_cert(rng, s, 1, 1));
        AlgebraElem a = rand_algebra_elem(rng, cert.generators.size(), false);
        std::vector<RatFunc> gens = radical_generator_values(cert, s);
        cert.h = a.value(gens, s.nvars);
        if (cert.h.zero()) continue;
        LocalizedElem c0;
        for (const auto& [mono, coeff] : a.poly) c0.a.add_term(mono, -coeff);
        c0.t_m = KElem::eps();
        cert.coeffs.push_back(c0);
        ASSERT_TRUE(verify_radical_cert(cert, s).valid);
        ProbeReport rep =
            integrality_probe(cert.h, s, SampleStrategy::pseudorandom(900 + i, 150, {1, 2}));
        EXPECT_FALSE(rep.violation) << "witness " << rep.witness.str();
    }
}

TEST(ConeCerts, GeneratorsIntegralOnSampledPoints) {
    SetDescription s = interval();
    SampleResult pts = sample_set(s, SampleStrategy::pseudorandom(17, 200, {1}));
    ASSERT_FALSE(pts.points.empty());
    SplitMix64 rng(18);
    for (int i = 0; i < 20; ++i) {
        ConeCert cert = rand_cone_cert(rng, s);
        for (const Point& b : pts.points) {
            auto fv = try_eval_cone(cert, s, b);
            if (!fv) continue;
            KElem gen = KElem(1) / (KElem(1) + *fv);
            EXPECT_TRUE(gen.val().inf || gen.val().v >= 0);
        }
    }
}

} // namespace
} // namespace ganz
