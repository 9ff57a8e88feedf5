#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace groupalg;
using groupalg::test::Rng;

TEST_CASE("rational arithmetic is exact and canonical") {
    Ring q = Ring::rationals();
    RingElem half(mpq_class(1, 2));
    RingElem third(mpq_class(1, 3));
    CHECK(q.eq(q.add(half, third), RingElem(mpq_class(5, 6))));
    // canonicalization: negative denominator and common factors normalize
    mpq_class raw(6, -4);
    raw.canonicalize();
    CHECK(q.eq(RingElem(raw), RingElem(mpq_class(-3, 2))));
}

TEST_CASE("modular arithmetic reduces residues") {
    Ring z4 = Ring::integers_mod(4);
    CHECK(z4.eq(z4.mul(z4.from_int(3), z4.from_int(3)), z4.one()));
    CHECK(z4.eq(z4.neg(z4.from_int(1)), z4.from_int(3)));
    CHECK_THROWS_AS(z4.check_elem(RingElem(mpz_class(7))), domain_error);
    CHECK_THROWS_AS(Ring::integers_mod(1), domain_error);
}

TEST_CASE("integer identities") {
    Ring z = Ring::integers();
    CHECK(z.eq(z.zero(), z.from_int(0)));
    CHECK(z.is_zero(z.sub(z.from_int(5), z.from_int(5))));
}

TEST_CASE("laurent multiplication convolves exponents") {
    Ring lz = Ring::laurent(Ring::integers());
    Ring z = Ring::integers();
    RingElem x = lz.monomial(1, z.one());
    RingElem xinv = lz.monomial(-1, z.one());
    CHECK(lz.eq(lz.mul(x, xinv), lz.one()));

    RingElem one_plus_x = lz.add(lz.one(), x);
    RingElem one_minus_x = lz.sub(lz.one(), x);
    RingElem expect = lz.sub(lz.one(), lz.monomial(2, z.one()));
    CHECK(lz.eq(lz.mul(one_plus_x, one_minus_x), expect));

    RingElem s = lz.add(xinv, lz.one());
    RingElem sq = lz.mul(s, s);
    RingElem expect2 = lz.add(lz.add(lz.monomial(-2, z.one()), lz.monomial(-1, z.from_int(2))),
                              lz.one());
    CHECK(lz.eq(sq, expect2));
}

TEST_CASE("group ring over S3 is noncommutative but valid") {
    Group s3 = Group::from_table(groupalg::test::s3_table());
    CHECK(!s3.abelian());
    CHECK(!s3.cyclic_order().has_value());
    Ring r = Ring::group_ring(Ring::integers_mod(4), s3);
    CHECK(!r.commutative());
    // (g1)(g2) != (g2)(g1) for some transpositions
    RingElem a = r.monomial(1, Ring::integers_mod(4).one());
    RingElem b = r.monomial(2, Ring::integers_mod(4).one());
    CHECK(!r.eq(r.mul(a, b), r.mul(b, a)));
}

TEST_CASE("group table validation rejects broken tables") {
    CHECK_THROWS_AS(Group::from_table({{1}}), domain_error);              // no identity
    CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 1}}), domain_error);   // not a group
    CHECK_THROWS_AS(Group::from_table({{0, 1}, {0, 1}}), domain_error);   // id broken
    CHECK_NOTHROW(Group::from_table(groupalg::test::cyclic_table(5)));
}

TEST_CASE("chain flag rule table") {
    auto flags = [](const char* spec) { return Ring::parse_spec(spec).chain_flags(); };
    CHECK(flags("Z").noetherian == Tri::yes);
    CHECK(flags("Z").artinian == Tri::no);
    CHECK(flags("Q").artinian == Tri::yes);
    CHECK(flags("Zmod:4").artinian == Tri::yes);
    CHECK(flags("Laurent:Z").noetherian == Tri::yes);
    CHECK(flags("Laurent:Z").artinian == Tri::no);
    CHECK(flags("Laurent:Q").artinian == Tri::no);

    Ring s3_ring = Ring::group_ring(Ring::integers_mod(4), Group::from_table(groupalg::test::s3_table()));
    CHECK(s3_ring.chain_flags().noetherian == Tri::yes);
    CHECK(s3_ring.chain_flags().artinian == Tri::yes);
}

TEST_CASE("group_ring_flags rule table") {
    ChainFlags field_like{Tri::yes, Tri::yes};
    ChainFlags z_like{Tri::yes, Tri::no};

    ChainFlags inf = group_ring_flags(field_like, Group::infinite_cyclic());
    CHECK(inf.noetherian == Tri::yes);
    CHECK(inf.artinian == Tri::no);

    ChainFlags triv = group_ring_flags(z_like, Group::trivial());
    CHECK(triv.noetherian == Tri::yes);
    CHECK(triv.artinian == Tri::no);

    ChainFlags c2 = group_ring_flags(field_like, Group::cyclic(2));
    CHECK(c2.noetherian == Tri::yes);
    CHECK(c2.artinian == Tri::yes);
}

TEST_CASE("hopkins-levitzki coherence and laurent/group-ring agreement") {
    std::vector<std::string> pool = {"Z",         "Q",          "Zmod:2",       "Zmod:6",
                                     "Laurent:Z", "Laurent:Q",  "Laurent:Laurent:Z",
                                     "GroupRing:Q:C3", "GroupRing:Zmod:4:C2"};
    for (const auto& spec : pool) {
        Ring r = Ring::parse_spec(spec);
        ChainFlags f = r.chain_flags();
        if (f.artinian == Tri::yes) CHECK(f.noetherian == Tri::yes);
        ChainFlags lhs = Ring::laurent(r).chain_flags();
        ChainFlags rhs = group_ring_flags(f, Group::infinite_cyclic());
        CHECK(lhs.noetherian == rhs.noetherian);
        CHECK(lhs.artinian == rhs.artinian);
    }
}

TEST_CASE("ring spec strings parse and round trip") {
    for (const char* spec : {"Z", "Q", "Zmod:4", "Laurent:Z", "Laurent:Laurent:Q",
                             "GroupRing:Q:C3", "GroupRing:Laurent:Z:C2"}) {
        CHECK(Ring::parse_spec(spec).spec_string() == spec);
    }
    // the infinite cyclic group ring IS the laurent ring
    CHECK(Ring::group_ring(Ring::integers(), Group::infinite_cyclic()).spec_string() ==
          "Laurent:Z");
    CHECK(Ring::group_ring(Ring::rationals(), Group::trivial()).spec_string() == "Q");
    CHECK(Ring::parse_spec("GroupRing:Q:C1").spec_string() == "Q");

    CHECK_THROWS_AS(Ring::parse_spec("Zmod"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("Zmod:1"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("Zmod:x"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("foo"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("GroupRing:Q"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("GroupRing:Q:S3"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("Z:Z"), parse_error);
    CHECK_THROWS_AS(Ring::parse_spec("Laurent"), parse_error);
}

TEST_CASE("kind mismatch is a structured error") {
    Ring z = Ring::integers();
    Ring q = Ring::rationals();
    CHECK_THROWS_AS(z.add(z.one(), q.one()), domain_error);
    CHECK_THROWS_AS(Ring::laurent(z).mul(z.one(), z.one()), domain_error);
}

TEST_CASE("ring axioms hold on randomized triples in every kind") {
    Rng rng(20250811);
    std::vector<Ring> rings = {Ring::integers(),
                               Ring::rationals(),
                               Ring::integers_mod(4),
                               Ring::laurent(Ring::integers()),
                               Ring::laurent(Ring::laurent(Ring::integers_mod(3))),
                               Ring::group_ring(Ring::integers_mod(4), Group::cyclic(3)),
                               Ring::group_ring(Ring::integers(), Group::from_table(groupalg::test::s3_table()))};
    for (const Ring& r : rings) {
        for (int iter = 0; iter < 120; ++iter) {
            RingElem a = rng.elem(r), b = rng.elem(r), c = rng.elem(r);
            CHECK(r.eq(r.add(a, b), r.add(b, a)));
            CHECK(r.eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))));
            CHECK(r.eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))));
            CHECK(r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))));
            CHECK(r.eq(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))));
            CHECK(r.eq(r.add(a, r.neg(a)), r.zero()));
            CHECK(r.eq(r.mul(a, r.one()), a));
            CHECK(r.eq(r.mul(r.one(), a), a));
            if (r.commutative()) CHECK(r.eq(r.mul(a, b), r.mul(b, a)));
            // canonical-form idempotence
            CHECK(r.canonical(r.mul(a, b)) == r.mul(a, b));
            CHECK(r.canonical(r.add(a, b)) == r.add(a, b));
            // star is an anti-automorphism fixing the base
            CHECK(r.eq(r.star(r.star(a)), a));
            CHECK(r.eq(r.star(r.mul(a, b)), r.mul(r.star(b), r.star(a))));
        }
    }
}

TEST_CASE("finite ring enumeration") {
    Ring z6 = Ring::integers_mod(6);
    CHECK(z6.enumerate().size() == 6);
    CHECK(z6.cardinality() == 6);
    Ring gr = Ring::group_ring(Ring::integers_mod(2), Group::cyclic(2));
    CHECK(gr.finite());
    auto elems = gr.enumerate();
    CHECK(elems.size() == 4);
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j) CHECK(!(elems[i] == elems[j]));
    CHECK(!Ring::integers().finite());
    CHECK_THROWS_AS(Ring::integers().enumerate(), domain_error);
    CHECK_THROWS_AS(Ring::laurent(Ring::integers_mod(2)).enumerate(), domain_error);
}
