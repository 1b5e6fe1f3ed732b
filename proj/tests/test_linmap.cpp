/*
   Copyright 2026 The lrsmash Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "test_util.hpp"

using namespace lrsmash;
using lrsmash::test::random_map;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

BasedSpace two(const std::string& name) { return BasedSpace::atom(name, {"e0", "e1"}); }

LinMap from_rows(const BasedSpace& dom, const BasedSpace& cod, const Field& f,
                 const std::vector<std::vector<long long>>& rows) {
    LinMap m(dom, cod, f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0) m.set(i, j, Scalar::from_integer(f, rows[i][j]));
    return m;
}

}  // namespace

TEST(Scalar, ExactRationalArithmetic) {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(-2, 6);
    EXPECT_TRUE((a + b).is_zero());
    EXPECT_EQ(Scalar::rational(4, -6).to_string(), "-2/3");
    EXPECT_EQ((Scalar::rational(1, 2) * Scalar::rational(2, 3)).to_string(), "1/3");
    EXPECT_EQ(Scalar::rational(7, 1).to_string(), "7");
    EXPECT_THROW(Scalar::rational(1, 0), Error);
    EXPECT_THROW(Scalar::one(Q).inverse() + Scalar::one(F5), FieldMismatch);
}

TEST(Scalar, PrimeFieldArithmetic) {
    Scalar a = Scalar::from_integer(F5, 3);
    Scalar b = Scalar::from_integer(F5, 4);
    EXPECT_EQ((a * b).residue_value(), 2u);  // 12 mod 5
    EXPECT_EQ((a + b).residue_value(), 2u);
    EXPECT_EQ((-a).residue_value(), 2u);
    EXPECT_EQ(a.inverse().residue_value(), 2u);  // 3*2 = 6 = 1
    EXPECT_EQ(Scalar::from_integer(F5, -1).residue_value(), 4u);
    EXPECT_THROW(Scalar::zero(F5).inverse(), Error);
    EXPECT_THROW(Field::prime(6), Error);
    EXPECT_THROW(Field::prime((std::uint64_t{1} << 31) + 1), Error);
}

TEST(Scalar, RationalReductionModP) {
    EXPECT_EQ(Scalar::rational(1, 2).to_field(F5).residue_value(), 3u);  // 2*3 = 6 = 1
    EXPECT_EQ(Scalar::rational(-1, 3).to_field(F5).residue_value(), 3u);
    EXPECT_THROW(Scalar::rational(1, 5).to_field(F5), Error);
}

TEST(Compose, IdentityIsNeutral) {
    BasedSpace v = two("V");
    LinMap id = LinMap::identity(v, Q);
    EXPECT_EQ(compose(id, id), id);
    std::mt19937_64 rng(1);
    LinMap f = random_map(rng, v, v, Q);
    EXPECT_EQ(compose(id, f), f);
    EXPECT_EQ(compose(f, id), f);
}

TEST(Compose, ZeroAnnihilates) {
    BasedSpace v = two("V"), w = two("W");
    std::mt19937_64 rng(2);
    LinMap f = random_map(rng, v, w, Q);
    LinMap z = LinMap::zero(v, v, Q);
    LinMap fz = compose(f, z);
    EXPECT_TRUE(fz.is_zero());
    EXPECT_EQ(fz.cod(), f.cod());
}

TEST(Compose, HandComputedProductModFive) {
    BasedSpace v = two("V");
    LinMap f = from_rows(v, v, F5, {{2, 1}, {0, 3}});
    LinMap g = from_rows(v, v, F5, {{1, 1}, {1, 0}});
    LinMap expected = from_rows(v, v, F5, {{3, 2}, {3, 0}});
    EXPECT_EQ(compose(f, g), expected);
}

TEST(Compose, SpaceMismatchNamesBothSpaces) {
    BasedSpace v = two("V"), w = two("W");
    LinMap f(v, v, Q), g(v, w, Q);
    try {
        compose(f, g);
        FAIL() << "expected SpaceMismatch";
    } catch (const SpaceMismatch& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("W"), std::string::npos);
        EXPECT_NE(msg.find("V"), std::string::npos);
    }
}

TEST(Tensor, IdentityOfTensorIsTensorOfIdentities) {
    BasedSpace v = two("V"), w = two("W");
    EXPECT_EQ(tensor(LinMap::identity(v, Q), LinMap::identity(w, Q)),
              LinMap::identity(tensor_space(v, w), Q));
}

TEST(Tensor, HandExpandedKroneckerBlocks) {
    BasedSpace v = two("V");
    LinMap f = from_rows(v, v, Q, {{1, 2}, {3, 4}});
    LinMap g = from_rows(v, v, Q, {{0, 1}, {1, 0}});
    LinMap expected = from_rows(tensor_space(v, v), tensor_space(v, v), Q,
                                {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}});
    EXPECT_EQ(tensor(f, g), expected);
}

// independent oracle: evaluate the Kronecker product on each basis pair by
// outer-multiplying the image columns, then compare coordinates
TEST(Tensor, AgreesWithColumnwiseEvaluation) {
    std::mt19937_64 rng(3);
    BasedSpace v = two("V"), w = BasedSpace::atom("W", {"a", "b", "c"});
    for (int iter = 0; iter < 25; ++iter) {
        LinMap f = random_map(rng, v, w, F5);
        LinMap g = random_map(rng, w, v, F5);
        LinMap t = tensor(f, g);
        for (std::size_t cf = 0; cf < v.dim(); ++cf) {
            for (std::size_t cg = 0; cg < w.dim(); ++cg) {
                for (std::size_t rf = 0; rf < w.dim(); ++rf) {
                    for (std::size_t rg = 0; rg < v.dim(); ++rg) {
                        Scalar expected = f.entry(rf, cf) * g.entry(rg, cg);
                        EXPECT_EQ(t.entry(rf * v.dim() + rg, cf * w.dim() + cg), expected);
                    }
                }
            }
        }
    }
}

TEST(Tensor, CounitContractsCoaction) {
    // (eps_H (x) id_D) . lambda = id_D for the shipped coaction
    auto cand = fixtures::sweedler_candidate(Q);
    LinMap lhs = compose(tensor(cand.hopf.counit(), LinMap::identity(cand.carrier(), Q)),
                         cand.coactions.left);
    EXPECT_EQ(lhs, LinMap::identity(cand.carrier(), Q));
}

TEST(Tensor, InterchangeLawOnRandomQuadruples) {
    std::mt19937_64 rng(4);
    BasedSpace v = two("V"), w = BasedSpace::atom("W", {"a", "b", "c"});
    for (int iter = 0; iter < 40; ++iter) {
        LinMap f1 = random_map(rng, w, v, F5), f2 = random_map(rng, v, w, F5);
        LinMap g1 = random_map(rng, v, w, F5), g2 = random_map(rng, w, v, F5);
        EXPECT_EQ(compose(tensor(f1, g1), tensor(f2, g2)),
                  tensor(compose(f1, f2), compose(g1, g2)));
    }
}

TEST(Tensor, ComposeAndTensorAssociativity) {
    std::mt19937_64 rng(5);
    BasedSpace v = two("V");
    for (int iter = 0; iter < 25; ++iter) {
        LinMap f = random_map(rng, v, v, F5), g = random_map(rng, v, v, F5),
               h = random_map(rng, v, v, F5);
        EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
        EXPECT_EQ(tensor(tensor(f, g), h), tensor(f, tensor(g, h)));
    }
}

TEST(Permute, IdentityAndFlip) {
    BasedSpace v = two("V"), w = two("W");
    EXPECT_EQ(permute_factors({v, w}, {0, 1}, Q), LinMap::identity(tensor_space(v, w), Q));
    LinMap fl = flip(v, v, Q);
    EXPECT_EQ(compose(fl, fl), LinMap::identity(tensor_space(v, v), Q));
    // defining case: e0 (x) e1 |-> e1 (x) e0, a 0/1 matrix
    EXPECT_EQ(lrsmash::test::int_entry(fl, "e1,e0", "e0,e1"), 1);
    for (std::size_t c = 0; c < 4; ++c) {
        EXPECT_EQ(flip(v, w, Q).column(c).size(), 1u);
        EXPECT_TRUE(flip(v, w, Q).column(c)[0].second.is_one());
    }
}

TEST(Permute, GroupHomomorphism) {
    std::mt19937_64 rng(6);
    std::vector<BasedSpace> spaces{two("U"), two("V"), BasedSpace::atom("W", {"a", "b", "c"}),
                                   two("X")};
    std::vector<std::size_t> sigma{0, 1, 2, 3}, tau{0, 1, 2, 3};
    for (int iter = 0; iter < 30; ++iter) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        LinMap ptau = permute_factors(spaces, tau, Q);
        // apply tau first; sigma permutes the tau-image factor list
        std::vector<BasedSpace> mid(4);
        for (std::size_t i = 0; i < 4; ++i) mid[tau[i]] = spaces[i];
        LinMap psigma = permute_factors(mid, sigma, Q);
        std::vector<std::size_t> st(4);
        for (std::size_t i = 0; i < 4; ++i) st[i] = sigma[tau[i]];
        EXPECT_EQ(compose(psigma, ptau), permute_factors(spaces, st, Q));
    }
}

TEST(Permute, ArityMismatchThrows) {
    BasedSpace v = two("V");
    EXPECT_THROW(permute_factors({v, v}, {0}, Q), ArityMismatch);
    EXPECT_THROW(permute_factors({v, v}, {0, 0}, Q), ArityMismatch);
}

TEST(Space, ScalarSpaceIsStrictUnit) {
    BasedSpace v = two("V"), k = BasedSpace::scalar();
    EXPECT_EQ(tensor_space(v, k), v);
    EXPECT_EQ(tensor_space(k, v), v);
    EXPECT_EQ(tensor_space(tensor_space(v, v), v), tensor_space(v, tensor_space(v, v)));
    EXPECT_EQ(k.dim(), 1u);
    EXPECT_EQ(k.basis_label(0), "()");
    EXPECT_EQ(v.basis_label(1), "e1");
    EXPECT_EQ(tensor_space(v, v).basis_label(2), "e1,e0");
}

TEST(Space, LabelValidation) {
    EXPECT_THROW(BasedSpace::atom("V", {}), Error);
    EXPECT_THROW(BasedSpace::atom("V", {"a", "a"}), Error);
    BasedSpace d = BasedSpace::atom("D", {"1", "x"});
    BasedSpace h = BasedSpace::atom("H", {"1", "g"});
    // same labels but different atom names are different spaces
    EXPECT_NE(BasedSpace::atom("D", {"1", "g"}), h);
    EXPECT_EQ(tensor_space(d, h).index_of_label("x,g"), 3u);
    EXPECT_FALSE(tensor_space(d, h).index_of_label("g,x").has_value());
}

TEST(LinMap, EqualityIsEntrywise) {
    std::mt19937_64 rng(7);
    BasedSpace v = two("V");
    LinMap f = random_map(rng, v, v, Q, 1.0);
    LinMap g = f;
    EXPECT_EQ(f, g);
    g.set(1, 1, f.entry(1, 1) + Scalar::one(Q));
    EXPECT_NE(f, g);
}

TEST(LinMap, TransposeInvolutionAndShape) {
    std::mt19937_64 rng(8);
    BasedSpace v = two("V"), w = BasedSpace::atom("W", {"a", "b", "c"});
    LinMap f = random_map(rng, v, w, Q);
    LinMap t = transpose(f);
    EXPECT_EQ(t.dom(), w);
    EXPECT_EQ(t.cod(), v);
    EXPECT_EQ(transpose(t), f);
}
