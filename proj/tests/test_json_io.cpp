#include <gtest/gtest.h>

#include <random>

#include "permexpr/experiments.hpp"
#include "permexpr/json_io.hpp"
#include "permexpr/normal_form.hpp"
#include "support.hpp"

using namespace permexpr;

TEST(JsonIo, DerivationRoundTrip) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(rng() % 3);
        Permutation pi = random_permutation(n, rng);
        Word u = random_reduced_word(pi, rng);
        Word v = random_reduced_word(pi, rng);
        Derivation d = derive(u, v);
        json payload = to_json(d);
        Derivation back = derivation_from_json(payload);
        EXPECT_EQ(back, d);
        EXPECT_EQ(to_json(back), payload);
    }
}

TEST(JsonIo, DerivationPayloadShape) {
    Derivation d;
    d.start = Word::parse(3, "1.2.1");
    d.steps.push_back(Step{0, RelationKind::type_i(1, 2)});
    json j = to_json(d);
    EXPECT_EQ(j["start"], "1.2.1");
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["steps"][0]["pos"], 1);  // positions are 1-based on the wire
    EXPECT_EQ(j["steps"][0]["kind"], "I");
    EXPECT_EQ(j["steps"][0]["dir"], "LR");
}

TEST(JsonIo, DerivationRejectsCorruptedSteps) {
    json j = {{"n", 3}, {"start", "1.2.1"}, {"steps", json::array({{{"pos", 2}, {"kind", "I"}, {"dir", "LR"}}})}};
    EXPECT_THROW(derivation_from_json(j), ReplayMismatch);
    json wrong_dir = {{"n", 3}, {"start", "1.2.1"}, {"steps", json::array({{{"pos", 1}, {"kind", "I"}, {"dir", "RL"}}})}};
    EXPECT_THROW(derivation_from_json(wrong_dir), ReplayMismatch);
}

TEST(JsonIo, CertificateRoundTrip) {
    Word u = Word::parse(4, "1.2.1.3.2.1");
    Word v = Word::parse(4, "3.2.3.1.2.3");
    Certificate c = certify(to_derivation(reversing_diagram(u, v)));
    json payload = to_json(c);
    Certificate back = certificate_from_json(payload);
    EXPECT_EQ(back.optimal(), c.optimal());
    EXPECT_EQ(back.witness, c.witness);
    EXPECT_EQ(back.duplicates, c.duplicates);
}

TEST(JsonIo, NameSequenceRoundTrip) {
    NameSequence s = name_sequence(Word::parse(4, "1.2.1.3.2.1"));
    NameSequence back = name_sequence_from_json(to_json(s));
    EXPECT_EQ(back, s);
}

TEST(JsonIo, DiagramRoundTrip) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        Word u = random_reduced_word(random_permutation(n, rng), rng);
        Word v = random_reduced_word(random_permutation(n, rng), rng);
        GridDiagram g = t % 2 ? compact(reversing_diagram(u, v)) : reversing_diagram(u, v);
        GridDiagram back = diagram_from_json(to_json(g));
        EXPECT_EQ(back.n, g.n);
        EXPECT_EQ(back.start, g.start);
        EXPECT_EQ(back.u, g.u);
        EXPECT_EQ(back.v, g.v);
        EXPECT_EQ(back.u_out, g.u_out);
        EXPECT_EQ(back.v_out, g.v_out);
        EXPECT_EQ(back.vertices, g.vertices);
        EXPECT_EQ(back.edges, g.edges);
        EXPECT_EQ(back.tiles, g.tiles);
        EXPECT_EQ(back.counts, g.counts);
        EXPECT_EQ(back.frontier, g.frontier);
        EXPECT_EQ(back.compacted, g.compacted);
        // a reparsed diagram still collapses to the same derivation
        EXPECT_EQ(to_derivation(back), to_derivation(g));
    }
}
