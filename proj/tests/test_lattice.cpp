#include <doctest.h>

#include "corrpop/lattice.hpp"

using namespace corrpop;

TEST_CASE("meet") {
  CHECK(meet(Correlation::parse("1010"), Correlation::parse("1001")).str() ==
        "1000");
  CHECK(meet(Correlation::parse("0101"), Correlation::parse("0011")).str() ==
        "0001");
  for (const Correlation& t : enumerate_delta(4).members)
    CHECK(meet(t, Correlation::ones(4)) == t);
}

TEST_CASE("join") {
  CHECK(join(Correlation::parse("0101"), Correlation::parse("0010")).str() ==
        "0111");
  CHECK(join(Correlation::parse("1010"), Correlation::parse("1001")).str() ==
        "1111");
  for (const Correlation& t : enumerate_delta(4).members)
    CHECK(join(t, Correlation::zeros(4)) == t);
}

TEST_CASE("delta is closed under intersection") {
  for (std::size_t n = 1; n <= 10; ++n) {
    DeltaSet delta = enumerate_delta(n);
    for (const Correlation& t : delta.members)
      for (const Correlation& u : delta.members)
        CHECK(delta.contains(t & u));
  }
}

TEST_CASE("lattice absorption and ordering laws at n = 5") {
  DeltaSet delta = enumerate_delta(5);
  for (const Correlation& t : delta.members)
    for (const Correlation& u : delta.members) {
      Correlation m = meet(t, u), j = join(t, u);
      CHECK(m.subset_of(t));
      CHECK(m.subset_of(u));
      CHECK(t.subset_of(j));
      CHECK(u.subset_of(j));
      CHECK(meet(t, j) == t);
      CHECK(join(t, m) == t);
    }
}

TEST_CASE("hasse diagram of Delta_4") {
  HasseDiagram d = hasse(enumerate_delta(4).members);
  CHECK(d.nodes.size() == 11);
  CHECK(d.nodes.front().str() == "0000");
  CHECK(d.nodes.back().str() == "1111");
  std::size_t gamma_nodes = 0;
  for (bool g : d.is_gamma) gamma_nodes += g;
  CHECK(gamma_nodes == 4);
  // Covering edges are irredundant: no edge is implied by two others.
  for (auto [a, b] : d.edges) {
    CHECK(d.nodes[a].subset_of(d.nodes[b]));
    for (std::size_t c = 0; c < d.nodes.size(); ++c) {
      if (c == a || c == b) continue;
      bool in_between = d.nodes[a].subset_of(d.nodes[c]) &&
                        d.nodes[c].subset_of(d.nodes[b]);
      CHECK_FALSE(in_between);
    }
  }
}

TEST_CASE("hasse diagram of Delta_1 and Gamma_4") {
  HasseDiagram d1 = hasse(enumerate_delta(1).members);
  CHECK(d1.nodes.size() == 2);
  CHECK(d1.edges.size() == 1);
  CHECK(hasse(enumerate_gamma(4).members).nodes.size() == 4);
}

TEST_CASE("jordan-dedekind holds below n = 4 and fails from n = 4 to 8") {
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(check_jordan_dedekind(enumerate_delta(n).members).satisfied);
  for (std::size_t n = 4; n <= 8; ++n) {
    auto r = check_jordan_dedekind(enumerate_delta(n).members);
    CHECK_FALSE(r.satisfied);
    REQUIRE(r.chain_short.size() >= 2);
    REQUIRE(r.chain_long.size() > r.chain_short.size());
    CHECK(r.chain_short.front() == r.chain_long.front());
    CHECK(r.chain_short.back() == r.chain_long.back());
    // Both witnesses are chains of covering steps.
    HasseDiagram d = hasse(enumerate_delta(n).members);
    auto is_cover_chain = [&](const std::vector<Correlation>& chain) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        bool found = false;
        for (auto [a, b] : d.edges)
          found |= d.nodes[a] == chain[i] && d.nodes[b] == chain[i + 1];
        if (!found) return false;
      }
      return true;
    };
    CHECK(is_cover_chain(r.chain_short));
    CHECK(is_cover_chain(r.chain_long));
  }
}

TEST_CASE("delta_4 witness chains have lengths 3 and 4") {
  auto r = check_jordan_dedekind(enumerate_delta(4).members);
  REQUIRE_FALSE(r.satisfied);
  CHECK(r.chain_short.front().str() == "0000");
  CHECK(r.chain_short.back().str() == "1111");
  CHECK(r.chain_short.size() == 4);  // 3 covering steps
  CHECK(r.chain_long.size() == 5);   // 4 covering steps
}

TEST_CASE("dot export") {
  HasseDiagram d = hasse(enumerate_delta(4).members);
  std::string dot = export_dot(d);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0000") != std::string::npos);
  CHECK(dot.find("1111") != std::string::npos);
  CHECK(dot.find("palegreen") != std::string::npos);
  std::string d1 = export_dot(hasse(enumerate_delta(1).members));
  CHECK(d1.find("n0 -> n1") != std::string::npos);
}
