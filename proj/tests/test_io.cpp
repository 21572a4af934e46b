#include <doctest.h>

#include "nsym/io.hpp"

using namespace nsym;

TEST_CASE("sub-indeterminacy table files round-trip bit-exactly") {
  auto venn = ind::SubIndTable::venn6();
  std::string text = io::save(*venn);
  CHECK(text.rfind("subind r=6\n", 0) == 0);
  ind::SubIndTable back = io::load_subind(text);
  CHECK(back == *venn);
  CHECK(io::save(back) == text);

  std::string with_comments = "# the canonical table\n" + text;
  CHECK(io::load_subind(with_comments) == *venn);

  CHECK_THROWS_AS(io::load_subind("subind r=2\nI1 I1 -> I1\n"), Error);  // missing rules
  CHECK_THROWS_AS(
      io::load_subind("subind r=2\nI1 I1 -> I1\nI1 I1 -> I2\nI2 I1 -> I1\nI2 I2 -> I2\n"),
      Error);  // duplicate cell
  CHECK_THROWS_AS(
      io::load_subind("subind r=2\nI1 I1 -> I3\nI1 I2 -> I1\nI2 I1 -> I1\nI2 I2 -> I2\n"),
      Error);  // index out of range
}

TEST_CASE("literal table files round-trip bit-exactly") {
  lit::Table t = lit::Table::implies_preset();
  std::string text = io::save(t);
  CHECK(text.rfind("littable implies\n", 0) == 0);
  lit::Table back = io::load_littable(text);
  CHECK(back == t);
  CHECK(io::save(back) == text);

  lit::Table n = lit::Table::negation();
  CHECK(io::load_littable(io::save(n)) == n);

  CHECK_THROWS_AS(io::load_littable("littable and\nT T -> T\n"), Error);
  CHECK_THROWS_AS(io::load_littable("littable nope\n"), Error);
}

TEST_CASE("adjacency files round-trip and reject foreign entries") {
  std::string text =
      "adjacency n=3 directed\n"
      "0 1 I\n"
      "-1 0 0\n"
      "I 0 0\n";
  graph::Adjacency m = io::load_adjacency(text);
  CHECK(m.n == 3);
  CHECK(m.directed);
  CHECK(m.at(0, 2) == graph::Entry::indet);
  CHECK(io::save(m) == text);

  CHECK_THROWS_WITH_AS(io::load_adjacency("adjacency n=2 directed\n0 2\n0 0\n"),
                       doctest::Contains("outside {0, 1, -1, I}"), Error);
  CHECK_THROWS_AS(io::load_adjacency("adjacency n=2 directed\n0 1\n"), Error);
}

TEST_CASE("order files hold a single chain") {
  lit::PrevOrder o = lit::PrevOrder::parse("T1>T2>T3>I>F1>F2");
  std::string text = io::save_order(o);
  CHECK(text == "T1>T2>T3>I>F1>F2\n");
  CHECK(io::load_order(text) == o);
  CHECK_THROWS_AS(io::load_order("T>I>F\nT>F>I\n"), Error);
}

TEST_CASE("sniffing file kinds") {
  CHECK(io::sniff("subind r=2\n") == io::FileKind::subind);
  CHECK(io::sniff("littable and\n") == io::FileKind::littable);
  CHECK(io::sniff("adjacency n=2 directed\n") == io::FileKind::adjacency);
  CHECK(io::sniff("T>I>F\n") == io::FileKind::order);
  CHECK_THROWS_AS(io::sniff("whatever\n"), Error);
  CHECK_THROWS_AS(io::sniff("# only comments\n"), Error);
}
