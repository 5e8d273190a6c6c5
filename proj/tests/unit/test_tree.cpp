#include <sstream>

#include "grm/families.hpp"
#include "test_support.hpp"

using namespace grm;

TEST_SUITE("graph-core") {
  TEST_CASE("build_tree accepts a path") {
    const Tree t = tree_of({{0, 1}, {1, 2}});
    CHECK(t.order() == 3);
    CHECK(t.degree(1) == 2);
    CHECK(t.edges() == EdgeList{{0, 1}, {1, 2}});
  }

  TEST_CASE("build_tree names the violated invariant") {
    CHECK_GRM_ERROR(build_tree({{0, 1}, {1, 2}, {2, 0}}), ErrorKind::CycleDetected);
    CHECK_GRM_ERROR(build_tree({{0, 1}, {2, 3}}), ErrorKind::Disconnected);
    CHECK_GRM_ERROR(build_tree({{0, 0}}), ErrorKind::SelfLoop);
    CHECK_GRM_ERROR(build_tree({{0, 1}, {1, 0}}), ErrorKind::DuplicateEdge);
    CHECK_GRM_ERROR(build_tree({}), ErrorKind::DomainViolation);
  }

  TEST_CASE("sparse ids are compacted in order of first appearance") {
    const Tree t = tree_of({{10, 20}, {20, 5}});
    CHECK(t.order() == 3);
    CHECK(t.degree(1) == 2);
  }

  TEST_CASE("adjacency constructor rejects asymmetric or cyclic input") {
    CHECK_GRM_ERROR(Tree({{1}, {}}), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(Tree({{1, 2}, {0, 2}, {0, 1}}), ErrorKind::CycleDetected);
    CHECK_GRM_ERROR(Tree({{1}, {0}, {3}, {2}}), ErrorKind::Disconnected);
  }

  TEST_CASE("census of small trees") {
    const DegreeCensus p4 = census(make_path(4));
    CHECK(p4.vertices(1) == 2);
    CHECK(p4.vertices(2) == 2);
    CHECK(p4.edges(1, 2) == 2);
    CHECK(p4.edges(2, 2) == 1);
    CHECK(p4.edges(2, 1) == 2);
    CHECK(p4.satisfies_invariants());

    const DegreeCensus t1 = census(make_t_opt(1, 2).front());
    CHECK(t1.to_string() == "n1=4 n2=1 n3=2 | m13=4 m23=2");

    const DegreeCensus tt1 = census(make_tt_opt(1, 2).front());
    CHECK(tt1.to_string() == "n1=6 n2=1 n4=2 | m14=6 m24=2");
  }

  TEST_CASE("census invariants catch inconsistent counts") {
    DegreeCensus c = census(make_path(5));
    CHECK(c.satisfies_invariants());
    c.add_edge(2, 2);
    CHECK_FALSE(c.satisfies_invariants());
  }

  TEST_CASE("max degree") {
    CHECK(max_degree(make_path(6)) == 2);
    CHECK(max_degree(make_star(7)) == 6);
    CHECK(max_degree(make_spider(9, 4)) == 4);
    CHECK_GRM_ERROR(max_degree(Tree::single_vertex()), ErrorKind::SingletonTree);
  }

  TEST_CASE("edge-list text round trip") {
    std::istringstream in("# a star\n0 1\n\n0 2   # inline comment\n0 3\n");
    const Tree t = build_tree(parse_edge_list(in));
    CHECK(t.order() == 4);
    CHECK(format_edge_list(t) == "0 1\n0 2\n0 3\n");
    std::istringstream again(format_edge_list(t));
    CHECK(build_tree(parse_edge_list(again)) == t);
  }

  TEST_CASE("edge-list parse errors") {
    std::istringstream three("0 1 2\n");
    CHECK_GRM_ERROR(parse_edge_list(three), ErrorKind::Parse);
    std::istringstream word("0 x\n");
    CHECK_GRM_ERROR(parse_edge_list(word), ErrorKind::Parse);
    CHECK_GRM_ERROR(parse_edge_list_file("/nonexistent/edges.txt"), ErrorKind::Parse);
  }
}
