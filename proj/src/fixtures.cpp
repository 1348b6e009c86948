#include "vflame/fixtures.hpp"

namespace vflame::fixtures {

RootedDigraph star() {
  return build_digraph({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}}, "r");
}

RootedDigraph chain() {
  return build_digraph({"r", "x", "y", "t"}, {{"r", "x"}, {"x", "y"}, {"y", "t"}}, "r");
}

RootedDigraph chainz() {
  return build_digraph({"r", "x", "y", "t", "z"},
                       {{"r", "x"}, {"x", "y"}, {"y", "t"}, {"y", "z"}}, "r");
}

RootedDigraph diamond() {
  return build_digraph({"r", "a", "b", "t"},
                       {{"r", "a"}, {"r", "b"}, {"a", "t"}, {"b", "t"}}, "r");
}

RootedDigraph extra() {
  return build_digraph({"r", "a", "b", "t"},
                       {{"r", "a"}, {"a", "b"}, {"b", "t"}, {"a", "t"}}, "r");
}

RootedDigraph cross() {
  return build_digraph({"r", "x1", "x2", "a", "y1", "y2"},
                       {{"x1", "a"}, {"x2", "a"}, {"a", "y1"}, {"a", "y2"}}, "r");
}

}  // namespace vflame::fixtures
