#pragma once

#include "vflame/digraph.hpp"

// Canonical small digraphs shared by the tests, the oracle suite and the docs.
namespace vflame::fixtures {

RootedDigraph star();     // r->a, r->b
RootedDigraph chain();    // r->x->y->t
RootedDigraph chainz();   // chain + y->z
RootedDigraph diamond();  // r->a, r->b, a->t, b->t
RootedDigraph extra();    // r->a, a->b, b->t, a->t
// x1->a, x2->a, a->y1, a->y2, hosted under a root "r" with no edges.
RootedDigraph cross();

}  // namespace vflame::fixtures
