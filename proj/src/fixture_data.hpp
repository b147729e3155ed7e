#pragma once

// JSON bundles {name, order, vertices, edges, generators} for the graph
// fixtures whose automorphism groups are shipped as data.
namespace semiprim::fixture_data {

extern char const* const heawood;
extern char const* const tutte_coxeter;
extern char const* const petersen;

}  // namespace semiprim::fixture_data
