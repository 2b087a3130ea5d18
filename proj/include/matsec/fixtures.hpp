#pragma once

#include <string>
#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/multigraph.hpp"

namespace matsec {

struct Fixture {
  std::string name;
  MatroidPtr matroid;
};

MatroidPtr graphic(const Multigraph& g);
MatroidPtr cographic(const Multigraph& g);

// Triangle with one pendant edge: densest set is the triangle (3/2).
Multigraph triangle_pendant_graph();
// K5 with a pendant path of the given length hanging off one vertex.
Multigraph k5_pendant_path_graph(int path_edges);

// Loopless fixtures with nontrivial principal sequences, n <= 14.
std::vector<Fixture> principal_fixtures();

// Loopless fixtures small enough for (n!)^2 enumeration, n <= 6.
std::vector<Fixture> exact_fixtures();

// One representative per implemented family, n <= 8, for oracle fuzzing.
std::vector<Fixture> family_fixtures();

// Loopless fixtures with n <= 10 for the density/cocircuit comparison.
std::vector<Fixture> cocircuit_fixtures();

// Fixtures for convex decomposition identities and selection frequencies.
std::vector<Fixture> decomposition_fixtures();

}  // namespace matsec
