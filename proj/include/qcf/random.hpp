#pragma once

// Random qubit states, operators and channels for sampling checks.

#include <random>

#include "qcf/oracle.hpp"

namespace qcf {

// Haar-random pure state, or a Ginibre-random mixed one.
QubitOperator random_state(std::mt19937_64& rng, bool mixed);

// Entries i.i.d. complex normal.
QubitOperator random_operator(std::mt19937_64& rng);

// Columns of a random isometry C^2 -> C^(2 rank), cut into `rank` Kraus
// operators (rank in 1..4).
KrausSet random_kraus(std::mt19937_64& rng, int rank = 2);

}  // namespace qcf
