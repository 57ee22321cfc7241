#ifndef ARCDEG_ARCDEG_HPP
#define ARCDEG_ARCDEG_HPP

// Everything except io.hpp, which pulls in nlohmann/json.

#include "arcdeg/errors.hpp"
#include "arcdeg/geometry.hpp"
#include "arcdeg/hom.hpp"
#include "arcdeg/lr.hpp"
#include "arcdeg/matrix_oracle.hpp"
#include "arcdeg/moves.hpp"
#include "arcdeg/objects.hpp"
#include "arcdeg/partition.hpp"
#include "arcdeg/poset.hpp"
#include "arcdeg/reduction.hpp"
#include "arcdeg/verify.hpp"

#endif  // ARCDEG_ARCDEG_HPP
