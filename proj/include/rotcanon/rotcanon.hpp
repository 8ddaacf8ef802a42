#pragma once

// Umbrella header.

#include "rotcanon/brute_force.hpp"
#include "rotcanon/canon.hpp"
#include "rotcanon/connectivity.hpp"
#include "rotcanon/distance.hpp"
#include "rotcanon/document.hpp"
#include "rotcanon/embedding.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/gadgets.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/grid.hpp"
#include "rotcanon/io.hpp"
#include "rotcanon/isomorphism.hpp"
#include "rotcanon/oriented.hpp"
#include "rotcanon/rotation.hpp"
