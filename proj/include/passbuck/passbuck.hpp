#pragma once

#include "passbuck/abacus.hpp"
#include "passbuck/dot.hpp"
#include "passbuck/edge_io.hpp"
#include "passbuck/graph.hpp"
#include "passbuck/markov.hpp"
#include "passbuck/numeric.hpp"
#include "passbuck/restoration.hpp"
#include "passbuck/restoration_table.hpp"
#include "passbuck/tree.hpp"
