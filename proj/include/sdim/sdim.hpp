#pragma once

#include "sdim/bitset.hpp"
#include "sdim/clique.hpp"
#include "sdim/corpus.hpp"
#include "sdim/cyclic_structure.hpp"
#include "sdim/error.hpp"
#include "sdim/graph.hpp"
#include "sdim/graph_io.hpp"
#include "sdim/group.hpp"
#include "sdim/group_builders.hpp"
#include "sdim/group_sdim.hpp"
#include "sdim/group_spec.hpp"
#include "sdim/number_theory.hpp"
#include "sdim/power_graph.hpp"
#include "sdim/result_json.hpp"
#include "sdim/strong_resolving.hpp"
