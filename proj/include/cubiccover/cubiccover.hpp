#ifndef CUBICCOVER_CUBICCOVER_HPP
#define CUBICCOVER_CUBICCOVER_HPP

#include "core.hpp"
#include "covers.hpp"
#include "cycle_cover.hpp"
#include "edge_set.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "structure.hpp"

#endif
