#pragma once

#include "error.hpp"
#include "vertex_set.hpp"
#include "hypergraph.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "families.hpp"
#include "recognition.hpp"
#include "completion.hpp"
#include "io.hpp"
