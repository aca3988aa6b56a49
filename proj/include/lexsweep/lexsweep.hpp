#pragma once

#include "certify.hpp"
#include "classes.hpp"
#include "dynamics.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "ordering.hpp"
#include "parallel.hpp"
#include "pattern_search.hpp"
#include "random.hpp"
#include "report.hpp"
#include "search.hpp"
