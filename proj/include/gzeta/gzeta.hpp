#pragma once

#include "gzeta/error.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/graph_io.hpp"
#include "gzeta/grover.hpp"
#include "gzeta/lattice.hpp"
#include "gzeta/linalg.hpp"
#include "gzeta/oracle.hpp"
#include "gzeta/verify.hpp"
#include "gzeta/zeta.hpp"
