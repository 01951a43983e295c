#pragma once

// Umbrella header: graphs and metrics, patch and network generators,
// general position certificates, monotone labelings, the exact solver, the
// witness library, serialization, and the claim report.

#include "genpos/graph.hpp"
#include "genpos/generators.hpp"
#include "genpos/geodesy.hpp"
#include "genpos/monotone.hpp"
#include "genpos/solver.hpp"
#include "genpos/io.hpp"
#include "genpos/witnesses.hpp"
#include "genpos/report.hpp"
