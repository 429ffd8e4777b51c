#pragma once
// Convenience umbrella for the whole library.

#include "fourcycle/bench.hpp"
#include "fourcycle/diagnostics.hpp"
#include "fourcycle/edge_io.hpp"
#include "fourcycle/generators.hpp"
#include "fourcycle/graph.hpp"
#include "fourcycle/listing.hpp"
#include "fourcycle/oracle.hpp"
#include "fourcycle/partition.hpp"
#include "fourcycle/two_path.hpp"
