#pragma once

// Umbrella header. report_json.hpp is separate because it pulls in nlohmann/json.

#include "equivalence.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "named_graphs.hpp"
#include "patterns.hpp"
#include "scan.hpp"
#include "search_kind.hpp"
#include "searches.hpp"
#include "validators.hpp"
