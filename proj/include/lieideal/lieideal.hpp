#pragma once

// Umbrella header.

#include "lieideal/corpus.hpp"
#include "lieideal/dsl.hpp"
#include "lieideal/error.hpp"
#include "lieideal/exactfield.hpp"
#include "lieideal/ideals.hpp"
#include "lieideal/json_io.hpp"
#include "lieideal/lattice.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/linspace.hpp"
#include "lieideal/search.hpp"
#include "lieideal/structure.hpp"
#include "lieideal/verify.hpp"
