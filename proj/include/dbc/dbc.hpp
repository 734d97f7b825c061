#pragma once

// Umbrella header.

#include "dbc/arr2d.hpp"
#include "dbc/assemble.hpp"
#include "dbc/core.hpp"
#include "dbc/gf2.hpp"
#include "dbc/io.hpp"
#include "dbc/refs.hpp"
#include "dbc/seq1d.hpp"
#include "dbc/tables.hpp"
#include "dbc/verify.hpp"
