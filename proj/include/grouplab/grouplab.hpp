#pragma once

#include "core.hpp"
#include "dsl.hpp"
#include "structure.hpp"
#include "properties.hpp"
#include "lattice.hpp"
#include "catalog.hpp"
#include "claims.hpp"
