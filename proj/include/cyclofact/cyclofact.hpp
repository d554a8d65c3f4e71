#pragma once

#include "cyclofact/rational.hpp"
#include "cyclofact/polynomial.hpp"
#include "cyclofact/poly_io.hpp"
#include "cyclofact/minimal_pair.hpp"
#include "cyclofact/semiring.hpp"
#include "cyclofact/elasticity.hpp"
#include "cyclofact/omega.hpp"
#include "cyclofact/json.hpp"
#include "cyclofact/csv.hpp"
