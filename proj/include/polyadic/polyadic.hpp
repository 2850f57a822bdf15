#pragma once

// Umbrella header for the polyadic library.

#include "polyadic/bi_periodic.hpp"
#include "polyadic/bigint.hpp"
#include "polyadic/character.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/factorial_digits.hpp"
#include "polyadic/grid.hpp"
#include "polyadic/int_sequence.hpp"
#include "polyadic/json_io.hpp"
#include "polyadic/periodic_function.hpp"
#include "polyadic/polyadic_int.hpp"
#include "polyadic/residue_claim.hpp"
#include "polyadic/verify.hpp"
