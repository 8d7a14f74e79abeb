#pragma once

// Umbrella header.

#include "hasse/abelian_field.hpp"
#include "hasse/arith.hpp"
#include "hasse/brauer.hpp"
#include "hasse/character_table.hpp"
#include "hasse/constraints.hpp"
#include "hasse/cyclic_rational.hpp"
#include "hasse/cyclotomic.hpp"
#include "hasse/finite_group.hpp"
#include "hasse/group_reps.hpp"
#include "hasse/json_io.hpp"
#include "hasse/quaternion.hpp"
