#pragma once

// Umbrella header.

#include "qsim/constants.hpp"
#include "qsim/core.hpp"
#include "qsim/entropies.hpp"
#include "qsim/exception.hpp"
#include "qsim/gates.hpp"
#include "qsim/iofmt.hpp"
#include "qsim/linalg.hpp"
#include "qsim/measurement.hpp"
#include "qsim/operations.hpp"
#include "qsim/random.hpp"
#include "qsim/states.hpp"
#include "qsim/timer.hpp"
#include "qsim/types.hpp"
