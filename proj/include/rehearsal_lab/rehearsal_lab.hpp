#pragma once

#include "rehearsal_lab/assignment.hpp"
#include "rehearsal_lab/config.hpp"
#include "rehearsal_lab/designs.hpp"
#include "rehearsal_lab/experiments.hpp"
#include "rehearsal_lab/errors.hpp"
#include "rehearsal_lab/family_io.hpp"
#include "rehearsal_lab/format.hpp"
#include "rehearsal_lab/game.hpp"
#include "rehearsal_lab/inventory.hpp"
#include "rehearsal_lab/random.hpp"
#include "rehearsal_lab/rehearsal.hpp"
#include "rehearsal_lab/schemes.hpp"
#include "rehearsal_lab/security.hpp"
#include "rehearsal_lab/simulate.hpp"
#include "rehearsal_lab/tables.hpp"
#include "rehearsal_lab/usability.hpp"
