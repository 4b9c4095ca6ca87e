#pragma once

// Convenience umbrella for the whole library.

#include "volterra/classify.hpp"
#include "volterra/dynamics.hpp"
#include "volterra/extremal.hpp"
#include "volterra/io.hpp"
#include "volterra/qso.hpp"
#include "volterra/simplex.hpp"
#include "volterra/tournament.hpp"
