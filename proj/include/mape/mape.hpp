// Umbrella header.

#pragma once

#include "mape/bipartition.hpp"
#include "mape/coefficient_matrix.hpp"
#include "mape/config.hpp"
#include "mape/errors.hpp"
#include "mape/gallery.hpp"
#include "mape/locc.hpp"
#include "mape/measures.hpp"
#include "mape/reports.hpp"
#include "mape/spectra.hpp"
#include "mape/state.hpp"
#include "mape/state_io.hpp"
