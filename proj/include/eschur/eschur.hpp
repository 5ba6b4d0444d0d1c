#pragma once

#include "eschur/composition.hpp"
#include "eschur/exact_linalg.hpp"
#include "eschur/hecke.hpp"
#include "eschur/io.hpp"
#include "eschur/module_analysis.hpp"
#include "eschur/qsym.hpp"
#include "eschur/tableau.hpp"
