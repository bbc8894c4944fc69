#pragma once

// Umbrella header for the whole library.

#include "bicomm/algebra.hpp"
#include "bicomm/algebra_io.hpp"
#include "bicomm/consequence.hpp"
#include "bicomm/element.hpp"
#include "bicomm/errors.hpp"
#include "bicomm/matrix.hpp"
#include "bicomm/monomial.hpp"
#include "bicomm/partition.hpp"
#include "bicomm/poly.hpp"
#include "bicomm/rational.hpp"
#include "bicomm/report.hpp"
#include "bicomm/term.hpp"
#include "bicomm/two_dim.hpp"
#include "bicomm/version.hpp"
