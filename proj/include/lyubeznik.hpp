#pragma once

// Everything: combinatorics, exact linear algebra, hypercubes, resolutions,
// invariants and the input/report layer.

#include "lyubeznik/chain_complex.hpp"
#include "lyubeznik/cochain.hpp"
#include "lyubeznik/errors.hpp"
#include "lyubeznik/field.hpp"
#include "lyubeznik/hypercube.hpp"
#include "lyubeznik/ideal.hpp"
#include "lyubeznik/invariants.hpp"
#include "lyubeznik/mask.hpp"
#include "lyubeznik/matrix.hpp"
#include "lyubeznik/parallel.hpp"
#include "lyubeznik/problem.hpp"
#include "lyubeznik/report.hpp"
#include "lyubeznik/resolution.hpp"
#include "lyubeznik/simplicial_complex.hpp"
