#pragma once

// Finite left brace engine: prime-field linear algebra, the star/lambda
// calculus, substructure and series machinery, extraspecial constructions,
// Yang-Baxter solution checks, and exhaustive enumeration at desk scale.

#include "bracelab/errors.hpp"
#include "bracelab/fp.hpp"
#include "bracelab/linalg.hpp"
#include "bracelab/mask.hpp"
#include "bracelab/brace.hpp"
#include "bracelab/substructures.hpp"
#include "bracelab/series.hpp"
#include "bracelab/extraspecial.hpp"
#include "bracelab/ybe.hpp"
#include "bracelab/enumeration.hpp"
#include "bracelab/io.hpp"
#include "bracelab/verify.hpp"
