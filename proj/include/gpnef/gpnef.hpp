#pragma once

// Umbrella header: equivariant positivity on flag varieties.
//
// Pipeline: a Cartan type and a parabolic determine a flag variety G/P; its
// T-fixed points and T-invariant curves form the GKM graph; a bundle
// expression restricts to a Grothendieck splitting type on each curve; the
// minimum splitting exponents decide nef/ample and give Seshadri constants
// at fixed points.

#include "gpnef/cartan.hpp"
#include "gpnef/root_system.hpp"
#include "gpnef/weyl.hpp"
#include "gpnef/flag.hpp"
#include "gpnef/bundle.hpp"
#include "gpnef/positivity.hpp"
#include "gpnef/dsl.hpp"
#include "gpnef/io.hpp"
#include "gpnef/cli.hpp"
