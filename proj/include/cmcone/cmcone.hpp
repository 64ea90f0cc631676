#ifndef CMCONE_CMCONE_HPP
#define CMCONE_CMCONE_HPP

#include "branch_spec.hpp"
#include "cone.hpp"
#include "double_description.hpp"
#include "errors.hpp"
#include "grothendieck.hpp"
#include "hypersurface.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "multiplicity.hpp"
#include "parse.hpp"
#include "plot.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "theta.hpp"
#include "version.hpp"

#endif
