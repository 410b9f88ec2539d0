#pragma once

// Umbrella header.

#include "inccat/category.hpp"
#include "inccat/error.hpp"
#include "inccat/family.hpp"
#include "inccat/hall.hpp"
#include "inccat/ideal_lattice.hpp"
#include "inccat/incidence_hopf.hpp"
#include "inccat/io.hpp"
#include "inccat/isomorphism.hpp"
#include "inccat/linalg.hpp"
#include "inccat/linear_combination.hpp"
#include "inccat/poset.hpp"
#include "inccat/rational.hpp"
#include "inccat/verify.hpp"
