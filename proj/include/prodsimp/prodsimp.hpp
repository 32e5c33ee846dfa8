#ifndef PRODSIMP_PRODSIMP_HPP
#define PRODSIMP_PRODSIMP_HPP

#include "catalog.hpp"
#include "complex.hpp"
#include "double.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "incidence.hpp"
#include "polytope.hpp"
#include "rational.hpp"
#include "recognition.hpp"
#include "report.hpp"
#include "simplex.hpp"

#endif // PRODSIMP_PRODSIMP_HPP
