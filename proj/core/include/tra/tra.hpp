#pragma once

#include "tra/assembly.hpp"
#include "tra/basis.hpp"
#include "tra/eigensolve.hpp"
#include "tra/errors.hpp"
#include "tra/oracle.hpp"
#include "tra/quadrature.hpp"
#include "tra/recursion.hpp"
#include "tra/specfun.hpp"
#include "tra/spectrum.hpp"
#include "tra/sym_tridiagonal.hpp"
#include "tra/systems.hpp"
#include "tra/verify.hpp"
