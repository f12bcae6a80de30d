#ifndef SYMRANK_SYMRANK_HPP
#define SYMRANK_SYMRANK_HPP

#include "symrank/codes.hpp"
#include "symrank/dickson.hpp"
#include "symrank/equiv.hpp"
#include "symrank/fp_linalg.hpp"
#include "symrank/gf.hpp"
#include "symrank/linpoly.hpp"
#include "symrank/minors.hpp"
#include "symrank/report.hpp"
#include "symrank/symforms.hpp"
#include "symrank/verify.hpp"

#endif  // SYMRANK_SYMRANK_HPP
