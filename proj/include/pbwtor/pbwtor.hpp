#pragma once

#include "pbwtor/algebra.hpp"
#include "pbwtor/bimodule.hpp"
#include "pbwtor/errors.hpp"
#include "pbwtor/groebner.hpp"
#include "pbwtor/module_vector.hpp"
#include "pbwtor/monomial.hpp"
#include "pbwtor/order.hpp"
#include "pbwtor/parse.hpp"
#include "pbwtor/polynomial.hpp"
#include "pbwtor/problem.hpp"
#include "pbwtor/rational.hpp"
#include "pbwtor/render.hpp"
#include "pbwtor/resolution.hpp"
#include "pbwtor/tor.hpp"
